#pragma once

namespace mta {

/// Standard normal CDF.
double normal_cdf(double x);

/// Inverse standard normal CDF for p in (0, 1).
/// Rational approximation refined with one Halley step; accurate to ~1e-15.
double normal_quantile(double p);

} // namespace mta
