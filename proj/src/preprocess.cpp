#include "mta/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mta/gaussian.hpp"

namespace mta {

std::vector<double> difference(const TimeSeries& ts) {
    if (ts.values.size() < 2) {
        fail(Errc::series_too_short, "need at least 2 values to difference, got " +
                                         std::to_string(ts.values.size()));
    }
    std::vector<double> out(ts.values.size() - 1);
    for (std::size_t i = 0; i + 1 < ts.values.size(); ++i) {
        out[i] = ts.values[i + 1] - ts.values[i];
    }
    return out;
}

PreparedSeries z_normalize(const std::vector<double>& diffs) {
    if (diffs.empty()) {
        fail(Errc::series_too_short, "cannot normalize an empty series");
    }
    const double n = static_cast<double>(diffs.size());
    const double mean = std::accumulate(diffs.begin(), diffs.end(), 0.0) / n;
    double var = 0.0;
    for (double v : diffs) {
        double d = v - mean;
        var += d * d;
    }
    const double stddev = std::sqrt(var / n); // population std

    PreparedSeries prep;
    prep.mean_removed = mean;
    prep.values.resize(diffs.size());
    if (stddev < 1e-12) {
        prep.degenerate = true;
        prep.std_divisor = 1.0;
        std::fill(prep.values.begin(), prep.values.end(), 0.0);
    } else {
        prep.std_divisor = stddev;
        for (std::size_t i = 0; i < diffs.size(); ++i) {
            prep.values[i] = (diffs[i] - mean) / stddev;
        }
    }
    return prep;
}

PreparedSeries prepare(const TimeSeries& ts) {
    return z_normalize(difference(ts));
}

Alphabet make_alphabet(int a) {
    if (a < 2 || a > 20) {
        fail(Errc::invalid_alphabet_size, "alphabet size must be in [2, 20], got " +
                                              std::to_string(a));
    }
    Alphabet alpha;
    alpha.size_a = a;
    alpha.breakpoints.resize(a - 1);
    // Compute the lower half and mirror so the set is exactly antisymmetric.
    for (int k = 1; k <= a - 1; ++k) {
        if (2 * k < a) {
            alpha.breakpoints[k - 1] = normal_quantile(static_cast<double>(k) / a);
        } else if (2 * k == a) {
            alpha.breakpoints[k - 1] = 0.0;
        } else {
            alpha.breakpoints[k - 1] = -alpha.breakpoints[a - k - 1];
        }
    }
    return alpha;
}

char symbol_for_value(double v, const Alphabet& alpha) {
    auto it = std::upper_bound(alpha.breakpoints.begin(), alpha.breakpoints.end(), v);
    return alpha.symbol(static_cast<int>(it - alpha.breakpoints.begin()));
}

SymbolMatrix symbolize(const PreparedSeries& prep, int s, const Alphabet& alpha) {
    if (s < 1) {
        fail(Errc::invalid_config, "symbol size must be >= 1, got " + std::to_string(s));
    }
    if (static_cast<std::size_t>(s) > prep.values.size()) {
        fail(Errc::window_too_large, "window " + std::to_string(s) + " exceeds prepared length " +
                                         std::to_string(prep.values.size()));
    }
    SymbolMatrix sm;
    sm.symbol_size_s = s;
    sm.prepared_len = prep.values.size();
    const std::size_t count = prep.values.size() - s + 1;
    sm.symbols.resize(count);

    // Rolling window sum; one mean per sliding-window start.
    double sum = std::accumulate(prep.values.begin(), prep.values.begin() + s, 0.0);
    sm.symbols[0] = symbol_for_value(sum / s, alpha);
    for (std::size_t i = 1; i < count; ++i) {
        sum += prep.values[i + s - 1] - prep.values[i - 1];
        sm.symbols[i] = symbol_for_value(sum / s, alpha);
    }
    return sm;
}

} // namespace mta
