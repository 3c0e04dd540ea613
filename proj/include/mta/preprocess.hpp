#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mta/error.hpp"

namespace mta {

struct TimeSeries {
    std::vector<double> values;
    std::string name = "series";
    std::string source = "synthetic";
};

/// First differences of a raw series, z-normalized globally.
/// Prepared index i covers the raw interval [i, i+1].
struct PreparedSeries {
    std::vector<double> values;
    int offset_shift = 1;
    double mean_removed = 0.0;
    double std_divisor = 1.0;
    bool degenerate = false; // constant input, values forced to zero

    std::size_t size() const { return values.size(); }
};

struct Alphabet {
    int size_a = 0;
    std::vector<double> breakpoints; // size_a - 1, strictly increasing, antisymmetric

    char symbol(int index) const { return static_cast<char>('a' + index); }
};

/// One symbol per sliding-window start over the prepared series.
struct SymbolMatrix {
    std::string symbols;
    int symbol_size_s = 0;
    std::size_t prepared_len = 0;

    std::size_t size() const { return symbols.size(); }
};

std::vector<double> difference(const TimeSeries& ts);

PreparedSeries z_normalize(const std::vector<double>& diffs);

/// difference + z_normalize in one step.
PreparedSeries prepare(const TimeSeries& ts);

/// Equiprobable Gaussian breakpoints for an alphabet of size a (2..20).
Alphabet make_alphabet(int a);

/// Bucket a value through the breakpoints. A value exactly equal to a
/// breakpoint maps to the higher symbol.
char symbol_for_value(double v, const Alphabet& alpha);

SymbolMatrix symbolize(const PreparedSeries& prep, int s, const Alphabet& alpha);

} // namespace mta
