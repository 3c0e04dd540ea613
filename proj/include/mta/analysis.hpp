#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mta/engine.hpp"

namespace mta::analysis {

struct ComparisonRow {
    std::string ref_word;
    std::size_t ref_length = 0;
    std::size_t ref_first = 0;
    std::size_t ref_frequency = 0;
    bool found = false;
    long long frequency_error = 0;
    long long length_error = 0;
    double length_error_pct = 0.0;
    long long location_error = 0; // signed offset with the largest magnitude
    double location_error_pct = 0.0;
};

struct ComparisonTotals {
    int found_count = 0;
    long long frequency_error = 0;
    long long length_error = 0;
    long long location_error = 0;
};

struct ComparisonReport {
    std::vector<ComparisonRow> rows;
    ComparisonTotals totals;
};

/// Per reference motif, pick the candidate with maximal total
/// occurrence-interval overlap among those overlapping every reference
/// occurrence; report frequency/length/location discrepancies.
ComparisonReport compare_pools(const MotifPool& reference, const MotifPool& candidate);

struct Anomaly {
    long long previous_start = 0;
    long long interval = 0;
    long long expected_start = 0;
    std::optional<long long> actual_start;
    long long gap_lo = 0;
    long long gap_hi = 0;
};

struct PeriodicityReport {
    std::vector<long long> intervals; // gaps between consecutive starts
    long long expected_interval = 0;  // median interval
    std::vector<Anomaly> anomalies;
};

PeriodicityReport periodicity_scan(const MotifRecord& motif, double tolerance_frac);

} // namespace mta::analysis
