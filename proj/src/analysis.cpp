#include "mta/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace mta::analysis {

namespace {

long long overlap(std::size_t a_start, std::size_t a_len, std::size_t b_start, std::size_t b_len) {
    long long lo = std::max<long long>(a_start, b_start);
    long long hi = std::min<long long>(a_start + a_len, b_start + b_len);
    return std::max<long long>(0, hi - lo);
}

struct CandidateFit {
    bool covers_all = false;
    long long total_overlap = 0;
};

CandidateFit fit(const MotifRecord& ref, const MotifRecord& cand) {
    CandidateFit f;
    f.covers_all = true;
    for (std::size_t o : ref.occurrences) {
        long long best = 0;
        for (std::size_t p : cand.occurrences) {
            best = std::max(best, overlap(o, ref.length_points, p, cand.length_points));
        }
        if (best == 0) {
            f.covers_all = false;
        }
        f.total_overlap += best;
    }
    return f;
}

} // namespace

ComparisonReport compare_pools(const MotifPool& reference, const MotifPool& candidate) {
    ComparisonReport report;
    report.rows.reserve(reference.size());

    for (const MotifRecord& ref : reference) {
        ComparisonRow row;
        row.ref_word = ref.word;
        row.ref_length = ref.length_points;
        row.ref_first = ref.occurrences.empty() ? 0 : ref.occurrences.front();
        row.ref_frequency = ref.occurrences.size();

        // Best candidate = maximal total overlap among those that overlap
        // every reference occurrence; ties broken deterministically.
        const MotifRecord* best = nullptr;
        CandidateFit best_fit;
        for (const MotifRecord& cand : candidate) {
            CandidateFit f = fit(ref, cand);
            if (!f.covers_all || f.total_overlap == 0) {
                continue;
            }
            bool better = false;
            if (!best) {
                better = true;
            } else if (f.total_overlap != best_fit.total_overlap) {
                better = f.total_overlap > best_fit.total_overlap;
            } else if (cand.length_points != best->length_points) {
                better = cand.length_points > best->length_points;
            } else if (cand.occurrences != best->occurrences) {
                better = cand.occurrences < best->occurrences;
            } else {
                better = cand.word < best->word;
            }
            if (better) {
                best = &cand;
                best_fit = f;
            }
        }

        if (!best) {
            row.found = false;
            row.frequency_error = -static_cast<long long>(ref.occurrences.size());
            row.length_error = -static_cast<long long>(ref.length_points);
            row.length_error_pct = -100.0;
            row.location_error = 0;
            row.location_error_pct = 0.0;
        } else {
            row.found = true;
            row.frequency_error = static_cast<long long>(best->occurrences.size()) -
                                  static_cast<long long>(ref.occurrences.size());
            row.length_error = static_cast<long long>(best->length_points) -
                               static_cast<long long>(ref.length_points);
            row.length_error_pct =
                100.0 * static_cast<double>(row.length_error) / static_cast<double>(ref.length_points);
            long long worst = 0;
            for (std::size_t o : ref.occurrences) {
                const std::size_t* match = nullptr;
                long long match_overlap = 0;
                for (const std::size_t& p : best->occurrences) {
                    long long ov = overlap(o, ref.length_points, p, best->length_points);
                    if (ov > match_overlap) {
                        match_overlap = ov;
                        match = &p;
                    }
                }
                if (match) {
                    long long off = static_cast<long long>(*match) - static_cast<long long>(o);
                    if (std::llabs(off) > std::llabs(worst)) {
                        worst = off;
                    }
                }
            }
            row.location_error = worst;
            row.location_error_pct =
                100.0 * static_cast<double>(worst) / static_cast<double>(ref.length_points);
        }

        report.totals.found_count += row.found ? 1 : 0;
        report.totals.frequency_error += row.frequency_error;
        report.totals.length_error += row.length_error;
        report.totals.location_error += row.location_error;
        report.rows.push_back(std::move(row));
    }
    return report;
}

PeriodicityReport periodicity_scan(const MotifRecord& motif, double tolerance_frac) {
    if (motif.occurrences.size() < 3) {
        fail(Errc::too_few_occurrences, "periodicity scan needs >= 3 occurrences, got " +
                                            std::to_string(motif.occurrences.size()));
    }
    if (!(tolerance_frac > 0.0) || !(tolerance_frac < 1.0)) {
        fail(Errc::invalid_config, "tolerance fraction must be in (0, 1)");
    }

    std::vector<std::size_t> starts = motif.occurrences;
    std::sort(starts.begin(), starts.end());

    PeriodicityReport report;
    report.intervals.reserve(starts.size() - 1);
    for (std::size_t i = 1; i < starts.size(); ++i) {
        report.intervals.push_back(static_cast<long long>(starts[i]) -
                                   static_cast<long long>(starts[i - 1]));
    }

    std::vector<long long> sorted = report.intervals;
    std::sort(sorted.begin(), sorted.end());
    report.expected_interval = sorted[(sorted.size() - 1) / 2]; // lower median

    const double band = tolerance_frac * static_cast<double>(report.expected_interval);
    for (std::size_t i = 0; i < report.intervals.size(); ++i) {
        long long interval = report.intervals[i];
        if (std::abs(static_cast<double>(interval - report.expected_interval)) <= band) {
            continue;
        }
        Anomaly a;
        a.previous_start = static_cast<long long>(starts[i]);
        a.interval = interval;
        a.expected_start = a.previous_start + report.expected_interval;
        a.actual_start = static_cast<long long>(starts[i + 1]);
        a.gap_lo = a.expected_start;
        a.gap_hi = a.expected_start + static_cast<long long>(motif.length_points);
        report.anomalies.push_back(a);
    }
    return report;
}

} // namespace mta::analysis
