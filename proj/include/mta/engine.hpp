#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mta/preprocess.hpp"

namespace mta {

enum class TmePolicy { Ntme, Tme };

enum class ThresholdMode { PerPointLinear, PerSqrtLength, Absolute };

struct MtaConfig {
    int symbol_size_s = 10;
    int alphabet_a = 6;
    double threshold_r = 0.15;
    TmePolicy tme_policy = TmePolicy::Ntme;
    ThresholdMode threshold_mode = ThresholdMode::PerPointLinear;
    std::optional<int> max_generations;
};

void validate(const MtaConfig& cfg);

/// Candidate-motif signature: a symbol string plus a stimulation counter.
struct Tracker {
    std::string word;
    int match_count = 0;
};

using TrackerPool = std::vector<Tracker>;

struct CandidateWord {
    std::string symbols;
    std::size_t start = 0; // prepared-series index
};

struct CandidateMatrix {
    int generation_g = 1;
    int symbol_size_s = 1;
    TmePolicy tme_policy = TmePolicy::Ntme;
    std::vector<CandidateWord> words; // time ordered

    std::size_t span_points() const {
        return static_cast<std::size_t>(generation_g) * symbol_size_s;
    }
};

struct MotifRecord {
    std::string word;
    std::size_t length_points = 0;
    std::vector<std::size_t> occurrences; // sorted start indices, >= 2
    std::vector<double> distances;        // confirmed pair distances
};

using MotifPool = std::vector<MotifRecord>;

struct RunStats {
    int generations = 0;
    long long data_accesses = 0; // euclidean_match evaluations
    int trackers_peak = 0;
    long long wall_time_ms = 0;
};

struct DataAccessCounter {
    long long count = 0;
};

struct MatchResult {
    double distance = 0.0;
    bool matched = false;
};

/// One confirmed occurrence pair, kept for instrumentation and tests.
struct ConfirmedPair {
    std::string word;
    std::size_t start_a = 0;
    std::size_t start_b = 0;
    double distance = 0.0;
};

struct RunTrace {
    struct Generation {
        int generation = 0;
        std::vector<ConfirmedPair> pairs;
    };
    std::vector<Generation> generations;
};

struct RunResult {
    MotifPool motifs;
    RunStats stats;
};

TrackerPool init_trackers(const Alphabet& alpha);

CandidateMatrix build_candidates(const SymbolMatrix& S, int g, TmePolicy policy);

TrackerPool match_trackers(TrackerPool pool, const CandidateMatrix& M);

/// Keep trackers with match_count >= 2, reset survivors to 0.
TrackerPool prune_unmatched(TrackerPool pool);

MatchResult euclidean_match(std::span<const double> x, std::span<const double> y,
                            const MtaConfig& cfg, DataAccessCounter& accesses);

double match_limit(const MtaConfig& cfg, std::size_t n);

struct ConfirmResult {
    std::vector<MotifRecord> motifs;
    TrackerPool pool; // stimulated trackers carry match_count >= 1
};

ConfirmResult confirm_motifs(const TrackerPool& pool, const CandidateMatrix& M,
                             const PreparedSeries& prep, const MtaConfig& cfg,
                             DataAccessCounter& accesses,
                             std::vector<ConfirmedPair>* pair_log = nullptr);

TrackerPool proliferate_mutate(const TrackerPool& pool, const std::string& mutation_template);

/// Drop exact duplicates and motifs wholly encapsulated by a longer motif;
/// sort by length descending, then first occurrence.
MotifPool streamline(MotifPool motifs);

RunResult run_mta(const TimeSeries& ts, const MtaConfig& cfg, RunTrace* trace = nullptr);

} // namespace mta
