#pragma once

#include <cstdint>
#include <vector>

#include "mta/engine.hpp"
#include "mta/preprocess.hpp"

namespace mta::oracle {

struct MotifTemplate {
    std::vector<double> shape;
    int copies = 2;
    double noise_std = 0.0;
};

struct PlantSpec {
    std::size_t series_length = 500;
    std::vector<MotifTemplate> motif_templates;
    double background_std = 1.0;
    std::uint64_t rng_seed = 0;
};

struct PlantedMotif {
    std::vector<std::size_t> starts; // raw-series indices
    std::size_t length = 0;          // raw points
};

struct PlantedSeries {
    TimeSeries series;
    std::vector<PlantedMotif> ground_truth;
};

PlantedSeries generate_planted(const PlantSpec& spec);

/// Every matched unordered start pair at subsequence length L, by exhaustive
/// enumeration. With require_symbol_equality, only pairs whose stride-s
/// symbolizations are identical are evaluated (L must be a multiple of s).
std::vector<ConfirmedPair> brute_force_pairs(const PreparedSeries& prep, std::size_t length,
                                             const MtaConfig& cfg, bool require_symbol_equality,
                                             DataAccessCounter& accesses,
                                             std::size_t hard_cap = 5000);

MotifPool brute_force_motifs(const PreparedSeries& prep, const std::vector<std::size_t>& lengths,
                             const MtaConfig& cfg, bool require_symbol_equality,
                             std::size_t hard_cap = 5000);

} // namespace mta::oracle
