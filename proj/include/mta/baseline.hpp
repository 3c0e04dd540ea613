#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mta/engine.hpp"
#include "mta/preprocess.hpp"

namespace mta::baseline {

struct BaselineParams {
    int motif_length = 40;
    int num_symbols = 4;
    int alphabet_a = 6;
    int mask_size = 2;
    int projection_iterations = 20;
    int cutoff = 20;
    double threshold_r = 0.15;
    std::uint64_t rng_seed = 0;
    TmePolicy tme_policy = TmePolicy::Ntme;
    ThresholdMode threshold_mode = ThresholdMode::PerPointLinear;
};

void validate(const BaselineParams& p);

/// z-normalize the subsequence in isolation, then PAA into num_symbols frames.
std::string local_sax(std::span<const double> subseq, int num_symbols, const Alphabet& alpha);

struct SubseqWord {
    std::size_t start = 0;
    std::string word;
};

/// All motif_length subsequences as local-SAX words, in start order.
/// Under Tme, every word equal to the previously kept word is dropped (no cap).
std::vector<SubseqWord> baseline_words(const PreparedSeries& prep, const BaselineParams& p,
                                       const Alphabet& alpha);

/// Indices kept by uncapped trivial-match elimination over a word sequence.
std::vector<std::size_t> eliminate_trivial_uncapped(const std::vector<std::string>& words);

/// Sparse symmetric collision counts keyed by (word index, word index), i < j.
using CollisionCounts = std::map<std::pair<std::size_t, std::size_t>, int>;

CollisionCounts build_collision_matrix(const std::vector<SubseqWord>& words,
                                       const BaselineParams& p, std::mt19937_64& rng);

/// Candidate pairs with count >= cutoff, self-overlapping pairs excluded,
/// reported as (start_a, start_b) with start_a < start_b.
std::vector<std::pair<std::size_t, std::size_t>> candidate_pairs(
    const std::vector<SubseqWord>& words, const CollisionCounts& counts,
    const BaselineParams& p);

MotifPool random_projection_detect(const TimeSeries& ts, const BaselineParams& p,
                                   DataAccessCounter& accesses);

} // namespace mta::baseline
