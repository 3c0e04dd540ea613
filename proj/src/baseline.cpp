#include "mta/baseline.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

namespace mta::baseline {

void validate(const BaselineParams& p) {
    if (p.motif_length < 1 || p.num_symbols < 1) {
        fail(Errc::invalid_config, "motif length and symbol count must be >= 1");
    }
    if (p.motif_length % p.num_symbols != 0) {
        fail(Errc::invalid_config, "motif length must be divisible by the symbol count");
    }
    if (p.mask_size < 1 || p.mask_size >= p.num_symbols) {
        fail(Errc::invalid_config, "mask size must be in [1, num_symbols)");
    }
    if (p.projection_iterations < 1 || p.cutoff < 1 || p.cutoff > p.projection_iterations) {
        fail(Errc::invalid_config, "cutoff must be in [1, projection iterations]");
    }
    if (!(p.threshold_r > 0.0)) {
        fail(Errc::invalid_config, "match threshold must be > 0");
    }
    if (p.alphabet_a < 2 || p.alphabet_a > 20) {
        fail(Errc::invalid_alphabet_size, "alphabet size must be in [2, 20]");
    }
}

std::string local_sax(std::span<const double> subseq, int num_symbols, const Alphabet& alpha) {
    if (subseq.empty() || subseq.size() % static_cast<std::size_t>(num_symbols) != 0) {
        fail(Errc::indivisible_length, "subsequence length " + std::to_string(subseq.size()) +
                                           " not divisible by " + std::to_string(num_symbols));
    }
    const std::size_t n = subseq.size();
    const double mean = std::accumulate(subseq.begin(), subseq.end(), 0.0) / n;
    double var = 0.0;
    for (double v : subseq) {
        double d = v - mean;
        var += d * d;
    }
    const double stddev = std::sqrt(var / n);

    const std::size_t frame = n / num_symbols;
    std::string word(num_symbols, '\0');
    for (int k = 0; k < num_symbols; ++k) {
        double sum = 0.0;
        for (std::size_t i = k * frame; i < (k + 1) * frame; ++i) {
            sum += subseq[i];
        }
        double paa = sum / frame;
        double z = stddev < 1e-12 ? 0.0 : (paa - mean) / stddev;
        word[k] = symbol_for_value(z, alpha);
    }
    return word;
}

std::vector<std::size_t> eliminate_trivial_uncapped(const std::vector<std::string>& words) {
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (kept.empty() || words[i] != words[kept.back()]) {
            kept.push_back(i);
        }
    }
    return kept;
}

std::vector<SubseqWord> baseline_words(const PreparedSeries& prep, const BaselineParams& p,
                                       const Alphabet& alpha) {
    const std::size_t len = static_cast<std::size_t>(p.motif_length);
    if (prep.values.size() < len) {
        fail(Errc::window_too_large, "motif length " + std::to_string(len) +
                                         " exceeds prepared length " +
                                         std::to_string(prep.values.size()));
    }
    std::vector<SubseqWord> out;
    out.reserve(prep.values.size() - len + 1);
    for (std::size_t start = 0; start + len <= prep.values.size(); ++start) {
        std::span<const double> sub(prep.values.data() + start, len);
        std::string w = local_sax(sub, p.num_symbols, alpha);
        if (p.tme_policy == TmePolicy::Tme && !out.empty() && w == out.back().word) {
            continue; // all consecutive trivial matches removed, no cap
        }
        out.push_back(SubseqWord{start, std::move(w)});
    }
    return out;
}

CollisionCounts build_collision_matrix(const std::vector<SubseqWord>& words,
                                       const BaselineParams& p, std::mt19937_64& rng) {
    CollisionCounts counts;
    std::vector<int> positions(p.num_symbols);
    std::iota(positions.begin(), positions.end(), 0);

    for (int round = 0; round < p.projection_iterations; ++round) {
        // Sample mask_size distinct symbol positions, kept in index order.
        for (int k = 0; k < p.mask_size; ++k) {
            std::uniform_int_distribution<int> pick(k, p.num_symbols - 1);
            std::swap(positions[k], positions[pick(rng)]);
        }
        std::vector<int> mask(positions.begin(), positions.begin() + p.mask_size);
        std::sort(mask.begin(), mask.end());

        std::unordered_map<std::string, std::vector<std::size_t>> buckets;
        buckets.reserve(words.size());
        std::string key(mask.size(), '\0');
        for (std::size_t i = 0; i < words.size(); ++i) {
            for (std::size_t k = 0; k < mask.size(); ++k) {
                key[k] = words[i].word[mask[k]];
            }
            buckets[key].push_back(i);
        }
        for (const auto& [_, members] : buckets) {
            for (std::size_t i = 0; i < members.size(); ++i) {
                for (std::size_t j = i + 1; j < members.size(); ++j) {
                    ++counts[{members[i], members[j]}];
                }
            }
        }
    }
    return counts;
}

std::vector<std::pair<std::size_t, std::size_t>> candidate_pairs(
    const std::vector<SubseqWord>& words, const CollisionCounts& counts,
    const BaselineParams& p) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const std::size_t len = static_cast<std::size_t>(p.motif_length);
    for (const auto& [pair, count] : counts) {
        if (count < p.cutoff) {
            continue;
        }
        std::size_t a = words[pair.first].start;
        std::size_t b = words[pair.second].start;
        if (a > b) {
            std::swap(a, b);
        }
        if (b - a < len) {
            continue; // self-overlapping, a trivial match
        }
        out.emplace_back(a, b);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// The paper's manual condensation, automated: motifs whose two occurrence
// starts differ by one common shift of at most num_symbols points are grouped
// and the closest pair represents the group.
MotifPool condense_offset_duplicates(MotifPool pairs, int num_symbols) {
    const std::size_t n = pairs.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            long long shift = static_cast<long long>(pairs[j].occurrences[0]) -
                              static_cast<long long>(pairs[i].occurrences[0]);
            long long shift2 = static_cast<long long>(pairs[j].occurrences[1]) -
                               static_cast<long long>(pairs[i].occurrences[1]);
            if (shift == shift2 && std::llabs(shift) <= num_symbols) {
                parent[find(i)] = find(j);
            }
        }
    }

    std::unordered_map<std::size_t, std::size_t> best; // root -> representative index
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t root = find(i);
        auto it = best.find(root);
        if (it == best.end()) {
            best.emplace(root, i);
            continue;
        }
        const MotifRecord& cur = pairs[it->second];
        const MotifRecord& cand = pairs[i];
        if (cand.distances[0] < cur.distances[0] ||
            (cand.distances[0] == cur.distances[0] && cand.occurrences < cur.occurrences)) {
            it->second = i;
        }
    }

    MotifPool out;
    out.reserve(best.size());
    for (const auto& [_, idx] : best) {
        out.push_back(std::move(pairs[idx]));
    }
    std::sort(out.begin(), out.end(), [](const MotifRecord& a, const MotifRecord& b) {
        return a.occurrences < b.occurrences;
    });
    return out;
}

} // namespace

MotifPool random_projection_detect(const TimeSeries& ts, const BaselineParams& p,
                                   DataAccessCounter& accesses) {
    validate(p);
    PreparedSeries prep = prepare(ts);
    Alphabet alpha = make_alphabet(p.alphabet_a);
    std::vector<SubseqWord> words = baseline_words(prep, p, alpha);

    std::mt19937_64 rng(p.rng_seed);
    CollisionCounts counts = build_collision_matrix(words, p, rng);
    auto candidates = candidate_pairs(words, counts, p);

    MtaConfig match_cfg;
    match_cfg.symbol_size_s = p.motif_length / p.num_symbols;
    match_cfg.alphabet_a = p.alphabet_a;
    match_cfg.threshold_r = p.threshold_r;
    match_cfg.threshold_mode = p.threshold_mode;

    std::unordered_map<std::size_t, std::size_t> word_at; // start -> word index
    word_at.reserve(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) {
        word_at.emplace(words[i].start, i);
    }

    const std::size_t len = static_cast<std::size_t>(p.motif_length);
    MotifPool found;
    for (const auto& [a, b] : candidates) {
        std::span<const double> x(prep.values.data() + a, len);
        std::span<const double> y(prep.values.data() + b, len);
        MatchResult m = euclidean_match(x, y, match_cfg, accesses);
        if (m.matched) {
            found.push_back(MotifRecord{words[word_at.at(a)].word, len, {a, b}, {m.distance}});
        }
    }
    return condense_offset_duplicates(std::move(found), p.num_symbols);
}

} // namespace mta::baseline
