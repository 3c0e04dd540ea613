#include "mta/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

namespace mta::oracle {

PlantedSeries generate_planted(const PlantSpec& spec) {
    if (spec.series_length == 0) {
        fail(Errc::invalid_config, "series length must be > 0");
    }
    std::mt19937_64 rng(spec.rng_seed);
    std::normal_distribution<double> background(0.0, spec.background_std > 0 ? spec.background_std : 1e-9);

    PlantedSeries out;
    out.series.name = "planted";
    out.series.source = "synthetic";
    out.series.values.resize(spec.series_length);
    for (double& v : out.series.values) {
        v = spec.background_std > 0 ? background(rng) : 0.0;
    }

    std::vector<std::pair<std::size_t, std::size_t>> placed; // [start, end)
    auto overlaps = [&](std::size_t start, std::size_t len) {
        for (const auto& [s, e] : placed) {
            if (start < e && s < start + len) {
                return true;
            }
        }
        return false;
    };

    for (const MotifTemplate& tmpl : spec.motif_templates) {
        const std::size_t len = tmpl.shape.size();
        if (len == 0 || len > spec.series_length) {
            fail(Errc::placement_failed, "template of length " + std::to_string(len) +
                                             " cannot fit in series of length " +
                                             std::to_string(spec.series_length));
        }
        PlantedMotif truth;
        truth.length = len;
        std::uniform_int_distribution<std::size_t> place(0, spec.series_length - len);
        for (int copy = 0; copy < tmpl.copies; ++copy) {
            std::size_t start = 0;
            bool ok = false;
            for (int attempt = 0; attempt < 10000; ++attempt) {
                start = place(rng);
                if (!overlaps(start, len)) {
                    ok = true;
                    break;
                }
            }
            if (!ok) {
                fail(Errc::placement_failed, "could not place a non-overlapping copy after 10000 tries");
            }
            placed.emplace_back(start, start + len);
            truth.starts.push_back(start);
            if (tmpl.noise_std > 0) {
                std::normal_distribution<double> jitter(0.0, tmpl.noise_std);
                for (std::size_t i = 0; i < len; ++i) {
                    out.series.values[start + i] = tmpl.shape[i] + jitter(rng);
                }
            } else {
                std::copy(tmpl.shape.begin(), tmpl.shape.end(), out.series.values.begin() + start);
            }
        }
        std::sort(truth.starts.begin(), truth.starts.end());
        out.ground_truth.push_back(std::move(truth));
    }
    return out;
}

std::vector<ConfirmedPair> brute_force_pairs(const PreparedSeries& prep, std::size_t length,
                                             const MtaConfig& cfg, bool require_symbol_equality,
                                             DataAccessCounter& accesses, std::size_t hard_cap) {
    if (prep.values.size() > hard_cap) {
        fail(Errc::series_too_long, "brute force capped at " + std::to_string(hard_cap) +
                                        " prepared points, got " + std::to_string(prep.values.size()));
    }
    if (length == 0 || length > prep.values.size()) {
        fail(Errc::window_too_large, "subsequence length " + std::to_string(length) +
                                         " exceeds prepared length");
    }

    std::vector<ConfirmedPair> pairs;
    const std::size_t last_start = prep.values.size() - length;
    auto test_pair = [&](std::size_t i, std::size_t j, const std::string& word) {
        std::span<const double> x(prep.values.data() + i, length);
        std::span<const double> y(prep.values.data() + j, length);
        MatchResult m = euclidean_match(x, y, cfg, accesses);
        if (m.matched) {
            pairs.push_back(ConfirmedPair{word, i, j, m.distance});
        }
    };

    if (require_symbol_equality) {
        const std::size_t s = static_cast<std::size_t>(cfg.symbol_size_s);
        if (length % s != 0) {
            fail(Errc::invalid_config,
                 "symbol equality requires a length that is a multiple of the symbol size");
        }
        Alphabet alpha = make_alphabet(cfg.alphabet_a);
        SymbolMatrix S = symbolize(prep, cfg.symbol_size_s, alpha);
        const std::size_t g = length / s;
        std::map<std::string, std::vector<std::size_t>> groups;
        for (std::size_t start = 0; start <= last_start; ++start) {
            std::string word(g, '\0');
            for (std::size_t k = 0; k < g; ++k) {
                word[k] = S.symbols[start + k * s];
            }
            groups[word].push_back(start);
        }
        for (const auto& [word, starts] : groups) {
            for (std::size_t i = 0; i < starts.size(); ++i) {
                for (std::size_t j = i + 1; j < starts.size(); ++j) {
                    test_pair(starts[i], starts[j], word);
                }
            }
        }
    } else {
        for (std::size_t i = 0; i <= last_start; ++i) {
            for (std::size_t j = i + 1; j <= last_start; ++j) {
                test_pair(i, j, "");
            }
        }
    }

    std::sort(pairs.begin(), pairs.end(), [](const ConfirmedPair& a, const ConfirmedPair& b) {
        return std::tie(a.start_a, a.start_b) < std::tie(b.start_a, b.start_b);
    });
    return pairs;
}

namespace {

// Union-find grouping of matched pairs into occurrence sets.
MotifPool group_by_incidence(const std::vector<ConfirmedPair>& pairs, std::size_t length) {
    std::map<std::size_t, std::size_t> parent;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const ConfirmedPair& p : pairs) {
        parent.try_emplace(p.start_a, p.start_a);
        parent.try_emplace(p.start_b, p.start_b);
        parent[find(p.start_a)] = find(p.start_b);
    }

    std::map<std::size_t, MotifRecord> groups;
    for (const ConfirmedPair& p : pairs) {
        MotifRecord& rec = groups[find(p.start_a)];
        rec.word = p.word;
        rec.length_points = length;
        rec.occurrences.push_back(p.start_a);
        rec.occurrences.push_back(p.start_b);
        rec.distances.push_back(p.distance);
    }

    MotifPool pool;
    for (auto& [_, rec] : groups) {
        std::sort(rec.occurrences.begin(), rec.occurrences.end());
        rec.occurrences.erase(std::unique(rec.occurrences.begin(), rec.occurrences.end()),
                              rec.occurrences.end());
        pool.push_back(std::move(rec));
    }
    return pool;
}

} // namespace

MotifPool brute_force_motifs(const PreparedSeries& prep, const std::vector<std::size_t>& lengths,
                             const MtaConfig& cfg, bool require_symbol_equality,
                             std::size_t hard_cap) {
    DataAccessCounter accesses;
    MotifPool pool;
    for (std::size_t length : lengths) {
        auto pairs = brute_force_pairs(prep, length, cfg, require_symbol_equality, accesses, hard_cap);
        if (require_symbol_equality) {
            // One record per word, as the engine builds them.
            std::map<std::string, MotifRecord> by_word;
            for (const ConfirmedPair& p : pairs) {
                MotifRecord& rec = by_word[p.word];
                rec.word = p.word;
                rec.length_points = length;
                rec.occurrences.push_back(p.start_a);
                rec.occurrences.push_back(p.start_b);
                rec.distances.push_back(p.distance);
            }
            for (auto& [_, rec] : by_word) {
                std::sort(rec.occurrences.begin(), rec.occurrences.end());
                rec.occurrences.erase(std::unique(rec.occurrences.begin(), rec.occurrences.end()),
                                      rec.occurrences.end());
                pool.push_back(std::move(rec));
            }
        } else {
            MotifPool grouped = group_by_incidence(pairs, length);
            pool.insert(pool.end(), std::make_move_iterator(grouped.begin()),
                        std::make_move_iterator(grouped.end()));
        }
    }
    return streamline(std::move(pool));
}

} // namespace mta::oracle
