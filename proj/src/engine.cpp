#include "mta/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace mta {

void validate(const MtaConfig& cfg) {
    if (cfg.symbol_size_s < 1) {
        fail(Errc::invalid_config, "symbol size must be >= 1");
    }
    if (!(cfg.threshold_r > 0.0)) {
        fail(Errc::invalid_config, "match threshold must be > 0");
    }
    if (cfg.alphabet_a < 2 || cfg.alphabet_a > 20) {
        fail(Errc::invalid_alphabet_size, "alphabet size must be in [2, 20]");
    }
    if (cfg.max_generations && *cfg.max_generations < 1) {
        fail(Errc::invalid_config, "max generations must be >= 1");
    }
}

TrackerPool init_trackers(const Alphabet& alpha) {
    TrackerPool pool;
    pool.reserve(alpha.size_a);
    for (int i = 0; i < alpha.size_a; ++i) {
        pool.push_back(Tracker{std::string(1, alpha.symbol(i)), 0});
    }
    return pool;
}

CandidateMatrix build_candidates(const SymbolMatrix& S, int g, TmePolicy policy) {
    if (g < 1) {
        fail(Errc::invalid_config, "generation must be >= 1");
    }
    const std::size_t n = S.symbols.size();
    const std::size_t reach = static_cast<std::size_t>(g - 1) * S.symbol_size_s;
    if (n == 0 || reach + 1 > n) {
        fail(Errc::generation_too_long, "no valid start for generation " + std::to_string(g));
    }

    CandidateMatrix M;
    M.generation_g = g;
    M.symbol_size_s = S.symbol_size_s;
    M.tme_policy = policy;

    const std::size_t last_start = n - 1 - reach;
    auto word_at = [&](std::size_t p) {
        std::string w(g, '\0');
        for (int k = 0; k < g; ++k) {
            w[k] = S.symbols[p + static_cast<std::size_t>(k) * S.symbol_size_s];
        }
        return w;
    };

    if (policy == TmePolicy::Ntme) {
        M.words.reserve(last_start + 1);
        for (std::size_t p = 0; p <= last_start; ++p) {
            M.words.push_back(CandidateWord{word_at(p), p});
        }
        return M;
    }

    // TME: a word is emitted iff it differs from the last emitted word, or s
    // consecutive words have been suppressed since the last emission.
    int suppressed_run = 0;
    for (std::size_t p = 0; p <= last_start; ++p) {
        std::string w = word_at(p);
        if (M.words.empty() || w != M.words.back().symbols || suppressed_run == S.symbol_size_s) {
            M.words.push_back(CandidateWord{std::move(w), p});
            suppressed_run = 0;
        } else {
            ++suppressed_run;
        }
    }
    return M;
}

TrackerPool match_trackers(TrackerPool pool, const CandidateMatrix& M) {
    for (const Tracker& t : pool) {
        if (static_cast<int>(t.word.size()) != M.generation_g) {
            fail(Errc::generation_mismatch, "tracker word '" + t.word + "' vs generation " +
                                                std::to_string(M.generation_g));
        }
    }
    std::unordered_map<std::string, int> counts;
    counts.reserve(M.words.size());
    for (const CandidateWord& w : M.words) {
        ++counts[w.symbols];
    }
    for (Tracker& t : pool) {
        auto it = counts.find(t.word);
        t.match_count = it == counts.end() ? 0 : it->second;
    }
    return pool;
}

TrackerPool prune_unmatched(TrackerPool pool) {
    TrackerPool out;
    out.reserve(pool.size());
    for (Tracker& t : pool) {
        if (t.match_count >= 2) {
            t.match_count = 0;
            out.push_back(std::move(t));
        }
    }
    return out;
}

double match_limit(const MtaConfig& cfg, std::size_t n) {
    switch (cfg.threshold_mode) {
    case ThresholdMode::PerPointLinear: return cfg.threshold_r * static_cast<double>(n);
    case ThresholdMode::PerSqrtLength: return cfg.threshold_r * std::sqrt(static_cast<double>(n));
    case ThresholdMode::Absolute: return cfg.threshold_r;
    }
    return cfg.threshold_r;
}

MatchResult euclidean_match(std::span<const double> x, std::span<const double> y,
                            const MtaConfig& cfg, DataAccessCounter& accesses) {
    if (x.size() != y.size() || x.empty()) {
        fail(Errc::length_mismatch, "subsequence lengths " + std::to_string(x.size()) + " vs " +
                                        std::to_string(y.size()));
    }
    ++accesses.count;
    double ss = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double d = x[i] - y[i];
        ss += d * d;
    }
    double dist = std::sqrt(ss);
    return MatchResult{dist, dist <= match_limit(cfg, x.size())};
}

ConfirmResult confirm_motifs(const TrackerPool& pool, const CandidateMatrix& M,
                             const PreparedSeries& prep, const MtaConfig& cfg,
                             DataAccessCounter& accesses, std::vector<ConfirmedPair>* pair_log) {
    // Collect the start positions of each pool word, in time order.
    std::unordered_map<std::string, std::vector<std::size_t>> starts;
    starts.reserve(pool.size());
    for (const Tracker& t : pool) {
        starts.emplace(t.word, std::vector<std::size_t>{});
    }
    for (const CandidateWord& w : M.words) {
        auto it = starts.find(w.symbols);
        if (it != starts.end()) {
            it->second.push_back(w.start);
        }
    }

    const std::size_t len = M.span_points();
    ConfirmResult result;
    result.pool = pool;
    for (Tracker& t : result.pool) {
        const std::vector<std::size_t>& occ = starts[t.word];
        std::set<std::size_t> incident;
        std::vector<double> distances;
        int stimulation = 0;
        for (std::size_t i = 0; i < occ.size(); ++i) {
            std::span<const double> x(prep.values.data() + occ[i], len);
            for (std::size_t j = i + 1; j < occ.size(); ++j) {
                std::span<const double> y(prep.values.data() + occ[j], len);
                MatchResult m = euclidean_match(x, y, cfg, accesses);
                if (m.matched) {
                    ++stimulation;
                    incident.insert(occ[i]);
                    incident.insert(occ[j]);
                    distances.push_back(m.distance);
                    if (pair_log) {
                        pair_log->push_back(ConfirmedPair{t.word, occ[i], occ[j], m.distance});
                    }
                }
            }
        }
        t.match_count = stimulation;
        if (stimulation > 0) {
            result.motifs.push_back(MotifRecord{
                t.word, len, std::vector<std::size_t>(incident.begin(), incident.end()),
                std::move(distances)});
        }
    }
    return result;
}

TrackerPool proliferate_mutate(const TrackerPool& pool, const std::string& mutation_template) {
    if (mutation_template.empty()) {
        fail(Errc::empty_template, "no surviving symbols to mutate with");
    }
    TrackerPool out;
    out.reserve(pool.size() * mutation_template.size());
    std::unordered_set<std::string> seen;
    seen.reserve(pool.size() * mutation_template.size());
    for (const Tracker& t : pool) {
        for (char c : mutation_template) {
            std::string w = t.word + c;
            if (seen.insert(w).second) {
                out.push_back(Tracker{std::move(w), 0});
            }
        }
    }
    return out;
}

namespace {

bool interval_covered(std::size_t o, std::size_t len, const MotifRecord& by) {
    for (std::size_t p : by.occurrences) {
        if (p <= o && o + len <= p + by.length_points) {
            return true;
        }
    }
    return false;
}

bool encapsulated(const MotifRecord& a, const MotifRecord& b) {
    if (b.length_points < a.length_points) {
        return false;
    }
    for (std::size_t o : a.occurrences) {
        if (!interval_covered(o, a.length_points, b)) {
            return false;
        }
    }
    return true;
}

} // namespace

MotifPool streamline(MotifPool motifs) {
    std::sort(motifs.begin(), motifs.end(), [](const MotifRecord& a, const MotifRecord& b) {
        if (a.length_points != b.length_points) return a.length_points > b.length_points;
        std::size_t fa = a.occurrences.empty() ? 0 : a.occurrences.front();
        std::size_t fb = b.occurrences.empty() ? 0 : b.occurrences.front();
        if (fa != fb) return fa < fb;
        return a.word < b.word;
    });

    MotifPool kept;
    std::set<std::pair<std::string, std::vector<std::size_t>>> seen;
    for (MotifRecord& m : motifs) {
        if (!seen.emplace(m.word, m.occurrences).second) {
            continue; // exact duplicate
        }
        bool drop = false;
        for (const MotifRecord& k : kept) {
            if (encapsulated(m, k)) {
                drop = true;
                break;
            }
        }
        if (!drop) {
            kept.push_back(std::move(m));
        }
    }
    return kept;
}

RunResult run_mta(const TimeSeries& ts, const MtaConfig& cfg, RunTrace* trace) {
    validate(cfg);
    const auto t0 = std::chrono::steady_clock::now();

    PreparedSeries prep = prepare(ts);
    Alphabet alpha = make_alphabet(cfg.alphabet_a);
    SymbolMatrix S = symbolize(prep, cfg.symbol_size_s, alpha);

    TrackerPool pool = init_trackers(alpha);
    std::string mutation_template;
    MotifPool memory;
    RunStats stats;
    DataAccessCounter accesses;
    stats.trackers_peak = static_cast<int>(pool.size());

    for (int g = 1; !pool.empty(); ++g) {
        if (cfg.max_generations && g > *cfg.max_generations) {
            break;
        }
        CandidateMatrix M;
        try {
            M = build_candidates(S, g, cfg.tme_policy);
        } catch (const MtaError& e) {
            if (e.code() == Errc::generation_too_long) {
                break; // words cannot grow any further
            }
            throw;
        }
        stats.generations = g;

        pool = prune_unmatched(match_trackers(std::move(pool), M));
        if (pool.empty()) {
            break;
        }

        std::vector<ConfirmedPair>* log = nullptr;
        if (trace) {
            trace->generations.push_back(RunTrace::Generation{g, {}});
            log = &trace->generations.back().pairs;
        }
        ConfirmResult confirmed = confirm_motifs(pool, M, prep, cfg, accesses, log);

        pool.clear();
        for (Tracker& t : confirmed.pool) {
            if (t.match_count > 0) {
                t.match_count = 0;
                pool.push_back(std::move(t));
            }
        }
        memory.insert(memory.end(), std::make_move_iterator(confirmed.motifs.begin()),
                      std::make_move_iterator(confirmed.motifs.end()));
        if (pool.empty()) {
            break;
        }

        if (g == 1) {
            // Surviving generation-1 symbols are the only viable extensions.
            for (const Tracker& t : pool) {
                mutation_template += t.word;
            }
            std::sort(mutation_template.begin(), mutation_template.end());
        }
        pool = proliferate_mutate(pool, mutation_template);
        stats.trackers_peak = std::max(stats.trackers_peak, static_cast<int>(pool.size()));
    }

    stats.data_accesses = accesses.count;
    stats.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
    return RunResult{streamline(std::move(memory)), stats};
}

} // namespace mta
