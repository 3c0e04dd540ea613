#include "mta/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace mta::io {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',' || c == ' ' || c == '\t' || c == '\r' || c == ';') {
            if (!cur.empty()) {
                fields.push_back(std::move(cur));
                cur.clear();
            }
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) {
        fields.push_back(std::move(cur));
    }
    return fields;
}

} // namespace

TimeSeries load_csv(const std::string& path, int column, int decimation_k,
                    std::optional<SliceRange> slice) {
    if (column < 0) {
        fail(Errc::invalid_config, "column index must be >= 0");
    }
    if (decimation_k < 1) {
        fail(Errc::invalid_config, "decimation step must be >= 1");
    }
    std::ifstream in(path);
    if (!in) {
        fail(Errc::file_not_found, path);
    }

    TimeSeries ts;
    ts.name = std::filesystem::path(path).stem().string();
    ts.source = path;

    std::string line;
    long long row = 0;
    long long data_row = 0;
    while (std::getline(in, line)) {
        ++row;
        if (row == 1 && line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) {
            line.erase(0, 3); // UTF-8 BOM
        }
        std::vector<std::string> fields = split_fields(line);
        if (fields.empty()) {
            fail(Errc::parse_error, path + ":" + std::to_string(row) + ": empty row");
        }
        if ((data_row++ % decimation_k) != 0) {
            continue;
        }
        if (static_cast<std::size_t>(column) >= fields.size()) {
            fail(Errc::parse_error, path + ":" + std::to_string(row) + ": no column " +
                                        std::to_string(column));
        }
        const std::string& tok = fields[column];
        char* end = nullptr;
        double v = std::strtod(tok.c_str(), &end);
        if (end != tok.c_str() + tok.size() || !std::isfinite(v)) {
            fail(Errc::parse_error, path + ":" + std::to_string(row) + ": column " +
                                        std::to_string(column) + ": bad value '" + tok + "'");
        }
        ts.values.push_back(v);
    }

    if (slice) {
        if (slice->begin >= slice->end) {
            fail(Errc::invalid_config, "slice start must be below slice end");
        }
        std::size_t lo = std::min(slice->begin, ts.values.size());
        std::size_t hi = std::min(slice->end, ts.values.size());
        ts.values = std::vector<double>(ts.values.begin() + lo, ts.values.begin() + hi);
    }
    if (ts.values.empty()) {
        fail(Errc::empty_after_slice, path + ": no data rows selected");
    }
    return ts;
}

double round_sig6(double v) {
    if (v == 0.0 || !std::isfinite(v)) {
        return v;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return std::strtod(buf, nullptr);
}

namespace {

const char* mode_name(ThresholdMode m) {
    switch (m) {
    case ThresholdMode::PerPointLinear: return "per-point";
    case ThresholdMode::PerSqrtLength: return "per-sqrt";
    case ThresholdMode::Absolute: return "absolute";
    }
    return "per-point";
}

} // namespace

Json config_to_json(const MtaConfig& cfg) {
    Json j;
    j["algorithm"] = "mta";
    j["symbol_size"] = cfg.symbol_size_s;
    j["alphabet"] = cfg.alphabet_a;
    j["threshold"] = round_sig6(cfg.threshold_r);
    j["threshold_mode"] = mode_name(cfg.threshold_mode);
    j["tme"] = cfg.tme_policy == TmePolicy::Tme;
    if (cfg.max_generations) {
        j["max_generations"] = *cfg.max_generations;
    } else {
        j["max_generations"] = nullptr;
    }
    return j;
}

Json config_to_json(const baseline::BaselineParams& p) {
    Json j;
    j["algorithm"] = "random-projection";
    j["motif_length"] = p.motif_length;
    j["num_symbols"] = p.num_symbols;
    j["alphabet"] = p.alphabet_a;
    j["mask_size"] = p.mask_size;
    j["iterations"] = p.projection_iterations;
    j["cutoff"] = p.cutoff;
    j["threshold"] = round_sig6(p.threshold_r);
    j["threshold_mode"] = mode_name(p.threshold_mode);
    j["tme"] = p.tme_policy == TmePolicy::Tme;
    j["seed"] = p.rng_seed;
    return j;
}

Json motifs_to_json(const std::string& series_name, std::size_t series_length,
                    const Json& config, const MotifPool& pool) {
    Json j;
    j["series"] = Json{{"name", series_name}, {"length", series_length}};
    j["config"] = config;
    Json motifs = Json::array();
    for (const MotifRecord& m : pool) {
        Json rec;
        rec["word"] = m.word;
        rec["length_points"] = m.length_points;
        rec["occurrences"] = m.occurrences;
        Json dists = Json::array();
        for (double d : m.distances) {
            dists.push_back(round_sig6(d));
        }
        rec["distances"] = std::move(dists);
        motifs.push_back(std::move(rec));
    }
    j["motifs"] = std::move(motifs);
    return j;
}

MotifPool motifs_from_json(const Json& doc) {
    MotifPool pool;
    for (const Json& rec : doc.at("motifs")) {
        MotifRecord m;
        m.word = rec.at("word").get<std::string>();
        m.length_points = rec.at("length_points").get<std::size_t>();
        m.occurrences = rec.at("occurrences").get<std::vector<std::size_t>>();
        m.distances = rec.at("distances").get<std::vector<double>>();
        pool.push_back(std::move(m));
    }
    return pool;
}

Json stats_to_json(const RunStats& stats) {
    Json j;
    j["generations"] = stats.generations;
    j["data_accesses"] = stats.data_accesses;
    j["trackers_peak"] = stats.trackers_peak;
    j["wall_time_ms"] = stats.wall_time_ms;
    return j;
}

Json comparison_to_json(const analysis::ComparisonReport& report) {
    Json rows = Json::array();
    for (const analysis::ComparisonRow& r : report.rows) {
        Json row;
        row["ref_word"] = r.ref_word;
        row["ref_length"] = r.ref_length;
        row["ref_first"] = r.ref_first;
        row["ref_frequency"] = r.ref_frequency;
        row["found"] = r.found;
        row["frequency_error"] = r.frequency_error;
        row["length_error"] = r.length_error;
        row["length_error_pct"] = round_sig6(r.length_error_pct);
        row["location_error"] = r.location_error;
        row["location_error_pct"] = round_sig6(r.location_error_pct);
        rows.push_back(std::move(row));
    }
    Json j;
    j["rows"] = std::move(rows);
    j["totals"] = Json{{"found", report.totals.found_count},
                       {"frequency_error", report.totals.frequency_error},
                       {"length_error", report.totals.length_error},
                       {"location_error", report.totals.location_error}};
    return j;
}

Json analysis_to_json(const std::vector<std::pair<MotifRecord, analysis::PeriodicityReport>>& scans,
                      double tolerance, int points_per_day) {
    Json j;
    j["tolerance"] = round_sig6(tolerance);
    if (points_per_day > 0) {
        j["points_per_day"] = points_per_day;
    } else {
        j["points_per_day"] = nullptr;
    }
    Json motifs = Json::array();
    for (const auto& [motif, report] : scans) {
        Json entry;
        entry["word"] = motif.word;
        entry["length_points"] = motif.length_points;
        entry["occurrences"] = motif.occurrences;
        entry["intervals"] = report.intervals;
        entry["expected_interval"] = report.expected_interval;
        Json anomalies = Json::array();
        for (const analysis::Anomaly& a : report.anomalies) {
            Json an;
            an["previous_start"] = a.previous_start;
            an["interval"] = a.interval;
            an["expected_start"] = a.expected_start;
            if (a.actual_start) {
                an["actual_start"] = *a.actual_start;
            } else {
                an["actual_start"] = nullptr;
            }
            an["gap_window"] = Json::array({a.gap_lo, a.gap_hi});
            if (points_per_day > 0) {
                an["interval_days"] = round_sig6(static_cast<double>(a.interval) / points_per_day);
                an["expected_interval_days"] =
                    round_sig6(static_cast<double>(report.expected_interval) / points_per_day);
            }
            anomalies.push_back(std::move(an));
        }
        entry["anomalies"] = std::move(anomalies);
        motifs.push_back(std::move(entry));
    }
    j["motifs"] = std::move(motifs);
    return j;
}

Json truth_to_json(const oracle::PlantedSeries& planted, const oracle::PlantSpec& spec) {
    Json j;
    j["series_length"] = spec.series_length;
    j["background_std"] = round_sig6(spec.background_std);
    j["seed"] = spec.rng_seed;
    Json motifs = Json::array();
    for (const oracle::PlantedMotif& m : planted.ground_truth) {
        motifs.push_back(Json{{"starts", m.starts}, {"length", m.length}});
    }
    j["motifs"] = std::move(motifs);
    return j;
}

std::string render_comparison_table(const analysis::ComparisonReport& report) {
    std::ostringstream out;
    char line[160];
    std::snprintf(line, sizeof line, "%-6s %-8s %-6s %9s %9s %9s %9s %9s\n", "Motif", "Word",
                  "Found", "FreqErr", "LenErr", "LenErr%", "LocErr", "LocErr%");
    out << line;
    int id = 1;
    for (const analysis::ComparisonRow& r : report.rows) {
        std::snprintf(line, sizeof line, "%-6d %-8s %-6s %9lld %9lld %8.1f%% %9lld %8.1f%%\n", id++,
                      r.ref_word.c_str(), r.found ? "Yes" : "No", r.frequency_error, r.length_error,
                      r.length_error_pct, r.location_error, r.location_error_pct);
        out << line;
    }
    std::snprintf(line, sizeof line, "%-6s %-8s %-6d %9lld %9lld %9s %9lld %9s\n", "Total", "",
                  report.totals.found_count, report.totals.frequency_error,
                  report.totals.length_error, "", report.totals.location_error, "");
    out << line;
    return out.str();
}

std::string render_plot_script(const std::string& data_file, const TimeSeries& ts,
                               const MotifPool& pool) {
    static const char* palette[] = {"#1b5e9e", "#c23b22", "#2e7d32", "#7b1fa2",
                                    "#ef6c00", "#00838f", "#5d4037", "#455a64"};
    std::ostringstream out;
    out << "# run with: gnuplot -p plot.gp (expects " << data_file << " in the same directory)\n";
    out << "set title '" << ts.name << ": " << pool.size() << " motifs'\n";
    out << "set xlabel 'index'\nset ylabel 'value'\n";
    int obj = 1;
    for (std::size_t mi = 0; mi < pool.size(); ++mi) {
        const MotifRecord& m = pool[mi];
        const char* color = palette[mi % (sizeof palette / sizeof *palette)];
        for (std::size_t start : m.occurrences) {
            // Prepared index i covers raw interval [i, i+1], so a motif of
            // length L spans raw indices [start, start + L].
            out << "set object " << obj++ << " rect from " << start << ", graph 0 to "
                << start + m.length_points << ", graph 1 fc rgb '" << color
                << "' fs transparent solid 0.15 noborder\n";
        }
    }
    out << "plot '" << data_file << "' using 1:2 with lines lc rgb 'black' title '" << ts.name
        << "'\n";
    return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        fail(Errc::file_not_found, "cannot write " + path);
    }
    out << content;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        fail(Errc::file_not_found, path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_json_file(const std::string& path, const Json& doc) {
    write_text_file(path, doc.dump(2) + "\n");
}

Json read_json_file(const std::string& path) {
    try {
        return Json::parse(read_text_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        fail(Errc::parse_error, path + ": " + e.what());
    }
}

} // namespace mta::io
