#include "mta/cli.hpp"

#include <filesystem>
#include <iostream>
#include <sstream>

#include "mta/analysis.hpp"

namespace mta::cli {

namespace fs = std::filesystem;

TimeSeries load_series(const LoadSpec& spec) {
    return io::load_csv(spec.path, spec.column, spec.every, spec.slice);
}

namespace {

std::string out_path(const std::string& dir, const char* file) {
    fs::create_directories(dir);
    return (fs::path(dir) / file).string();
}

std::string series_csv(const TimeSeries& ts) {
    std::ostringstream out;
    for (std::size_t i = 0; i < ts.values.size(); ++i) {
        char buf[48];
        std::snprintf(buf, sizeof buf, "%zu,%.10g\n", i, ts.values[i]);
        out << buf;
    }
    return out.str();
}

} // namespace

void cmd_run(const RunManifest& manifest) {
    TimeSeries ts = load_series(manifest.input);
    RunResult result = run_mta(ts, manifest.config);

    io::write_json_file(out_path(manifest.out_dir, "motifs.json"),
                        io::motifs_to_json(ts.name, ts.values.size(),
                                           io::config_to_json(manifest.config), result.motifs));
    io::write_json_file(out_path(manifest.out_dir, "stats.json"), io::stats_to_json(result.stats));
    io::write_text_file(out_path(manifest.out_dir, "plot.csv"), series_csv(ts));
    io::write_text_file(out_path(manifest.out_dir, "plot.gp"),
                        io::render_plot_script("plot.csv", ts, result.motifs));

    std::cout << ts.name << ": " << result.motifs.size() << " motifs, "
              << result.stats.generations << " generations, " << result.stats.data_accesses
              << " data accesses\n";
}

void cmd_compare(const RunManifest& mta_manifest, const BaselineManifest& baseline_manifest) {
    TimeSeries ts = load_series(mta_manifest.input);

    RunResult mta_result = run_mta(ts, mta_manifest.config);

    DataAccessCounter baseline_accesses;
    MotifPool reference =
        baseline::random_projection_detect(ts, baseline_manifest.params, baseline_accesses);

    analysis::ComparisonReport report = analysis::compare_pools(reference, mta_result.motifs);

    const std::string& dir = mta_manifest.out_dir;
    io::Json j;
    j["series"] = io::Json{{"name", ts.name}, {"length", ts.values.size()}};
    j["reference"] = io::Json{{"config", io::config_to_json(baseline_manifest.params)},
                              {"motifs", io::motifs_to_json(ts.name, ts.values.size(),
                                                            io::config_to_json(baseline_manifest.params),
                                                            reference)["motifs"]}};
    j["candidate"] = io::Json{{"config", io::config_to_json(mta_manifest.config)},
                              {"motifs", io::motifs_to_json(ts.name, ts.values.size(),
                                                            io::config_to_json(mta_manifest.config),
                                                            mta_result.motifs)["motifs"]}};
    j["comparison"] = io::comparison_to_json(report);
    io::write_json_file(out_path(dir, "comparison.json"), j);

    std::string table = io::render_comparison_table(report);
    io::write_text_file(out_path(dir, "comparison.txt"), table);
    std::cout << table;
}

void cmd_analyze(const std::string& motifs_json_path, double tolerance, int points_per_day,
                 const std::string& out_dir) {
    io::Json doc = io::read_json_file(motifs_json_path);
    MotifPool pool = io::motifs_from_json(doc);

    std::vector<std::pair<MotifRecord, analysis::PeriodicityReport>> scans;
    for (const MotifRecord& m : pool) {
        if (m.occurrences.size() < 3) {
            std::cerr << "warning: motif '" << m.word << "' has " << m.occurrences.size()
                      << " occurrences, skipping periodicity scan\n";
            continue;
        }
        scans.emplace_back(m, analysis::periodicity_scan(m, tolerance));
    }

    io::Json j = io::analysis_to_json(scans, tolerance, points_per_day);
    io::write_json_file(out_path(out_dir, "analysis.json"), j);

    for (const auto& [motif, report] : scans) {
        for (const analysis::Anomaly& a : report.anomalies) {
            std::cout << "motif '" << motif.word << "': interval " << a.interval << " vs expected "
                      << report.expected_interval << ", anomaly window [" << a.gap_lo << ", "
                      << a.gap_hi << "]";
            if (points_per_day > 0) {
                char days[32];
                std::snprintf(days, sizeof days, " (%.1f days)",
                              static_cast<double>(a.interval) / points_per_day);
                std::cout << days;
            }
            std::cout << "\n";
        }
    }
}

void cmd_synth(const oracle::PlantSpec& spec, const std::string& out_dir) {
    oracle::PlantedSeries planted = oracle::generate_planted(spec);

    std::ostringstream csv;
    for (double v : planted.series.values) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.10g\n", v);
        csv << buf;
    }
    io::write_text_file(out_path(out_dir, "series.csv"), csv.str());
    io::write_json_file(out_path(out_dir, "truth.json"), io::truth_to_json(planted, spec));

    std::cout << "wrote " << planted.series.values.size() << " points, "
              << planted.ground_truth.size() << " planted motif(s)\n";
}

} // namespace mta::cli
