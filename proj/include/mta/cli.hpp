#pragma once

#include <optional>
#include <string>

#include "mta/baseline.hpp"
#include "mta/engine.hpp"
#include "mta/io.hpp"
#include "mta/oracle.hpp"

namespace mta::cli {

struct LoadSpec {
    std::string path;
    int column = 0;
    int every = 1;
    std::optional<io::SliceRange> slice;
};

struct RunManifest {
    LoadSpec input;
    MtaConfig config;
    std::string out_dir = ".";
};

struct BaselineManifest {
    LoadSpec input;
    baseline::BaselineParams params;
    std::string out_dir = ".";
};

TimeSeries load_series(const LoadSpec& spec);

/// Run the MTA and write motifs.json, stats.json, plot.csv and plot.gp.
void cmd_run(const RunManifest& manifest);

/// Run baseline (reference) and MTA (candidate), compare the pools, and
/// write comparison.json plus an aligned-column comparison.txt.
void cmd_compare(const RunManifest& mta_manifest, const BaselineManifest& baseline_manifest);

/// Periodicity-scan every motif in a motifs.json; motifs with fewer than
/// three occurrences are skipped with a warning.
void cmd_analyze(const std::string& motifs_json_path, double tolerance, int points_per_day,
                 const std::string& out_dir);

/// Write a planted synthetic series as series.csv plus truth.json.
void cmd_synth(const oracle::PlantSpec& spec, const std::string& out_dir);

} // namespace mta::cli
