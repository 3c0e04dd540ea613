#pragma once

#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "mta/analysis.hpp"
#include "mta/baseline.hpp"
#include "mta/engine.hpp"
#include "mta/oracle.hpp"
#include "mta/preprocess.hpp"

namespace mta::io {

using Json = nlohmann::ordered_json;

struct SliceRange {
    std::size_t begin = 0;
    std::size_t end = 0; // half-open
};

/// Read one numeric column from a comma- or whitespace-separated file,
/// keeping rows 0, k, 2k, ... and then applying the half-open slice.
TimeSeries load_csv(const std::string& path, int column, int decimation_k,
                    std::optional<SliceRange> slice);

/// Round to 6 significant digits, the precision used in all JSON artifacts.
double round_sig6(double v);

Json config_to_json(const MtaConfig& cfg);
Json config_to_json(const baseline::BaselineParams& p);

Json motifs_to_json(const std::string& series_name, std::size_t series_length,
                    const Json& config, const MotifPool& pool);
MotifPool motifs_from_json(const Json& doc);

Json stats_to_json(const RunStats& stats);
Json comparison_to_json(const analysis::ComparisonReport& report);
Json analysis_to_json(const std::vector<std::pair<MotifRecord, analysis::PeriodicityReport>>& scans,
                      double tolerance, int points_per_day);
Json truth_to_json(const oracle::PlantedSeries& planted, const oracle::PlantSpec& spec);

std::string render_comparison_table(const analysis::ComparisonReport& report);

/// Gnuplot script highlighting motif occurrence spans over the raw series.
std::string render_plot_script(const std::string& data_file, const TimeSeries& ts,
                               const MotifPool& pool);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);
void write_json_file(const std::string& path, const Json& doc);
Json read_json_file(const std::string& path);

} // namespace mta::io
