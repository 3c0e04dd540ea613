#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mta/cli.hpp"

namespace {

// Exit codes: 0 success, 2 usage error, 3 data error, 4 internal error.
int exit_code_for(mta::Errc code) {
    switch (code) {
    case mta::Errc::invalid_config:
    case mta::Errc::invalid_alphabet_size:
    case mta::Errc::indivisible_length:
        return 2;
    case mta::Errc::file_not_found:
    case mta::Errc::parse_error:
    case mta::Errc::empty_after_slice:
    case mta::Errc::series_too_short:
    case mta::Errc::series_too_long:
    case mta::Errc::window_too_large:
    case mta::Errc::too_few_occurrences:
    case mta::Errc::placement_failed:
        return 3;
    default:
        return 4;
    }
}

struct SliceOpt {
    std::string text;

    std::optional<mta::io::SliceRange> parse() const {
        if (text.empty()) {
            return std::nullopt;
        }
        auto colon = text.find(':');
        if (colon == std::string::npos) {
            throw CLI::ValidationError("--slice", "expected START:END");
        }
        try {
            mta::io::SliceRange r;
            r.begin = std::stoull(text.substr(0, colon));
            r.end = std::stoull(text.substr(colon + 1));
            return r;
        } catch (const std::exception&) {
            throw CLI::ValidationError("--slice", "expected START:END with integers");
        }
    }
};

void add_input_flags(CLI::App* cmd, mta::cli::LoadSpec& load, SliceOpt& slice) {
    cmd->add_option("input", load.path, "input CSV file (comma or whitespace separated)")
        ->required();
    cmd->add_option("--column", load.column, "zero-based column to read")->capture_default_str();
    cmd->add_option("--every", load.every, "keep every k-th row")->capture_default_str();
    cmd->add_option("--slice", slice.text, "half-open row range START:END applied after --every");
}

void add_mta_flags(CLI::App* cmd, mta::MtaConfig& cfg, std::string& mode, int& max_gen) {
    cmd->add_option("--symbol-size", cfg.symbol_size_s, "data points per symbol (s)")
        ->capture_default_str();
    cmd->add_option("--alphabet", cfg.alphabet_a, "alphabet size (a)")->capture_default_str();
    cmd->add_option("--threshold", cfg.threshold_r, "match threshold (r)")->capture_default_str();
    cmd->add_option("--threshold-mode", mode, "per-point, per-sqrt or absolute")
        ->check(CLI::IsMember({"per-point", "per-sqrt", "absolute"}))
        ->capture_default_str();
    cmd->add_flag("--tme,!--no-tme", "enable trivial match elimination");
    cmd->add_option("--max-generations", max_gen, "stop after this many generations");
}

mta::ThresholdMode parse_mode(const std::string& mode) {
    if (mode == "per-sqrt") return mta::ThresholdMode::PerSqrtLength;
    if (mode == "absolute") return mta::ThresholdMode::Absolute;
    return mta::ThresholdMode::PerPointLinear;
}

std::vector<double> parse_shape(const std::string& text) {
    std::vector<double> shape;
    std::string tok;
    std::istringstream ss(text);
    while (std::getline(ss, tok, ',')) {
        shape.push_back(std::stod(tok));
    }
    return shape;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Variable-length motif discovery in univariate time series"};
    app.require_subcommand(1);

    // --- run ---
    auto* run = app.add_subcommand("run", "run the tracker-based motif search");
    mta::cli::RunManifest run_manifest;
    SliceOpt run_slice;
    std::string run_mode = "per-point";
    int run_max_gen = 0;
    add_input_flags(run, run_manifest.input, run_slice);
    add_mta_flags(run, run_manifest.config, run_mode, run_max_gen);
    run->add_option("--out", run_manifest.out_dir, "output directory")->capture_default_str();

    // --- compare ---
    auto* compare = app.add_subcommand("compare", "compare against the random-projection detector");
    mta::cli::RunManifest cmp_manifest;
    mta::cli::BaselineManifest cmp_baseline;
    SliceOpt cmp_slice;
    std::string cmp_mode = "per-point";
    int cmp_max_gen = 0;
    add_input_flags(compare, cmp_manifest.input, cmp_slice);
    add_mta_flags(compare, cmp_manifest.config, cmp_mode, cmp_max_gen);
    compare->add_option("--motif-length", cmp_baseline.params.motif_length,
                        "baseline motif length in data points")
        ->capture_default_str();
    compare->add_option("--num-symbols", cmp_baseline.params.num_symbols,
                        "baseline symbols per motif")
        ->capture_default_str();
    compare->add_option("--mask-size", cmp_baseline.params.mask_size,
                        "symbols used per random projection")
        ->capture_default_str();
    compare->add_option("--iterations", cmp_baseline.params.projection_iterations,
                        "random projection rounds")
        ->capture_default_str();
    compare->add_option("--cutoff", cmp_baseline.params.cutoff, "minimum collision count")
        ->capture_default_str();
    compare->add_option("--seed", cmp_baseline.params.rng_seed, "baseline RNG seed")
        ->capture_default_str();
    compare->add_option("--out", cmp_manifest.out_dir, "output directory")->capture_default_str();

    // --- analyze ---
    auto* analyze = app.add_subcommand("analyze", "scan a motifs.json for periodicity anomalies");
    std::string analyze_input;
    double analyze_tolerance = 0.1;
    int analyze_ppd = 0;
    std::string analyze_out = ".";
    analyze->add_option("input", analyze_input, "motifs.json produced by run")->required();
    analyze->add_option("--tolerance", analyze_tolerance,
                        "allowed fractional deviation from the median interval")
        ->capture_default_str();
    analyze->add_option("--points-per-day", analyze_ppd,
                        "report gaps in days using this sampling rate");
    analyze->add_option("--out", analyze_out, "output directory")->capture_default_str();

    // --- synth ---
    auto* synth = app.add_subcommand("synth", "generate a planted-motif synthetic series");
    mta::oracle::PlantSpec plant;
    std::vector<std::string> plant_specs;
    std::string synth_out = ".";
    synth->add_option("--length", plant.series_length, "series length")->capture_default_str();
    synth->add_option("--background-std", plant.background_std, "background noise level")
        ->capture_default_str();
    synth->add_option("--seed", plant.rng_seed, "generator seed")->capture_default_str();
    synth
        ->add_option("--plant", plant_specs,
                     "COPIES:NOISE_STD:v1,v2,... template to plant (repeatable)")
        ->expected(-1);
    synth->add_option("--out", synth_out, "output directory")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            run_manifest.input.slice = run_slice.parse();
            run_manifest.config.threshold_mode = parse_mode(run_mode);
            run_manifest.config.tme_policy =
                run->count("--tme") ? mta::TmePolicy::Tme : mta::TmePolicy::Ntme;
            if (run->count("--max-generations")) {
                run_manifest.config.max_generations = run_max_gen;
            }
            mta::cli::cmd_run(run_manifest);
        } else if (compare->parsed()) {
            cmp_manifest.input.slice = cmp_slice.parse();
            cmp_manifest.config.threshold_mode = parse_mode(cmp_mode);
            cmp_manifest.config.tme_policy =
                compare->count("--tme") ? mta::TmePolicy::Tme : mta::TmePolicy::Ntme;
            if (compare->count("--max-generations")) {
                cmp_manifest.config.max_generations = cmp_max_gen;
            }
            cmp_baseline.input = cmp_manifest.input;
            cmp_baseline.out_dir = cmp_manifest.out_dir;
            cmp_baseline.params.alphabet_a = cmp_manifest.config.alphabet_a;
            cmp_baseline.params.threshold_r = cmp_manifest.config.threshold_r;
            cmp_baseline.params.threshold_mode = cmp_manifest.config.threshold_mode;
            cmp_baseline.params.tme_policy = cmp_manifest.config.tme_policy;
            mta::cli::cmd_compare(cmp_manifest, cmp_baseline);
        } else if (analyze->parsed()) {
            mta::cli::cmd_analyze(analyze_input, analyze_tolerance, analyze_ppd, analyze_out);
        } else if (synth->parsed()) {
            for (const std::string& text : plant_specs) {
                auto c1 = text.find(':');
                auto c2 = text.find(':', c1 + 1);
                if (c1 == std::string::npos || c2 == std::string::npos) {
                    throw CLI::ValidationError("--plant", "expected COPIES:NOISE_STD:v1,v2,...");
                }
                mta::oracle::MotifTemplate tmpl;
                tmpl.copies = std::stoi(text.substr(0, c1));
                tmpl.noise_std = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
                tmpl.shape = parse_shape(text.substr(c2 + 1));
                plant.motif_templates.push_back(std::move(tmpl));
            }
            mta::cli::cmd_synth(plant, synth_out);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const mta::MtaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
