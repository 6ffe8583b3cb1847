// Command-line front end: score one run, emit spectra and densities, or
// compare several runs from a manifest.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "netrust/density.hpp"
#include "netrust/ingest.hpp"
#include "netrust/plot.hpp"
#include "netrust/report.hpp"
#include "netrust/spectrum.hpp"
#include "netrust/trust.hpp"

namespace fs = std::filesystem;
using namespace netrust;

namespace {

struct CommonOpts {
    std::string input;
    std::string format = "jsonl";
    std::string out_dir = ".";
    std::string report_format = "json";
    double alpha = 1.0;
    double beta = 1.0;
    double gamma = 0.5;
    std::string grouping = "predicted";
    std::string weighting = "empirical";
    std::size_t grid_points = kDefaultGridPoints;
    bool emit_plots = false;
    std::string scenario;
    std::string manifest;
};

void add_param_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--alpha", o.alpha, "Reward exponent (default 1)");
    cmd->add_option("--beta", o.beta, "Penalty exponent (default 1)");
    cmd->add_option("--gamma", o.gamma, "KDE kernel constant (default 0.5)");
    cmd->add_option("--grouping", o.grouping, "Scenario grouping: predicted|oracle")
        ->check(CLI::IsMember({"predicted", "oracle"}));
    cmd->add_option("--weighting", o.weighting, "Scenario weighting: empirical|uniform")
        ->check(CLI::IsMember({"empirical", "uniform"}));
    cmd->add_option("--out-dir", o.out_dir, "Output directory (default .)");
}

void add_input_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--input", o.input, "Prediction dump file")->required();
    cmd->add_option("--format", o.format, "Input format: csv|jsonl")
        ->check(CLI::IsMember({"csv", "jsonl"}));
}

TrustParams make_params(const CommonOpts& o) {
    TrustParams p;
    p.alpha = o.alpha;
    p.beta = o.beta;
    p.gamma = o.gamma;
    p.grouping = grouping_from_string(o.grouping);
    p.weighting = weighting_from_string(o.weighting);
    p.validate();
    return p;
}

RecordSet load_input(const CommonOpts& o) {
    return parse_records_file(o.input, input_format_from_string(o.format));
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << content;
}

std::string sanitize_label(const std::string& label) {
    std::string out;
    for (char c : label)
        out.push_back(std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
    return out.empty() ? "_" : out;
}

void run_score(const CommonOpts& o) {
    auto rs = load_input(o);
    auto params = make_params(o);
    auto summary = model_summary(rs, params);
    fs::create_directories(o.out_dir);
    fs::path out = fs::path(o.out_dir);
    if (o.report_format == "json") {
        write_file(out / "summary.json", summary_to_json(summary).dump(2) + "\n");
    } else if (o.report_format == "csv") {
        write_file(out / "summary.csv", comparison_to_csv({{summary}}));
    } else {
        write_file(out / "summary.txt", comparison_to_text({{summary}}));
    }
}

void run_spectrum(const CommonOpts& o) {
    auto rs = load_input(o);
    auto params = make_params(o);
    auto scored = score_all(rs, params);
    auto spectrum = trust_spectrum(scored, params.grouping, rs.model_name);
    fs::create_directories(o.out_dir);
    fs::path out = fs::path(o.out_dir);
    {
        std::ofstream f(out / "spectrum.csv", std::ios::binary);
        write_spectrum_csv(spectrum, f);
    }
    write_file(out / "spectrum.json", spectrum_to_json(spectrum).dump(2) + "\n");
    if (o.emit_plots) {
        const TrustSpectrum spectra[] = {spectrum};
        write_file(out / "spectrum.svg", render_spectrum_plot(spectra));
    }
}

void run_density(const CommonOpts& o) {
    auto rs = load_input(o);
    auto params = make_params(o);
    auto scored = score_all(rs, params);
    auto groups = group_by_scenario(scored, params.grouping);
    if (!o.scenario.empty()) {
        std::erase_if(groups, [&](const ScenarioGroup& g) {
            return g.scenario_label != o.scenario;
        });
        if (groups.empty())
            throw std::runtime_error("scenario '" + o.scenario + "' has no members");
    }
    fs::create_directories(o.out_dir);
    fs::path out = fs::path(o.out_dir);
    std::vector<TrustDensity> densities;
    for (const auto& g : groups) {
        std::vector<double> samples;
        samples.reserve(g.members.size());
        for (const auto& m : g.members) samples.push_back(m.qa_trust);
        densities.push_back(
            estimate_density(samples, params.gamma, o.grid_points, g.scenario_label));
    }
    for (const auto& d : densities) {
        std::string stem = "density_" + sanitize_label(d.scenario_label);
        std::ofstream f(out / (stem + ".csv"), std::ios::binary);
        write_density_csv(d, f);
        write_file(out / (stem + ".json"), density_to_json(d).dump(2) + "\n");
    }
    if (o.emit_plots) write_file(out / "density.svg", render_density_plot(densities));
}

void run_compare(const CommonOpts& o) {
    auto runs = load_run_manifest(o.manifest);
    auto params = make_params(o);
    auto format = input_format_from_string(o.format);
    std::vector<ModelTrustSummary> summaries;
    std::vector<TrustSpectrum> spectra;
    for (const auto& run : runs) {
        auto rs = parse_records_file(run.path, format, run.model_name);
        summaries.push_back(model_summary(rs, params));
        auto scored = score_all(rs, params);
        spectra.push_back(trust_spectrum(scored, params.grouping, run.model_name));
    }
    auto table = compare_models(std::move(summaries));
    fs::create_directories(o.out_dir);
    fs::path out = fs::path(o.out_dir);
    if (o.report_format == "json") {
        write_file(out / "comparison.json", comparison_to_json(table).dump(2) + "\n");
    } else if (o.report_format == "csv") {
        write_file(out / "comparison.csv", comparison_to_csv(table));
    } else {
        write_file(out / "comparison.txt", comparison_to_text(table));
    }
    if (o.emit_plots) write_file(out / "spectra.svg", render_spectrum_plot(spectra));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Trust quantification for classifiers from prediction dumps"};
    app.require_subcommand(1);
    CommonOpts o;

    auto* score = app.add_subcommand("score", "Scalar trust summary for one run");
    add_input_flags(score, o);
    add_param_flags(score, o);
    score->add_option("--report-format", o.report_format, "json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    auto* spectrum = app.add_subcommand("spectrum", "Per-scenario trust coefficients");
    add_input_flags(spectrum, o);
    add_param_flags(spectrum, o);
    spectrum->add_flag("--emit-plots", o.emit_plots, "Write an SVG plot");

    auto* density = app.add_subcommand("density", "Per-scenario trust densities");
    add_input_flags(density, o);
    add_param_flags(density, o);
    density->add_option("--grid-points", o.grid_points, "Density grid size (default 512)");
    density->add_option("--scenario", o.scenario, "Restrict to one scenario label");
    density->add_flag("--emit-plots", o.emit_plots, "Write an SVG plot");

    auto* compare = app.add_subcommand("compare", "Compare runs from a manifest");
    compare->add_option("--manifest", o.manifest, "Run manifest (JSON array)")->required();
    compare->add_option("--format", o.format, "Input format: csv|jsonl")
        ->check(CLI::IsMember({"csv", "jsonl"}));
    add_param_flags(compare, o);
    compare->add_option("--report-format", o.report_format, "json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    compare->add_flag("--emit-plots", o.emit_plots, "Write an overlaid spectrum SVG");

    CLI11_PARSE(app, argc, argv);

    try {
        if (score->parsed()) run_score(o);
        else if (spectrum->parsed()) run_spectrum(o);
        else if (density->parsed()) run_density(o);
        else if (compare->parsed()) run_compare(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
