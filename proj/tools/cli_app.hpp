#pragma once

// Command-line front end. Kept in a header so the test suite can drive it
// in-process with captured streams; bayesproof_main.cpp only forwards argv.

#include "bayesproof/bayesproof.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace bayesproof::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_input_error = 2;
inline constexpr int exit_degenerate = 3;
inline constexpr int decimal_digits = 6;

struct ScenarioOptions {
    std::string path;
    std::string base_rate;
    std::string hit_rate;
    std::string false_alarm_rate;
    std::string hypothesis_label;
    std::string evidence_label;
};

inline void add_scenario_options(CLI::App& cmd, ScenarioOptions& o) {
    cmd.add_option("--scenario", o.path, "Scenario file (key = value lines)");
    cmd.add_option("--base-rate", o.base_rate, "p(H), e.g. 0.4, 40% or 2/5");
    cmd.add_option("--hit-rate", o.hit_rate, "p(E | H)");
    cmd.add_option("--false-alarm-rate", o.false_alarm_rate, "p(E | not H)");
    cmd.add_option("--hypothesis-label", o.hypothesis_label, "Display text for H");
    cmd.add_option("--evidence-label", o.evidence_label, "Display text for E");
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(ErrorKind::Syntax, "cannot read scenario file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline Probability probability_flag(const std::string& flag, const std::string& text) {
    auto r = parse_rational(text);
    if (!r) throw InputError(ErrorKind::Syntax, flag + " expects a decimal, percentage or fraction, got '" + text + "'");
    if (*r < 0 || *r > 1) throw RangeError(flag + " = " + text + " is outside [0, 1]");
    return Probability{*r};
}

/// The scenario file when given, with any inline flags laid over it.
inline ScenarioDocument load_document(const ScenarioOptions& o) {
    ScenarioDocument doc;
    std::optional<Probability> base, hit, false_alarm;
    if (!o.path.empty()) {
        doc = parse_scenario(read_file(o.path));
        base = doc.scenario.base_rate;
        hit = doc.scenario.hit_rate;
        false_alarm = doc.scenario.false_alarm_rate;
    }
    if (!o.base_rate.empty()) base = probability_flag("--base-rate", o.base_rate);
    if (!o.hit_rate.empty()) hit = probability_flag("--hit-rate", o.hit_rate);
    if (!o.false_alarm_rate.empty()) false_alarm = probability_flag("--false-alarm-rate", o.false_alarm_rate);
    if (!base) throw MissingKey("base_rate");
    if (!hit) throw MissingKey("hit_rate");
    if (!false_alarm) throw MissingKey("false_alarm_rate");
    doc.scenario.base_rate = *base;
    doc.scenario.hit_rate = *hit;
    doc.scenario.false_alarm_rate = *false_alarm;
    if (!o.hypothesis_label.empty()) doc.scenario.hypothesis_label = o.hypothesis_label;
    if (!o.evidence_label.empty()) doc.scenario.evidence_label = o.evidence_label;
    return doc;
}

inline void print_value(std::ostream& out, const std::string& name, const Rational& value) {
    out << std::left << std::setw(19) << name << std::setw(12) << to_significant_string(value, decimal_digits)
        << to_fraction_string(value) << '\n';
}

inline void print_text(std::ostream& out, const std::string& name, const std::string& value) {
    out << std::left << std::setw(19) << name << value << '\n';
}

inline void write_file(const std::string& path, const std::string& contents) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw InputError(ErrorKind::Syntax, "cannot write '" + path + "'");
    file << contents;
    if (!file) throw InputError(ErrorKind::Syntax, "failed writing '" + path + "'");
}

inline void print_scenario(std::ostream& out, const Scenario& s) {
    print_text(out, "hypothesis", s.hypothesis_label);
    print_text(out, "evidence", s.evidence_label);
    print_value(out, "base_rate", s.base_rate.value());
    print_value(out, "hit_rate", s.hit_rate.value());
    print_value(out, "false_alarm_rate", s.false_alarm_rate.value());
}

/// Runs the CLI with `args` (args[0] is the program name) and returns the
/// process exit code: 0 success, 2 bad input, 3 degenerate evidence.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bayesian posteriors, frequency trees and verdict thresholds for probabilistic evidence",
                 "bayesproof"};
    app.require_subcommand(1);

    ScenarioOptions scenario_opts;

    auto* posterior_cmd = app.add_subcommand("posterior", "Print p(E and H), p(E and not H), p(E) and p(H | E)");
    add_scenario_options(*posterior_cmd, scenario_opts);

    std::string threshold_text;
    auto* verdict_cmd = app.add_subcommand("verdict", "Apply a decision threshold and report the error profile");
    add_scenario_options(*verdict_cmd, scenario_opts);
    verdict_cmd->add_option("--threshold", threshold_text, "Posterior the moving party must exceed (default 0.5)");

    std::optional<std::int64_t> population;
    std::string rounding_name = "largest-remainder";
    auto* tree_cmd = app.add_subcommand("tree", "Print the natural-frequency tree");
    add_scenario_options(*tree_cmd, scenario_opts);
    tree_cmd->add_option("--population", population, "Reference population (default 100)");
    tree_cmd->add_option("--rounding", rounding_name, "largest-remainder or exact-rational");

    std::string format;
    std::string out_path;
    RenderStyle style;
    auto* render_cmd = app.add_subcommand("render", "Write an SVG frequency tree or proportion-bar diagram");
    add_scenario_options(*render_cmd, scenario_opts);
    render_cmd->add_option("--format", format, "svg-tree or svg-bars")->required();
    render_cmd->add_option("--out", out_path, "Output SVG path")->required();
    render_cmd->add_option("--population", population, "Reference population for svg-tree (default 100)");
    render_cmd->add_option("--rounding", rounding_name, "largest-remainder or exact-rational");
    render_cmd->add_option("--width", style.width, "Width in pixels");
    render_cmd->add_option("--height", style.height, "Height in pixels");
    render_cmd->add_option("--font-size", style.font_size, "Font size");
    render_cmd->add_option("--hypothesis-color", style.hypothesis_color, "Hex color for H");
    render_cmd->add_option("--complement-color", style.complement_color, "Hex color for not H");
    render_cmd->add_flag("--show-residuals", style.show_residuals, "Annotate rounded leaves with their residual");

    std::string param_name;
    std::string from_text;
    std::string to_text;
    std::size_t steps = 0;
    auto* sweep_cmd = app.add_subcommand("sweep", "Vary one rate over a grid and write a CSV");
    add_scenario_options(*sweep_cmd, scenario_opts);
    sweep_cmd->add_option("--param", param_name, "base_rate, hit_rate or false_alarm_rate")->required();
    sweep_cmd->add_option("--from", from_text, "First grid value")->required();
    sweep_cmd->add_option("--to", to_text, "Last grid value")->required();
    sweep_cmd->add_option("--steps", steps, "Number of grid values")->required();
    sweep_cmd->add_option("--out", out_path, "Output CSV path")->required();
    sweep_cmd->add_option("--threshold", threshold_text, "Decision threshold (default 0.5)");

    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 1;
    auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo estimate of p(H | E)");
    add_scenario_options(*simulate_cmd, scenario_opts);
    simulate_cmd->add_option("--samples", samples, "Number of draws (default 1000000)");
    simulate_cmd->add_option("--seed", seed, "Seed for the mt19937_64 generator (default 1)");

    std::vector<std::string> argv_tail(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(argv_tail.begin(), argv_tail.end());
    try {
        app.parse(argv_tail);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    }

    try {
        const ScenarioDocument doc = load_document(scenario_opts);
        const Scenario& s = doc.scenario;
        Probability threshold = doc.threshold.value_or(preponderance_threshold());
        if (!threshold_text.empty()) threshold = probability_flag("--threshold", threshold_text);

        if (posterior_cmd->parsed()) {
            print_scenario(out, s);
            const PosteriorBreakdown b = compute_posterior(s);
            print_value(out, "joint_hit", b.joint_hit.value());
            print_value(out, "joint_false_alarm", b.joint_false_alarm.value());
            print_value(out, "evidence_marginal", b.evidence_marginal.value());
            print_value(out, "posterior", b.posterior.value());
        } else if (verdict_cmd->parsed()) {
            const PosteriorBreakdown b = compute_posterior(s);
            const Verdict v = decide(b, threshold);
            const ErrorProfile profile = verdict_error_profile(b, threshold);
            print_value(out, "posterior", b.posterior.value());
            print_value(out, "threshold", threshold.value());
            print_text(out, "outcome", to_string(v.outcome));
            print_value(out, "wrong_verdict", profile.wrong_verdict_probability.value());
            print_text(out, "error_kind", to_string(profile.error_kind));
        } else if (tree_cmd->parsed() || (render_cmd->parsed() && format == "svg-tree")) {
            auto policy = parse_rounding_policy(rounding_name);
            if (!policy) throw InputError(ErrorKind::Syntax, "unknown rounding policy '" + rounding_name + "'");
            const std::int64_t n = population.value_or(doc.population.value_or(default_population));
            if (n < 1) throw RangeError("population must be at least 1");
            const FrequencyTree tree = build_tree(s, n, *policy);
            if (tree_cmd->parsed()) {
                out << render_tree_text(tree);
            } else {
                write_file(out_path, render_tree_svg(tree, style));
                out << "wrote " << out_path << '\n';
            }
        } else if (render_cmd->parsed()) {
            if (format != "svg-bars") throw InputError(ErrorKind::Syntax, "unknown format '" + format + "'");
            write_file(out_path, render_proportion_bars_svg(s, style));
            out << "wrote " << out_path << '\n';
        } else if (sweep_cmd->parsed()) {
            auto parameter = parse_parameter(param_name);
            if (!parameter) throw InputError(ErrorKind::Syntax, "unknown parameter '" + param_name + "'");
            const auto grid = linear_grid(probability_flag("--from", from_text), probability_flag("--to", to_text), steps);
            const SweepTable table = sweep(s, *parameter, grid, threshold);
            write_file(out_path, to_csv(table));
            out << "wrote " << table.rows.size() << " rows to " << out_path << '\n';
        } else if (simulate_cmd->parsed()) {
            const SimResult r = monte_carlo_posterior(s, samples, seed);
            print_text(out, "samples", std::to_string(r.samples_total));
            print_text(out, "conditioned", std::to_string(r.samples_conditioned));
            print_text(out, "seed", std::to_string(r.seed));
            print_value(out, "estimate", r.estimate.value());
            print_text(out, "standard_error", to_significant_string(Rational{r.standard_error}, decimal_digits));
            print_value(out, "exact_posterior", compute_posterior(s).posterior.value());
        }
        return exit_ok;
    } catch (const Error& e) {
        err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
}

} // namespace bayesproof::cli
