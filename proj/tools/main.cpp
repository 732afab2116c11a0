// Command-line front end: scenario solving, present-value comparison,
// trajectory emission, and the two calibration procedures.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ucost/calibration.hpp"
#include "ucost/cost.hpp"
#include "ucost/errors.hpp"
#include "ucost/json_io.hpp"
#include "ucost/scenario.hpp"
#include "ucost/solver.hpp"
#include "ucost/spreads.hpp"

namespace {

using nlohmann::json;

// Shortest representation that re-parses to the identical double.
std::string full(double value) {
    char buffer[32];
    const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, result.ptr);
}

std::string fixed(double value, int decimals) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.*f", decimals, value);
    return buffer;
}

// Display rounding mirrors the published output table: two decimals for the
// capital ratio, three for growth rates, four for the interest rate. Display
// strings never feed back into any computation.
json display_block(const ucost::SteadyState& s) {
    return json{{"k_tilde", fixed(s.k_tilde, 2)},
                {"g_a", fixed(s.g_a, 3)},
                {"g_y", fixed(s.g_y, 3)},
                {"r", fixed(s.r, 4)}};
}

std::string percent(double fraction) { return fixed(fraction * 100.0, 1) + "%"; }

struct SolveArgs {
    std::string scenarios_path;
    std::string name;
    std::string format = "table";
};

struct CompareArgs {
    std::string scenarios_path;
    std::string name;
    std::string format = "table";
    std::optional<int> horizon;
    std::optional<double> discount;
    std::optional<double> y0;
};

struct TrajectoryArgs {
    std::string scenarios_path;
    std::string name;
    int horizon = 15;
    double y0 = 1.0;
};

struct CalibrateEtaArgs {
    std::string numerator_path;
    std::string denominator_path;
    std::string ratio_path;
    std::string start = "2007-10-29";
    std::string split = "2018-06-29";
    std::string end = "2024-09-10";
    double eta_base = 0.1;
    std::string date_column = "date";
    std::string value_column = "value";
    std::string mean_convention = "mean-of-ratios";
    std::string format = "table";
};

struct CalibrateLambdaArgs {
    double shape = 0.0;
    double scale = 1.0;
    double threshold = 0.0;
    std::uint64_t replications = 1000000;
    std::uint64_t seed = 42;
    std::string format = "json";
};

ucost::SteadyState solve_entry(const ucost::ScenarioEntry& entry) {
    return ucost::solve_steady_state(entry.params, entry.solver.apply());
}

int cmd_solve(const SolveArgs& args) {
    const ucost::ScenarioFile file = ucost::load_scenario_file(args.scenarios_path);
    const ucost::ScenarioEntry& entry = file.scenario(args.name);
    const ucost::SteadyState state = solve_entry(entry);

    if (args.format == "json") {
        json j;
        j["scenario"] = args.name;
        j["steady_state"] = state;
        j["display"] = display_block(state);
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::printf("scenario %s\n", args.name.c_str());
    std::printf("  %-10s %-22s %s\n", "", "value", "display");
    std::printf("  %-10s %-22s %s\n", "k_tilde", full(state.k_tilde).c_str(),
                fixed(state.k_tilde, 2).c_str());
    std::printf("  %-10s %-22s %s\n", "g_a", full(state.g_a).c_str(),
                fixed(state.g_a, 3).c_str());
    std::printf("  %-10s %-22s %s\n", "g_y", full(state.g_y).c_str(),
                fixed(state.g_y, 3).c_str());
    std::printf("  %-10s %-22s %s\n", "r", full(state.r).c_str(),
                fixed(state.r, 4).c_str());
    std::printf("  %-10s %s\n", "residual", full(state.residual).c_str());
    return 0;
}

json side_json(const std::string& name, const ucost::ModelParameters& params,
               const ucost::SteadyState& state) {
    return json{{"scenario", name},
                {"eta", params.eta},
                {"kind", std::string(ucost::to_string(params.kind))},
                {"steady_state", state}};
}

int cmd_compare(const CompareArgs& args) {
    const ucost::ScenarioFile file = ucost::load_scenario_file(args.scenarios_path);
    ucost::ComparisonSpec spec = file.comparison(args.name);
    if (args.horizon) spec.horizon_years = *args.horizon;
    if (args.discount) spec.discount_rate = *args.discount;
    if (args.y0) spec.y0 = *args.y0;

    const ucost::ScenarioEntry& low_entry = file.scenario(spec.low);
    const ucost::ScenarioEntry& high_entry = file.scenario(spec.high);
    const ucost::SteadyState low = solve_entry(low_entry);
    const ucost::SteadyState high = solve_entry(high_entry);
    const ucost::CostReport report = ucost::uncertainty_cost(
        low, high, spec.horizon_years, spec.discount_rate, spec.y0);

    if (args.format == "json") {
        json j;
        j["comparison"] = args.name;
        j["low"] = side_json(spec.low, low_entry.params, low);
        j["high"] = side_json(spec.high, high_entry.params, high);
        j["report"] = report;
        j["display"] = json{{"loss", percent(report.loss)}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::printf("comparison %s\n", args.name.c_str());
    std::printf("  low   %-12s g_y %-20s eta %-6s %s\n", spec.low.c_str(),
                full(low.g_y).c_str(), full(low_entry.params.eta).c_str(),
                std::string(ucost::to_string(low_entry.params.kind)).c_str());
    std::printf("  high  %-12s g_y %-20s eta %-6s %s\n", spec.high.c_str(),
                full(high.g_y).c_str(), full(high_entry.params.eta).c_str(),
                std::string(ucost::to_string(high_entry.params.kind)).c_str());
    std::printf("  levels t = %d..%d, discount %s, y0 %s\n",
                report.convention.t_first, report.convention.t_last,
                full(report.discount_rate).c_str(),
                full(report.convention.y0).c_str());
    std::printf("  pv_low   %s\n", full(report.pv_low).c_str());
    std::printf("  pv_high  %s\n", full(report.pv_high).c_str());
    std::printf("  loss     %s  (%s)\n", full(report.loss).c_str(),
                percent(report.loss).c_str());
    return 0;
}

int cmd_trajectory(const TrajectoryArgs& args) {
    const ucost::ScenarioFile file = ucost::load_scenario_file(args.scenarios_path);
    const ucost::SteadyState state = solve_entry(file.scenario(args.name));
    const ucost::GdpPath path = ucost::make_path(state, args.y0, args.horizon);
    std::printf("t,y\n");
    for (std::size_t t = 0; t < path.levels.size(); ++t)
        std::printf("%zu,%s\n", t, full(path.levels[t]).c_str());
    return 0;
}

int cmd_calibrate_eta(const CalibrateEtaArgs& args) {
    const bool merged = !args.ratio_path.empty();
    const bool any_raw =
        !args.numerator_path.empty() || !args.denominator_path.empty();
    const bool two_files =
        !args.numerator_path.empty() && !args.denominator_path.empty();
    if ((merged && any_raw) || (!merged && !two_files))
        throw ucost::validation_error(
            "provide either --ratio or both --numerator and --denominator");
    if (args.mean_convention == "ratio-of-means" && merged)
        throw ucost::validation_error(
            "ratio-of-means needs the two raw series, not a pre-merged ratio");

    const ucost::Date start = ucost::parse_date(args.start);
    const ucost::Date split = ucost::parse_date(args.split);
    const ucost::Date end = ucost::parse_date(args.end);
    const ucost::CsvColumns columns{args.date_column, args.value_column};

    ucost::SpreadSeries ratio;
    std::size_t dropped = 0;
    std::optional<ucost::PeriodStats> stats_override;
    if (merged) {
        ratio = ucost::parse_spread_csv_file(args.ratio_path, "ratio", columns);
    } else {
        const ucost::SpreadSeries numerator =
            ucost::parse_spread_csv_file(args.numerator_path, "numerator", columns);
        const ucost::SpreadSeries denominator = ucost::parse_spread_csv_file(
            args.denominator_path, "denominator", columns);
        if (args.mean_convention == "ratio-of-means")
            stats_override = ucost::period_uplift_ratio_of_means(
                numerator, denominator, split, start, end);
        ucost::RatioSeries aligned = ucost::ratio_series(numerator, denominator);
        dropped = aligned.dropped_zero_denominator;
        ratio = std::move(aligned.series);
    }

    // Plot-ready export of the daily ratio series.
    if (args.format == "csv") {
        std::cout << ucost::to_csv(ratio);
        return 0;
    }

    const ucost::PeriodStats stats = stats_override
                                         ? *stats_override
                                         : ucost::period_uplift(ratio, split, start, end);

    // The headline eta applies the uplift as it is quoted, rounded to whole
    // percentage points; the unrounded variant is reported alongside.
    const double uplift_rounded = std::round(stats.uplift * 100.0) / 100.0;
    const double eta_high = ucost::eta_from_uplift(args.eta_base, uplift_rounded);
    const double eta_high_unrounded =
        ucost::eta_from_uplift(args.eta_base, stats.uplift);

    if (args.format == "json") {
        json j;
        j["period_stats"] = stats;
        j["dropped_zero_denominator"] = dropped;
        j["mean_convention"] = args.mean_convention;
        j["eta_base"] = args.eta_base;
        j["uplift"] = stats.uplift;
        j["uplift_rounded"] = uplift_rounded;
        j["eta_high"] = eta_high;
        j["eta_high_unrounded"] = eta_high_unrounded;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::printf(
        "period 1 mean %s (n=%zu), period 2 mean %s (n=%zu); uplift %s%% -> %s%%; "
        "eta %s -> %s\n",
        fixed(stats.mean_ratio_1, 4).c_str(), stats.n_1,
        fixed(stats.mean_ratio_2, 4).c_str(), stats.n_2,
        fixed(stats.uplift * 100.0, 2).c_str(),
        full(uplift_rounded * 100.0).c_str(), full(args.eta_base).c_str(),
        full(eta_high).c_str());
    return 0;
}

int cmd_calibrate_lambda(const CalibrateLambdaArgs& args) {
    const ucost::ParetoSpec spec{args.shape, args.scale, args.threshold};
    const ucost::LambdaEstimate estimate =
        ucost::estimate_lambda(spec, args.replications, args.seed);
    if (args.format == "json") {
        std::cout << json(estimate).dump(2) << "\n";
        return 0;
    }
    std::printf("lambda_hat %s (std error %s), replications %llu, seed %llu\n",
                full(estimate.lambda_hat).c_str(), full(estimate.std_error).c_str(),
                static_cast<unsigned long long>(estimate.replications),
                static_cast<unsigned long long>(estimate.seed));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"steady-state growth under uncertainty: solve scenarios, price "
                 "the cost of higher uncertainty, calibrate its inputs"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    CLI::App* solve = app.add_subcommand("solve", "solve one scenario's steady state");
    solve->add_option("--scenarios", solve_args.scenarios_path, "scenario file")
        ->required();
    solve->add_option("--name", solve_args.name, "scenario name")->required();
    solve->add_option("--format", solve_args.format, "output format")
        ->check(CLI::IsMember({"table", "json"}));

    CompareArgs compare_args;
    int compare_horizon = 15;
    double compare_discount = 0.0, compare_y0 = 1.0;
    CLI::App* compare =
        app.add_subcommand("compare", "present-value loss between two scenarios");
    compare->add_option("--scenarios", compare_args.scenarios_path, "scenario file")
        ->required();
    compare->add_option("--name", compare_args.name, "comparison name")->required();
    compare->add_option("--format", compare_args.format, "output format")
        ->check(CLI::IsMember({"table", "json"}));
    CLI::Option* horizon_opt = compare->add_option(
        "--horizon", compare_horizon, "override the comparison horizon (years)");
    CLI::Option* discount_opt = compare->add_option(
        "--discount", compare_discount, "override the annual discount rate");
    CLI::Option* y0_opt =
        compare->add_option("--y0", compare_y0, "override the initial output level");

    TrajectoryArgs trajectory_args;
    CLI::App* trajectory =
        app.add_subcommand("trajectory", "emit the output path as CSV");
    trajectory
        ->add_option("--scenarios", trajectory_args.scenarios_path, "scenario file")
        ->required();
    trajectory->add_option("--name", trajectory_args.name, "scenario name")
        ->required();
    trajectory->add_option("--horizon", trajectory_args.horizon, "horizon in years");
    trajectory->add_option("--y0", trajectory_args.y0, "initial output level");

    CalibrateEtaArgs eta_args;
    CLI::App* calibrate_eta = app.add_subcommand(
        "calibrate-eta", "period-average spread ratios and the implied eta uplift");
    calibrate_eta->add_option("--numerator", eta_args.numerator_path,
                              "numerator spread CSV");
    calibrate_eta->add_option("--denominator", eta_args.denominator_path,
                              "denominator spread CSV");
    calibrate_eta->add_option("--ratio", eta_args.ratio_path,
                              "pre-merged ratio CSV");
    calibrate_eta->add_option("--start", eta_args.start, "first day of period 1");
    calibrate_eta->add_option("--split", eta_args.split,
                              "last day of period 1 (period 2 starts next day)");
    calibrate_eta->add_option("--end", eta_args.end, "last day of period 2");
    calibrate_eta->add_option("--eta-base", eta_args.eta_base,
                              "baseline uncertainty degree");
    calibrate_eta->add_option("--date-column", eta_args.date_column, "date column");
    calibrate_eta->add_option("--value-column", eta_args.value_column,
                              "value column");
    calibrate_eta
        ->add_option("--mean-convention", eta_args.mean_convention,
                     "period statistic")
        ->check(CLI::IsMember({"mean-of-ratios", "ratio-of-means"}));
    calibrate_eta->add_option("--format", eta_args.format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}));

    CalibrateLambdaArgs lambda_args;
    CLI::App* calibrate_lambda = app.add_subcommand(
        "calibrate-lambda", "Monte-Carlo success probability of Pareto draws");
    calibrate_lambda->add_option("--shape", lambda_args.shape, "Pareto tail index")
        ->required();
    calibrate_lambda->add_option("--scale", lambda_args.scale, "Pareto minimum");
    calibrate_lambda
        ->add_option("--threshold", lambda_args.threshold, "success cutoff")
        ->required();
    calibrate_lambda->add_option("--replications", lambda_args.replications,
                                 "number of draws");
    calibrate_lambda->add_option("--seed", lambda_args.seed, "PRNG seed");
    calibrate_lambda->add_option("--format", lambda_args.format, "output format")
        ->check(CLI::IsMember({"table", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;  // any command-line problem is an input error
    }

    try {
        if (solve->parsed()) return cmd_solve(solve_args);
        if (compare->parsed()) {
            if (horizon_opt->count() > 0) compare_args.horizon = compare_horizon;
            if (discount_opt->count() > 0) compare_args.discount = compare_discount;
            if (y0_opt->count() > 0) compare_args.y0 = compare_y0;
            return cmd_compare(compare_args);
        }
        if (trajectory->parsed()) return cmd_trajectory(trajectory_args);
        if (calibrate_eta->parsed()) return cmd_calibrate_eta(eta_args);
        if (calibrate_lambda->parsed()) return cmd_calibrate_lambda(lambda_args);
    } catch (const ucost::convergence_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ucost::bracket_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ucost::numeric_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ucost::error& e) {  // parse and validation problems
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
