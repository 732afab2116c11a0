#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "ucost/model.hpp"
#include "ucost/solver.hpp"

namespace ucost {

/// Per-scenario solver settings; unset fields fall back to the defaults.
struct SolverOverrides {
    std::optional<double> tolerance;
    std::optional<int> max_iterations;
    std::optional<double> damping;

    SolverConfig apply(SolverConfig base = {}) const {
        if (tolerance) base.tolerance = *tolerance;
        if (max_iterations) base.max_iterations = *max_iterations;
        if (damping) base.damping = *damping;
        return base;
    }
};

struct ScenarioEntry {
    ModelParameters params;
    SolverOverrides solver;
};

struct ComparisonSpec {
    std::string low;   // scenario name of the low-uncertainty path
    std::string high;  // scenario name of the high-uncertainty path
    int horizon_years = 15;
    double discount_rate = 0.0;
    double y0 = 1.0;
};

struct ScenarioFile {
    std::map<std::string, ScenarioEntry> scenarios;
    std::map<std::string, ComparisonSpec> comparisons;

    const ScenarioEntry& scenario(const std::string& name) const;
    const ComparisonSpec& comparison(const std::string& name) const;
};

/// Parses the key-value scenario format:
///
///   # comment
///   [scenario NAME]
///   gamma = 1.102
///   ...
///   kind = frail
///
///   [comparison NAME]
///   low = baseline
///   high = scenario1
///
/// Scenario names are unique, every comparison must reference defined
/// scenarios, and every scenario must set all nine model parameters.
/// Parameter values are not range-checked here; validation happens when a
/// scenario is solved.
ScenarioFile parse_scenario_file(std::istream& input);
ScenarioFile load_scenario_file(const std::string& path);

}  // namespace ucost
