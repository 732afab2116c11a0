#include "ucost/scenario.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <set>
#include <string_view>

#include "ucost/errors.hpp"

namespace ucost {
namespace {

std::string_view trim(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t'))
        text.remove_prefix(1);
    while (!text.empty() &&
           (text.back() == ' ' || text.back() == '\t' || text.back() == '\r'))
        text.remove_suffix(1);
    return text;
}

double parse_double(std::string_view text, std::size_t line_no) {
    double value = 0.0;
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw parse_error("expected a number, got '" + std::string(text) + "'",
                          line_no);
    return value;
}

int parse_int(std::string_view text, std::size_t line_no) {
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw parse_error("expected an integer, got '" + std::string(text) + "'",
                          line_no);
    return value;
}

struct PendingScenario {
    ScenarioEntry entry{};
    std::set<std::string> keys_seen;
    std::size_t line_no = 0;
};

struct PendingComparison {
    ComparisonSpec spec{};
    std::size_t line_no = 0;
};

const char* const required_parameter_keys[] = {
    "gamma", "lambda", "alpha", "sigma", "eta", "kind", "delta", "g_n", "s_bar"};

void set_scenario_key(PendingScenario& pending, std::string_view key,
                      std::string_view value, std::size_t line_no) {
    ModelParameters& p = pending.entry.params;
    if (key == "gamma") p.gamma = parse_double(value, line_no);
    else if (key == "lambda") p.lambda = parse_double(value, line_no);
    else if (key == "alpha") p.alpha = parse_double(value, line_no);
    else if (key == "sigma") p.sigma = parse_double(value, line_no);
    else if (key == "eta") p.eta = parse_double(value, line_no);
    else if (key == "kind") {
        try {
            p.kind = economy_kind_from_string(value);
        } catch (const validation_error& e) {
            throw parse_error(e.what(), line_no);
        }
    }
    else if (key == "delta") p.delta = parse_double(value, line_no);
    else if (key == "g_n") p.g_n = parse_double(value, line_no);
    else if (key == "s_bar") p.s_bar = parse_double(value, line_no);
    else if (key == "tolerance")
        pending.entry.solver.tolerance = parse_double(value, line_no);
    else if (key == "max_iterations")
        pending.entry.solver.max_iterations = parse_int(value, line_no);
    else if (key == "damping")
        pending.entry.solver.damping = parse_double(value, line_no);
    else
        throw parse_error("unknown scenario key '" + std::string(key) + "'", line_no);
    pending.keys_seen.insert(std::string(key));
}

void set_comparison_key(PendingComparison& pending, std::string_view key,
                        std::string_view value, std::size_t line_no) {
    if (key == "low") pending.spec.low = std::string(value);
    else if (key == "high") pending.spec.high = std::string(value);
    else if (key == "horizon") pending.spec.horizon_years = parse_int(value, line_no);
    else if (key == "discount") pending.spec.discount_rate = parse_double(value, line_no);
    else if (key == "y0") pending.spec.y0 = parse_double(value, line_no);
    else
        throw parse_error("unknown comparison key '" + std::string(key) + "'",
                          line_no);
}

}  // namespace

const ScenarioEntry& ScenarioFile::scenario(const std::string& name) const {
    const auto it = scenarios.find(name);
    if (it == scenarios.end())
        throw validation_error("no scenario named '" + name + "'");
    return it->second;
}

const ComparisonSpec& ScenarioFile::comparison(const std::string& name) const {
    const auto it = comparisons.find(name);
    if (it == comparisons.end())
        throw validation_error("no comparison named '" + name + "'");
    return it->second;
}

ScenarioFile parse_scenario_file(std::istream& input) {
    std::map<std::string, PendingScenario> scenarios;
    std::map<std::string, PendingComparison> comparisons;

    enum class Section { none, scenario, comparison };
    Section section = Section::none;
    std::string current;

    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(input, raw)) {
        ++line_no;
        std::string_view line{raw};
        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']')
                throw parse_error("unterminated section header", line_no);
            const std::string_view header = trim(line.substr(1, line.size() - 2));
            const std::size_t space = header.find(' ');
            if (space == std::string_view::npos)
                throw parse_error(
                    "section header must be '[scenario NAME]' or '[comparison NAME]'",
                    line_no);
            const std::string_view tag = header.substr(0, space);
            const std::string name{trim(header.substr(space + 1))};
            if (name.empty())
                throw parse_error("section name must not be empty", line_no);
            if (tag == "scenario") {
                if (scenarios.count(name))
                    throw parse_error("duplicate scenario '" + name + "'", line_no);
                scenarios[name].line_no = line_no;
                section = Section::scenario;
            } else if (tag == "comparison") {
                if (comparisons.count(name))
                    throw parse_error("duplicate comparison '" + name + "'", line_no);
                comparisons[name].line_no = line_no;
                section = Section::comparison;
            } else {
                throw parse_error("unknown section kind '" + std::string(tag) + "'",
                                  line_no);
            }
            current = name;
            continue;
        }

        const std::size_t equals = line.find('=');
        if (equals == std::string_view::npos)
            throw parse_error("expected 'key = value'", line_no);
        const std::string_view key = trim(line.substr(0, equals));
        const std::string_view value = trim(line.substr(equals + 1));
        if (key.empty() || value.empty())
            throw parse_error("expected 'key = value'", line_no);

        switch (section) {
            case Section::none:
                throw parse_error("'" + std::string(key) +
                                  "' appears before any section header", line_no);
            case Section::scenario:
                set_scenario_key(scenarios[current], key, value, line_no);
                break;
            case Section::comparison:
                set_comparison_key(comparisons[current], key, value, line_no);
                break;
        }
    }

    ScenarioFile file;
    for (auto& [name, pending] : scenarios) {
        for (const char* key : required_parameter_keys) {
            if (!pending.keys_seen.count(key))
                throw parse_error("scenario '" + name + "' is missing '" + key + "'",
                                  pending.line_no);
        }
        file.scenarios.emplace(name, std::move(pending.entry));
    }
    for (auto& [name, pending] : comparisons) {
        if (pending.spec.low.empty() || pending.spec.high.empty())
            throw parse_error("comparison '" + name + "' must set 'low' and 'high'",
                              pending.line_no);
        for (const std::string* ref : {&pending.spec.low, &pending.spec.high}) {
            if (!file.scenarios.count(*ref))
                throw parse_error("comparison '" + name +
                                  "' references undefined scenario '" + *ref + "'",
                                  pending.line_no);
        }
        file.comparisons.emplace(name, std::move(pending.spec));
    }
    return file;
}

ScenarioFile load_scenario_file(const std::string& path) {
    std::ifstream input(path);
    if (!input)
        throw parse_error("cannot open '" + path + "'");
    return parse_scenario_file(input);
}

}  // namespace ucost
