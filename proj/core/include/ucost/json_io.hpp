#pragma once

#include <nlohmann/json.hpp>

#include "ucost/calibration.hpp"
#include "ucost/cost.hpp"
#include "ucost/model.hpp"
#include "ucost/spreads.hpp"

// JSON serializers for the report types the CLI emits. Numbers are written
// at full round-trip precision; display rounding is a formatting concern.

namespace ucost {

inline void to_json(nlohmann::json& j, const SteadyState& s) {
    j = nlohmann::json{{"k_tilde", s.k_tilde},
                       {"g_a", s.g_a},
                       {"g_y", s.g_y},
                       {"r", s.r},
                       {"residual", s.residual}};
}

inline void from_json(const nlohmann::json& j, SteadyState& s) {
    j.at("k_tilde").get_to(s.k_tilde);
    j.at("g_a").get_to(s.g_a);
    j.at("g_y").get_to(s.g_y);
    j.at("r").get_to(s.r);
    j.at("residual").get_to(s.residual);
}

inline void to_json(nlohmann::json& j, const CostConvention& c) {
    j = nlohmann::json{{"t_first", c.t_first}, {"t_last", c.t_last}, {"y0", c.y0}};
}

inline void from_json(const nlohmann::json& j, CostConvention& c) {
    j.at("t_first").get_to(c.t_first);
    j.at("t_last").get_to(c.t_last);
    j.at("y0").get_to(c.y0);
}

inline void to_json(nlohmann::json& j, const CostReport& r) {
    j = nlohmann::json{{"pv_low", r.pv_low},
                       {"pv_high", r.pv_high},
                       {"loss", r.loss},
                       {"discount_rate", r.discount_rate},
                       {"convention", r.convention}};
}

inline void from_json(const nlohmann::json& j, CostReport& r) {
    j.at("pv_low").get_to(r.pv_low);
    j.at("pv_high").get_to(r.pv_high);
    j.at("loss").get_to(r.loss);
    j.at("discount_rate").get_to(r.discount_rate);
    j.at("convention").get_to(r.convention);
}

inline void to_json(nlohmann::json& j, const PeriodStats& s) {
    j = nlohmann::json{{"period_1", {{"start", format_date(s.start_1)},
                                     {"end", format_date(s.end_1)}}},
                       {"period_2", {{"start", format_date(s.start_2)},
                                     {"end", format_date(s.end_2)}}},
                       {"mean_ratio_1", s.mean_ratio_1},
                       {"mean_ratio_2", s.mean_ratio_2},
                       {"uplift", s.uplift},
                       {"n_1", s.n_1},
                       {"n_2", s.n_2}};
}

inline void from_json(const nlohmann::json& j, PeriodStats& s) {
    s.start_1 = parse_date(j.at("period_1").at("start").get<std::string>());
    s.end_1 = parse_date(j.at("period_1").at("end").get<std::string>());
    s.start_2 = parse_date(j.at("period_2").at("start").get<std::string>());
    s.end_2 = parse_date(j.at("period_2").at("end").get<std::string>());
    j.at("mean_ratio_1").get_to(s.mean_ratio_1);
    j.at("mean_ratio_2").get_to(s.mean_ratio_2);
    j.at("uplift").get_to(s.uplift);
    j.at("n_1").get_to(s.n_1);
    j.at("n_2").get_to(s.n_2);
}

inline void to_json(nlohmann::json& j, const LambdaEstimate& e) {
    j = nlohmann::json{{"lambda_hat", e.lambda_hat},
                       {"replications", e.replications},
                       {"std_error", e.std_error},
                       {"seed", e.seed}};
}

inline void from_json(const nlohmann::json& j, LambdaEstimate& e) {
    j.at("lambda_hat").get_to(e.lambda_hat);
    j.at("replications").get_to(e.replications);
    j.at("std_error").get_to(e.std_error);
    j.at("seed").get_to(e.seed);
}

}  // namespace ucost
