#include "ucost/cost.hpp"

#include <cmath>

#include "ucost/errors.hpp"

namespace ucost {

GdpPath make_path(double growth, double y0, int horizon_years) {
    if (!(y0 > 0.0)) throw validation_error("y0 must be positive");
    if (horizon_years < 1) throw validation_error("horizon_years must be at least 1");
    if (!(growth > -1.0)) throw validation_error("growth must exceed -1");

    GdpPath path;
    path.y0 = y0;
    path.growth = growth;
    path.horizon_years = horizon_years;
    path.levels.reserve(static_cast<std::size_t>(horizon_years) + 1);
    double level = y0;
    for (int t = 0; t <= horizon_years; ++t) {
        path.levels.push_back(level);
        level *= 1.0 + growth;
    }
    return path;
}

GdpPath make_path(const SteadyState& steady, double y0, int horizon_years) {
    return make_path(steady.g_y, y0, horizon_years);
}

double present_value(const GdpPath& path, double discount_rate) {
    if (!(discount_rate > -1.0))
        throw validation_error("discount_rate must exceed -1");
    const double shrink = 1.0 / (1.0 + discount_rate);
    double factor = 1.0;
    double total = 0.0;
    for (const double level : path.levels) {
        total += level * factor;
        factor *= shrink;
    }
    return total;
}

CostReport uncertainty_cost(const SteadyState& low, const SteadyState& high,
                            int horizon_years, double discount_rate, double y0) {
    const GdpPath low_path = make_path(low, y0, horizon_years);
    const GdpPath high_path = make_path(high, y0, horizon_years);

    CostReport report;
    report.pv_low = present_value(low_path, discount_rate);
    report.pv_high = present_value(high_path, discount_rate);
    report.loss = 1.0 - report.pv_high / report.pv_low;
    report.discount_rate = discount_rate;
    report.convention = CostConvention{0, horizon_years, y0};
    return report;
}

}  // namespace ucost
