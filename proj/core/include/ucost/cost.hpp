#pragma once

#include <vector>

#include "ucost/model.hpp"

namespace ucost {

/// Output levels Y_t = y0 (1 + g)^t on a balanced-growth path, t = 0..horizon.
struct GdpPath {
    double y0 = 1.0;
    double growth = 0.0;
    int horizon_years = 0;
    std::vector<double> levels;  // horizon_years + 1 entries, levels[0] == y0
};

GdpPath make_path(double growth, double y0, int horizon_years);
GdpPath make_path(const SteadyState& steady, double y0, int horizon_years);

/// Sum of levels[t] / (1 + discount_rate)^t over the whole path.
double present_value(const GdpPath& path, double discount_rate);

/// Records which path points entered the present values.
struct CostConvention {
    int t_first = 0;
    int t_last = 0;
    double y0 = 1.0;
};

struct CostReport {
    double pv_low = 0.0;
    double pv_high = 0.0;
    double loss = 0.0;  // 1 - pv_high / pv_low
    double discount_rate = 0.0;
    CostConvention convention;
};

/// Present-value loss of living on the high-uncertainty path instead of the
/// low-uncertainty one. Both paths share the initial level y0; the
/// comparison is about growth rates, not level shifts. Growth rates are
/// consumed at full precision - rounding only ever happens at display.
CostReport uncertainty_cost(const SteadyState& low, const SteadyState& high,
                            int horizon_years, double discount_rate,
                            double y0 = 1.0);

}  // namespace ucost
