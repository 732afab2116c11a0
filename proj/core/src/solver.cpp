#include "ucost/solver.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "ucost/errors.hpp"

namespace ucost {
namespace {

double fixed_point_map(const ModelParameters& p, double k_tilde) {
    return capital_from_growth(p, growth_from_capital(p, k_tilde));
}

double fixed_point_residual(const ModelParameters& p, double k_tilde) {
    return k_tilde - fixed_point_map(p, k_tilde);
}

SteadyState assemble_state(const ModelParameters& p, double k_tilde) {
    SteadyState state;
    state.k_tilde = k_tilde;
    state.g_a = growth_from_capital(p, k_tilde);
    state.g_y = state.g_a + p.g_n;
    state.r = interest_rate(p, k_tilde);
    state.residual = std::abs(fixed_point_residual(p, k_tilde)) / k_tilde;
    return state;
}

// Plain bisection on f over [lo, hi]; f(lo) and f(hi) must differ in sign.
template <typename F>
double bisect(F&& f, double lo, double hi, double f_lo, double tolerance) {
    double mid = 0.5 * (lo + hi);
    while (hi - lo > tolerance * mid) {
        const double f_mid = f(mid);
        if (f_mid == 0.0) return mid;
        if ((f_lo < 0.0) == (f_mid < 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
        const double next = 0.5 * (lo + hi);
        if (next == mid) break;  // interval at floating-point resolution
        mid = next;
    }
    return mid;
}

}  // namespace

const SolverConfig& validate_config(const SolverConfig& cfg) {
    if (!(cfg.tolerance > 0.0)) throw validation_error("tolerance must be positive");
    if (cfg.max_iterations < 1)
        throw validation_error("max_iterations must be at least 1");
    if (!(cfg.damping > 0.0 && cfg.damping <= 1.0))
        throw validation_error("damping must lie in (0,1]");
    return cfg;
}

SteadyState solve_steady_state(const ModelParameters& p, const SolverConfig& cfg) {
    validate_parameters(p);
    validate_config(cfg);

    const double base_denominator = p.g_n + p.delta;
    if (!(base_denominator > 0.0))
        throw numeric_error("g_n + delta must be positive to seed the iteration");
    double k = std::pow(p.s_bar / base_denominator, 1.0 / (1.0 - p.alpha));

    double relative_step = std::numeric_limits<double>::infinity();
    double residual = std::numeric_limits<double>::infinity();
    for (int n = 0; n < cfg.max_iterations; ++n) {
        const double mapped = fixed_point_map(p, k);
        residual = std::abs(k - mapped) / k;
        if (residual <= cfg.tolerance && relative_step <= cfg.tolerance)
            return assemble_state(p, k);
        const double next = (1.0 - cfg.damping) * k + cfg.damping * mapped;
        relative_step = std::abs(next - k) / std::abs(next);
        k = next;
    }
    throw convergence_error("steady-state iteration did not converge", k,
                            std::abs(fixed_point_residual(p, k)) / k,
                            cfg.max_iterations);
}

SteadyState solve_steady_state_eta0(const ModelParameters& p, const SolverConfig& cfg) {
    if (p.eta != 0.0)
        throw validation_error("eta must be 0 for the unmodified-model route");
    validate_config(cfg);

    // Excess savings per efficiency unit, rearranged so the residual is
    // strictly increasing in k for gamma >= 1.
    const auto excess = [&p](double k) {
        return std::pow(k, 1.0 - p.alpha) *
                   (growth_from_capital(p, k) + p.g_n + p.delta) -
               p.s_bar;
    };

    double lo = 1.0, hi = 1.0;
    while (excess(lo) > 0.0) {
        lo *= 0.5;
        if (lo < 1e-300) throw bracket_error("no lower bracket for the eta=0 residual");
    }
    while (excess(hi) < 0.0) {
        hi *= 2.0;
        if (hi > 1e12) throw bracket_error("no upper bracket for the eta=0 residual");
    }
    // Resolve well inside cfg.tolerance so the assembled residual clears it.
    const double k = bisect(excess, lo, hi, excess(lo), 0.05 * cfg.tolerance);
    return assemble_state(p, k);
}

double bisect_fixed_point(const ModelParameters& p, double k_lo, double k_hi,
                          double tolerance) {
    if (!(tolerance > 0.0)) throw validation_error("tolerance must be positive");
    if (!(k_lo > 0.0) || !(k_hi > k_lo))
        throw bracket_error("bracket must satisfy 0 < k_lo < k_hi, got [" +
                            std::to_string(k_lo) + ", " + std::to_string(k_hi) + "]");
    const double f_lo = fixed_point_residual(p, k_lo);
    const double f_hi = fixed_point_residual(p, k_hi);
    if (!(f_lo * f_hi < 0.0))
        throw bracket_error("no sign change over [" + std::to_string(k_lo) + ", " +
                            std::to_string(k_hi) + "]");
    const auto f = [&p](double k) { return fixed_point_residual(p, k); };
    return bisect(f, k_lo, k_hi, f_lo, tolerance);
}

double bisect_fixed_point(const ModelParameters& p, double tolerance) {
    double lo = 1e-3, hi = 1e3;
    constexpr int points_per_decade = 4;
    constexpr int max_expansions = 7;  // out to [1e-10, 1e10]

    for (int round = 0; round < max_expansions; ++round) {
        const double log_lo = std::log10(lo);
        const double log_hi = std::log10(hi);
        const int n_points =
            static_cast<int>((log_hi - log_lo) * points_per_decade) + 1;

        std::vector<double> grid(n_points + 1);
        std::vector<double> values(n_points + 1);
        for (int i = 0; i <= n_points; ++i) {
            const double t = static_cast<double>(i) / n_points;
            grid[i] = std::pow(10.0, log_lo + t * (log_hi - log_lo));
            values[i] = fixed_point_residual(p, grid[i]);
        }

        int crossing = -1;
        int crossings = 0;
        for (int i = 0; i < n_points; ++i) {
            if ((values[i] < 0.0) != (values[i + 1] < 0.0)) {
                ++crossings;
                crossing = i;
            }
        }
        if (crossings > 1)
            throw bracket_error("multiple sign changes while scanning [" +
                                std::to_string(lo) + ", " + std::to_string(hi) +
                                "]; fixed point is ambiguous");
        if (crossings == 1)
            return bisect([&p](double k) { return fixed_point_residual(p, k); },
                          grid[crossing], grid[crossing + 1], values[crossing],
                          tolerance);
        lo *= 0.1;
        hi *= 10.0;
    }
    throw bracket_error("no sign change found up to [1e-10, 1e10]");
}

}  // namespace ucost
