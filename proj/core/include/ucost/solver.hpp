#pragma once

#include "ucost/model.hpp"

namespace ucost {

struct SolverConfig {
    double tolerance = 1e-12;  // relative; bounds both the step size and the residual
    int max_iterations = 500;
    double damping = 1.0;      // step mixing weight in (0, 1]; 1 is pure iteration
};

const SolverConfig& validate_config(const SolverConfig& cfg);

/// Solves the joint steady state by damped fixed-point iteration on
///   k <- (1 - d) k + d * capital_from_growth(p, growth_from_capital(p, k)),
/// seeded from the eta = 0 ratio evaluated at zero productivity growth.
/// Convergence requires both the relative step and the relative fixed-point
/// residual to drop below cfg.tolerance; hitting the iteration cap throws
/// convergence_error (never a best-effort return).
SteadyState solve_steady_state(const ModelParameters& p, const SolverConfig& cfg = {});

/// Independent route for eta == 0: bisects the monotone excess-savings
/// residual k^(1-alpha) (g_A(k) + g_N + delta) - s_bar of the unmodified
/// model. Requires p.eta == 0 but tolerates gamma == 1 (innovation shut
/// down), so it also covers the degenerate closed form. Used as an oracle
/// for solve_steady_state.
SteadyState solve_steady_state_eta0(const ModelParameters& p, const SolverConfig& cfg = {});

/// Bisection on F(k) = k - capital_from_growth(p, growth_from_capital(p, k))
/// over a caller-supplied bracket. The bracket must straddle a sign change.
double bisect_fixed_point(const ModelParameters& p, double k_lo, double k_hi,
                          double tolerance);

/// Same, starting from the default bracket [1e-3, 1e3] and expanding it
/// geometrically until a sign change appears. Scans a log-spaced grid while
/// expanding; more than one sign change is reported as ambiguity rather than
/// silently picking a root.
double bisect_fixed_point(const ModelParameters& p, double tolerance = 1e-12);

}  // namespace ucost
