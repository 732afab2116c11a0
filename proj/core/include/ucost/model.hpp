#pragma once

#include <string_view>

namespace ucost {

/// How uncertainty enters the savings rate. In a robust economy higher
/// uncertainty raises domestic savings (exponent +eta); in a frail one it
/// triggers capital outflow instead (exponent -eta).
enum class EconomyKind { robust, frail };

std::string_view to_string(EconomyKind kind) noexcept;
EconomyKind economy_kind_from_string(std::string_view text);

/// Structural parameters of the growth model. All rates are annual decimals.
struct ModelParameters {
    double gamma;      // innovation step factor, > 1
    double lambda;     // innovation success probability scale, in (0, 1]
    double alpha;      // output elasticity of capital, in (0, 1)
    double sigma;      // elasticity of innovation success w.r.t. invested capital, in (0, 1)
    double eta;        // uncertainty degree, >= 0; the sign comes from `kind`
    EconomyKind kind;
    double delta;      // depreciation rate, >= 0
    double g_n;        // labor force growth rate
    double s_bar;      // exogenous savings rate component, in (0, 1)
};

/// +eta for robust economies, -eta for frail ones.
double signed_eta(const ModelParameters& p) noexcept;

/// Throws validation_error naming the first violated constraint; otherwise
/// returns its argument unchanged.
const ModelParameters& validate_parameters(const ModelParameters& p);

/// Productivity growth implied by the capital ratio:
///   g_A = (gamma - 1) * lambda * [alpha (1-alpha) lambda sigma k^alpha]^(sigma/(1-sigma))
double growth_from_capital(const ModelParameters& p, double k_tilde);

/// Capital ratio implied by productivity growth:
///   k = (s_bar / (g_A + g_N + delta))^(1 / (1 - alpha - signed_eta))
double capital_from_growth(const ModelParameters& p, double g_a);

/// Real interest rate: r = alpha^2 k^(alpha-1) - delta.
double interest_rate(const ModelParameters& p, double k_tilde) noexcept;

/// Savings rate with the uncertainty-dependent component: s_bar * k^(signed_eta).
double savings_rate(const ModelParameters& p, double k_tilde) noexcept;

/// A solved balanced-growth configuration.
struct SteadyState {
    double k_tilde;   // capital per efficiency unit of labor, > 0
    double g_a;       // productivity growth rate
    double g_y;       // GDP growth rate, g_a + g_n by construction
    double r;         // real interest rate
    double residual;  // |k - Phi(k)| / k at the returned k, Phi being the fixed-point map
};

}  // namespace ucost
