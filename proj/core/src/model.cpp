#include "ucost/model.hpp"

#include <cmath>
#include <string>

#include "ucost/errors.hpp"

namespace ucost {

std::string_view to_string(EconomyKind kind) noexcept {
    return kind == EconomyKind::robust ? "robust" : "frail";
}

EconomyKind economy_kind_from_string(std::string_view text) {
    if (text == "robust") return EconomyKind::robust;
    if (text == "frail") return EconomyKind::frail;
    throw validation_error("economy kind must be 'robust' or 'frail', got '" +
                           std::string(text) + "'");
}

double signed_eta(const ModelParameters& p) noexcept {
    return p.kind == EconomyKind::robust ? p.eta : -p.eta;
}

const ModelParameters& validate_parameters(const ModelParameters& p) {
    // Negated comparisons so NaN fails every check.
    if (!(p.gamma > 1.0)) throw validation_error("gamma must exceed 1");
    if (!(p.lambda > 0.0 && p.lambda <= 1.0))
        throw validation_error("lambda must lie in (0,1]");
    if (!(p.alpha > 0.0 && p.alpha < 1.0))
        throw validation_error("alpha must lie in (0,1)");
    if (!(p.sigma > 0.0 && p.sigma < 1.0))
        throw validation_error("sigma must lie in (0,1)");
    if (!(p.eta >= 0.0)) throw validation_error("eta must be non-negative");
    if (!(1.0 - p.alpha - signed_eta(p) > 0.0))
        throw validation_error("1 - alpha - signed eta must be positive");
    if (!(p.delta >= 0.0)) throw validation_error("delta must be non-negative");
    if (!std::isfinite(p.g_n)) throw validation_error("g_n must be finite");
    if (!(p.s_bar > 0.0 && p.s_bar < 1.0))
        throw validation_error("s_bar must lie in (0,1)");
    return p;
}

double growth_from_capital(const ModelParameters& p, double k_tilde) {
    if (!(k_tilde > 0.0))
        throw numeric_error("k_tilde must be positive, got " + std::to_string(k_tilde));
    const double bracket =
        p.alpha * (1.0 - p.alpha) * p.lambda * p.sigma * std::pow(k_tilde, p.alpha);
    const double g_a =
        (p.gamma - 1.0) * p.lambda * std::pow(bracket, p.sigma / (1.0 - p.sigma));
    if (!std::isfinite(g_a))
        throw numeric_error("growth rate is not finite at k_tilde = " +
                            std::to_string(k_tilde));
    return g_a;
}

double capital_from_growth(const ModelParameters& p, double g_a) {
    const double denominator = g_a + p.g_n + p.delta;
    if (!(denominator > 0.0))
        throw numeric_error("g_a + g_n + delta must be positive, got " +
                            std::to_string(denominator));
    const double k_tilde =
        std::pow(p.s_bar / denominator, 1.0 / (1.0 - p.alpha - signed_eta(p)));
    if (!std::isfinite(k_tilde))
        throw numeric_error("capital ratio is not finite at g_a = " + std::to_string(g_a));
    return k_tilde;
}

double interest_rate(const ModelParameters& p, double k_tilde) noexcept {
    return p.alpha * p.alpha * std::pow(k_tilde, p.alpha - 1.0) - p.delta;
}

double savings_rate(const ModelParameters& p, double k_tilde) noexcept {
    return p.s_bar * std::pow(k_tilde, signed_eta(p));
}

}  // namespace ucost
