#include "ucost/calibration.hpp"

#include <cmath>

#include "ucost/errors.hpp"

namespace ucost {

const ParetoSpec& validate_spec(const ParetoSpec& spec) {
    if (!(spec.shape > 0.0)) throw validation_error("shape must be positive");
    if (!(spec.scale > 0.0)) throw validation_error("scale must be positive");
    if (!(spec.threshold >= spec.scale))
        throw validation_error("threshold must be at least scale");
    return spec;
}

double exceedance_probability(const ParetoSpec& spec) noexcept {
    return std::pow(spec.scale / spec.threshold, spec.shape);
}

std::vector<double> pareto_sample(const ParetoSpec& spec,
                                  std::span<const double> uniforms) {
    validate_spec(spec);
    std::vector<double> draws;
    draws.reserve(uniforms.size());
    const double inverse_shape = 1.0 / spec.shape;
    for (const double u : uniforms) {
        if (!(u > 0.0 && u < 1.0))
            throw numeric_error("uniform input must lie in (0,1), got " +
                                std::to_string(u));
        draws.push_back(spec.scale * std::pow(u, -inverse_shape));
    }
    return draws;
}

LambdaEstimate estimate_lambda(const ParetoSpec& spec, std::uint64_t replications,
                               std::uint64_t seed) {
    validate_spec(spec);
    if (replications < 1)
        throw validation_error("replications must be at least 1");

    UniformStream stream(seed);
    const double inverse_shape = 1.0 / spec.shape;
    std::uint64_t successes = 0;
    for (std::uint64_t i = 0; i < replications; ++i) {
        const double draw = spec.scale * std::pow(stream.next(), -inverse_shape);
        if (draw > spec.threshold) ++successes;
    }

    LambdaEstimate estimate;
    estimate.lambda_hat =
        static_cast<double>(successes) / static_cast<double>(replications);
    estimate.replications = replications;
    estimate.std_error = std::sqrt(estimate.lambda_hat *
                                   (1.0 - estimate.lambda_hat) /
                                   static_cast<double>(replications));
    estimate.seed = seed;
    return estimate;
}

double eta_from_uplift(double eta_base, double uplift) {
    if (!(eta_base >= 0.0)) throw validation_error("eta_base must be non-negative");
    if (!(uplift > -1.0)) throw validation_error("uplift must exceed -1");
    return eta_base * (1.0 + uplift);
}

}  // namespace ucost
