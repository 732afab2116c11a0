#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace ucost {

/// Pareto law with survival function P(X > x) = (scale / x)^shape for
/// x >= scale. A replication "succeeds" when the draw exceeds `threshold`,
/// so the analytic success probability is (scale / threshold)^shape.
struct ParetoSpec {
    double shape;      // tail index, > 0
    double scale;      // minimum value, > 0
    double threshold;  // success cutoff, >= scale
};

const ParetoSpec& validate_spec(const ParetoSpec& spec);

double exceedance_probability(const ParetoSpec& spec) noexcept;

/// Deterministic uniform stream on the open interval (0, 1), built from the
/// top 53 bits of a seeded mt19937_64. Zero draws are rejected so the
/// inverse-transform map below never divides by zero.
class UniformStream {
public:
    explicit UniformStream(std::uint64_t seed) : engine_(seed) {}

    double next() {
        for (;;) {
            const double u =
                static_cast<double>(engine_() >> 11) * 0x1.0p-53;
            if (u > 0.0) return u;
        }
    }

private:
    std::mt19937_64 engine_;
};

/// Inverse-transform sampling: u -> scale * u^(-1/shape). Every u must lie
/// strictly inside (0, 1); every output is >= scale.
std::vector<double> pareto_sample(const ParetoSpec& spec,
                                  std::span<const double> uniforms);

struct LambdaEstimate {
    double lambda_hat;           // empirical success frequency, in [0, 1]
    std::uint64_t replications;  // sample count R
    double std_error;            // sqrt(lambda_hat (1 - lambda_hat) / R)
    std::uint64_t seed;          // PRNG seed, kept so the run can be reproduced
};

/// Monte-Carlo success frequency over `replications` seeded Pareto draws.
/// Bit-identical across runs for the same (spec, replications, seed); the
/// draws come from a single sequential stream.
LambdaEstimate estimate_lambda(const ParetoSpec& spec, std::uint64_t replications,
                               std::uint64_t seed);

/// Scales a baseline uncertainty degree by a relative uplift:
/// eta_base * (1 + uplift).
double eta_from_uplift(double eta_base, double uplift);

}  // namespace ucost
