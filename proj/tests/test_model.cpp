#include "ucost/model.hpp"

#include <cmath>
#include <random>

#include <doctest.h>

#include "support.hpp"
#include "ucost/errors.hpp"

using namespace ucost;
using testsupport::random_parameters;
using testsupport::table2_baseline;

TEST_SUITE_BEGIN("model");

TEST_CASE("baseline parameters validate") {
    const auto p = table2_baseline();
    CHECK_NOTHROW(validate_parameters(p));
    CHECK_EQ(&validate_parameters(p), &p);  // returned unchanged
}

TEST_CASE("validation names the first violated constraint") {
    auto p = table2_baseline();

    SUBCASE("robust exponent sign") {
        // 1 - 0.4 - 0.7 < 0 only under the robust sign convention.
        p.eta = 0.7;
        p.kind = EconomyKind::frail;
        CHECK_NOTHROW(validate_parameters(p));
        p.kind = EconomyKind::robust;
        CHECK_THROWS_WITH_AS(validate_parameters(p),
                             "1 - alpha - signed eta must be positive",
                             validation_error);
    }
    SUBCASE("sigma bounds") {
        p.sigma = 1.0;
        CHECK_THROWS_WITH_AS(validate_parameters(p), "sigma must lie in (0,1)",
                             validation_error);
        p.sigma = 0.0;
        CHECK_THROWS_AS(validate_parameters(p), validation_error);
    }
    SUBCASE("gamma") {
        p.gamma = 1.0;
        CHECK_THROWS_WITH_AS(validate_parameters(p), "gamma must exceed 1",
                             validation_error);
    }
    SUBCASE("lambda") {
        p.lambda = 0.0;
        CHECK_THROWS_AS(validate_parameters(p), validation_error);
        p.lambda = 1.2;
        CHECK_THROWS_AS(validate_parameters(p), validation_error);
    }
    SUBCASE("alpha") {
        p.alpha = 1.0;
        CHECK_THROWS_AS(validate_parameters(p), validation_error);
    }
    SUBCASE("eta") {
        p.eta = -0.1;
        CHECK_THROWS_AS(validate_parameters(p), validation_error);
    }
    SUBCASE("delta") {
        p.delta = -0.01;
        CHECK_THROWS_AS(validate_parameters(p), validation_error);
    }
    SUBCASE("s_bar") {
        p.s_bar = 1.0;
        CHECK_THROWS_AS(validate_parameters(p), validation_error);
    }
    SUBCASE("NaN never passes") {
        p.gamma = std::nan("");
        CHECK_THROWS_AS(validate_parameters(p), validation_error);
    }
}

TEST_CASE("economy kind round-trips through text") {
    CHECK_EQ(economy_kind_from_string("robust"), EconomyKind::robust);
    CHECK_EQ(economy_kind_from_string("frail"), EconomyKind::frail);
    CHECK_EQ(to_string(EconomyKind::frail), "frail");
    CHECK_THROWS_AS(economy_kind_from_string("open"), validation_error);
}

TEST_CASE("growth_from_capital point values") {
    const auto p = table2_baseline();
    // Independent evaluation of (gamma-1) lambda [alpha(1-alpha) lambda sigma
    // k^alpha]^(sigma/(1-sigma)) at k = 5.69.
    CHECK_EQ(growth_from_capital(p, 5.69),
             doctest::Approx(0.019001665501905077).epsilon(1e-13));

    auto degenerate = p;
    degenerate.gamma = 1.0;  // innovation shut down
    CHECK_EQ(growth_from_capital(degenerate, 3.7), 0.0);

    CHECK_THROWS_AS(growth_from_capital(p, 0.0), numeric_error);
    CHECK_THROWS_AS(growth_from_capital(p, -2.0), numeric_error);
}

TEST_CASE("sigma = 0.5 makes growth linear in k^alpha") {
    const auto p = table2_baseline();
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ks(0.2, 40.0);
    for (int i = 0; i < 50; ++i) {
        const double k = ks(rng);
        const double k_doubled_base = k * std::pow(2.0, 1.0 / p.alpha);
        CHECK_EQ(growth_from_capital(p, k_doubled_base),
                 doctest::Approx(2.0 * growth_from_capital(p, k)).epsilon(1e-12));
    }
}

TEST_CASE("capital_from_growth point values") {
    const auto p = table2_baseline();
    // Frail, eta = 0.1: exponent 1/0.7.
    CHECK_EQ(capital_from_growth(p, 0.019),
             doctest::Approx(5.692428123606844).epsilon(1e-13));

    auto robust = p;
    robust.kind = EconomyKind::robust;  // exponent 1/0.5
    CHECK_EQ(capital_from_growth(robust, 0.019),
             doctest::Approx(11.413440467494523).epsilon(1e-13));

    auto no_uncertainty = p;
    no_uncertainty.eta = 0.0;
    // s_bar equals the denominator, so the ratio is 1 for any exponent.
    const double g_a = p.s_bar - p.g_n - p.delta;
    CHECK_EQ(capital_from_growth(no_uncertainty, g_a), 1.0);

    CHECK_THROWS_AS(capital_from_growth(p, -0.06), numeric_error);
}

TEST_CASE("interest_rate point values") {
    const auto p = table2_baseline();
    CHECK_EQ(interest_rate(p, 5.69),
             doctest::Approx(0.011370595510335188).epsilon(1e-13));

    // Inverting alpha^2 k^(alpha-1) = delta gives the zero-rate capital ratio.
    const double k_zero = std::pow(p.alpha * p.alpha / p.delta, 1.0 / (1.0 - p.alpha));
    CHECK_EQ(k_zero, doctest::Approx(8.282836998981207).epsilon(1e-13));
    CHECK_LT(std::abs(interest_rate(p, k_zero)), 1e-15);

    CHECK_EQ(interest_rate(p, 1.0), p.alpha * p.alpha - p.delta);
}

TEST_CASE("savings_rate point values") {
    const auto p = table2_baseline();
    CHECK_EQ(savings_rate(p, 5.69),
             doctest::Approx(0.21010132052413785).epsilon(1e-13));

    auto no_uncertainty = p;
    no_uncertainty.eta = 0.0;
    CHECK_EQ(savings_rate(no_uncertainty, 17.3), p.s_bar);
    CHECK_EQ(savings_rate(p, 1.0), p.s_bar);
}

TEST_CASE("monotonicity of the structural functions") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> ks(0.05, 50.0);
    for (int i = 0; i < 200; ++i) {
        const auto p = random_parameters(rng);
        double k_a = ks(rng), k_b = ks(rng);
        if (k_a == k_b) continue;
        if (k_a > k_b) std::swap(k_a, k_b);

        CAPTURE(p.alpha);
        CAPTURE(k_a);
        CAPTURE(k_b);
        // growth strictly increasing in k for gamma > 1
        CHECK_LT(growth_from_capital(p, k_a), growth_from_capital(p, k_b));
        // interest rate strictly decreasing in k
        CHECK_GT(interest_rate(p, k_a), interest_rate(p, k_b));
        // capital strictly decreasing in g_a
        const double g_a = growth_from_capital(p, k_a);
        CHECK_GT(capital_from_growth(p, g_a), capital_from_growth(p, g_a + 0.01));
    }
}

TEST_CASE("uncertainty pushes savings apart around s_bar for k > 1") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> ks(1.0 + 1e-9, 60.0);
    for (int i = 0; i < 200; ++i) {
        auto p = random_parameters(rng);
        const double k = ks(rng);
        auto robust = p, frail = p;
        robust.kind = EconomyKind::robust;
        frail.kind = EconomyKind::frail;
        if (p.eta == 0.0) {
            CHECK_EQ(savings_rate(robust, k), p.s_bar);
            CHECK_EQ(savings_rate(frail, k), p.s_bar);
        } else {
            CHECK_GT(savings_rate(robust, k), p.s_bar);
            CHECK_LT(savings_rate(frail, k), p.s_bar);
        }
    }
}

TEST_CASE("savings identity holds exactly at the implied capital ratio") {
    // With g = growth(k), the accumulation identity
    //   savings(k') k'^alpha = (g + g_n + delta) k'
    // holds iff k' = capital_from_growth(g).
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> ks(0.1, 30.0);
    for (int i = 0; i < 200; ++i) {
        const auto p = random_parameters(rng);
        const double k = ks(rng);
        const double g = growth_from_capital(p, k);
        const double k_implied = capital_from_growth(p, g);
        const double c = g + p.g_n + p.delta;

        auto identity_gap = [&](double at) {
            return std::abs(savings_rate(p, at) * std::pow(at, p.alpha) - c * at) /
                   (c * at);
        };
        CHECK_LT(identity_gap(k_implied), 1e-12);
        // ... and fails whenever k is away from the implied ratio.
        if (std::abs(k - k_implied) / k_implied > 1e-6)
            CHECK_GT(identity_gap(k), 1e-9);
    }
}

TEST_SUITE_END();
