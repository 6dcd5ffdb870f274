#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "dunkl/theorems.hpp"

using namespace dunkl;

namespace {

std::vector<double> geometric(double a, double b, int n) {
    std::vector<double> x;
    for (int i = 0; i < n; ++i) x.push_back(a * std::pow(b / a, double(i) / (n - 1)));
    return x;
}

}  // namespace

TEST_CASE("exponent bookkeeping") {
    AnalysisParams a{2.0, 1.0, 0.5};
    CHECK(a.conjugate() == 2.0);
    CHECK(a.theta() == 2.0);
    CHECK(std::isinf(AnalysisParams{2.0, 2.0, 0.5}.theta()));
    CHECK_THROWS_AS(AnalysisParams({2.0, 3.0, 0.5}).validate(), std::invalid_argument);  // q > p'
    CHECK_THROWS_AS(AnalysisParams({1.0, 1.0, 0.5}).validate(), std::invalid_argument);

    // beta p = m puts the lower integrability exponent at 1.
    CHECK(corollary_q_lower(ModelParams::product({0.0}), 0.5, 2.0) == doctest::Approx(1.0));
    CHECK(corollary_q_lower(ModelParams::product({0.5}), 0.4, 2.0) == doctest::Approx(4.0 / 2.8));
}

TEST_CASE("LHS of the Fourier-side inequality against Gaussian moments") {
    // F f = e^{-s^2/2}, d_k = 2 on the line.
    const double sqrt_pi = std::sqrt(std::numbers::pi);
    const auto g1 = profiles::constant(1.0);
    const auto gauss = profiles::gaussian();
    // q = 1: 2 int_2^inf e^{-s^2/2} ds.
    CHECK(theorem_lhs(ModelParams::product({0.0}), gauss, g1, 1.0).lhs ==
          doctest::Approx(std::sqrt(2.0 * std::numbers::pi) * std::erfc(std::sqrt(2.0))).epsilon(1e-7));
    // q = 2: 2 int_2^inf e^{-s^2} ds.
    CHECK(theorem_lhs(ModelParams::product({0.0}), gauss, g1, 2.0).lhs ==
          doctest::Approx(sqrt_pi * std::erfc(2.0)).epsilon(1e-7));
    // k = 1, q = 2: 2 int_2^inf e^{-s^2} s^2 ds.
    CHECK(theorem_lhs(ModelParams::product({1.0}), gauss, g1, 2.0).lhs ==
          doctest::Approx(2.0 * std::exp(-4.0) + 0.5 * sqrt_pi * std::erfc(2.0)).epsilon(1e-7));
}

TEST_CASE("modulus-side inequality on the line") {
    const auto gauss = profiles::gaussian();
    SUBCASE("zero input") {
        const auto c = verify_thm31(0.0, profiles::zero(), profiles::constant(1.0), {2.0, 2.0, 0.5});
        CHECK(c.outcome == Outcome::pass);
        CHECK(c.ratio == 0.0);
    }
    SUBCASE("Gaussian, g = 1 and g = s^-2, is finite and stable") {
        for (double k : {0.0, 1.0})
            for (const char* g : {"constant(1)", "power(2,0)"})
                for (double q : {1.5, 2.0}) {
                    CAPTURE(k);
                    CAPTURE(g);
                    CAPTURE(q);
                    const auto c = verify_thm31(k, gauss, profiles::parse(g), {2.0, q, 0.5});
                    CHECK(c.outcome == Outcome::pass);
                    CHECK(std::isfinite(c.ratio));
                    CHECK(c.ratio > 0.0);
                    CHECK(c.stability < 0.01);
                    CHECK(std::isfinite(c.weight_class.kappa_star));
                    // A Gaussian's omega is linear at small x.
                    CHECK(c.modulus_slope == doctest::Approx(1.0).epsilon(0.02));
                }
    }
    SUBCASE("a too slowly decaying RHS is vacuous, not a failure") {
        // k = 1, q = 1, g = 1: the RHS integrand decays like s^-(1/2).
        const auto c = verify_thm31(1.0, gauss, profiles::constant(1.0), {2.0, 1.0, 0.5});
        CHECK(c.outcome == Outcome::inconclusive);
        CHECK(c.divergent);
        CHECK(c.predicted_exponent == doctest::Approx(0.5).epsilon(0.02));
        CHECK(std::isinf(c.record("x").rhs));
    }
}

TEST_CASE("smoothed-modulus inequality") {
    const auto c = verify_thm32(ModelParams::product({1.0}), profiles::gaussian(), profiles::parse("power(2,0)"),
                                {2.0, 2.0, 0.5});
    CHECK(c.outcome == Outcome::pass);
    CHECK(c.stability < 0.01);
    // omega tilde of a Gaussian is flat near 0.
    CHECK(std::abs(c.modulus_slope) < 0.02);
    const auto r = c.record("thm32");
    CHECK(r.outcome == Outcome::pass);
    CHECK(r.ratio == c.ratio);
}

TEST_CASE("integrability corollary") {
    const auto xs = geometric(1e-3, 10.0, 31);
    SUBCASE("beta > m/p: L^1") {
        const auto r = verify_cor31(ModelParams::product({0.0}), profiles::gaussian(), 0.75, 2.0, xs);
        CHECK(r.regime == 2);
        CHECK(r.pass);
        REQUIRE(r.checks.size() == 1);
        CHECK(r.checks[0].norm == doctest::Approx(std::sqrt(2.0 * std::numbers::pi)).epsilon(1e-8));
    }
    SUBCASE("beta <= m/p: L^q on the q grid") {
        const ModelParams p = ModelParams::product({0.5});
        const auto r = verify_cor31(p, profiles::gaussian(), 0.4, 2.0, xs);
        CHECK(r.regime == 1);
        CHECK(r.pass);
        CHECK(r.q_lower == doctest::Approx(4.0 / 2.8));
        REQUIRE(r.checks.size() == 6);
        CHECK(r.checks.back().q == doctest::Approx(2.0));
        for (const auto& c : r.checks) {
            CAPTURE(c.q);
            // ||e^{-s^2/2}||_q^q = d_k int e^{-q s^2/2} s ds = 2 / q.
            CHECK(c.norm == doctest::Approx(std::pow(2.0 / c.q, 1.0 / c.q)).epsilon(1e-8));
            CHECK(c.finite);
        }
    }
    SUBCASE("a smoothness beyond the profile's is rejected") {
        CHECK_THROWS_AS(verify_cor31(ModelParams::product({0.0}), profiles::gaussian(), 3.0, 2.0, xs),
                        std::invalid_argument);
    }
}
