#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dunkl/geometry.hpp"
#include "dunkl/profile.hpp"

using namespace dunkl;

TEST_CASE("Mehta constant closed form vs quadrature") {
    for (auto k : std::vector<std::vector<double>>{{0.0}, {0.5}, {1.0}, {0.25, 0.75}, {0.0, 1.0, 2.0}, {0.1, 0.1}}) {
        const auto p = ModelParams::product(k);
        CHECK(mehta_constant_quadrature(p) == doctest::Approx(mehta_constant(p)).epsilon(1e-10));
    }
    // k = 0 in d dimensions: (2 pi)^{-d/2}.
    CHECK(mehta_constant(ModelParams::radial(2, 0.0)) == doctest::Approx(0.5 / std::numbers::pi).epsilon(1e-14));
}

TEST_CASE("sphere weight d_k") {
    CHECK(sphere_weight_dk(ModelParams::radial(2, 0.0)) == doctest::Approx(2.0 * std::numbers::pi).epsilon(1e-14));
    CHECK(sphere_weight_dk(ModelParams::radial(1, 0.0)) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(sphere_weight_dk(ModelParams::product({1.0})) == doctest::Approx(2.0).epsilon(1e-14));
    for (auto k : std::vector<std::vector<double>>{{0.3}, {0.5, 0.5}, {0.0, 1.0, 2.5}, {0.2, 0.2, 0.2, 0.2}}) {
        const auto p = ModelParams::product(k);
        CHECK(sphere_weight_dk(p) == doctest::Approx(sphere_weight_direct(p)).epsilon(1e-12));
    }
}

TEST_CASE("gamma-only models pin the equal split") {
    const auto p = ModelParams::radial(2, 1.0);
    CHECK_FALSE(p.has_coordinate_weights());
    CHECK(p.multiplicities() == std::vector<double>{0.5, 0.5});
    const double x[] = {1.0, 2.0};
    CHECK_THROWS_AS(weight_wk(p, x), std::logic_error);
    CHECK(weight_wk(ModelParams::product({0.5, 1.0}), x) == doctest::Approx(4.0));
    CHECK_THROWS(ModelParams::radial(0, 1.0));
    CHECK_THROWS(ModelParams::product({-0.1}));
}

TEST_CASE("radial L^p norms") {
    // d = 1, gamma = 0, Gaussian: ||f||_2^2 = 2 int e^{-r^2} = sqrt(pi).
    const auto r = lp_norm_radial(ModelParams::radial(1, 0.0), profiles::gaussian(), 2.0);
    CHECK(r.value == doctest::Approx(std::pow(std::numbers::pi, 0.25)).epsilon(1e-10));
    // Indicator of the unit ball in d = 2: area pi.
    CHECK(lp_norm_radial(ModelParams::radial(2, 0.0), profiles::indicator(0.0, 1.0), 1.0).value ==
          doctest::Approx(std::numbers::pi).epsilon(1e-12));
    CHECK_THROWS_AS(lp_norm_radial(ModelParams::radial(1, 0.0), profiles::power(1.0, 1.0), 1.0), DivergenceError);
}
