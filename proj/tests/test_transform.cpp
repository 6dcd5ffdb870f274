#include <doctest.h>

#include <chrono>
#include <cmath>
#include <numbers>

#include "dunkl/transform.hpp"
#include "oracles.hpp"

using namespace dunkl;

TEST_CASE("Gaussian is a fixed point") {
    for (auto [d, g] : std::vector<std::pair<int, double>>{{1, 0.0}, {1, 1.0}, {2, 0.5}, {3, 1.5}}) {
        const auto p = ModelParams::radial(d, g);
        double worst = 0.0;
        for (double s = 0.0; s <= 8.0; s += 0.25)
            worst = std::max(worst, std::abs(dunkl_transform_radial(p, profiles::gaussian(), s).value - std::exp(-0.5 * s * s)));
        CAPTURE(d);
        CAPTURE(g);
        CHECK(worst < 1e-9);
    }
}

TEST_CASE("classical reductions at d = 1, gamma = 0") {
    const auto p = ModelParams::radial(1, 0.0);
    CHECK(dunkl_transform_radial(p, profiles::indicator(0.0, 1.0), 2.0).value ==
          doctest::Approx(2.0 * std::sin(2.0) / (std::sqrt(2.0 * std::numbers::pi) * 2.0)).epsilon(1e-10));
    const auto f = profiles::gaussian(0.7);
    for (double s : {0.0, 0.5, 1.3, 3.0}) {
        const double ref = oracle::classical_fourier_even([](double x) { return std::exp(-x * x / (2 * 0.49)); }, s);
        CHECK(dunkl_transform_radial(p, f, s).value == doctest::Approx(ref).epsilon(1e-9));
    }
}

TEST_CASE("exponential profile against the Hankel closed form") {
    for (auto [d, g] : std::vector<std::pair<int, double>>{{1, 0.0}, {1, 1.0}, {2, 0.5}, {3, 1.5}}) {
        const auto p = ModelParams::radial(d, g);
        for (double s : {0.0, 0.3, 2.0, 9.0, 40.0}) {
            CAPTURE(s);
            CHECK(std::abs(dunkl_transform_radial(p, profiles::exponential(1.5), s).value -
                           oracle::exponential_transform(p.bessel_order(), 1.5, s)) < 1e-9);
        }
    }
}

TEST_CASE("compact bump against the Sonine closed form") {
    for (double nu : {1.0, 3.0})
        for (auto [d, g] : std::vector<std::pair<int, double>>{{1, 0.0}, {1, 1.0}, {2, 0.5}}) {
            const auto p = ModelParams::radial(d, g);
            const auto f = profiles::bump(nu);
            double worst = 0.0;
            for (double s = 0.0; s <= 40.0; s += 0.37)
                worst = std::max(worst, std::abs(dunkl_transform_radial(p, f, s).value -
                                                 oracle::bump_transform(p.bessel_order(), nu, s)));
            CAPTURE(nu);
            CAPTURE(d);
            CAPTURE(g);
            CHECK(worst < 1e-9);
            // The reported truncation tail must dominate the true one.
            const SpectralGrid grid = SpectralGrid::build(p, f);
            const double m = p.homogeneity() - 1.0;
            const double a = grid.cutoff();
            const double part = oracle::simpson(
                [&](double x) { return std::abs(oracle::bump_transform(p.bessel_order(), nu, x)) * std::pow(x, m); }, a,
                4.0 * a, 20000);
            CHECK(part <= grid.tail_l1());
        }
}

TEST_CASE("linearity and scaling covariance") {
    const auto p = ModelParams::radial(2, 0.5);
    const auto f = profiles::gaussian(0.8);
    const auto g = profiles::exponential(2.0);
    const auto h = profiles::combination(2.0, f, -0.5, g);
    for (double s : {0.1, 1.0, 4.0}) {
        const double lhs = dunkl_transform_radial(p, h, s).value;
        const double rhs = 2.0 * dunkl_transform_radial(p, f, s).value - 0.5 * dunkl_transform_radial(p, g, s).value;
        CHECK(std::abs(lhs - rhs) < 1e-9);
        const double lam = 1.7;
        const double scaled = dunkl_transform_radial(p, profiles::dilated(g, lam), s).value;
        CHECK(scaled == doctest::Approx(std::pow(lam, p.homogeneity()) * dunkl_transform_radial(p, g, lam * s).value).epsilon(1e-8));
    }
}

TEST_CASE("roundtrip and zero input") {
    const auto p = ModelParams::radial(1, 1.0);
    const auto G = transformed_profile(p, profiles::gaussian());
    double worst = 0.0;
    for (double r = 0.0; r <= 8.0; r += 0.5)
        worst = std::max(worst, std::abs(inverse_dunkl_radial(p, G, r).value - std::exp(-0.5 * r * r)));
    CHECK(worst < 1e-6);
    CHECK(inverse_dunkl_radial(p, profiles::zero(), 1.0).value == 0.0);
}

TEST_CASE("Plancherel on a spectral grid") {
    const auto p = ModelParams::radial(1, 1.0);
    const auto grid = SpectralGrid::build(p, profiles::gaussian());
    CHECK(grid.l2_norm() == doctest::Approx(lp_norm_radial(p, profiles::gaussian(), 2.0).value).epsilon(1e-10));
    const auto serial = SpectralGrid::build(p, profiles::gaussian(), {}, Exec::serial);
    CHECK(serial.values() == grid.values());
}

TEST_CASE("Plancherel ratio over the profile suite") {
    for (auto [d, g] : std::vector<std::pair<int, double>>{{1, 0.0}, {1, 1.0}, {2, 0.5}, {3, 1.5}}) {
        const auto p = ModelParams::radial(d, g);
        for (const auto& f : {profiles::gaussian(), profiles::exponential(1.0), profiles::smoothed_indicator(1.0, 0.2)}) {
            const auto hy = hausdorff_young_ratio(p, f, 2.0);
            CAPTURE(d);
            CAPTURE(g);
            CAPTURE(f.name);
            CHECK(std::abs(hy.ratio - 1.0) < 1e-5);
        }
    }
}
