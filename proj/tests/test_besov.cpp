#include <doctest.h>

#include <cmath>

#include "dunkl/besov.hpp"

using namespace dunkl;

namespace {

std::vector<double> geometric(double a, double b, int n) {
    std::vector<double> x;
    for (int i = 0; i < n; ++i) x.push_back(a * std::pow(b / a, double(i) / (n - 1)));
    return x;
}

}  // namespace

TEST_CASE("Besov seminorm") {
    SUBCASE("Gaussian is finite and grid-stable") {
        const auto r1 = besov_seminorm(1.0, profiles::gaussian(), 0.5, 2.0, geometric(1e-3, 4.0, 16));
        const auto r2 = besov_seminorm(1.0, profiles::gaussian(), 0.5, 2.0, geometric(1e-3, 4.0, 61));
        CHECK_FALSE(r1.infinite);
        CHECK(std::isfinite(r1.value));
        CHECK(std::abs(r1.value / r2.value - 1.0) < 1e-2);
        CHECK(r1.small_x_slope == doctest::Approx(1.0).epsilon(0.02));
        // Regression pin.
        CHECK(r2.value == doctest::Approx(1.0966).epsilon(1e-4));
    }
    SUBCASE("zero profile") {
        const auto r = besov_seminorm(1.0, profiles::zero(), 0.5, 2.0, geometric(1e-3, 1.0, 8));
        CHECK(r.value == 0.0);
        CHECK_FALSE(r.infinite);
    }
    SUBCASE("a jump caps the smoothness at 1/p") {
        // Above x ~ 1 / cutoff the spectral omega resolves the jump.
        for (double k : {0.0, 1.0}) {
            const auto r = besov_seminorm(k, profiles::indicator(0.0, 1.0), 1.5, 2.0, geometric(0.05, 1.0, 16));
            CAPTURE(k);
            CHECK(r.infinite);
            CHECK(r.small_x_slope == doctest::Approx(0.5).epsilon(0.06));
            CHECK(r.argmax == doctest::Approx(0.05));
        }
    }
}

TEST_CASE("class G_theta shell check") {
    const auto line = ModelParams::radial(1, 0.0);
    SUBCASE("g = 1 reproduces the direct shell constant") {
        for (double theta : {1.0, 2.0, 4.0, double(INFINITY)}) {
            const ClassGReport r = class_G_check({profiles::constant(1.0), theta, 1.0}, line, 8);
            const double inv = std::isinf(theta) ? 0.0 : 1.0 / theta;
            CAPTURE(theta);
            CHECK(r.kappa_star == doctest::Approx(std::pow(2.0, inv)).epsilon(1e-10));
            CHECK(r.adjusted_bound == doctest::Approx(r.kappa_star).epsilon(1e-10));
            CHECK(r.printed_bound == doctest::Approx(2.0));
            const ClassGReport again = class_G_check({profiles::constant(1.0), theta, r.kappa_star * (1 + 1e-9)}, line, 8);
            CHECK(again.pass);
        }
        // (d, gamma) = (2, 1): m = 4, d_k = pi / 2 under the equal split.
        const auto plane = ModelParams::radial(2, 1.0);
        const ClassGReport r = class_G_check({profiles::constant(1.0), 2.0, 1.0}, plane, 6);
        CHECK(r.kappa_star == doctest::Approx(r.adjusted_bound).epsilon(1e-10));
    }
    SUBCASE("theta = 1 is the consecutive shell ratio") {
        const auto g = profiles::power(1.0, 0.0);
        const ClassGReport r = class_G_check({g, 1.0, 1.0}, line, 6);
        for (const auto& s : r.shells) CHECK(s.kappa_needed == doctest::Approx(1.0).epsilon(1e-10));
        const auto g2 = profiles::power(2.0, 0.0);
        const ClassGReport r2 = class_G_check({g2, 1.0, 1.0}, ModelParams::radial(1, 1.0), 6);
        // int r^-2 r^2 over doubling shells: ratio 2.
        CHECK(r2.kappa_star == doctest::Approx(2.0).epsilon(1e-10));
        CHECK_FALSE(r2.pass);
    }
}
