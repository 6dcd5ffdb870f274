#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dunkl/modulus.hpp"
#include "oracles.hpp"

using namespace dunkl;

namespace {

// Classical ||f(. + t) - f||_p over the line for the unit Gaussian.
double classical_shift_norm(double t, double p) {
    auto f = [](double y) { return std::exp(-0.5 * y * y); };
    const double L = 12.0 + t;
    return std::pow(oracle::simpson([&](double y) { return std::pow(std::abs(f(y + t) - f(y)), p); }, -L, L, 40000), 1.0 / p);
}

// ||c exp(-r^2/(2 s2))||_{p,k} with d_k from the caller.
double gaussian_norm(double dk, double m, double c, double s2, double p) {
    return c * std::pow(dk * 0.5 * std::tgamma(0.5 * (m + 1.0)) * std::pow(2.0 * s2 / p, 0.5 * (m + 1.0)), 1.0 / p);
}

}  // namespace

TEST_CASE("lattice supremum of a known function") {
    auto h = [](std::span<const double> t) {
        std::vector<double> v(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) v[i] = std::sin(t[i]);
        return v;
    };
    const LatticeSupremum sup(h, 0.1, 10.0);
    double prev = 0.0;
    for (double x = 0.1; x <= 10.0; x *= 1.07) {
        const double exact = x < std::numbers::pi / 2 ? std::sin(x) : 1.0;
        CAPTURE(x);
        CHECK(std::abs(sup(x) - exact) < 1e-9);
        CHECK(sup(x) >= prev);
        prev = sup(x);
    }
    CHECK_THROWS_AS(sup(0.05), std::out_of_range);

    // A bump strictly inside one cell is found by the golden search.
    auto spike = [](std::span<const double> t) {
        std::vector<double> v(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) v[i] = std::exp(-std::pow((t[i] - 0.5) / 0.004, 2));
        return v;
    };
    const LatticeSupremum s2(spike, 1.0, 1.0, 8);
    CHECK(s2.interior_cells() >= 1);
    CHECK(std::abs(s2(1.0) - 1.0) < 1e-9);
}

TEST_CASE("omega at k = 0 reduces to the classical modulus") {
    const auto f = profiles::gaussian();
    for (double p : {2.0, 1.5}) {
        const ContinuityModulus w(0.0, f, p, 0.05, 3.0);
        for (double t : {0.05, 0.3, 1.0, 3.0}) {
            CAPTURE(p);
            CAPTURE(t);
            CHECK(std::abs(w.defect(t) - 2.0 * classical_shift_norm(t, p)) < 1e-6);
        }
        // The classical defect grows on (0, 3], so the supremum is its last value.
        CHECK(std::abs(w(3.0) - 2.0 * classical_shift_norm(3.0, p)) < 1e-6);
    }
}

TEST_CASE("omega is small near zero for a smooth compact profile") {
    for (double k : {0.0, 1.0})
        for (double p : {2.0, 1.5}) {
            const ContinuityModulus w(k, profiles::bump(6.0), p, 1e-3, 2.0);
            CAPTURE(k);
            CAPTURE(p);
            CHECK(w(1e-3) < 1e-2 * w.norm());
            CHECK(w.truncation_bound() < 1e-3 * w.norm());
        }
}

TEST_CASE("moduli are nondecreasing") {
    std::vector<double> xs;
    for (int i = 0; i < 16; ++i) xs.push_back(0.01 * std::pow(300.0, i / 15.0));
    for (const auto& f : {profiles::gaussian(), profiles::exponential(1.0), profiles::smoothed_indicator(1.0, 0.2)}) {
        ModulusOptions o;
        o.spectral.max_cutoff = 50.0;
        const ContinuityModulus w(1.0, f, 2.0, xs.front(), xs.back(), o);
        const SmoothedModulus wt(ModelParams::product({1.0}), f, 2.0, TestBump::gaussian(), xs.front(), xs.back(), o);
        CHECK(w.truncation_bound() < 1e-3 * w.norm());
        const auto a = w(xs);
        const auto b = wt(xs);
        for (std::size_t i = 1; i < xs.size(); ++i) {
            CAPTURE(f.name);
            CHECK(a[i] >= a[i - 1]);
            CHECK(b[i] >= b[i - 1]);
        }
    }
}

TEST_CASE("test bump and dilation identity") {
    const TestBump bump = TestBump::gaussian();
    const std::vector<double> s{0.0, 0.3, 1.0, 2.5, 6.0};
    for (auto [d, g] : std::vector<std::pair<int, double>>{{1, 0.0}, {1, 1.0}, {2, 0.5}}) {
        const auto params = ModelParams::radial(d, g);
        CHECK(bump.validate(params));
        for (double t : {0.25, 1.0, 3.0}) CHECK(dilation_identity_error(params, bump, t, s) < 1e-6);
    }
}

TEST_CASE("omega tilde of a Gaussian against the closed form") {
    // f * phi_t has transform exp(-(1 + t^2) xi^2 / 2): a Gaussian of variance 1 + t^2
    // with amplitude (1 + t^2)^-(alpha + 1).
    for (auto [d, g] : std::vector<std::pair<int, double>>{{1, 0.0}, {2, 0.5}}) {
        const auto params = ModelParams::radial(d, g);
        const double dk = derived_constants(params).d_k;
        const double m = params.homogeneity() - 1.0;
        for (double p : {2.0, 1.5}) {
            ModulusOptions o;
            o.per_decade = 4;  // only the inner norms are checked here
            const SmoothedModulus wt(params, profiles::gaussian(), p, TestBump::gaussian(), 0.1, 2.0, o);
            for (double t : {0.1, 0.7, 2.0}) {
                const double s2 = 1.0 + t * t;
                const double exact = gaussian_norm(dk, m, std::pow(s2, -(params.bessel_order() + 1.0)), s2, p);
                CAPTURE(d);
                CAPTURE(p);
                CAPTURE(t);
                CHECK(std::abs(wt.norms(std::span<const double>(&t, 1))[0] - exact) < 1e-8);
            }
        }
    }
    CHECK(modulus_tilde(ModelParams::radial(1, 0.0), profiles::zero(), 1.0, 2.0, TestBump::gaussian()) == 0.0);
}

TEST_CASE("convolution") {
    SUBCASE("Gaussians at k = 0 against the classical integral") {
        const auto params = ModelParams::radial(1, 0.0);
        const auto c = convolve_k(params, profiles::gaussian(1.0), profiles::gaussian(0.5));
        // Spectral convention: (2 pi)^-1/2 times the classical convolution.
        for (double r : {0.0, 0.4, 1.3, 3.0}) {
            const double classical = oracle::simpson(
                [&](double y) { return std::exp(-0.5 * (r - y) * (r - y)) * std::exp(-2.0 * y * y); }, -15.0, 15.0, 6000);
            CAPTURE(r);
            CHECK(std::abs(c.profile(r) - classical / std::sqrt(2.0 * std::numbers::pi)) < 1e-9);
        }
    }
    SUBCASE("transform identity and Young bound") {
        for (auto [d, g] : std::vector<std::pair<int, double>>{{1, 1.0}, {2, 0.5}}) {
            const auto params = ModelParams::radial(d, g);
            for (const auto& f : {profiles::gaussian(), profiles::exponential(1.0), profiles::smoothed_indicator(1.0, 0.2)}) {
                const auto gg = profiles::gaussian(0.7);
                const auto c = convolve_k(params, f, gg);
                double worst = 0.0;
                for (double s : {0.0, 0.5, 1.5, 3.0}) {
                    const double lhs = dunkl_transform_radial(params, c.profile, s, inner_spec()).value;
                    const double rhs = dunkl_transform_radial(params, f, s, inner_spec()).value *
                                       dunkl_transform_radial(params, gg, s, inner_spec()).value;
                    worst = std::max(worst, std::abs(lhs - rhs));
                }
                CAPTURE(f.name);
                CAPTURE(d);
                CHECK(worst < 1e-6);
                const double young = lp_norm_radial(params, c.profile, 2.0).value /
                                     (lp_norm_radial(params, f, 2.0).value * lp_norm_radial(params, gg, 1.0).value);
                CHECK(young <= 1.0 + 1e-6);
            }
        }
    }
}
