#include <doctest.h>

#include <boost/math/special_functions/expint.hpp>

#include <cmath>
#include <random>

#include "dunkl/herz.hpp"

using namespace dunkl;

namespace {

const ModelParams line = ModelParams::product({0.0});

}  // namespace

TEST_CASE("classical Cesaro average") {
    const auto w = CesaroWeight::constant(line, 2.0);
    SUBCASE("indicator of [1, 2] at 1/2 gives ln 2") {
        CHECK(std::abs(cesaro_apply(line, w, profiles::indicator(1.0, 2.0), 0.5).value - std::log(2.0)) < 1e-12);
    }
    SUBCASE("int_x^inf f(y) / y dy at 20 points") {
        // Exponential-integral oracles: E1(x) and E1(x^2 / 2) / 2.
        const auto e = profiles::exponential(1.0);
        const auto g = profiles::gaussian();
        for (int i = 0; i < 20; ++i) {
            const double x = 0.05 * std::pow(200.0, i / 19.0);
            CAPTURE(x);
            CHECK(std::abs(cesaro_apply(line, w, e, x).value - boost::math::expint(1, x)) < 1e-8);
            CHECK(std::abs(cesaro_apply(line, w, g, x).value - 0.5 * boost::math::expint(1, 0.5 * x * x)) < 1e-8);
        }
    }
    SUBCASE("zero input and compact support") {
        CHECK(cesaro_apply(line, w, profiles::zero(), 1.0).value == 0.0);
        CHECK(cesaro_apply(line, w, profiles::indicator(0.0, 1.0), 1.5).value == 0.0);
    }
    SUBCASE("phi = 1 against a non-integrable singularity at s = 0") {
        CHECK_THROWS_AS(cesaro_apply(line, w, profiles::gaussian(), 0.0), DivergenceError);
        // t^-1 t^1 is fine.
        CHECK(cesaro_apply(line, CesaroWeight::power(line, 2.0, 1.0), profiles::gaussian(), 0.0).value ==
              doctest::Approx(1.0));
    }
}

TEST_CASE("Cesaro operator on the extremal profile") {
    // C f_eps(s) = s^-(beta + eps + m/p) int_0^min(s,1) t^(beta + eps) psi(t) dt.
    const ModelParams p = ModelParams::radial(2, 1.0);
    const double beta = 0.5, eps = 0.2, pp = 1.5, a = 2.0;
    const auto w = CesaroWeight::power(p, pp, a);
    const auto f = ExtremalFamily{eps, beta, pp, p}.profile();
    const double e = beta + eps + a - w.shift();
    for (double s : {0.3, 0.9, 1.0, 2.5, 40.0}) {
        CAPTURE(s);
        const double expect = std::pow(s, -(beta + eps + 4.0 / pp)) * std::pow(std::min(s, 1.0), e + 1.0) / (e + 1.0);
        const auto r = cesaro_apply(p, w, f, s);
        // The power tail beyond the cutoff is bounded, not added.
        CHECK(std::abs(r.value - expect) <= r.tail_bound + 1e-8 * expect);
    }
}

TEST_CASE("Herz norms") {
    SUBCASE("single shell") {
        const auto h = herz_norm(line, profiles::indicator(1.0, 2.0), {1.0, 2.0, 1.0});
        CHECK(h.value == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));
        CHECK(h.tail_residual == 0.0);
        CHECK_FALSE(h.infinite);
    }
    SUBCASE("zero") {
        const auto h = herz_norm(line, profiles::zero(), {});
        CHECK(h.value == 0.0);
        CHECK(h.extrapolated() == 0.0);
    }
    SUBCASE("absolute homogeneity") {
        const HerzParams hp{0.5, 1.5, 2.0};
        const auto f = profiles::gaussian();
        const double base = herz_norm(line, f, hp).value;
        for (double lambda : {-3.0, 0.25, 7.0})
            CHECK(herz_norm(line, profiles::scaled(f, lambda), hp).value ==
                  doctest::Approx(std::abs(lambda) * base).epsilon(1e-9));
    }
    SUBCASE("dilation by 2 shifts shells by one") {
        const ModelParams p = ModelParams::radial(2, 1.0);
        const HerzParams hp{1.0, 2.0, 2.0};
        const auto f = ExtremalFamily{0.3, hp.beta, hp.p, p}.profile();
        const auto h1 = herz_norm(p, f, hp);
        const auto h2 = herz_norm(p, profiles::dilated(f, 2.0), hp);
        const double factor = std::pow(2.0, hp.beta + p.homogeneity() / hp.p);
        CHECK(h2.extrapolated() == doctest::Approx(factor * h1.extrapolated()).epsilon(1e-7));
        for (int i = 1; i < int(h1.shell_norms.size()); ++i)
            CHECK(h2.shell_norms[i] == doctest::Approx(std::pow(2.0, p.homogeneity() / hp.p) * h1.shell_norms[i - 1])
                                           .epsilon(1e-8));
    }
    SUBCASE("terms that do not decay") {
        // r^-1 on (1, inf) in L^2 with beta = 1: shell terms 2^(j/2) grow.
        const auto h = herz_norm(line, profiles::power(1.0, 1.0), {1.0, 2.0, 2.0});
        CHECK(h.infinite);
        CHECK(std::isinf(h.tail_residual));
    }
    SUBCASE("invalid parameters") {
        CHECK_THROWS(herz_norm(line, profiles::zero(), {0.0, 2.0, 2.0}));
        CHECK_THROWS(herz_norm(line, profiles::zero(), {1.0, 1.0, 2.0}));
    }
}

TEST_CASE("extremal family") {
    const HerzParams hp{1.0, 2.0, 2.0};
    const ExtremalFamily fam{0.5, 1.0, 2.0, line};
    // C = (2^((beta+eps)p) - 1) / ((beta+eps)p) * d_k with d_k = 2.
    CHECK(fam.C() == doctest::Approx((std::pow(2.0, 3.0) - 1.0) / 3.0 * 2.0));
    CHECK(fam.shell_norm(0) == 0.0);
    CHECK(fam.shell_norm(-4) == 0.0);
    CHECK(fam.shell_norm(3) == doctest::Approx(std::sqrt(fam.C()) * std::pow(2.0, -4.5)));

    const auto e = extremal_herz_norm(line, 0.5, hp);
    // eps = 0.5, q = 2: the geometric factor is 1.
    CHECK(e.closed_form == doctest::Approx(std::sqrt(fam.C())).epsilon(1e-14));
    CHECK(e.printed_variant == doctest::Approx(std::sqrt(fam.C()) * 0.5 / std::sqrt(0.5)).epsilon(1e-14));
    CHECK(e.relative_error < 5e-3);
    CHECK(std::abs(e.quadrature.value / e.closed_form - 1.0) < 5e-3);
    CHECK(std::abs(e.geometric_sum / e.closed_form - 1.0) < 1e-9);
    // Small eps leaves 2^(-40 eps q) of the sum beyond 40 shells; the
    // geometric continuation recovers it.
    for (double eps : {0.1, 0.3, 0.9}) {
        const auto x = extremal_herz_norm(line, eps, {0.5, 1.5, 1.0});
        CHECK(x.quadrature.extrapolated() == doctest::Approx(x.closed_form).epsilon(1e-6));
    }
}

TEST_CASE("condition integral and constants") {
    const HerzParams hp{1.0, 2.0, 2.0};
    CHECK(cesaro_condition_integral(CesaroWeight::constant(line, 2.0), hp).value == doctest::Approx(2.0 / 3.0));
    // L(0.1) = int_0^1 t^(1.1) t^(-1/2) dt; tends to I as eps -> 0.
    CHECK(cesaro_condition_integral(CesaroWeight::constant(line, 2.0), hp, 0.1).value ==
          doctest::Approx(1.0 / 1.6).epsilon(1e-10));
    const ModelParams p = ModelParams::radial(2, 1.0);
    for (double a : {2.0, 3.5}) {
        const auto w = CesaroWeight::power(p, 1.5, a);
        const HerzParams h{0.5, 1.5, 1.0};
        CHECK(cesaro_condition_integral(w, h).value ==
              doctest::Approx(1.0 / (0.5 + a - 4.0 / 3.0 + 1.0)).epsilon(1e-10));
    }
    // beta + a - shift < -1: divergent.
    CHECK(cesaro_condition_integral(CesaroWeight::power(p, 2.0, -0.5), {0.0001, 2.0, 2.0}).infinite);

    CHECK(upper_constant({1.0, 2.0, 1.0}) == doctest::Approx(3.0));
    CHECK(upper_constant({1.0, 2.0, 2.0}) == doctest::Approx(4.5));
    CHECK(upper_constant({1e-12, 2.0, 2.0}) == doctest::Approx(3.0));
}

TEST_CASE("weights and concavity certificate") {
    // d = 1, p = 2: psi = t^(a - 1/2), concave for a in [1/2, 3/2].
    CHECK(CesaroWeight::power(line, 2.0, 1.0).concavity().concave);
    CHECK(CesaroWeight::power(line, 2.0, 1.5).concavity().concave);
    CHECK_FALSE(CesaroWeight::power(line, 2.0, 2.5).concavity().concave);
    CHECK_FALSE(CesaroWeight::constant(line, 2.0).concavity().concave);  // psi = t^-1/2 is convex

    const auto w = CesaroWeight::parse("poly(0,1,0.5)", line, 2.0);
    CHECK(w.phi(0.5) == doctest::Approx(0.625));
    CHECK(w.order_at_zero() == 1.0);
    CHECK(CesaroWeight::parse("const(2)", line, 2.0).phi(0.3) == 2.0);
    CHECK_THROWS_AS(CesaroWeight::parse("cosine", line, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(CesaroWeight::parse("poly(-1)", line, 2.0), std::invalid_argument);
}

TEST_CASE("monotone in phi and linear in f") {
    const auto small = CesaroWeight::power(line, 2.0, 2.0);
    const auto big = CesaroWeight::power(line, 2.0, 1.0);
    const auto f = profiles::gaussian(0.7);
    const auto g = profiles::exponential(2.0);
    for (double s : {0.1, 1.0, 3.0}) {
        CHECK(cesaro_apply(line, small, f, s).value <= cesaro_apply(line, big, f, s).value);
        const double lhs = cesaro_apply(line, big, profiles::combination(2.0, f, -3.0, g), s).value;
        const double rhs = 2.0 * cesaro_apply(line, big, f, s).value - 3.0 * cesaro_apply(line, big, g, s).value;
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    }
}

TEST_CASE("sandwich on a small grid") {
    const HerzParams hp{1.0, 2.0, 2.0};
    const auto w = CesaroWeight::power(line, 2.0, 1.0);
    std::vector<RadialProfile> fam{profiles::indicator(1.0, 2.0), profiles::gaussian()};
    const auto rep = sandwich_verify(line, w, hp, fam);
    CHECK(rep.overall() == Outcome::pass);
    CHECK(rep.scenario == "thm41");

    const std::vector<double> eps{0.4, 0.2, 0.1, 0.05};
    const auto lp = operator_norm_lower_probe(line, w, hp, eps);
    CHECK(lp.pass);
    // I = int_0^1 t^(1 + 1/2) dt.
    CHECK(lp.I == doctest::Approx(0.4));
    CHECK(std::abs(lp.L0 - lp.I) < 1e-2 * lp.I);
    for (const auto& pt : lp.points) CHECK(pt.R >= pt.L * (1.0 - 1e-3));

    // Without a concavity certificate the upper bound is only reported.
    const auto loose = sandwich_verify(line, CesaroWeight::power(line, 2.0, 3.0), hp, fam);
    bool any_inconclusive = false;
    for (const auto& c : loose.checks) any_inconclusive |= c.outcome == Outcome::inconclusive;
    CHECK(any_inconclusive);
}

TEST_CASE("elementary inequalities") {
    SUBCASE("Jensen") {
        PiecewiseLinear f{{0.0, 1.0}, {0.0, 1.0}};
        const auto s = lemma41_sample(f, 2.0);
        CHECK(s.lhs == doctest::Approx(0.25));
        CHECK(s.rhs == doctest::Approx(1.0 / 3.0));
        CHECK(s.pass);
        PiecewiseLinear c{{0.0, 1.0}, {2.0, 2.0}};
        const auto e = lemma41_sample(c, 3.0);
        CHECK(e.lhs == doctest::Approx(e.rhs));
        CHECK(e.pass);
    }
    SUBCASE("concave reverse inequality is tight at f(t) = t") {
        PiecewiseLinear f{{0.0, 1.0}, {0.0, 1.0}};
        for (double q : {1.0, 2.0, 3.5}) {
            const auto s = lemma42_sample(f, q);
            CAPTURE(q);
            CHECK(std::abs(s.lhs - s.rhs) < 1e-8);
            CHECK(s.pass);
        }
        PiecewiseLinear one{{0.0, 1.0}, {1.0, 1.0}};
        const auto s = lemma42_sample(one, 2.0);
        CHECK(s.rhs == doctest::Approx(1.5 / std::sqrt(2.0)));
    }
    SUBCASE("random samples") {
        std::mt19937_64 rng(7);
        std::vector<PiecewiseLinear> a, b;
        for (int i = 0; i < 200; ++i) a.push_back(random_piecewise_linear(rng));
        for (int i = 0; i < 200; ++i) b.push_back(random_concave(rng));
        for (double q : {1.0, 2.0, 5.0}) {
            CHECK(lemma41_check(a, q).failures == 0);
            CHECK(lemma42_check(b, q).failures == 0);
        }
        for (const auto& f : b) CHECK(midpoint_concave(f, 0.0, 1.0));
    }
    SUBCASE("non-concave samples are rejected") {
        std::vector<PiecewiseLinear> v{{{0.0, 0.5, 1.0}, {1.0, 0.0, 1.0}}};
        CHECK_THROWS_AS(lemma42_check(v, 2.0), std::invalid_argument);
    }
}
