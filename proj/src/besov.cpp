#include "dunkl/besov.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dunkl {

BesovResult besov_seminorm(double k, const RadialProfile& f, double beta, double p, std::span<const double> x_grid,
                           const ModulusOptions& opts, Exec exec) {
    if (!(beta > 0.0)) throw std::invalid_argument("besov_seminorm: beta must be positive");
    if (x_grid.empty()) throw std::invalid_argument("besov_seminorm: empty grid");
    std::vector<double> xs(x_grid.begin(), x_grid.end());
    std::sort(xs.begin(), xs.end());
    if (!(xs.front() > 0.0)) throw std::invalid_argument("besov_seminorm: grid must be positive");

    BesovResult out;
    const double lo = xs.front() / 2.0;
    const ContinuityModulus omega(k, f, p, lo, xs.back(), opts, exec);
    if (omega.norm() == 0.0) {
        out.x = xs;
        out.ratio.assign(xs.size(), 0.0);
        out.argmax = xs.front();
        return out;
    }
    const std::vector<double> w = omega(xs);
    out.x = xs;
    out.ratio.resize(xs.size());
    std::size_t best = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out.ratio[i] = w[i] / std::pow(xs[i], beta);
        if (out.ratio[i] > out.ratio[best]) best = i;
    }
    out.value = out.ratio[best];
    out.argmax = xs[best];
    out.truncation_bound = omega.truncation_bound();

    // Slope of log omega over the lowest decade of the grid.
    const double x0 = xs.front();
    const double x1 = std::min(10.0 * x0, xs.back());
    const double w0 = omega(x0);
    const double w1 = omega(x1);
    if (w0 > 0.0 && w1 > 0.0 && x1 > x0) out.small_x_slope = std::log(w1 / w0) / std::log(x1 / x0);
    const double w_lo = omega(lo);
    if (best == 0 && out.small_x_slope < beta - 0.05) {
        const double deeper = w_lo / std::pow(lo, beta);
        out.infinite = deeper > out.value;
    }
    if (out.infinite) out.value = std::numeric_limits<double>::infinity();
    return out;
}

ClassGReport class_G_check(const WeightClassSpec& spec, const ModelParams& params, int eta_max,
                           const QuadratureSpec& quad) {
    const double theta = spec.theta;
    if (!(theta >= 1.0)) throw std::invalid_argument("class_G_check: theta must be >= 1");
    if (!(spec.kappa >= 1.0)) throw std::invalid_argument("class_G_check: kappa must be >= 1");
    if (eta_max < 1) throw std::invalid_argument("class_G_check: need eta_max >= 1");
    const double m = params.homogeneity();
    const double dk = sphere_weight_dk(params);
    const bool sup_norm = std::isinf(theta);

    auto shell = [&](double a, double b, double power) {
        auto integrand = [&](double r) { return std::pow(std::abs(spec.g(r)), power) * std::pow(r, m - 1.0); };
        return dk * integrate_finite(integrand, a, b, quad, spec.g.breakpoints).value;
    };
    // sup of g on [a, b] by dense sampling, ends included.
    auto shell_sup = [&](double a, double b) {
        constexpr int n = 512;
        double best = 0.0;
        for (int i = 0; i <= n; ++i) best = std::max(best, std::abs(spec.g(a + (b - a) * i / n)));
        return best;
    };

    ClassGReport out;
    for (int eta = 1; eta <= eta_max; ++eta) {
        const double a = std::ldexp(1.0, eta);
        const double b = std::ldexp(1.0, eta + 1);
        ShellCheck s;
        s.eta = eta;
        s.lhs = sup_norm ? shell_sup(a, b) : std::pow(shell(a, b, theta), 1.0 / theta);
        const double exponent = sup_norm ? -m : (1.0 - theta) * m / theta;
        s.rhs_factor = std::pow(2.0, eta * exponent) * shell(a / 2.0, a, 1.0);
        if (!std::isfinite(s.lhs) || !std::isfinite(s.rhs_factor)) throw DivergenceError("class_G_check: shell integral diverges");
        s.kappa_needed = s.rhs_factor > 0.0 ? s.lhs / s.rhs_factor : (s.lhs > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
        s.pass = s.lhs <= spec.kappa * s.rhs_factor * (1.0 + 1e-12);
        out.kappa_star = std::max(out.kappa_star, s.kappa_needed);
        out.shells.push_back(s);
    }
    out.pass = std::all_of(out.shells.begin(), out.shells.end(), [](const ShellCheck& s) { return s.pass; });
    const double inv = sup_norm ? 0.0 : 1.0 / theta;
    out.printed_bound = std::pow(2.0, m) * std::pow((std::pow(2.0, m) - 1.0) / m, inv - 1.0);
    out.adjusted_bound = out.printed_bound * std::pow(dk, inv - 1.0);
    return out;
}

}  // namespace dunkl
