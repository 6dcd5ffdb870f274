#include "dunkl/translation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dunkl {

IntegralResult translate_radial_rank1(double k, const RadialProfile& f, double x, double y, const QuadratureSpec& spec) {
    const ModelParams params = ModelParams::product({k});
    const Rank1Kernel E(k);
    const RadialProfile Ff = transformed_profile(params, f, spec.refined(10.0));
    auto integrand = [&](double xi) {
        const double a = E.even_part(x * xi) * E.even_part(y * xi) - E.odd_part(x * xi) * E.odd_part(y * xi);
        if (a == 0.0) return 0.0;
        const double v = Ff(xi);
        return a * v * (k == 0.0 ? 1.0 : std::pow(xi, 2.0 * k));
    };
    QuadratureSpec s = spec;
    const double freq = std::abs(x) + std::abs(y);
    if (freq > 0.0) s.max_panel_width = std::numbers::pi / freq;
    IntegralResult r = integrate_semi_infinite(integrand, Ff.decay.raised(1.0, 2.0 * k), s);
    const double c = 2.0 * mehta_constant(params);
    r.value *= c;
    r.error_estimate *= c;
    r.tail_bound *= c;
    return r;
}

Rank1Translator::Rank1Translator(double k, const RadialProfile& f, SpectralOptions opts, Exec exec)
    : k_(k),
      kernel_(std::make_shared<const Rank1Kernel>(k)),
      grid_(SpectralGrid::build(ModelParams::product({k}), f, opts, exec)) {
    const double c = 2.0 * mehta_constant(grid_.params());
    const auto& xi = grid_.nodes();
    weights_.resize(xi.size());
    for (std::size_t j = 0; j < xi.size(); ++j)
        weights_[j] = c * grid_.rule_weights()[j] * grid_.values()[j] * (k == 0.0 ? 1.0 : std::pow(xi[j], 2.0 * k));
    truncation_ = c * grid_.tail_l1();
}

double Rank1Translator::operator()(double x, double y) const {
    const auto& xi = grid_.nodes();
    double sum = 0.0;
    for (std::size_t j = 0; j < xi.size(); ++j) {
        const double a = kernel_->even_part(x * xi[j]) * kernel_->even_part(y * xi[j]);
        const double b = kernel_->odd_part(x * xi[j]) * kernel_->odd_part(y * xi[j]);
        sum += weights_[j] * (a - b);
    }
    return sum;
}

Decay translated_decay(const Decay& d, double x) {
    const double ax = std::abs(x);
    Decay t = d;
    if (d.kind == Decay::Kind::compact) {
        t.rate = d.rate + ax;
        return t;
    }
    t.scale = std::numeric_limits<double>::quiet_NaN();
    t.from = std::max(d.from, 0.0) + 2.0 * ax;
    if (d.kind == Decay::Kind::gaussian) t.rate = d.rate / 4.0;
    if (d.kind == Decay::Kind::exponential) t.rate = d.rate / 2.0;
    return t;
}

ContractionResult translation_lp_ratio(double k, const RadialProfile& f, double x, double p, const SpectralOptions& opts,
                                       Exec exec) {
    if (!(p >= 1.0 && p <= 2.0)) throw std::invalid_argument("translation_lp_ratio: need 1 <= p <= 2");
    return translation_lp_ratio(Rank1Translator(k, f, opts, exec), f, x, p, exec);
}

namespace {

// Plancherel: ||tau_x f||_2^2 = int |F_k f|^2 (A^2 + B^2) dmu_k.
ContractionResult spectral_ratio(const Rank1Translator& tau, double x) {
    const SpectralGrid& grid = tau.grid();
    const Rank1Kernel& E = tau.kernel();
    const auto w = grid.measure_weights();
    double num = 0.0;
    double den = 0.0;
    for (std::size_t j = 0; j < w.size(); ++j) {
        const double v2 = grid.values()[j] * grid.values()[j];
        const double z = x * grid.nodes()[j];
        const double a = E.even_part(z);
        const double b = E.odd_part(z);
        num += w[j] * v2 * (a * a + b * b);
        den += w[j] * v2;
    }
    if (den == 0.0) throw std::domain_error("translation_lp_ratio: zero function");
    ContractionResult out;
    out.translated_norm = std::sqrt(num);
    out.norm = std::sqrt(den);
    out.ratio = out.translated_norm / out.norm;
    out.error_bound = grid.tail_l2() / den;
    return out;
}

// int_0^R (|tau f(y)|^p + |tau f(-y)|^p) y^(2k) dy on a fixed composite rule.
double translated_power_integral(const Rank1Translator& tau, std::span<const double> wa, std::span<const double> wb,
                                 double R, double p, int points, Exec exec) {
    const double k = tau.multiplicity();
    const int panels = std::max(1, static_cast<int>(std::ceil(R / 0.25)));
    const GaussRule rule = composite_gauss_legendre(0.0, R, panels, points);
    std::vector<double> plus(rule.nodes.size());
    std::vector<double> minus(rule.nodes.size());
    kernels::rank1_translate_points(exec, tau.kernel(), tau.grid().nodes(), wa, wb, rule.nodes, plus, minus);
    double sum = 0.0;
    for (std::size_t i = 0; i < plus.size(); ++i) {
        const double w = k == 0.0 ? 1.0 : std::pow(rule.nodes[i], 2.0 * k);
        sum += rule.weights[i] * w * (std::pow(std::abs(plus[i]), p) + std::pow(std::abs(minus[i]), p));
    }
    return sum;
}

}  // namespace

ContractionResult translation_lp_ratio(const Rank1Translator& tau, const RadialProfile& f, double x, double p, Exec exec) {
    if (!(p >= 1.0 && p <= 2.0)) throw std::invalid_argument("translation_lp_ratio: need 1 <= p <= 2");
    if (p == 2.0) return spectral_ratio(tau, x);
    const double k = tau.multiplicity();
    const ModelParams params = ModelParams::product({k});
    ContractionResult out;
    const Decay moved = translated_decay(f.decay, x).raised(p, 2.0 * k);
    const Rank1Kernel& E = tau.kernel();
    const auto& xi = tau.grid().nodes();
    std::vector<double> wa(xi.size());
    std::vector<double> wb(xi.size());
    for (std::size_t j = 0; j < xi.size(); ++j) {
        wa[j] = tau.weights()[j] * E.even_part(x * xi[j]);
        wb[j] = tau.weights()[j] * E.odd_part(x * xi[j]);
    }
    const double R = moved.kind == Decay::Kind::compact ? moved.rate : moved.radius_for_tail(1e-13, 1e3);
    const double fine = translated_power_integral(tau, wa, wb, R, p, 16, exec);
    const double coarse = translated_power_integral(tau, wa, wb, R, p, 12, exec);
    const double tail = moved.kind == Decay::Kind::compact ? 0.0 : moved.tail(R);
    const IntegralResult den = lp_norm_radial(params, f, p, inner_spec());
    if (den.value == 0.0) throw std::domain_error("translation_lp_ratio: zero function");
    out.translated_norm = std::pow(fine, 1.0 / p);
    out.norm = den.value;
    out.ratio = out.translated_norm / out.norm;
    // A pointwise error e moves the p-th power integral by at most about
    // p e int |tau f|^(p-1) over the support.
    const double point_err = tau.truncation_bound();
    out.error_bound = (std::abs(fine - coarse) + tail) / (p * std::max(fine, 1e-300)) + den.error_estimate / den.value +
                      point_err / std::max(out.translated_norm, 1e-300);
    return out;
}

}  // namespace dunkl
