#include "dunkl/transform.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dunkl/special_functions.hpp"

namespace dunkl {

QuadratureSpec inner_spec() {
    QuadratureSpec s;
    s.rel_tol = 1e-10;
    s.abs_tol = 1e-13;
    return s;
}

namespace {

// c d_k int_0^inf G(r) j_alpha(r s) r^m dr, shared by both directions.
IntegralResult hankel_type(const ModelParams& params, const RadialProfile& g, double s, double constant,
                           QuadratureSpec spec) {
    if (!(s >= 0.0) || !std::isfinite(s)) throw std::domain_error("transform argument must be finite and >= 0");
    const double m = params.homogeneity() - 1.0;
    const auto bessel = shared_bessel(params.bessel_order());
    const NormalizedBessel& j = *bessel;
    auto integrand = [&g, &j, s, m](double r) {
        const double v = g(r);
        if (v == 0.0) return 0.0;
        return v * j(r * s) * (m == 0.0 ? 1.0 : std::pow(r, m));
    };
    Decay decay = g.decay.raised(1.0, m);
    if (s > 0.0) {
        const double cap = std::numbers::pi / s;
        spec.max_panel_width = spec.max_panel_width > 0.0 ? std::min(spec.max_panel_width, cap) : cap;
        // Leave room for the half-period panels on top of the adaptive budget.
        const double reach = decay.kind == Decay::Kind::compact ? decay.rate : decay.radius_for_tail(spec.abs_tol, spec.max_radius);
        const double pieces = std::ceil(reach / spec.max_panel_width);
        if (pieces < 1e7) spec.max_panels = std::max(spec.max_panels, 2 * static_cast<int>(pieces) + 1000);
    }
    IntegralResult r = integrate_semi_infinite(integrand, decay, spec, 0.0, g.breakpoints);
    const double c = constant * sphere_weight_dk(params);
    r.value *= c;
    r.error_estimate *= c;
    r.tail_bound *= c;
    return r;
}

}  // namespace

IntegralResult dunkl_transform_radial(const ModelParams& params, const RadialProfile& f, double s,
                                      const QuadratureSpec& spec) {
    return hankel_type(params, f, s, mehta_constant(params), spec);
}

double inverse_normalization(const ModelParams& params) { return mehta_constant(params); }

IntegralResult inverse_dunkl_radial(const ModelParams& params, const RadialProfile& g, double r,
                                    const QuadratureSpec& spec) {
    return hankel_type(params, g, r, inverse_normalization(params), spec);
}

RadialProfile transformed_profile(const ModelParams& params, const RadialProfile& f, const QuadratureSpec& spec) {
    RadialProfile t;
    t.name = "F_k[" + f.name + "]";
    t.eval = [params, f, spec](double s) { return dunkl_transform_radial(params, f, s, spec).value; };
    t.decay = f.spectral_decay(params.bessel_order());
    // Transforming back recovers f, so f's own envelope is the transform decay.
    t.transform_decay = [d = f.decay](double) { return d; };
    return t;
}

HausdorffYoung hausdorff_young_ratio(const ModelParams& params, const RadialProfile& f, double p,
                                     const QuadratureSpec& spec) {
    if (!(p > 1.0 && p <= 2.0)) throw std::invalid_argument("hausdorff_young_ratio: need 1 < p <= 2");
    const double pc = p / (p - 1.0);
    HausdorffYoung out;
    const IntegralResult den = lp_norm_radial(params, f, p, spec);
    if (den.value == 0.0) throw std::domain_error("hausdorff_young_ratio: zero function");
    QuadratureSpec inner = spec.refined(100.0);
    // The transform of a profile with a kink decays algebraically; an absolute
    // target tied to the size of the answer keeps the outer cutoff moderate.
    QuadratureSpec outer = spec;
    outer.abs_tol = std::max(spec.abs_tol, spec.rel_tol * 0.1 * std::pow(den.value, pc));
    const IntegralResult num = lp_norm_radial(params, transformed_profile(params, f, inner), pc, outer);
    out.norm = den.value;
    out.transform_norm = num.value;
    out.ratio = num.value / den.value;
    out.error_estimate = out.ratio * (num.error_estimate / num.value + den.error_estimate / den.value);
    out.tail_bound = out.ratio * (num.tail_bound / num.value + den.tail_bound / den.value);
    return out;
}

Decay SpectralGrid::envelope(const ModelParams& params, const RadialProfile& f, const SpectralOptions& opts) {
    Decay env = f.spectral_decay(params.bessel_order());
    if (env.kind != Decay::Kind::compact && !std::isfinite(env.scale)) {
        // Fit the envelope scale from transform samples on [from, 2 from].
        const double lo = std::max(env.from, 1.0);
        double c = 0.0;
        for (int i = 0; i <= 8; ++i) {
            const double s = lo * (1.0 + i / 8.0);
            const double e = env.envelope(s);
            if (e > 0.0) c = std::max(c, std::abs(dunkl_transform_radial(params, f, s, opts.quad).value) / e);
        }
        env.scale = 2.0 * c;
    }
    return env;
}

double SpectralGrid::natural_cutoff(const ModelParams& params, const RadialProfile& f, const SpectralOptions& opts) {
    const Decay lp = envelope(params, f, opts).raised(opts.tail_power, params.homogeneity() - 1.0);
    return std::max(lp.radius_for_tail(opts.tail_tol, opts.max_cutoff), 1.0);
}

SpectralGrid SpectralGrid::build(const ModelParams& params, const RadialProfile& f, const SpectralOptions& opts,
                                 Exec exec) {
    if (!(opts.panel_width > 0.0) || opts.points_per_panel < 2) throw std::invalid_argument("SpectralGrid: bad panel layout");
    if (opts.tail_power != 1 && opts.tail_power != 2) throw std::invalid_argument("SpectralGrid: tail_power must be 1 or 2");
    SpectralGrid grid(params);
    const double m = params.homogeneity() - 1.0;
    const Decay env = envelope(params, f, opts);
    const Decay l1 = env.raised(1.0, m);
    const Decay l2 = env.raised(2.0, m);
    double cutoff = opts.cutoff;
    if (cutoff <= 0.0) cutoff = std::max((opts.tail_power == 2 ? l2 : l1).radius_for_tail(opts.tail_tol, opts.max_cutoff), 1.0);
    grid.cutoff_ = cutoff;
    grid.tail_l1_ = env.kind == Decay::Kind::compact ? 0.0 : l1.tail(cutoff);
    grid.tail_l2_ = env.kind == Decay::Kind::compact ? 0.0 : l2.tail(cutoff);

    const double width = std::min(opts.panel_width, 8.0 / std::max(opts.radius_hint, 1e-300));
    const int panels = std::max(1, static_cast<int>(std::ceil(cutoff / width)));
    GaussRule rule = composite_gauss_legendre(0.0, cutoff, panels, opts.points_per_panel);
    grid.nodes_ = std::move(rule.nodes);
    grid.weights_ = std::move(rule.weights);
    const auto& nodes = grid.nodes_;
    grid.values_ = kernels::map_indexed(exec, nodes.size(), [&](std::size_t i) {
        return dunkl_transform_radial(params, f, nodes[i], opts.quad).value;
    });
    return grid;
}

std::vector<double> SpectralGrid::measure_weights() const {
    const double m = params_.homogeneity() - 1.0;
    const double dk = sphere_weight_dk(params_);
    std::vector<double> w(nodes_.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = dk * weights_[i] * (m == 0.0 ? 1.0 : std::pow(nodes_[i], m));
    return w;
}

double SpectralGrid::l2_norm() const {
    const auto w = measure_weights();
    double s = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * values_[i] * values_[i];
    return std::sqrt(s);
}

}  // namespace dunkl
