#include "dunkl/modulus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dunkl/special_functions.hpp"

namespace dunkl {

// ---------------------------------------------------------------------------
// LatticeSupremum

LatticeSupremum::LatticeSupremum(Batch h, double x_min, double x_max, int per_decade, double floor_ratio)
    : h_fn_(std::move(h)), x_min_(x_min), x_max_(x_max) {
    if (!(x_min > 0.0) || !(x_max >= x_min)) throw std::invalid_argument("LatticeSupremum: need 0 < x_min <= x_max");
    if (per_decade < 1 || !(floor_ratio > 0.0 && floor_ratio <= 1.0))
        throw std::invalid_argument("LatticeSupremum: bad lattice layout");
    const double step = std::pow(10.0, 1.0 / per_decade);
    const double t0 = floor_ratio * x_min;
    for (int i = 0;; ++i) {
        const double t = t0 * std::pow(step, i);
        if (t >= x_max * (1.0 - 1e-12)) break;
        t_.push_back(t);
    }
    t_.push_back(x_max);
    h_ = h_fn_(t_);
    if (h_.size() != t_.size()) throw std::logic_error("LatticeSupremum: batch returned the wrong size");

    const std::size_t cells = t_.size() - 1;
    std::vector<double> mid(cells);
    for (std::size_t i = 0; i < cells; ++i) mid[i] = std::sqrt(t_[i] * t_[i + 1]);
    const std::vector<double> hm = cells ? h_fn_(mid) : std::vector<double>{};

    kind_.resize(cells);
    prefix_.resize(t_.size());
    prefix_[0] = h_[0];
    for (std::size_t i = 0; i < cells; ++i) {
        double best = std::max(h_[i], h_[i + 1]);
        if (hm[i] > best) {
            kind_[i] = Cell::interior;
            ++interior_;
            best = std::max(hm[i], golden(t_[i], t_[i + 1]));
        } else {
            kind_[i] = h_[i + 1] >= h_[i] ? Cell::rising : Cell::falling;
        }
        prefix_[i + 1] = std::max(prefix_[i], best);
    }
}

double LatticeSupremum::golden(double a, double b) const {
    constexpr double g = 0.6180339887498949;
    auto h = [this](double t) { return h_fn_(std::span<const double>(&t, 1))[0]; };
    double c = b - g * (b - a);
    double d = a + g * (b - a);
    double hc = h(c);
    double hd = h(d);
    double best = std::max(hc, hd);
    for (int it = 0; it < 60 && (b - a) > 1e-10 * b; ++it) {
        if (hc > hd) {
            b = d;
            d = c;
            hd = hc;
            c = b - g * (b - a);
            hc = h(c);
            best = std::max(best, hc);
        } else {
            a = c;
            c = d;
            hc = hd;
            d = a + g * (b - a);
            hd = h(d);
            best = std::max(best, hd);
        }
    }
    return best;
}

std::size_t LatticeSupremum::cell_of(double x) const {
    const auto it = std::upper_bound(t_.begin(), t_.end(), x);
    return static_cast<std::size_t>(std::max<std::ptrdiff_t>(0, (it - t_.begin()) - 1));
}

double LatticeSupremum::operator()(double x) const { return (*this)(std::span<const double>(&x, 1))[0]; }

std::vector<double> LatticeSupremum::operator()(std::span<const double> xs) const {
    std::vector<double> out(xs.size());
    std::vector<double> need;
    std::vector<std::size_t> need_at;
    for (std::size_t q = 0; q < xs.size(); ++q) {
        const double x = xs[q];
        if (!(x >= x_min_ * (1.0 - 1e-12) && x <= x_max_ * (1.0 + 1e-12)))
            throw std::out_of_range("LatticeSupremum: query outside [x_min, x_max]");
        const std::size_t i = cell_of(std::min(x, x_max_));
        out[q] = prefix_[i];
        if (i + 1 >= t_.size() || x <= t_[i]) continue;
        switch (kind_[i]) {
            case Cell::falling: break;
            case Cell::rising:
                need.push_back(x);
                need_at.push_back(q);
                break;
            case Cell::interior: out[q] = std::max(out[q], golden(t_[i], x)); break;
        }
    }
    if (!need.empty()) {
        const std::vector<double> hx = h_fn_(need);
        for (std::size_t n = 0; n < need.size(); ++n) out[need_at[n]] = std::max(out[need_at[n]], hx[n]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// omega_{p,k}

namespace {

GaussRule spatial_rule(double R, const ModulusOptions& opts) {
    const int panels = std::max(1, static_cast<int>(std::ceil(R / opts.panel_width)));
    return composite_gauss_legendre(0.0, R, panels, opts.points_per_panel);
}

double spatial_reach(const Decay& d, double p, double extra_poly) {
    if (d.kind == Decay::Kind::compact) return d.rate;
    return std::max(d.raised(p, extra_poly).radius_for_tail(1e-13, 1e3), 1.0);
}

}  // namespace

struct ContinuityModulus::State {
    double k = 0.0;
    double p = 2.0;
    Exec exec = Exec::parallel;
    double norm = 0.0;
    double truncation = 0.0;
    std::shared_ptr<const Rank1Kernel> kernel;
    std::vector<double> xi;
    std::vector<double> weights;  // p = 2: d_k w |F_k f|^2 xi^2k; else translator weights
    // p < 2
    std::vector<double> y, y_weights, f_at_y;
    std::shared_ptr<const kernels::KernelTable> table;

    std::vector<double> defects(std::span<const double> t) const {
        std::vector<double> out;
        if (p == 2.0) {
            out = kernels::rank1_defect_sums(exec, *kernel, xi, weights, t);
            for (double& v : out) v = 2.0 * std::sqrt(std::max(v, 0.0));
            return out;
        }
        out.resize(t.size());
        std::vector<double> a(xi.size()), b(xi.size()), plus(y.size()), minus(y.size());
        for (std::size_t q = 0; q < t.size(); ++q) {
            for (std::size_t j = 0; j < xi.size(); ++j) {
                a[j] = kernel->even_part(t[q] * xi[j]);
                b[j] = kernel->odd_part(t[q] * xi[j]);
            }
            if (table) {
                kernels::rank1_translate_rows(exec, *table, weights, a, b, plus, minus);
            } else {
                for (std::size_t j = 0; j < xi.size(); ++j) {
                    a[j] *= weights[j];
                    b[j] *= weights[j];
                }
                kernels::rank1_translate_points(exec, *kernel, xi, a, b, y, plus, minus);
            }
            double sum = 0.0;
            for (std::size_t i = 0; i < y.size(); ++i)
                sum += y_weights[i] *
                       (std::pow(std::abs(plus[i] - f_at_y[i]), p) + std::pow(std::abs(minus[i] - f_at_y[i]), p));
            out[q] = 2.0 * std::pow(sum, 1.0 / p);
        }
        return out;
    }
};

namespace {

std::shared_ptr<const ContinuityModulus::State> continuity_state(double k, const RadialProfile& f, double p,
                                                                 double x_max, const ModulusOptions& opts, Exec exec) {
    if (!(p >= 1.0 && p <= 2.0)) throw std::invalid_argument("modulus: need 1 <= p <= 2");
    auto st = std::make_shared<ContinuityModulus::State>();
    const ModelParams params = ModelParams::product({k});
    st->k = k;
    st->p = p;
    st->exec = exec;
    st->kernel = std::make_shared<const Rank1Kernel>(k);
    st->norm = lp_norm_radial(params, f, p, inner_spec()).value;
    if (p == 2.0) {
        SpectralOptions so = opts.spectral;
        so.tail_power = 2;
        const SpectralGrid grid = SpectralGrid::build(params, f, so, exec);
        st->xi = grid.nodes();
        st->weights = grid.measure_weights();
        for (std::size_t j = 0; j < st->xi.size(); ++j) st->weights[j] *= grid.values()[j] * grid.values()[j];
        // |E - 1| <= 2 beyond the cutoff.
        st->truncation = 4.0 * std::sqrt(sphere_weight_dk(params) * grid.tail_l2());
        return st;
    }
    const double R = spatial_reach(translated_decay(f.decay, x_max), p, 2.0 * k);
    SpectralOptions so = opts.spectral;
    so.radius_hint = std::max(so.radius_hint, R);
    const Rank1Translator tau(k, f, so, exec);
    st->xi = tau.grid().nodes();
    st->weights = tau.weights();
    const GaussRule rule = spatial_rule(R, opts);
    st->y = rule.nodes;
    st->y_weights = rule.weights;
    st->f_at_y.resize(st->y.size());
    for (std::size_t i = 0; i < st->y.size(); ++i) {
        st->f_at_y[i] = f(st->y[i]);
        if (k != 0.0) st->y_weights[i] *= std::pow(st->y[i], 2.0 * k);
    }
    if (st->y.size() * st->xi.size() <= opts.max_table)
        st->table = std::make_shared<const kernels::KernelTable>(kernels::rank1_table(exec, *st->kernel, st->y, st->xi));
    // A pointwise error e costs at most e (int_R |y|^2k)^(1/p) in the norm.
    st->truncation = 2.0 * tau.truncation_bound() * std::pow(2.0 * std::pow(R, 2.0 * k + 1.0) / (2.0 * k + 1.0), 1.0 / p);
    return st;
}

}  // namespace

ContinuityModulus::ContinuityModulus(double k, const RadialProfile& f, double p, double x_min, double x_max,
                                     const ModulusOptions& opts, Exec exec)
    : state_(continuity_state(k, f, p, x_max, opts, exec)),
      sup_([st = state_](std::span<const double> t) { return st->defects(t); }, x_min, x_max, opts.per_decade,
           opts.floor_ratio) {}

std::vector<double> ContinuityModulus::defects(std::span<const double> t) const { return state_->defects(t); }

double ContinuityModulus::defect(double t) const { return defects(std::span<const double>(&t, 1))[0]; }

double ContinuityModulus::truncation_bound() const { return state_->truncation; }

double ContinuityModulus::norm() const { return state_->norm; }

double modulus_continuity(double k, const RadialProfile& f, double x, double p, const ModulusOptions& opts, Exec exec) {
    return ContinuityModulus(k, f, p, x, x, opts, exec)(x);
}

// ---------------------------------------------------------------------------
// Test bump, dilations, omega tilde

TestBump TestBump::gaussian() {
    TestBump b;
    b.profile = profiles::gaussian(1.0);
    b.transform_profile = profiles::gaussian(1.0);
    b.annulus_floor = std::exp(-0.5);
    return b;
}

bool TestBump::validate(const ModelParams& params, int samples) const {
    if (!(annulus_floor > 0.0) || samples < 2) return false;
    if (profile.decay.kind == Decay::Kind::power) return false;  // not rapidly decreasing
    for (int i = 1; i < samples; ++i) {
        const double s = 0.5 + 0.5 * i / samples;
        const double v = transform_profile(s);
        if (!(std::abs(v) > annulus_floor)) return false;
        const double q = dunkl_transform_radial(params, profile, s, inner_spec()).value;
        if (std::abs(q - v) > 1e-8 * std::max(1.0, std::abs(v))) return false;
    }
    return true;
}

RadialProfile bump_dilation(const ModelParams& params, const RadialProfile& phi, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("bump_dilation: t must be positive");
    return profiles::scaled(profiles::dilated(phi, t), std::pow(t, -params.homogeneity()));
}

double dilation_identity_error(const ModelParams& params, const TestBump& bump, double t, std::span<const double> s) {
    const RadialProfile phi_t = bump_dilation(params, bump.profile, t);
    double worst = 0.0;
    for (double v : s)
        worst = std::max(worst, std::abs(dunkl_transform_radial(params, phi_t, v, inner_spec()).value -
                                         bump.transform_profile(t * v)));
    return worst;
}

struct SmoothedModulus::State {
    ModelParams params = ModelParams::radial(1, 0.0);
    double p = 2.0;
    Exec exec = Exec::parallel;
    RadialProfile transform_phi;
    std::vector<double> xi;
    std::vector<double> values;   // F_k f at xi
    std::vector<double> measure;  // d_k w xi^m
    double truncation = 0.0;
    // p < 2
    std::shared_ptr<const NormalizedBessel> bessel;
    std::vector<double> r, r_weights;  // r_weights include d_k r^m

    std::vector<double> norms(std::span<const double> t) const {
        if (p == 2.0) {
            return kernels::map_indexed(exec, t.size(), [&](std::size_t q) {
                double sum = 0.0;
                for (std::size_t j = 0; j < xi.size(); ++j) {
                    const double v = values[j] * transform_phi(t[q] * xi[j]);
                    sum += measure[j] * v * v;
                }
                return std::sqrt(sum);
            });
        }
        const double ck = mehta_constant(params);
        std::vector<double> out(t.size());
        std::vector<double> w(xi.size());
        for (std::size_t q = 0; q < t.size(); ++q) {
            for (std::size_t j = 0; j < xi.size(); ++j) w[j] = ck * measure[j] * values[j] * transform_phi(t[q] * xi[j]);
            const std::vector<double> g = kernels::hankel_sums(exec, *bessel, xi, w, r);
            double sum = 0.0;
            for (std::size_t i = 0; i < r.size(); ++i) sum += r_weights[i] * std::pow(std::abs(g[i]), p);
            out[q] = std::pow(sum, 1.0 / p);
        }
        return out;
    }
};

namespace {

std::shared_ptr<const SmoothedModulus::State> smoothed_state(const ModelParams& params, const RadialProfile& f,
                                                             double p, const TestBump& bump, double x_max,
                                                             const ModulusOptions& opts, Exec exec) {
    if (!(p >= 1.0 && p <= 2.0)) throw std::invalid_argument("modulus_tilde: need 1 <= p <= 2");
    auto st = std::make_shared<SmoothedModulus::State>();
    st->params = params;
    st->p = p;
    st->exec = exec;
    st->transform_phi = bump.transform_profile;
    const double m = params.homogeneity() - 1.0;
    // |F_k phi| <= c_k ||phi||_{1,k}.
    const double phi_sup = mehta_constant(params) * lp_norm_radial(params, bump.profile, 1.0, inner_spec()).value;
    SpectralOptions so = opts.spectral;
    double R = 0.0;
    if (p != 2.0) {
        R = spatial_reach(f.decay, p, m) + x_max * spatial_reach(bump.profile.decay, 1.0, 0.0);
        so.radius_hint = std::max(so.radius_hint, R);
    } else {
        so.tail_power = 2;
    }
    const SpectralGrid grid = SpectralGrid::build(params, f, so, exec);
    st->xi = grid.nodes();
    st->values = grid.values();
    st->measure = grid.measure_weights();
    const double dk = sphere_weight_dk(params);
    if (p == 2.0) {
        st->truncation = phi_sup * std::sqrt(dk * grid.tail_l2());
        return st;
    }
    st->bessel = shared_bessel(params.bessel_order());
    const GaussRule rule = spatial_rule(R, opts);
    st->r = rule.nodes;
    st->r_weights = rule.weights;
    for (std::size_t i = 0; i < st->r.size(); ++i) st->r_weights[i] *= dk * (m == 0.0 ? 1.0 : std::pow(st->r[i], m));
    const double e = mehta_constant(params) * dk * phi_sup * grid.tail_l1();
    st->truncation = e * std::pow(dk * std::pow(R, m + 1.0) / (m + 1.0), 1.0 / p);
    return st;
}

}  // namespace

SmoothedModulus::SmoothedModulus(const ModelParams& params, const RadialProfile& f, double p, const TestBump& bump,
                                 double x_min, double x_max, const ModulusOptions& opts, Exec exec)
    : state_(smoothed_state(params, f, p, bump, x_max, opts, exec)),
      sup_([st = state_](std::span<const double> t) { return st->norms(t); }, x_min, x_max, opts.per_decade,
           opts.floor_ratio) {}

std::vector<double> SmoothedModulus::norms(std::span<const double> t) const { return state_->norms(t); }

double SmoothedModulus::truncation_bound() const { return state_->truncation; }

double modulus_tilde(const ModelParams& params, const RadialProfile& f, double x, double p, const TestBump& bump,
                     const ModulusOptions& opts, Exec exec) {
    return SmoothedModulus(params, f, p, bump, x, x, opts, exec)(x);
}

// ---------------------------------------------------------------------------
// Convolution

namespace {

int decay_speed(Decay::Kind k) {
    switch (k) {
        case Decay::Kind::power: return 0;
        case Decay::Kind::exponential: return 1;
        case Decay::Kind::gaussian: return 2;
        case Decay::Kind::compact: return 3;
    }
    return 0;
}

Decay convolved_decay(const Decay& a, const Decay& b) {
    using K = Decay::Kind;
    if (a.kind == K::compact && b.kind == K::compact) return Decay::compact(a.rate + b.rate);
    Decay d;
    if (a.kind == K::gaussian && b.kind == K::gaussian) {
        d = Decay::gaussian(a.rate * b.rate / (a.rate + b.rate));
    } else {
        d = decay_speed(a.kind) <= decay_speed(b.kind) ? a : b;
        if (d.kind == K::compact) d = decay_speed(a.kind) > decay_speed(b.kind) ? b : a;
        if (d.kind == K::gaussian) d.rate /= 4.0;
        if (d.kind == K::exponential) d.rate /= 2.0;
    }
    d.scale = std::numeric_limits<double>::quiet_NaN();
    const double ra = a.kind == K::compact ? a.rate : a.from;
    const double rb = b.kind == K::compact ? b.rate : b.from;
    d.from = 2.0 * (ra + rb);
    return d;
}

}  // namespace

Convolution convolve_k(const ModelParams& params, const RadialProfile& f, const RadialProfile& g,
                       const SpectralOptions& opts, Exec exec) {
    SpectralOptions so = opts;
    if (so.cutoff <= 0.0)
        so.cutoff = std::min(SpectralGrid::natural_cutoff(params, f, opts), SpectralGrid::natural_cutoff(params, g, opts));
    const SpectralGrid gf = SpectralGrid::build(params, f, so, exec);
    const SpectralGrid gg = SpectralGrid::build(params, g, so, exec);
    const double ck = mehta_constant(params);

    auto weights = std::make_shared<std::vector<double>>(gf.measure_weights());
    for (std::size_t j = 0; j < weights->size(); ++j) (*weights)[j] *= ck * gf.values()[j] * gg.values()[j];
    auto nodes = std::make_shared<const std::vector<double>>(gf.nodes());
    auto bessel = shared_bessel(params.bessel_order());

    Convolution out;
    out.cutoff = gf.cutoff();
    const double sup_f = ck * lp_norm_radial(params, f, 1.0, inner_spec()).value;
    const double sup_g = ck * lp_norm_radial(params, g, 1.0, inner_spec()).value;
    const double tail = std::min(gf.tail_l1() * sup_g, gg.tail_l1() * sup_f);
    out.truncation_bound = ck * sphere_weight_dk(params) * tail;

    RadialProfile& h = out.profile;
    h.name = f.name + "*_k" + g.name;
    h.eval = [weights, nodes, bessel](double r) {
        const auto& xi = *nodes;
        const auto& w = *weights;
        double sum = 0.0;
        for (std::size_t j = 0; j < xi.size(); ++j) sum += w[j] * (*bessel)(r * xi[j]);
        return sum;
    };
    h.decay = convolved_decay(f.decay, g.decay);
    h.transform_decay = [f, g](double alpha) { return f.spectral_decay(alpha).times(g.spectral_decay(alpha)); };
    return out;
}

}  // namespace dunkl
