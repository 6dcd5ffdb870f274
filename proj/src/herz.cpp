#include "dunkl/herz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace dunkl {

void HerzParams::validate() const {
    if (!(beta > 0.0)) throw std::invalid_argument("herz: need beta > 0");
    if (!(p > 1.0) || !std::isfinite(p)) throw std::invalid_argument("herz: need 1 < p < inf");
    if (!(q >= 1.0) || !std::isfinite(q)) throw std::invalid_argument("herz: need 1 <= q < inf");
    if (j_min > j_max) throw std::invalid_argument("herz: empty shell range");
}

HerzNorm herz_norm(const ModelParams& params, const RadialProfile& f, const HerzParams& hp, const QuadratureSpec& quad,
                   Exec exec) {
    hp.validate();
    const double m = params.homogeneity();
    const double dk = sphere_weight_dk(params);
    const double p = hp.p;
    const double q = hp.q;
    const int n = hp.j_max - hp.j_min + 1;
    auto integrand = [&f, p, m](double r) {
        const double v = std::abs(f(r));
        return v == 0.0 ? 0.0 : std::pow(v, p) * std::pow(r, m - 1.0);
    };
    // Shells far out are tiny but get multiplied by 2^(j beta): relative
    // accuracy per shell is what matters.
    QuadratureSpec shell = quad;
    shell.abs_tol = std::numeric_limits<double>::min();
    HerzNorm out;
    out.shell_norms = kernels::map_indexed(exec, std::size_t(n), [&](std::size_t i) {
        const int j = hp.j_min + int(i);
        const IntegralResult r =
            integrate_finite(integrand, std::ldexp(1.0, j - 1), std::ldexp(1.0, j), shell, f.breakpoints);
        return std::pow(dk * r.value, 1.0 / p);
    });
    std::vector<double> term(n);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        term[i] = std::pow(2.0, (hp.j_min + i) * hp.beta) * out.shell_norms[i];
        sum += std::pow(term[i], q);
    }
    out.value = std::pow(sum, 1.0 / q);

    // Geometric continuation of the outermost pair of terms at each end.
    double tail = 0.0;
    auto extend = [&](double last, double prev) {
        if (last == 0.0) return;
        const double rho = prev > 0.0 ? last / prev : std::numeric_limits<double>::infinity();
        if (rho >= 1.0) {
            out.infinite = true;
            return;
        }
        const double rq = std::pow(rho, q);
        tail += std::pow(last, q) * rq / (1.0 - rq);
    };
    if (n >= 2) {
        extend(term[n - 1], term[n - 2]);
        extend(term[0], term[1]);
    }
    if (out.infinite) {
        out.tail_residual = std::numeric_limits<double>::infinity();
        out.truncation_warning = true;
        return out;
    }
    out.tail_residual = std::pow(sum + tail, 1.0 / q) - out.value;
    out.truncation_warning = out.tail_residual > quad.rel_tol * out.value;
    return out;
}

// ---------------------------------------------------------------------------
// Cesaro weights

namespace {

double measured_order(const std::function<double(double)>& phi) {
    const double a = std::abs(phi(1e-8));
    const double b = std::abs(phi(1e-6));
    if (a == 0.0 || b == 0.0) return 0.0;  // no singular behaviour to account for
    return std::log(b / a) / std::log(100.0);
}

}  // namespace

CesaroWeight::CesaroWeight(std::string name, std::function<double(double)> phi, const ModelParams& params, double p,
                           double order_at_zero)
    : name_(std::move(name)), phi_(std::move(phi)), p_(p) {
    if (!(p > 1.0)) throw std::invalid_argument("CesaroWeight: need p > 1");
    shift_ = params.homogeneity() * (1.0 - 1.0 / p);
    order_ = std::isnan(order_at_zero) ? measured_order(phi_) : order_at_zero;
    constexpr int grid = 1000;
    for (int i = 0; i <= grid; ++i)
        if (!(phi_(double(i) / grid) >= 0.0)) throw std::invalid_argument("CesaroWeight: phi must be >= 0 on [0,1]");
    certificate_.grid = grid;
    double worst = -std::numeric_limits<double>::infinity();
    for (int i = 2; i < grid; ++i) {
        const double v = 0.5 * (psi(double(i - 1) / grid) + psi(double(i + 1) / grid)) - psi(double(i) / grid);
        worst = std::max(worst, v);
    }
    certificate_.worst_violation = worst;
    certificate_.concave = std::isfinite(worst) && worst <= 1e-10;
}

double CesaroWeight::psi(double t) const { return std::pow(t, -shift_) * phi_(t); }

CesaroWeight CesaroWeight::constant(const ModelParams& params, double p, double c) {
    std::ostringstream os;
    os << "const(" << c << ")";
    return CesaroWeight(os.str(), [c](double) { return c; }, params, p, 0.0);
}

CesaroWeight CesaroWeight::power(const ModelParams& params, double p, double a) {
    std::ostringstream os;
    os << "power(" << a << ")";
    return CesaroWeight(os.str(), [a](double t) { return std::pow(t, a); }, params, p, a);
}

CesaroWeight CesaroWeight::polynomial(const ModelParams& params, double p, std::vector<double> coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("CesaroWeight: empty polynomial");
    std::ostringstream os;
    os << "poly(";
    for (std::size_t i = 0; i < coeffs.size(); ++i) os << (i ? "," : "") << coeffs[i];
    os << ")";
    double order = 0.0;
    while (order < double(coeffs.size()) && coeffs[std::size_t(order)] == 0.0) order += 1.0;
    auto phi = [c = std::move(coeffs)](double t) {
        double acc = 0.0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
        return acc;
    };
    return CesaroWeight(os.str(), phi, params, p, order);
}

CesaroWeight CesaroWeight::parse(const std::string& text, const ModelParams& params, double p) {
    const auto open = text.find('(');
    const std::string head = text.substr(0, open);
    std::vector<double> args;
    if (open != std::string::npos) {
        const auto close = text.rfind(')');
        if (close == std::string::npos || close < open) throw std::invalid_argument("bad weight '" + text + "'");
        std::stringstream ss(text.substr(open + 1, close - open - 1));
        std::string tok;
        while (std::getline(ss, tok, ',')) args.push_back(std::stod(tok));
    }
    if (head == "const") return constant(params, p, args.empty() ? 1.0 : args.at(0));
    if (head == "power" && args.size() == 1) return power(params, p, args[0]);
    if (head == "poly" && !args.empty()) return polynomial(params, p, args);
    throw std::invalid_argument("unknown weight '" + text + "' (const, power(a), poly(c0,...))");
}

IntegralResult cesaro_apply(const ModelParams& params, const CesaroWeight& w, const RadialProfile& f, double s,
                            const QuadratureSpec& quad) {
    if (!(s >= 0.0)) throw std::invalid_argument("cesaro_apply: need s >= 0");
    const double m = params.homogeneity();
    using K = Decay::Kind;
    if (s == 0.0) {
        const double f0 = f(0.0);
        if (f0 == 0.0) return {};
        const double e = w.order_at_zero() - m;
        if (e <= -1.0) throw DivergenceError("cesaro_apply: int t^-m phi(t) diverges at 0");
        auto g = [&](double t) { return t == 0.0 ? 0.0 : std::pow(t, -m) * w.phi(t); };
        IntegralResult r = integrate_finite(g, 0.0, 1.0, quad, {}, EndpointBehavior{std::min(e, 0.0), 0.0});
        r.value *= f0;
        r.error_estimate *= std::abs(f0);
        return r;
    }
    const Decay& fd = f.decay;
    if (fd.kind == K::compact && fd.rate <= s) return {};

    // Decay tag in u for F(s u) u^(m-2) phi(1/u).
    Decay d = fd;
    switch (fd.kind) {
    case K::gaussian: d.rate = fd.rate * s * s; break;
    case K::exponential: d.rate = fd.rate * s; break;
    case K::power: break;
    case K::compact: d.rate = fd.rate / s; break;
    }
    d.poly = fd.poly + m - 2.0 - w.order_at_zero();
    d.scale = std::numeric_limits<double>::quiet_NaN();
    d.from = std::max(1.0, fd.from / s);

    std::vector<double> cuts;
    for (double b : f.breakpoints)
        if (b / s > 1.0) cuts.push_back(b / s);
    auto g = [&](double u) {
        const double v = f(s * u);
        if (v == 0.0) return 0.0;
        return v * std::pow(u, m - 2.0) * w.phi(1.0 / u);
    };
    // The absolute tolerance follows the size of the integrand near u = 1,
    // which spans hundreds of orders of magnitude across dyadic shells.
    double mag = 0.0;
    for (double u : {1.0, 1.25, 1.5, 2.0, 3.0}) mag = std::max(mag, std::abs(g(u)));
    QuadratureSpec local = quad;
    local.abs_tol = std::max(quad.abs_tol * std::min(mag, 1.0), std::numeric_limits<double>::min());
    if (d.kind == K::compact) return integrate_finite(g, 1.0, d.rate, local, cuts);
    return integrate_semi_infinite(g, d, local, 1.0, cuts);
}

RadialProfile cesaro_profile(const ModelParams& params, const CesaroWeight& w, const RadialProfile& f,
                             const QuadratureSpec& quad) {
    RadialProfile out;
    out.name = "C[" + w.name() + "](" + f.name + ")";
    out.eval = [params, w, f, quad](double s) { return cesaro_apply(params, w, f, s, quad).value; };
    out.decay = f.decay;
    if (out.decay.kind != Decay::Kind::compact) out.decay.scale = std::numeric_limits<double>::quiet_NaN();
    out.smoothness = f.smoothness;
    out.breakpoints = f.breakpoints;
    return out;
}

ConditionIntegral cesaro_condition_integral(const CesaroWeight& w, const HerzParams& hp, double extra,
                                            const QuadratureSpec& quad) {
    const double b = hp.beta + extra;
    ConditionIntegral out;
    const double e = b - w.shift() + w.order_at_zero();
    if (e <= -1.0) {
        out.infinite = true;
        out.value = std::numeric_limits<double>::infinity();
        return out;
    }
    auto g = [&](double t) { return t == 0.0 ? 0.0 : std::pow(t, b) * w.psi(t); };
    const IntegralResult r = integrate_finite(g, 0.0, 1.0, quad, {}, EndpointBehavior{std::min(e, 0.0), 0.0});
    out.value = r.value;
    out.error_estimate = r.error_estimate;
    return out;
}

double upper_constant(const HerzParams& hp) {
    return std::pow(2.0, 1.0 - 2.0 / hp.q) * (1.0 + 1.0 / hp.q) * (1.0 + std::pow(2.0, hp.beta));
}

// ---------------------------------------------------------------------------
// Extremal family and the two-sided bound

RadialProfile ExtremalFamily::profile() const {
    RadialProfile f = profiles::power(beta + eps + params.homogeneity() / p, 1.0);
    std::ostringstream os;
    os << "f_eps(" << eps << ")";
    f.name = os.str();
    return f;
}

double ExtremalFamily::C() const {
    const double kp = (beta + eps) * p;
    return (std::pow(2.0, kp) - 1.0) / kp * sphere_weight_dk(params);
}

double ExtremalFamily::shell_norm(int j) const {
    return j >= 1 ? std::pow(C(), 1.0 / p) * std::pow(2.0, -j * (beta + eps)) : 0.0;
}

ExtremalHerz extremal_herz_norm(const ModelParams& params, double eps, const HerzParams& hp,
                                const QuadratureSpec& quad, Exec exec) {
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("extremal_herz_norm: need 0 < eps < 1");
    hp.validate();
    const ExtremalFamily fam{eps, hp.beta, hp.p, params};
    const double c = std::pow(fam.C(), 1.0 / hp.p);
    const double r = std::pow(2.0, -hp.q * eps);
    ExtremalHerz out;
    out.closed_form = c * std::pow(2.0, -eps) / std::pow(1.0 - r, 1.0 / hp.q);
    out.printed_variant = c * r / std::pow(1.0 - r, 1.0 / hp.q);
    double partial = 0.0;
    for (int j = 1; j <= hp.j_max; ++j) partial += std::pow(2.0, -j * eps * hp.q);
    out.geometric_sum = c * std::pow(partial, 1.0 / hp.q);
    out.quadrature = herz_norm(params, fam.profile(), hp, quad, exec);
    out.relative_error = std::abs(out.quadrature.value / out.closed_form - 1.0);
    return out;
}

namespace {

// Neville extrapolation to h = 0 from (h_i, v_i); err from dropping the
// coarsest point.
std::pair<double, double> extrapolate_to_zero(std::span<const double> h, std::span<const double> v) {
    auto neville = [](std::span<const double> hh, std::span<const double> vv) {
        std::vector<double> p(vv.begin(), vv.end());
        const std::size_t n = p.size();
        for (std::size_t k = 1; k < n; ++k)
            for (std::size_t i = 0; i + k < n; ++i) p[i] = (hh[i + k] * p[i] - hh[i] * p[i + 1]) / (hh[i + k] - hh[i]);
        return p[0];
    };
    const double full = neville(h, v);
    if (h.size() < 2) return {full, std::numeric_limits<double>::infinity()};
    const double less = neville(h.subspan(1), v.subspan(1));
    return {full, std::abs(full - less)};
}

double herz_ratio(const ModelParams& params, const CesaroWeight& w, const RadialProfile& f, const HerzParams& hp,
                  const QuadratureSpec& quad, Exec exec, double* residual = nullptr) {
    const HerzNorm den = herz_norm(params, f, hp, quad, exec);
    const HerzNorm num = herz_norm(params, cesaro_profile(params, w, f, quad), hp, quad, exec);
    if (residual) *residual = den.extrapolated() > 0.0 ? num.tail_residual / num.extrapolated() : 0.0;
    if (den.infinite || num.infinite) return std::numeric_limits<double>::quiet_NaN();
    return den.extrapolated() > 0.0 ? num.extrapolated() / den.extrapolated() : 0.0;
}

}  // namespace

LowerProbe operator_norm_lower_probe(const ModelParams& params, const CesaroWeight& w, const HerzParams& hp,
                                     std::span<const double> eps_grid, double tol, const QuadratureSpec& quad,
                                     Exec exec) {
    hp.validate();
    if (eps_grid.empty()) throw std::invalid_argument("lower probe: empty eps grid");
    LowerProbe out;
    out.I = cesaro_condition_integral(w, hp, 0.0, quad).value;
    std::vector<double> h, L;
    out.pass = true;
    for (double eps : eps_grid) {
        ProbePoint pt;
        pt.eps = eps;
        pt.L = cesaro_condition_integral(w, hp, eps, quad).value;
        const ExtremalFamily fam{eps, hp.beta, hp.p, params};
        pt.R = herz_ratio(params, w, fam.profile(), hp, quad, exec);
        pt.pass = pt.R >= pt.L * (1.0 - tol);
        out.pass = out.pass && pt.pass;
        out.sup_R = std::max(out.sup_R, pt.R);
        h.push_back(eps);
        L.push_back(pt.L);
        out.points.push_back(pt);
    }
    std::tie(out.L0, out.extrapolation_error) = extrapolate_to_zero(h, L);
    out.pass = out.pass && std::isfinite(out.I) && std::abs(out.L0 - out.I) <= 1e-2 * out.I;
    return out;
}

VerificationReport sandwich_verify(const ModelParams& params, const CesaroWeight& w, const HerzParams& hp,
                                   std::span<const RadialProfile> family, const SandwichOptions& opts, Exec exec) {
    hp.validate();
    if (std::abs(w.p() - hp.p) > 1e-15) throw std::invalid_argument("sandwich_verify: weight built for another p");
    VerificationReport rep;
    rep.scenario = "thm41";
    rep.set("model", params.describe());
    rep.set("phi", w.name());
    rep.set("beta", hp.beta);
    rep.set("p", hp.p);
    rep.set("q", hp.q);
    rep.set("j_min", std::int64_t(hp.j_min));
    rep.set("j_max", std::int64_t(hp.j_max));

    const ConditionIntegral I = cesaro_condition_integral(w, hp, 0.0, opts.quad);
    const double c = upper_constant(hp);
    const bool certified = w.concavity().concave;
    {
        CheckRecord r;
        r.name = "condition integral I";
        r.lhs = I.value;
        r.residual = I.error_estimate;
        r.outcome = I.infinite ? Outcome::inconclusive : Outcome::pass;
        r.note = I.infinite ? "I infinite: C_phi is unbounded" : "";
        rep.add(r);
    }
    {
        CheckRecord r;
        r.name = "psi concavity";
        r.lhs = w.concavity().worst_violation;
        r.tolerance = 1e-10;
        r.outcome = certified ? Outcome::pass : Outcome::inconclusive;
        r.note = certified ? "midpoint concave on 1e3 grid" : "not certified: upper bound reported only";
        rep.add(r);
    }
    {
        CheckRecord r;
        r.name = "bracket";
        r.lhs = I.value;
        r.rhs = c * I.value;
        r.ratio = c;
        r.outcome = Outcome::pass;
        r.note = "[I, c_{q,beta} I]";
        rep.add(r);
    }
    if (I.infinite) return rep;

    for (const RadialProfile& f : family) {
        CheckRecord r;
        r.name = "upper " + f.name;
        r.rhs = c * I.value;
        r.tolerance = opts.tol;
        try {
            double resid = 0.0;
            r.ratio = herz_ratio(params, w, f, hp, opts.quad, exec, &resid);
            r.lhs = r.ratio;
            r.residual = resid;
            const bool ok = r.ratio <= c * I.value * (1.0 + opts.tol);
            if (std::isnan(r.ratio)) {
                r.outcome = Outcome::inconclusive;
                r.note = "Herz norm tail does not decay on the shell range";
            } else if (!certified) {
                r.outcome = Outcome::inconclusive;
                r.note = ok ? "within bound (uncertified)" : "above bound (uncertified)";
            } else {
                r.outcome = ok ? Outcome::pass : Outcome::fail;
            }
        } catch (const std::exception& e) {
            r.outcome = Outcome::inconclusive;
            r.note = e.what();
        }
        rep.add(r);
    }

    const LowerProbe probe = operator_norm_lower_probe(params, w, hp, opts.eps_grid, opts.tol, opts.quad, exec);
    for (const ProbePoint& pt : probe.points) {
        CheckRecord r;
        r.name = "lower eps=" + format_number(pt.eps);
        r.lhs = pt.R;
        r.rhs = pt.L;
        r.ratio = pt.L > 0.0 ? pt.R / pt.L : std::numeric_limits<double>::quiet_NaN();
        r.tolerance = opts.tol;
        r.outcome = pt.pass ? Outcome::pass : Outcome::fail;
        rep.add(r);
    }
    {
        CheckRecord r;
        r.name = "lower limit L(0) vs I";
        r.lhs = probe.L0;
        r.rhs = probe.I;
        r.ratio = probe.I > 0.0 ? probe.L0 / probe.I : std::numeric_limits<double>::quiet_NaN();
        r.tolerance = 1e-2;
        r.residual = probe.extrapolation_error;
        r.outcome = std::abs(probe.L0 - probe.I) <= 1e-2 * probe.I ? Outcome::pass : Outcome::fail;
        r.note = "Richardson over eps grid; sup R = " + format_number(probe.sup_R);
        rep.add(r);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Elementary integral inequalities

double PiecewiseLinear::operator()(double t) const {
    if (t <= x.front()) return y.front();
    if (t >= x.back()) return y.back();
    const auto it = std::upper_bound(x.begin(), x.end(), t);
    const std::size_t i = std::size_t(it - x.begin());
    const double w = (t - x[i - 1]) / (x[i] - x[i - 1]);
    return y[i - 1] + w * (y[i] - y[i - 1]);
}

double PiecewiseLinear::integral() const {
    double acc = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) acc += 0.5 * (y[i] + y[i - 1]) * (x[i] - x[i - 1]);
    return acc;
}

namespace {

std::vector<double> random_nodes(std::mt19937_64& rng, int max_pieces) {
    std::uniform_int_distribution<int> pieces(1, std::max(1, max_pieces));
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const int n = pieces(rng);
    std::vector<double> x{0.0, 1.0};
    while (int(x.size()) < n + 1) {
        const double t = u(rng);
        if (t > 1e-3 && t < 1.0 - 1e-3) x.push_back(t);
    }
    std::sort(x.begin(), x.end());
    x.erase(std::unique(x.begin(), x.end(), [](double a, double b) { return b - a < 1e-6; }), x.end());
    if (x.back() != 1.0) x.back() = 1.0;
    return x;
}

}  // namespace

PiecewiseLinear random_piecewise_linear(std::mt19937_64& rng, int max_pieces) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    PiecewiseLinear f;
    f.x = random_nodes(rng, max_pieces);
    for (std::size_t i = 0; i < f.x.size(); ++i) {
        const double v = u(rng);
        f.y.push_back(v < 0.1 ? 0.0 : v);  // touch zero now and then
    }
    return f;
}

PiecewiseLinear random_concave(std::mt19937_64& rng, int max_pieces) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_real_distribution<double> slope(-2.0, 2.0);
    PiecewiseLinear f;
    f.x = random_nodes(rng, max_pieces);
    std::vector<double> s(f.x.size() - 1);
    for (double& v : s) v = slope(rng);
    std::sort(s.begin(), s.end(), std::greater<>());
    f.y.push_back(u(rng));
    for (std::size_t i = 0; i < s.size(); ++i) f.y.push_back(f.y.back() + s[i] * (f.x[i + 1] - f.x[i]));
    const double lo = *std::min_element(f.y.begin(), f.y.end());
    if (lo < 0.0)
        for (double& v : f.y) v = std::max(0.0, v - lo);
    return f;
}

bool midpoint_concave(const std::function<double(double)>& f, double a, double b, int grid, double tol) {
    if (grid < 2) throw std::invalid_argument("midpoint_concave: grid too small");
    std::vector<double> v(std::size_t(grid) + 1);
    for (int i = 0; i <= grid; ++i) v[std::size_t(i)] = f(a + (b - a) * i / grid);
    for (int i = 1; i < grid; ++i)
        if (v[std::size_t(i - 1)] + v[std::size_t(i + 1)] > 2.0 * v[std::size_t(i)] + tol) return false;
    return true;
}

namespace {

QuadratureSpec lemma_spec(const QuadratureSpec& quad) {
    QuadratureSpec s = quad;
    s.rel_tol = std::min(s.rel_tol, 1e-12);
    s.abs_tol = std::min(s.abs_tol, 1e-14);
    s.max_panels = std::max(s.max_panels, 20000);
    return s;
}

double power_integral(const PiecewiseLinear& f, double e, const QuadratureSpec& quad) {
    auto g = [&](double t) {
        const double v = f(t);
        return v <= 0.0 ? 0.0 : std::pow(v, e);
    };
    return integrate_finite(g, 0.0, 1.0, lemma_spec(quad), f.x).value;
}

LemmaStats collect(std::span<const PiecewiseLinear> samples, const std::function<LemmaSample(const PiecewiseLinear&)>& fn) {
    LemmaStats st;
    st.worst_margin = std::numeric_limits<double>::infinity();
    for (const auto& f : samples) {
        LemmaSample s = fn(f);
        if (!s.pass) ++st.failures;
        st.worst_margin = std::min(st.worst_margin, (s.rhs - s.lhs) / std::max(s.rhs, 1e-300));
        st.samples.push_back(s);
    }
    return st;
}

}  // namespace

LemmaSample lemma41_sample(const PiecewiseLinear& f, double q, const QuadratureSpec& quad) {
    if (!(q >= 1.0)) throw std::invalid_argument("lemma41: need q >= 1");
    LemmaSample s;
    s.lhs = std::pow(f.integral(), q);
    s.rhs = power_integral(f, q, quad);
    s.pass = s.lhs <= s.rhs * (1.0 + 1e-9) + 1e-14;
    return s;
}

LemmaStats lemma41_check(std::span<const PiecewiseLinear> samples, double q, const QuadratureSpec& quad) {
    return collect(samples, [&](const PiecewiseLinear& f) { return lemma41_sample(f, q, quad); });
}

LemmaSample lemma42_sample(const PiecewiseLinear& f, double q, const QuadratureSpec& quad) {
    if (!(q >= 1.0)) throw std::invalid_argument("lemma42: need q >= 1");
    LemmaSample s;
    s.lhs = std::pow(f.integral(), 1.0 / q);
    s.rhs = (1.0 + 1.0 / q) / std::pow(2.0, 1.0 / q) * power_integral(f, 1.0 / q, quad);
    s.pass = s.lhs <= s.rhs * (1.0 + 1e-9) + 1e-14;
    return s;
}

LemmaStats lemma42_check(std::span<const PiecewiseLinear> samples, double q, const QuadratureSpec& quad) {
    for (const auto& f : samples) {
        for (double v : f.y)
            if (v < 0.0) throw std::invalid_argument("lemma42: sample is negative");
        if (!midpoint_concave([&f](double t) { return f(t); }, 0.0, 1.0))
            throw std::invalid_argument("lemma42: sample is not concave on the grid");
    }
    return collect(samples, [&](const PiecewiseLinear& f) { return lemma42_sample(f, q, quad); });
}

}  // namespace dunkl
