#include "dunkl/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <queue>
#include <sstream>

#include <Eigen/Dense>

namespace dunkl {

namespace {

// QUADPACK qk21 abscissae and weights.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208745139535, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Panel {
    double a;
    double b;
    double value;
    double error;
    int segment;
};

struct PanelOrder {
    bool operator()(const Panel& x, const Panel& y) const {
        if (x.error != y.error) return x.error < y.error;
        return x.a > y.a;
    }
};

Panel gauss_kronrod_21(const Integrand& f, double a, double b, int segment) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double res_g = 0.0;
    double res_k = fc * kWgk[10];
    double res_abs = std::abs(res_k);
    std::array<double, 10> f1{};
    std::array<double, 10> f2{};
    for (int j = 0; j < 10; ++j) {
        const double dx = half * kXgk[j];
        f1[j] = f(center - dx);
        f2[j] = f(center + dx);
        const double sum = f1[j] + f2[j];
        res_k += kWgk[j] * sum;
        res_abs += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
        if (j % 2 == 1) res_g += kWg[j / 2] * sum;
    }
    const double mean = 0.5 * res_k;
    double res_asc = kWgk[10] * std::abs(fc - mean);
    for (int j = 0; j < 10; ++j) res_asc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));

    const double width = std::abs(half);
    double err = std::abs((res_k - res_g) * half);
    res_asc *= width;
    res_abs *= width;
    if (res_asc != 0.0 && err != 0.0) err = res_asc * std::min(1.0, std::pow(200.0 * err / res_asc, 1.5));
    if (res_abs > std::numeric_limits<double>::min() / (50.0 * kEps)) err = std::max(50.0 * kEps * res_abs, err);
    if (!std::isfinite(res_k)) throw DivergenceError("integrand produced a non-finite value");
    return {a, b, res_k * half, err, segment};
}

double tail_bound(const Decay& d, double scale, double R) {
    using K = Decay::Kind;
    switch (d.kind) {
        case K::compact:
            return R >= d.rate ? 0.0 : std::numeric_limits<double>::infinity();
        case K::power: {
            const double e = d.rate + d.poly + 1.0;
            return scale * std::pow(R, e) / (-e);
        }
        case K::gaussian: {
            const double kappa = 2.0 * d.rate * R - std::max(d.poly, 0.0) / R;
            if (kappa <= 0.0) return std::numeric_limits<double>::infinity();
            return scale * std::pow(R, d.poly) * std::exp(-d.rate * R * R) / kappa;
        }
        case K::exponential: {
            const double kappa = d.rate - std::max(d.poly, 0.0) / R;
            if (kappa <= 0.0) return std::numeric_limits<double>::infinity();
            return scale * std::pow(R, d.poly) * std::exp(-d.rate * R) / kappa;
        }
    }
    return std::numeric_limits<double>::infinity();
}

double fit_scale(const Integrand& f, const Decay& d, double lo, double hi) {
    double c = 0.0;
    constexpr int kSamples = 17;
    for (int i = 0; i < kSamples; ++i) {
        const double r = lo + (hi - lo) * i / (kSamples - 1);
        const double env = d.envelope(r);
        if (env > 0.0 && std::isfinite(env)) c = std::max(c, std::abs(f(r)) / env);
    }
    return 2.0 * c;
}

}  // namespace

QuadratureSpec QuadratureSpec::refined(double factor) const {
    QuadratureSpec s = *this;
    s.rel_tol /= factor;
    s.abs_tol /= factor;
    s.max_panels *= 2;
    return s;
}

void QuadratureSpec::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) throw std::invalid_argument("quadrature tolerances must be positive");
    if (max_panels < 1) throw std::invalid_argument("max_panels must be at least 1");
    if (max_panel_width < 0.0) throw std::invalid_argument("max_panel_width must be nonnegative");
    if (!(max_radius > 0.0)) throw std::invalid_argument("max_radius must be positive");
}

Decay Decay::gaussian(double a, double scale, double from) { return {Kind::gaussian, a, 0.0, scale, from}; }
Decay Decay::exponential(double lambda, double scale, double from) {
    return {Kind::exponential, lambda, 0.0, scale, from};
}
Decay Decay::power(double exponent, double scale, double from) { return {Kind::power, exponent, 0.0, scale, from}; }
Decay Decay::compact(double radius) { return {Kind::compact, radius, 0.0, 1.0, 0.0}; }

Decay Decay::raised(double p, double extra_poly) const {
    Decay d = *this;
    switch (kind) {
        case Kind::gaussian:
        case Kind::exponential:
            d.rate = rate * p;
            break;
        case Kind::power:
            d.rate = rate * p;
            break;
        case Kind::compact:
            break;
    }
    d.poly = poly * p + extra_poly;
    if (std::isfinite(scale)) d.scale = std::pow(scale, p);
    return d;
}

Decay Decay::times(const Decay& other) const {
    if (kind == Kind::compact) return *this;
    if (other.kind == Kind::compact) return other;
    Decay d;
    d.scale = scale * other.scale;
    d.from = std::max(from, other.from);
    d.poly = poly + other.poly;
    if (kind == other.kind) {
        d.kind = kind;
        d.rate = rate + other.rate;
        return d;
    }
    // Mixed kinds: the faster envelope dominates; the power part is absorbed
    // into the polynomial prefactor.
    const Decay* fast = (kind == Kind::gaussian || (kind == Kind::exponential && other.kind == Kind::power)) ? this : &other;
    const Decay* slow = fast == this ? &other : this;
    d.kind = fast->kind;
    d.rate = fast->rate;
    if (slow->kind == Kind::power) d.poly += slow->rate;
    // exponential * gaussian: keep the gaussian, drop the exponential factor (<= 1).
    return d;
}

double Decay::envelope(double r) const {
    const double s = std::isfinite(scale) ? scale : 1.0;
    const double pre = poly == 0.0 ? 1.0 : std::pow(r, poly);
    switch (kind) {
        case Kind::gaussian: return s * pre * std::exp(-rate * r * r);
        case Kind::exponential: return s * pre * std::exp(-rate * r);
        case Kind::power: return s * pre * std::pow(r, rate);
        case Kind::compact: return r <= rate ? s * pre : 0.0;
    }
    return 0.0;
}

double Decay::tail(double R) const {
    if (kind == Kind::power && rate + poly >= -1.0) return std::numeric_limits<double>::infinity();
    return tail_bound(*this, std::isfinite(scale) ? scale : 1.0, R);
}

double Decay::radius_for_tail(double tol, double cap) const {
    if (kind == Kind::compact) return std::min(rate, cap);
    double R = std::max(from, 1.0);
    while (R < cap && !(tail(R) <= tol)) R *= 1.0625;
    return std::min(R, cap);
}

std::string Decay::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::gaussian: os << "gaussian(" << rate << ")"; break;
        case Kind::exponential: os << "exponential(" << rate << ")"; break;
        case Kind::power: os << "power(" << rate << ")"; break;
        case Kind::compact: os << "compact(" << rate << ")"; break;
    }
    if (poly != 0.0) os << "*r^" << poly;
    return os.str();
}

IntegralResult integrate_finite(const Integrand& f, double a, double b, const QuadratureSpec& spec,
                                std::span<const double> breakpoints, EndpointBehavior endpoints) {
    spec.validate();
    if (a == b) return {};
    if (a > b) {
        std::swap(endpoints.left_exponent, endpoints.right_exponent);
        IntegralResult r = integrate_finite(f, b, a, spec, breakpoints, endpoints);
        r.value = -r.value;
        return r;
    }
    if (endpoints.left_exponent <= -1.0 || endpoints.right_exponent <= -1.0)
        throw DivergenceError("endpoint singularity exponent <= -1 is not integrable");

    std::vector<double> cuts{a};
    for (double x : breakpoints)
        if (x > a && x < b) cuts.push_back(x);
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    const bool left_sing = endpoints.left_exponent < 0.0;
    const bool right_sing = endpoints.right_exponent < 0.0;
    if (left_sing && right_sing && cuts.size() == 2) cuts.insert(cuts.begin() + 1, 0.5 * (a + b));

    // Each segment is integrated over its own variable; singular end segments
    // use t = end +- len * u^m, which flattens |t - end|^lambda when m = 1/(1+lambda).
    std::vector<Integrand> segment_fn;
    std::vector<std::pair<double, double>> segment_range;
    const std::size_t nseg = cuts.size() - 1;
    for (std::size_t i = 0; i < nseg; ++i) {
        const double lo = cuts[i];
        const double hi = cuts[i + 1];
        const double len = hi - lo;
        if (i == 0 && left_sing) {
            const double m = 1.0 / (1.0 + endpoints.left_exponent);
            segment_fn.emplace_back([&f, lo, len, m](double u) {
                if (u <= 0.0) return 0.0;
                return f(lo + len * std::pow(u, m)) * len * m * std::pow(u, m - 1.0);
            });
            segment_range.emplace_back(0.0, 1.0);
        } else if (i == nseg - 1 && right_sing) {
            const double m = 1.0 / (1.0 + endpoints.right_exponent);
            segment_fn.emplace_back([&f, hi, len, m](double u) {
                if (u <= 0.0) return 0.0;
                return f(hi - len * std::pow(u, m)) * len * m * std::pow(u, m - 1.0);
            });
            segment_range.emplace_back(0.0, 1.0);
        } else {
            segment_fn.emplace_back(std::cref(f));
            segment_range.emplace_back(lo, hi);
        }
    }

    std::priority_queue<Panel, std::vector<Panel>, PanelOrder> heap;
    std::vector<Panel> settled;
    double total = 0.0;
    double total_err = 0.0;
    int count = 0;
    for (std::size_t s = 0; s < nseg; ++s) {
        const auto [lo, hi] = segment_range[s];
        int pieces = 1;
        if (spec.max_panel_width > 0.0) {
            const double physical = cuts[s + 1] - cuts[s];
            pieces = std::max(1, static_cast<int>(std::ceil(physical / spec.max_panel_width)));
            pieces = std::min(pieces, std::max(1, spec.max_panels / 2));
        }
        for (int p = 0; p < pieces; ++p) {
            const double pa = lo + (hi - lo) * p / pieces;
            const double pb = p + 1 == pieces ? hi : lo + (hi - lo) * (p + 1) / pieces;
            Panel panel = gauss_kronrod_21(segment_fn[s], pa, pb, static_cast<int>(s));
            total += panel.value;
            total_err += panel.error;
            heap.push(panel);
            ++count;
        }
    }

    auto converged = [&] { return total_err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total)); };
    while (!converged() && !heap.empty()) {
        if (count >= spec.max_panels) {
            IntegralResult best{total, total_err, 0.0, count};
            throw QuadratureError("adaptive quadrature did not converge within max_panels", best);
        }
        Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b) || (worst.b - worst.a) < 64.0 * kEps * std::max(std::abs(worst.a), std::abs(worst.b))) {
            settled.push_back(worst);
            continue;
        }
        Panel left = gauss_kronrod_21(segment_fn[worst.segment], worst.a, mid, worst.segment);
        Panel right = gauss_kronrod_21(segment_fn[worst.segment], mid, worst.b, worst.segment);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++count;
    }

    while (!heap.empty()) {
        settled.push_back(heap.top());
        heap.pop();
    }
    // Fixed summation order keeps results reproducible.
    std::sort(settled.begin(), settled.end(), [](const Panel& x, const Panel& y) {
        return x.segment != y.segment ? x.segment < y.segment : x.a < y.a;
    });
    IntegralResult out;
    for (const Panel& p : settled) {
        out.value += p.value;
        out.error_estimate += p.error;
    }
    out.panels = count;
    return out;
}

IntegralResult integrate_semi_infinite(const Integrand& f, const Decay& decay, const QuadratureSpec& spec, double lo,
                                       std::span<const double> breakpoints, EndpointBehavior endpoints) {
    spec.validate();
    using K = Decay::Kind;
    if (decay.kind == K::power && decay.rate + decay.poly >= -1.0)
        throw DivergenceError("power decay r^" + std::to_string(decay.rate + decay.poly) + " is not integrable at infinity");

    double R = 0.0;
    double scale = decay.scale;
    const double start = std::max({decay.from, lo + 1.0, 1.0});
    if (decay.kind == K::compact) {
        R = std::max(lo, decay.rate);
        scale = 0.0;
    } else {
        const double target = 0.5 * spec.abs_tol;
        auto solve_radius = [&](double c) {
            if (decay.kind == K::power) {
                const double e = decay.rate + decay.poly + 1.0;
                if (c <= 0.0) return start;
                return std::clamp(std::pow(target * (-e) / c, 1.0 / e), start, spec.max_radius);
            }
            double r = start;
            while (r < spec.max_radius && tail_bound(decay, c, r) > target) r *= 1.125;
            return std::min(r, spec.max_radius);
        };
        if (!std::isfinite(scale)) {
            scale = fit_scale(f, decay, start, 2.0 * start);
            R = solve_radius(scale);
            scale = std::max(scale, fit_scale(f, decay, 0.5 * R, R));
        }
        R = solve_radius(scale);
    }

    std::vector<double> cuts(breakpoints.begin(), breakpoints.end());
    for (double x = lo + 1.0; x < R; x = lo + 2.0 * (x - lo)) cuts.push_back(x);
    IntegralResult r = integrate_finite(f, lo, R, spec, cuts, endpoints);
    r.tail_bound = decay.kind == K::compact ? 0.0 : tail_bound(decay, scale, R);
    return r;
}

std::vector<IntegralResult> integrate_dyadic_shells(const Integrand& f, int j_min, int j_max, const QuadratureSpec& spec,
                                                    std::span<const double> breakpoints) {
    if (j_min > j_max) throw std::invalid_argument("integrate_dyadic_shells: j_min > j_max");
    std::vector<IntegralResult> out;
    out.reserve(static_cast<std::size_t>(j_max - j_min + 1));
    for (int j = j_min; j <= j_max; ++j)
        out.push_back(integrate_finite(f, std::ldexp(1.0, j - 1), std::ldexp(1.0, j), spec, breakpoints));
    return out;
}

GaussRule gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be positive");
    GaussRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // Recompute the derivative at the converged node.
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[static_cast<std::size_t>(i)] = -x;
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
    return rule;
}

GaussRule gauss_jacobi(int n, double a, double b) {
    if (n < 1) throw std::invalid_argument("gauss_jacobi: n must be positive");
    if (!(a > -1.0) || !(b > -1.0)) throw std::invalid_argument("gauss_jacobi: exponents must exceed -1");
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    const double ab = a + b;
    for (int k = 0; k < n; ++k) {
        const double s = 2.0 * k + ab;
        J(k, k) = k == 0 ? (b - a) / (ab + 2.0) : (b * b - a * a) / (s * (s + 2.0));
        if (k + 1 < n) {
            const int m = k + 1;
            const double t = 2.0 * m + ab;
            double beta;
            if (m == 1)
                beta = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
            else
                beta = 4.0 * m * (m + a) * (m + b) * (m + ab) / (t * t * (t + 1.0) * (t - 1.0));
            J(k, k + 1) = J(k + 1, k) = std::sqrt(beta);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(J);
    const double log_mu0 = (ab + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) + std::lgamma(b + 1.0) - std::lgamma(ab + 2.0);
    const double mu0 = std::exp(log_mu0);
    GaussRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        rule.nodes[static_cast<std::size_t>(i)] = eig.eigenvalues()(i);
        const double v = eig.eigenvectors()(0, i);
        rule.weights[static_cast<std::size_t>(i)] = mu0 * v * v;
    }
    return rule;
}

GaussRule composite_gauss_legendre(double a, double b, int panels, int points_per_panel) {
    if (panels < 1) throw std::invalid_argument("composite_gauss_legendre: panels must be positive");
    const GaussRule base = gauss_legendre(points_per_panel);
    GaussRule out;
    out.nodes.reserve(static_cast<std::size_t>(panels * points_per_panel));
    out.weights.reserve(out.nodes.capacity());
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double c = a + (p + 0.5) * h;
        for (std::size_t i = 0; i < base.nodes.size(); ++i) {
            out.nodes.push_back(c + 0.5 * h * base.nodes[i]);
            out.weights.push_back(0.5 * h * base.weights[i]);
        }
    }
    return out;
}

}  // namespace dunkl
