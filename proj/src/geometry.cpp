#include "dunkl/geometry.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "dunkl/profile.hpp"

namespace dunkl {

ModelParams::ModelParams(int d, std::vector<double> k, double gamma, bool gamma_only)
    : d_(d), k_(std::move(k)), gamma_(gamma), gamma_only_(gamma_only) {}

ModelParams ModelParams::product(std::vector<double> multiplicities) {
    if (multiplicities.empty()) throw std::invalid_argument("product model needs dimension >= 1");
    double gamma = 0.0;
    for (double k : multiplicities) {
        if (!(k >= 0.0) || !std::isfinite(k)) throw std::invalid_argument("multiplicities must be finite and >= 0");
        gamma += k;
    }
    const int d = static_cast<int>(multiplicities.size());
    return ModelParams(d, std::move(multiplicities), gamma, false);
}

ModelParams ModelParams::radial(int d, double gamma) {
    if (d < 1) throw std::invalid_argument("dimension must be >= 1");
    if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw std::invalid_argument("gamma must be finite and >= 0");
    return ModelParams(d, std::vector<double>(static_cast<std::size_t>(d), gamma / d), gamma, true);
}

std::string ModelParams::describe() const {
    std::ostringstream os;
    os << "d=" << d_ << " gamma=" << gamma_;
    if (gamma_only_) {
        os << " (equal split)";
    } else {
        os << " k=[";
        for (std::size_t i = 0; i < k_.size(); ++i) os << (i ? "," : "") << k_[i];
        os << "]";
    }
    return os.str();
}

double weight_wk(const ModelParams& params, std::span<const double> x) {
    if (!params.has_coordinate_weights())
        throw std::logic_error("w_k needs explicit multiplicities; this model was built from (d, gamma) only");
    if (x.size() != static_cast<std::size_t>(params.dim())) throw std::invalid_argument("weight_wk: dimension mismatch");
    double w = 1.0;
    const auto& k = params.multiplicities();
    for (std::size_t i = 0; i < x.size(); ++i)
        if (k[i] != 0.0) w *= std::pow(std::abs(x[i]), 2.0 * k[i]);
    return w;
}

double mehta_constant(const ModelParams& params) {
    double log_inv = 0.0;
    for (double k : params.multiplicities()) log_inv += (k + 0.5) * std::numbers::ln2 + std::lgamma(k + 0.5);
    return std::exp(-log_inv);
}

double mehta_constant_quadrature(const ModelParams& params, const QuadratureSpec& spec) {
    // int_R e^{-x^2/2} |x|^{2k} dx = 2 int_0^inf ..., one factor per coordinate.
    double inv = 1.0;
    for (double k : params.multiplicities()) {
        const double e = 2.0 * k;
        auto f = [e](double x) { return std::exp(-0.5 * x * x) * (e == 0.0 ? 1.0 : std::pow(x, e)); };
        Decay decay = Decay::gaussian(0.5);
        decay.poly = e;
        EndpointBehavior ends{e > 0.0 && e < 1.0 ? e : 0.0, 0.0};
        inv *= 2.0 * integrate_semi_infinite(f, decay, spec, 0.0, {}, ends).value;
    }
    return 1.0 / inv;
}

double sphere_weight_dk(const ModelParams& params) {
    const double a = params.gamma() + 0.5 * params.dim();
    return std::exp(-std::log(mehta_constant(params)) - (a - 1.0) * std::numbers::ln2 - std::lgamma(a));
}

double sphere_weight_direct(const ModelParams& params) {
    double log_num = std::numbers::ln2;
    for (double k : params.multiplicities()) log_num += std::lgamma(k + 0.5);
    return std::exp(log_num - std::lgamma(params.gamma() + 0.5 * params.dim()));
}

DerivedConstants derived_constants(const ModelParams& params) {
    return {mehta_constant(params), sphere_weight_dk(params)};
}

IntegralResult lp_norm_radial(const ModelParams& params, const RadialProfile& f, double p, const QuadratureSpec& spec) {
    if (!(p >= 1.0) || !std::isfinite(p)) throw std::invalid_argument("lp_norm_radial: need 1 <= p < inf");
    const double m = params.homogeneity() - 1.0;
    auto integrand = [&f, p, m](double r) {
        const double v = std::abs(f(r));
        if (v == 0.0) return 0.0;
        return std::pow(v, p) * (m == 0.0 ? 1.0 : std::pow(r, m));
    };
    const IntegralResult raw = integrate_semi_infinite(integrand, f.decay.raised(p, m), spec, 0.0, f.breakpoints);
    const double dk = sphere_weight_dk(params);
    IntegralResult out;
    const double mass = dk * raw.value;
    out.value = std::pow(mass, 1.0 / p);
    // First-order propagation of the absolute errors of the p-th power.
    const double slope = mass > 0.0 ? out.value / (p * mass) : 0.0;
    out.error_estimate = slope * dk * raw.error_estimate;
    out.tail_bound = mass > 0.0 ? slope * dk * raw.tail_bound : std::pow(dk * raw.tail_bound, 1.0 / p);
    out.panels = raw.panels;
    return out;
}

}  // namespace dunkl
