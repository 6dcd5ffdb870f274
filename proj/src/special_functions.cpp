#include "dunkl/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "dunkl/geometry.hpp"
#include "dunkl/quadrature.hpp"

namespace dunkl {

namespace {

constexpr double kSeriesRadius = 0.5;
constexpr int kChebDegree = 20;
constexpr double kInterpolateTo = 256.0;

}  // namespace

double gamma_fn(double x) {
    if (!(x > 0.0)) throw std::domain_error("gamma_fn: argument must be positive");
    return std::tgamma(x);
}

NormalizedBessel::NormalizedBessel(double alpha) : alpha_(alpha) {
    if (!(alpha >= -0.5)) throw std::domain_error("NormalizedBessel: order must be >= -1/2");
    log_gamma_alpha1_ = std::lgamma(alpha + 1.0);
    asymptotic_from_ = std::max(25.0, 2.0 * alpha * alpha + 10.0);
    asymptotic_scale_ = std::exp(log_gamma_alpha1_ + alpha * std::log(2.0)) * std::sqrt(2.0 / std::numbers::pi);
    if (alpha == -0.5) {
        rule_size_ = 0;
        return;
    }
    rule_size_ = static_cast<int>(std::ceil(0.75 * asymptotic_from_)) + 16;
    const double e = alpha - 0.5;
    const GaussRule rule = gauss_jacobi(rule_size_, e, e);
    double total = 0.0;
    for (double w : rule.weights) total += w;
    // Symmetrize: pair node i with node n-1-i.
    const int n = rule_size_;
    for (int i = n / 2; i < n; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        const auto mi = static_cast<std::size_t>(n - 1 - i);
        const double t = 0.5 * (rule.nodes[ui] - rule.nodes[mi]);
        const double w = 0.5 * (rule.weights[ui] + rule.weights[mi]) / total;
        if (n % 2 == 1 && i == n / 2) {
            center_weight_ = rule.weights[ui] / total;
            continue;
        }
        nodes_.push_back(t);
        weights_.push_back(2.0 * w);
    }
    // Chebyshev coefficients on [i, i+1] from values at the Chebyshev points.
    const int panels = static_cast<int>(std::ceil(std::max(asymptotic_from_, kInterpolateTo)));
    interpolate_to_ = panels;
    constexpr int nc = kChebDegree + 1;
    std::vector<double> f(nc);
    cheb_.assign(static_cast<std::size_t>(panels) * nc, 0.0);
    for (int p = 0; p < panels; ++p) {
        for (int i = 0; i < nc; ++i) {
            const double u = std::cos(std::numbers::pi * (i + 0.5) / nc);
            const double x = p + 0.5 + 0.5 * u;
            f[static_cast<std::size_t>(i)] = x < asymptotic_from_ ? integral(x) : asymptotic(x);
        }
        for (int j = 0; j < nc; ++j) {
            double c = 0.0;
            for (int i = 0; i < nc; ++i) c += f[static_cast<std::size_t>(i)] * std::cos(std::numbers::pi * j * (i + 0.5) / nc);
            cheb_[static_cast<std::size_t>(p * nc + j)] = (j == 0 ? 1.0 : 2.0) * c / nc;
        }
    }
}

double NormalizedBessel::interpolated(double x) const {
    x = std::abs(x);
    const auto p = static_cast<std::size_t>(x);
    const double u = 2.0 * (x - static_cast<double>(p)) - 1.0;
    const double* c = cheb_.data() + p * (kChebDegree + 1);
    // Clenshaw
    double b1 = 0.0;
    double b2 = 0.0;
    for (int j = kChebDegree; j >= 1; --j) {
        const double b0 = 2.0 * u * b1 - b2 + c[j];
        b2 = b1;
        b1 = b0;
    }
    return u * b1 - b2 + c[0];
}

double NormalizedBessel::series(double x) const {
    const double q = -0.25 * x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int m = 1; m < 200; ++m) {
        term *= q / (m * (m + alpha_));
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

double NormalizedBessel::integral(double x) const {
    double sum = center_weight_;
    for (std::size_t i = 0; i < nodes_.size(); ++i) sum += weights_[i] * std::cos(x * nodes_[i]);
    return sum;
}

double NormalizedBessel::asymptotic(double x) const {
    x = std::abs(x);
    const double mu = 4.0 * alpha_ * alpha_;
    double p = 0.0;
    double q = 0.0;
    double term = 1.0;
    double last = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 400; ++k) {
        if (k > 0) {
            const double odd = 2.0 * k - 1.0;
            term *= (mu - odd * odd) / (k * 8.0 * x);
        }
        const double mag = std::abs(term);
        if (mag > last) break;  // asymptotic series: stop at the smallest term
        last = mag;
        const double signed_term = (k / 2) % 2 == 0 ? term : -term;
        if (k % 2 == 0)
            p += signed_term;
        else
            q += signed_term;
        if (mag < 1e-17 * std::max(std::abs(p), 1e-300)) break;
    }
    const double chi = x - (0.5 * alpha_ + 0.25) * std::numbers::pi;
    return asymptotic_scale_ * std::pow(x, -alpha_ - 0.5) * (p * std::cos(chi) - q * std::sin(chi));
}

double NormalizedBessel::operator()(double x) const {
    x = std::abs(x);
    if (alpha_ == -0.5) return std::cos(x);
    if (x <= kSeriesRadius) return series(x);
    if (x < interpolate_to_) return interpolated(x);
    return asymptotic(x);
}

double bessel_normalized(double alpha, double x) {
    constexpr std::size_t kCacheSize = 8;
    thread_local std::vector<NormalizedBessel> cache;
    for (const auto& b : cache)
        if (b.alpha() == alpha) return b(x);
    if (cache.size() == kCacheSize) cache.erase(cache.begin());
    cache.emplace_back(alpha);
    return cache.back()(x);
}

std::shared_ptr<const NormalizedBessel> shared_bessel(double alpha) {
    static std::mutex mutex;
    static std::map<double, std::shared_ptr<const NormalizedBessel>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[alpha];
    if (!slot) slot = std::make_shared<const NormalizedBessel>(alpha);
    return slot;
}

double kernel_sphere_average(const ModelParams& params, double s) {
    if (s < 0.0) throw std::domain_error("kernel_sphere_average: s must be nonnegative");
    return derived_constants(params).d_k * bessel_normalized(params.bessel_order(), s);
}

Rank1Kernel::Rank1Kernel(double k) : k_(k), even_(k - 0.5), odd_(k + 0.5) {
    if (!(k >= 0.0)) throw std::domain_error("Rank1Kernel: multiplicity must be nonnegative");
}

std::complex<double> Rank1Kernel::operator()(double x, double y) const {
    const double z = x * y;
    return {even_part(z), odd_part(z)};
}

std::complex<double> rank1_dunkl_kernel(double k, double x, double y) {
    if (!(k >= 0.0)) throw std::domain_error("rank1_dunkl_kernel: multiplicity must be nonnegative");
    const double z = x * y;
    return {bessel_normalized(k - 0.5, z), z / (2.0 * k + 1.0) * bessel_normalized(k + 0.5, z)};
}

}  // namespace dunkl
