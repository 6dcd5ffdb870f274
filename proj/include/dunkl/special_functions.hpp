#pragma once

#include <complex>
#include <memory>
#include <vector>

namespace dunkl {

class ModelParams;

/// Gamma function for x > 0; throws std::domain_error otherwise.
double gamma_fn(double x);

/// Normalized Bessel function j_alpha(x) = Gamma(alpha+1) (2/x)^alpha J_alpha(x),
/// alpha > -1/2 (alpha = -1/2 gives cos x).
///
/// Three regimes:
///  - |x| <= 0.5: power series.
///  - moderate |x|: the integral representation
///      j_alpha(x) = c_alpha * int_{-1}^{1} (1 - t^2)^(alpha - 1/2) cos(x t) dt,
///    evaluated with a Gauss-Gegenbauer rule built for this alpha, so the endpoint
///    weight is integrated exactly. The normalizing constant is taken as the
///    reciprocal of the rule's total weight, which makes j_alpha(0) = 1 exact.
///  - large |x|: Hankel asymptotic expansion, truncated at its smallest term.
/// On [1/2, 256) operator() reads a piecewise Chebyshev interpolant (unit
/// panels, degree 20) fitted to the two forms above; it agrees with them to
/// rounding and is several times cheaper.
///
/// Construction builds the rule; evaluation is const and thread-safe.
class NormalizedBessel {
public:
    explicit NormalizedBessel(double alpha);

    double operator()(double x) const;

    double alpha() const noexcept { return alpha_; }
    double asymptotic_threshold() const noexcept { return asymptotic_from_; }
    int rule_size() const noexcept { return rule_size_; }

    double series(double x) const;
    double integral(double x) const;
    double asymptotic(double x) const;
    double interpolated(double x) const;

private:
    double alpha_;
    double log_gamma_alpha1_;
    double asymptotic_from_;
    int rule_size_;
    std::vector<double> nodes_;    // positive half of the symmetric rule
    std::vector<double> weights_;  // normalized, doubled for the +- pair
    double center_weight_ = 0.0;
    std::vector<double> cheb_;  // kChebDegree + 1 coefficients per unit panel
    double asymptotic_scale_ = 0.0;
    double interpolate_to_ = 0.0;
};

/// Convenience wrapper; keeps a small per-thread cache of evaluators.
double bessel_normalized(double alpha, double x);

/// Process-wide evaluator for order alpha, built once and shared read-only.
std::shared_ptr<const NormalizedBessel> shared_bessel(double alpha);

/// Weighted sphere average of E_k(ix, .) at |x| = s: d_k * j_{gamma+d/2-1}(s).
double kernel_sphere_average(const ModelParams& params, double s);

/// Closed-form rank-one Dunkl kernel E_k(ix, y) for multiplicity k >= 0:
///   j_{k-1/2}(xy) + i xy/(2k+1) j_{k+1/2}(xy).
class Rank1Kernel {
public:
    explicit Rank1Kernel(double k);

    std::complex<double> operator()(double x, double y) const;
    /// Real and imaginary parts as functions of z = x*y.
    double even_part(double z) const { return even_(z); }
    double odd_part(double z) const { return z / (2.0 * k_ + 1.0) * odd_(z); }

    double multiplicity() const noexcept { return k_; }

private:
    double k_;
    NormalizedBessel even_;
    NormalizedBessel odd_;
};

std::complex<double> rank1_dunkl_kernel(double k, double x, double y);

}  // namespace dunkl
