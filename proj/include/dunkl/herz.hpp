#pragma once

#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "dunkl/geometry.hpp"
#include "dunkl/kernels.hpp"
#include "dunkl/profile.hpp"
#include "dunkl/report.hpp"

namespace dunkl {

struct HerzParams {
    double beta = 1.0;
    double p = 2.0;
    double q = 2.0;
    int j_min = -30;
    int j_max = 40;

    void validate() const;
};

struct HerzNorm {
    /// (sum_j (2^(j beta) ||f chi_j||_{p,k})^q)^(1/q) over [j_min, j_max].
    double value = 0.0;
    /// Geometric extrapolation of the terms beyond both ends, as an
    /// increment of value.
    double tail_residual = 0.0;
    /// ||f chi_j||_{p,k} for j = j_min..j_max, shell A_j = [2^(j-1), 2^j].
    std::vector<double> shell_norms;
    /// The terms do not decay at one of the ends.
    bool infinite = false;
    /// tail_residual exceeds rel_tol * value.
    bool truncation_warning = false;

    double extrapolated() const { return value + tail_residual; }
};

HerzNorm herz_norm(const ModelParams& params, const RadialProfile& f, const HerzParams& hp,
                   const QuadratureSpec& quad = {}, Exec exec = Exec::parallel);

/// phi on [0, 1] and psi(t) = t^-(m (1 - 1/p)) phi(t), m = 2 gamma + d.
class CesaroWeight {
public:
    CesaroWeight(std::string name, std::function<double(double)> phi, const ModelParams& params, double p,
                 double order_at_zero = std::numeric_limits<double>::quiet_NaN());

    static CesaroWeight constant(const ModelParams& params, double p, double c = 1.0);
    static CesaroWeight power(const ModelParams& params, double p, double a);
    /// sum_i c_i t^i.
    static CesaroWeight polynomial(const ModelParams& params, double p, std::vector<double> coeffs);
    /// "const", "const(c)", "power(a)" or "poly(c0,c1,...)".
    static CesaroWeight parse(const std::string& text, const ModelParams& params, double p);

    double phi(double t) const { return phi_(t); }
    double psi(double t) const;
    const std::string& name() const noexcept { return name_; }
    double p() const noexcept { return p_; }
    /// m (1 - 1/p).
    double shift() const noexcept { return shift_; }
    /// phi(t) ~ t^order as t -> 0 (exact for power weights, else measured).
    double order_at_zero() const noexcept { return order_; }

    struct Certificate {
        bool concave = false;
        /// Largest (psi(t_{i-1}) + psi(t_{i+1}))/2 - psi(t_i) on the grid.
        double worst_violation = 0.0;
        int grid = 0;
    };
    /// Midpoint concavity of psi on t_i = i / grid, i = 1..grid (psi may be
    /// singular at 0), tolerance 1e-10.
    const Certificate& concavity() const noexcept { return certificate_; }

private:
    std::string name_;
    std::function<double(double)> phi_;
    double p_;
    double shift_;
    double order_;
    Certificate certificate_;
};

/// C_phi f(s) = int_0^1 F(s / t) t^-m phi(t) dt, computed as
/// int_1^inf F(s u) u^(m - 2) phi(1/u) du. Throws DivergenceError when the
/// decay of F cannot compensate phi near t = 0. s = 0 gives F(0) int t^-m phi.
IntegralResult cesaro_apply(const ModelParams& params, const CesaroWeight& w, const RadialProfile& f, double s,
                            const QuadratureSpec& quad = {});

/// C_phi f as a profile (evaluated lazily); its decay tag follows F.
RadialProfile cesaro_profile(const ModelParams& params, const CesaroWeight& w, const RadialProfile& f,
                             const QuadratureSpec& quad = {});

struct ConditionIntegral {
    double value = 0.0;
    double error_estimate = 0.0;
    bool infinite = false;
};

/// int_0^1 t^b psi(t) dt with b = hp.beta + extra (extra = epsilon gives L(epsilon)).
ConditionIntegral cesaro_condition_integral(const CesaroWeight& w, const HerzParams& hp, double extra = 0.0,
                                            const QuadratureSpec& quad = {});

/// c_{q,beta} = 2^(1 - 2/q) (1 + 1/q) (1 + 2^beta).
double upper_constant(const HerzParams& hp);

/// f_eps(x) = |x|^-(beta + eps + m/p) for |x| > 1, 0 otherwise.
struct ExtremalFamily {
    double eps;
    double beta;
    double p;
    ModelParams params;

    RadialProfile profile() const;
    /// ((2^((beta + eps) p) - 1) / ((beta + eps) p)) d_k.
    double C() const;
    /// C^(1/p) 2^(-j (beta + eps)) for j >= 1, 0 otherwise.
    double shell_norm(int j) const;
};

struct ExtremalHerz {
    double closed_form = 0.0;      // C^(1/p) 2^-eps / (1 - 2^(-q eps))^(1/q)
    double printed_variant = 0.0;  // C^(1/p) 2^(-q eps) / (1 - 2^(-q eps))^(1/q)
    double geometric_sum = 0.0;    // C^(1/p) (sum_{j=1}^{j_max} 2^(-j eps q))^(1/q)
    HerzNorm quadrature;
    double relative_error = 0.0;  // quadrature vs closed_form
};

ExtremalHerz extremal_herz_norm(const ModelParams& params, double eps, const HerzParams& hp,
                                const QuadratureSpec& quad = {}, Exec exec = Exec::parallel);

struct ProbePoint {
    double eps = 0.0;
    double R = 0.0;  // herz(C_phi f_eps) / herz(f_eps), tails extrapolated
    double L = 0.0;  // int_0^1 t^(beta + eps) psi(t) dt
    bool pass = false;
};

struct LowerProbe {
    std::vector<ProbePoint> points;
    double sup_R = 0.0;
    double I = 0.0;
    double L0 = 0.0;                // Richardson extrapolation of L to eps = 0
    double extrapolation_error = 0.0;
    bool pass = false;  // every R >= L (1 - tol) and |L0 - I| <= 1e-2 I
};

/// eps_grid must be halving (e.g. 0.4, 0.2, 0.1, 0.05); tol applies to R >= L.
LowerProbe operator_norm_lower_probe(const ModelParams& params, const CesaroWeight& w, const HerzParams& hp,
                                     std::span<const double> eps_grid, double tol = 1e-3,
                                     const QuadratureSpec& quad = {}, Exec exec = Exec::parallel);

struct SandwichOptions {
    std::vector<double> eps_grid{0.4, 0.2, 0.1, 0.05};
    double tol = 1e-3;
    QuadratureSpec quad;
};

/// Upper: herz(C_phi f) / herz(f) <= c_{q,beta} I (1 + tol) for every member
/// (asserted only with a concavity certificate; otherwise reported as
/// inconclusive). Lower: operator_norm_lower_probe.
VerificationReport sandwich_verify(const ModelParams& params, const CesaroWeight& w, const HerzParams& hp,
                                   std::span<const RadialProfile> family, const SandwichOptions& opts = {},
                                   Exec exec = Exec::parallel);

/// Continuous piecewise linear function on [0, 1].
struct PiecewiseLinear {
    std::vector<double> x;  // 0 = x_0 < ... < x_n = 1
    std::vector<double> y;

    double operator()(double t) const;
    double integral() const;
};

PiecewiseLinear random_piecewise_linear(std::mt19937_64& rng, int max_pieces = 8);
/// Concave and nonnegative: decreasing slopes from a sorted draw, shifted up
/// so the minimum is >= 0.
PiecewiseLinear random_concave(std::mt19937_64& rng, int max_pieces = 8);

/// psi(t_{i-1}) + psi(t_{i+1}) <= 2 psi(t_i) + tol on t_i = a + (b - a) i / grid.
bool midpoint_concave(const std::function<double(double)>& f, double a, double b, int grid = 1000,
                      double tol = 1e-10);

struct LemmaSample {
    double lhs = 0.0;
    double rhs = 0.0;
    bool pass = false;
};

struct LemmaStats {
    std::vector<LemmaSample> samples;
    int failures = 0;
    /// min over samples of (rhs - lhs) / max(rhs, tiny).
    double worst_margin = 0.0;
};

/// (int_0^1 f)^q <= int_0^1 f^q.
LemmaSample lemma41_sample(const PiecewiseLinear& f, double q, const QuadratureSpec& quad = {});
LemmaStats lemma41_check(std::span<const PiecewiseLinear> samples, double q, const QuadratureSpec& quad = {});

/// (int_0^1 f)^(1/q) <= ((1 + 1/q) / 2^(1/q)) int_0^1 f^(1/q) for concave f >= 0.
LemmaSample lemma42_sample(const PiecewiseLinear& f, double q, const QuadratureSpec& quad = {});
/// Throws std::invalid_argument on a sample that fails the concavity grid check.
LemmaStats lemma42_check(std::span<const PiecewiseLinear> samples, double q, const QuadratureSpec& quad = {});

}  // namespace dunkl
