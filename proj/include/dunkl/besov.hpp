#pragma once

#include <limits>
#include <span>
#include <vector>

#include "dunkl/modulus.hpp"

namespace dunkl {

struct BesovResult {
    double value = 0.0;  // sup_x omega(x) / x^beta over the grid
    double argmax = 0.0;
    /// The ratio keeps growing towards small x: the seminorm is infinite.
    bool infinite = false;
    /// Log-log slope of omega over the lowest decade of the grid.
    double small_x_slope = std::numeric_limits<double>::quiet_NaN();
    /// Spectral truncation bound on each omega value. A jump is resolved
    /// only down to x of order 1 / cutoff.
    double truncation_bound = 0.0;
    std::vector<double> x;
    std::vector<double> ratio;
};

/// sup over x_grid of omega_{p,k}(f)(x) / x^beta (d = 1).
/// Infinity flag: the maximum sits at the smallest grid point, omega's slope
/// over the lowest grid decade is below beta - 0.05, and halving the smallest
/// point raises the ratio again.
BesovResult besov_seminorm(double k, const RadialProfile& f, double beta, double p, std::span<const double> x_grid,
                           const ModulusOptions& opts = {}, Exec exec = Exec::parallel);

/// Weight g with a candidate constant kappa for the class G_theta; theta may
/// be infinite (the shell L^theta norm is then a supremum).
struct WeightClassSpec {
    RadialProfile g;
    double theta = 1.0;
    double kappa = 1.0;
};

struct ShellCheck {
    int eta = 0;
    double lhs = 0.0;         // (int_{C_eta} g^theta w_k)^(1/theta)
    double rhs_factor = 0.0;  // 2^(eta (1 - theta)(2 gamma + d) / theta) int_{C_{eta-1}} g w_k
    double kappa_needed = 0.0;
    bool pass = false;
};

struct ClassGReport {
    std::vector<ShellCheck> shells;  // eta = 1..eta_max
    double kappa_star = 0.0;         // smallest kappa passing every shell
    bool pass = false;               // with spec.kappa
    /// 2^m ((2^m - 1)/m)^(1/theta - 1), m = 2 gamma + d: the g = 1 bound without d_k.
    double printed_bound = 0.0;
    /// The same with the factor d_k^(1/theta - 1) from the shell integrals.
    double adjusted_bound = 0.0;
};

/// Shells C_eta = [2^eta, 2^(eta+1)). Divergent shell integrals throw
/// DivergenceError.
ClassGReport class_G_check(const WeightClassSpec& spec, const ModelParams& params, int eta_max,
                           const QuadratureSpec& quad = {});

}  // namespace dunkl
