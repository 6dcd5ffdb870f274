#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dunkl/quadrature.hpp"

namespace dunkl {

struct RadialProfile;

/// Reflection-group model. Coordinate weights exist only for the product
/// model Z_2^d, w_k(x) = prod |x_i|^(2 k_i). A model built from (d, gamma)
/// alone is realized as the product model with equal multiplicities gamma/d;
/// every radial quantity depends only on (d, gamma) apart from the value of
/// c_k (and hence d_k), which this choice pins down.
class ModelParams {
public:
    static ModelParams product(std::vector<double> multiplicities);
    static ModelParams radial(int d, double gamma);

    int dim() const noexcept { return d_; }
    double gamma() const noexcept { return gamma_; }
    /// Bessel order gamma + d/2 - 1 of the radial kernel.
    double bessel_order() const noexcept { return gamma_ + 0.5 * d_ - 1.0; }
    /// Homogeneity degree 2 gamma + d of the measure w_k(x) dx.
    double homogeneity() const noexcept { return 2.0 * gamma_ + d_; }
    bool has_coordinate_weights() const noexcept { return !gamma_only_; }
    /// Multiplicities actually used for c_k (the equal split in gamma-only mode).
    const std::vector<double>& multiplicities() const noexcept { return k_; }

    std::string describe() const;

private:
    ModelParams(int d, std::vector<double> k, double gamma, bool gamma_only);

    int d_;
    std::vector<double> k_;
    double gamma_;
    bool gamma_only_;
};

struct DerivedConstants {
    double c_k;
    double d_k;
};

/// prod_i |x_i|^(2 k_i); requires coordinate weights.
double weight_wk(const ModelParams& params, std::span<const double> x);

/// c_k = (int e^{-|x|^2/2} w_k(x) dx)^{-1}, closed form
/// c_k^{-1} = prod_i 2^{k_i + 1/2} Gamma(k_i + 1/2).
double mehta_constant(const ModelParams& params);

/// Same constant by one-dimensional quadrature of each coordinate factor.
double mehta_constant_quadrature(const ModelParams& params, const QuadratureSpec& spec = {});

/// d_k = c_k^{-1} / (2^{gamma + d/2 - 1} Gamma(gamma + d/2)).
double sphere_weight_dk(const ModelParams& params);

/// Direct integral of w_k over S^{d-1} (surface measure, not normalized):
/// 2 prod_i Gamma(k_i + 1/2) / Gamma(gamma + d/2).
double sphere_weight_direct(const ModelParams& params);

DerivedConstants derived_constants(const ModelParams& params);

/// (d_k int_0^inf |F(r)|^p r^{2 gamma + d - 1} dr)^{1/p}. Throws DivergenceError
/// when the profile's decay makes the integral infinite.
IntegralResult lp_norm_radial(const ModelParams& params, const RadialProfile& f, double p,
                              const QuadratureSpec& spec = {});

}  // namespace dunkl
