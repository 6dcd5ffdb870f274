#pragma once

#include <memory>
#include <vector>

#include "dunkl/kernels.hpp"
#include "dunkl/special_functions.hpp"
#include "dunkl/transform.hpp"

namespace dunkl {

/// tau_x f(y) for radial f on the line (rank one, multiplicity k), as the
/// inverse transform of xi -> E_k(ix, xi) F_k f(xi). The imaginary part
/// cancels by parity, leaving
///   2 c_k int_0^inf [A(x xi) A(y xi) - B(x xi) B(y xi)] F_k f(xi) xi^(2k) dxi
/// with A + iB = E_k(i., .). Adaptive quadrature; F_k f evaluated on demand.
IntegralResult translate_radial_rank1(double k, const RadialProfile& f, double x, double y,
                                      const QuadratureSpec& spec = inner_spec());

/// Bulk translation from a tabulated transform. Construction samples F_k f on
/// a SpectralGrid; each evaluation is then a weighted sum over the grid.
class Rank1Translator {
public:
    Rank1Translator(double k, const RadialProfile& f, SpectralOptions opts = {}, Exec exec = Exec::parallel);

    double operator()(double x, double y) const;
    double multiplicity() const noexcept { return k_; }
    const SpectralGrid& grid() const noexcept { return grid_; }
    const Rank1Kernel& kernel() const noexcept { return *kernel_; }
    /// Per-node weights 2 c_k w_j F_k f(xi_j) xi_j^(2k).
    const std::vector<double>& weights() const noexcept { return weights_; }
    /// Bound on the pointwise error from truncating the xi integral.
    double truncation_bound() const noexcept { return truncation_; }

private:
    double k_;
    std::shared_ptr<const Rank1Kernel> kernel_;
    SpectralGrid grid_;
    std::vector<double> weights_;
    double truncation_;
};

/// Envelope for tau_x f given the envelope of f (support grows by |x|).
Decay translated_decay(const Decay& d, double x);

struct ContractionResult {
    double ratio = 0.0;  // ||tau_x f||_{p,k} / ||f||_{p,k}
    double translated_norm = 0.0;
    double norm = 0.0;
    double error_bound = 0.0;  // truncation + quadrature, relative
};

/// Contraction ratio of tau_x on radial L^p_k(R), 1 <= p <= 2. At p = 2 both
/// norms are spectral; otherwise tau_x f is evaluated pointwise.
ContractionResult translation_lp_ratio(double k, const RadialProfile& f, double x, double p,
                                       const SpectralOptions& opts = {}, Exec exec = Exec::parallel);

/// Same with a prebuilt translator for f. Off p = 2 the y integral runs on
/// a fixed composite Gauss-Legendre rule out to the envelope reach of tau_x f;
/// a 12-point rerun on the same panels supplies the quadrature error.
ContractionResult translation_lp_ratio(const Rank1Translator& tau, const RadialProfile& f, double x, double p,
                                       Exec exec = Exec::parallel);

}  // namespace dunkl
