#pragma once

#include <vector>

#include "dunkl/geometry.hpp"
#include "dunkl/kernels.hpp"
#include "dunkl/profile.hpp"
#include "dunkl/quadrature.hpp"

namespace dunkl {

/// Inner tolerances used whenever a transform value feeds another integral.
QuadratureSpec inner_spec();

/// F_k f at |x| = s for radial f = F(|.|):
///   c_k d_k int_0^inf F(r) j_alpha(r s) r^(2 gamma + d - 1) dr,  alpha = gamma + d/2 - 1.
/// Panels are capped at pi / s for s > 0.
IntegralResult dunkl_transform_radial(const ModelParams& params, const RadialProfile& f, double s,
                                      const QuadratureSpec& spec = {});

/// Constant in front of d_k int G(s) j_alpha(r s) s^(2 gamma + d - 1) ds in the inverse.
/// With the forward transform carrying c_k, the Gaussian roundtrip forces c_k
/// here as well (the radial transform is then an involution).
double inverse_normalization(const ModelParams& params);

IntegralResult inverse_dunkl_radial(const ModelParams& params, const RadialProfile& g, double r,
                                    const QuadratureSpec& spec = {});

/// The transform as a profile, evaluated lazily by quadrature; its decay tag is
/// the source profile's spectral envelope.
RadialProfile transformed_profile(const ModelParams& params, const RadialProfile& f, const QuadratureSpec& spec = inner_spec());

struct HausdorffYoung {
    double ratio = 0.0;
    double transform_norm = 0.0;  // ||F_k f||_{p', k}
    double norm = 0.0;            // ||f||_{p, k}
    double error_estimate = 0.0;
    double tail_bound = 0.0;
};

/// ||F_k f||_{p',k} / ||f||_{p,k} for 1 < p <= 2 (p = 2: the Plancherel ratio).
HausdorffYoung hausdorff_young_ratio(const ModelParams& params, const RadialProfile& f, double p,
                                     const QuadratureSpec& spec = {});

struct SpectralOptions {
    /// 0 selects the cutoff from the profile's spectral envelope.
    double cutoff = 0.0;
    double max_cutoff = 200.0;
    /// Envelope tail of |F_k f|^tail_power s^(2 gamma + d - 1) allowed beyond
    /// the cutoff. Pointwise inversion needs power 1; Plancherel sums need 2.
    double tail_tol = 1e-13;
    int tail_power = 1;
    double panel_width = 0.25;
    int points_per_panel = 16;
    /// Largest |x| at which grid sums will be evaluated; narrows panels so the
    /// phase x * s changes by at most 8 per 16-point panel.
    double radius_hint = 16.0;
    QuadratureSpec quad = inner_spec();
};

/// F_k f sampled at the nodes of a composite Gauss-Legendre rule on [0, cutoff].
class SpectralGrid {
public:
    static SpectralGrid build(const ModelParams& params, const RadialProfile& f, const SpectralOptions& opts = {},
                              Exec exec = Exec::parallel);

    /// Spectral envelope of f with its scale fitted from transform samples
    /// on [from, 2 from] (times 2) when the profile does not provide one.
    static Decay envelope(const ModelParams& params, const RadialProfile& f, const SpectralOptions& opts = {});
    /// The cutoff build() would choose when opts.cutoff is 0.
    static double natural_cutoff(const ModelParams& params, const RadialProfile& f, const SpectralOptions& opts = {});

    const std::vector<double>& nodes() const noexcept { return nodes_; }
    const std::vector<double>& rule_weights() const noexcept { return weights_; }
    const std::vector<double>& values() const noexcept { return values_; }
    double cutoff() const noexcept { return cutoff_; }
    /// Envelope bound on int_cutoff^inf |F_k f(s)| s^(2 gamma + d - 1) ds.
    double tail_l1() const noexcept { return tail_l1_; }
    /// Envelope bound on int_cutoff^inf |F_k f(s)|^2 s^(2 gamma + d - 1) ds.
    double tail_l2() const noexcept { return tail_l2_; }
    const ModelParams& params() const noexcept { return params_; }

    /// d_k * rule weight * s^(2 gamma + d - 1) at each node.
    std::vector<double> measure_weights() const;
    /// ||F_k f||_{2,k} restricted to [0, cutoff].
    double l2_norm() const;

private:
    SpectralGrid(ModelParams params) : params_(std::move(params)) {}

    ModelParams params_;
    std::vector<double> nodes_;
    std::vector<double> weights_;
    std::vector<double> values_;
    double cutoff_ = 0.0;
    double tail_l1_ = 0.0;
    double tail_l2_ = 0.0;
};

}  // namespace dunkl
