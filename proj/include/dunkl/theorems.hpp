#pragma once

#include <string>
#include <vector>

#include "dunkl/besov.hpp"
#include "dunkl/modulus.hpp"
#include "dunkl/report.hpp"

namespace dunkl {

/// Exponents of the Fourier-side inequalities.
struct AnalysisParams {
    double p = 2.0;
    double q = 2.0;
    double beta = 0.5;

    /// p' = p / (p - 1).
    double conjugate() const;
    /// theta = p / (p - q p + q) = p' / (p' - q); infinite at q = p'.
    double theta() const;
    void validate() const;
};

struct TheoremOptions {
    /// Radius where the y integrals are truncated; a fitted power tail covers
    /// the rest.
    double s_max = 64.0;
    ModulusOptions modulus;
    QuadratureSpec quad;
    /// Log-spaced composite Gauss-Legendre panels for the modulus side.
    int panels_per_octave = 4;
    /// Largest relative change of LHS/RHS under doubling s_max and under
    /// refinement that still counts as stable.
    double stability_tol = 0.01;
    /// Integrand decay exponents within this of 1 are treated as divergent.
    double divergence_margin = 0.05;
    int class_shells = 10;

    /// Finer lattice and tighter tolerances for the refinement rerun.
    TheoremOptions refined() const;
};

/// One evaluation of both sides at a fixed truncation radius.
struct TheoremSides {
    double lhs = 0.0;
    double rhs = 0.0;
    double lhs_tail = 0.0;      // envelope bound beyond the LHS cutoff
    double rhs_tail = 0.0;      // fitted power tail beyond s_max
    double rhs_error = 0.0;     // Gauss-Legendre pair difference
    double rhs_exponent = 0.0;  // fitted decay exponent a of the RHS integrand ~ s^-a
    double ratio() const { return rhs > 0.0 ? lhs / rhs : 0.0; }
};

struct TheoremCheck {
    TheoremSides base;
    TheoremSides doubled;  // s_max doubled, same modulus
    TheoremSides refined;  // TheoremOptions::refined()
    double ratio = 0.0;
    /// max relative change of the ratio across the three runs.
    double stability = 0.0;
    /// RHS decay exponent predicted from the measured slopes of g and of the
    /// modulus near 0: b_g + q m / p' + q sigma - (m - 1).
    double predicted_exponent = 0.0;
    double modulus_slope = 0.0;
    double weight_slope = 0.0;
    /// Both the fit and the prediction put the exponent at or below 1: the
    /// RHS is infinite and the inequality holds vacuously.
    bool divergent = false;
    ClassGReport weight_class;
    Outcome outcome = Outcome::fail;
    std::string note;

    CheckRecord record(const std::string& name) const;
};

/// d_k int_2^inf g(s) |F_k f(s)|^q s^(m-1) ds with m = 2 gamma + d. The
/// cutoff and tail bound come from the spectral envelope of f times the decay
/// tag of g.
TheoremSides theorem_lhs(const ModelParams& params, const RadialProfile& f, const RadialProfile& g, double q,
                         const QuadratureSpec& quad = {});

/// LHS versus int_1^inf g(s) s^(-q m / p') omega_{p,k}(f)(pi / s)^q d_k s^(m-1) ds
/// on the line (multiplicity k), 1 < p <= 2. The weight is run through
/// class_G_check at theta = p' / (p' - q) and must have a finite kappa*.
/// An RHS whose integrand decays like s^-a with a <= 1 (fitted and predicted
/// alike) is reported inconclusive: the inequality then holds vacuously.
TheoremCheck verify_thm31(double k, const RadialProfile& f, const RadialProfile& g, const AnalysisParams& a,
                          const TheoremOptions& opts = {}, Exec exec = Exec::parallel);

/// Same with the smoothed modulus at 1 / s. p = 2 runs in any (d, gamma);
/// p < 2 only on the line.
TheoremCheck verify_thm32(const ModelParams& params, const RadialProfile& f, const RadialProfile& g,
                          const AnalysisParams& a, const TestBump& bump = TestBump::gaussian(),
                          const TheoremOptions& opts = {}, Exec exec = Exec::parallel);

struct IntegrabilityCheck {
    double q = 0.0;
    double norm = 0.0;  // ||F_k f||_{q,k}
    double tail_bound = 0.0;
    double refinement_change = 0.0;  // relative
    bool finite = false;
};

struct CorollaryReport {
    /// 1: beta <= m / p, L^q on (q_lower, p']; 2: beta > m / p, L^1.
    int regime = 0;
    double q_lower = 0.0;
    BesovResult seminorm;
    std::vector<IntegrabilityCheck> checks;
    bool pass = false;
};

/// m p / (beta p + m (p - 1)), m = 2 gamma + d.
double corollary_q_lower(const ModelParams& params, double beta, double p);

/// On the line (d = 1, k = gamma). Throws std::invalid_argument when the
/// Besov seminorm of f is infinite on x_grid. q_points grid values are
/// placed at q_lower + (p' - q_lower) i / q_points, i = 1..q_points.
CorollaryReport verify_cor31(const ModelParams& params, const RadialProfile& f, double beta, double p,
                             std::span<const double> x_grid, int q_points = 6, const ModulusOptions& opts = {},
                             Exec exec = Exec::parallel);

}  // namespace dunkl
