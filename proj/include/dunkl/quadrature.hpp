#pragma once

#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dunkl {

using Integrand = std::function<double(double)>;

/// Tolerances and panel limits shared by every integral in the library.
struct QuadratureSpec {
    double rel_tol = 1e-8;
    double abs_tol = 1e-12;
    int max_panels = 4000;
    /// Upper bound on initial panel width; 0 disables. Oscillatory
    /// integrands with frequency s should use pi / s.
    double max_panel_width = 0.0;
    /// Largest truncation radius a semi-infinite integral may use.
    double max_radius = 1e4;

    QuadratureSpec refined(double factor = 10.0) const;
    void validate() const;
};

struct IntegralResult {
    double value = 0.0;
    double error_estimate = 0.0;
    double tail_bound = 0.0;  // zero for finite intervals
    int panels = 0;
};

/// Envelope of |f(r)| for large r, used to choose a cutoff and bound the
/// discarded tail. The envelope is scale * r^poly * base(r) for r >= from.
struct Decay {
    enum class Kind { gaussian, exponential, power, compact };

    Kind kind = Kind::compact;
    /// gaussian: a in exp(-a r^2); exponential: lambda in exp(-lambda r);
    /// power: the (negative) exponent; compact: support radius.
    double rate = 0.0;
    double poly = 0.0;
    /// NaN means "fit from samples of the integrand near the cutoff".
    double scale = std::numeric_limits<double>::quiet_NaN();
    double from = 0.0;

    static Decay gaussian(double a, double scale = 1.0, double from = 0.0);
    static Decay exponential(double lambda, double scale = 1.0, double from = 0.0);
    static Decay power(double exponent, double scale = 1.0, double from = 1.0);
    static Decay compact(double radius);

    /// Envelope of |f|^p * r^extra_poly given this envelope for |f|.
    Decay raised(double p, double extra_poly = 0.0) const;
    /// Envelope of a product f * g.
    Decay times(const Decay& other) const;

    double envelope(double r) const;
    /// Integral of the envelope over [R, inf) (R >= from); inf when not integrable.
    double tail(double R) const;
    /// Smallest radius (>= from, capped at cap) whose tail falls below tol.
    double radius_for_tail(double tol, double cap) const;
    std::string describe() const;
};

/// Integrand has an algebraic endpoint singularity |t - endpoint|^exponent.
struct EndpointBehavior {
    double left_exponent = 0.0;
    double right_exponent = 0.0;
};

class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, IntegralResult best)
        : std::runtime_error(what), best_(best) {}
    const IntegralResult& best() const noexcept { return best_; }

private:
    IntegralResult best_;
};

/// The integral is not finite (power decay too slow, endpoint exponent <= -1).
class DivergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Adaptive Gauss-Kronrod (10/21 point) integration with global bisection
/// of the worst panel. Breakpoints seed the initial panelization so that
/// known kinks and jumps fall on panel boundaries.
IntegralResult integrate_finite(const Integrand& f, double a, double b,
                                const QuadratureSpec& spec = {},
                                std::span<const double> breakpoints = {},
                                EndpointBehavior endpoints = {});

/// Integral over [lo, inf). The cutoff R is chosen from the decay envelope so
/// that the analytic tail bound drops below abs_tol, capped at max_radius.
IntegralResult integrate_semi_infinite(const Integrand& f, const Decay& decay,
                                       const QuadratureSpec& spec = {},
                                       double lo = 0.0,
                                       std::span<const double> breakpoints = {},
                                       EndpointBehavior endpoints = {});

/// One finite integral per dyadic shell [2^(j-1), 2^j], j = j_min..j_max.
std::vector<IntegralResult> integrate_dyadic_shells(const Integrand& f, int j_min, int j_max,
                                                    const QuadratureSpec& spec = {},
                                                    std::span<const double> breakpoints = {});

/// Fixed rule on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussRule gauss_legendre(int n);

/// Gauss-Jacobi rule for the weight (1 - x)^a (1 + x)^b on [-1, 1], a, b > -1.
GaussRule gauss_jacobi(int n, double a, double b);

/// Composite Gauss-Legendre nodes on [a, b]; weights include the Jacobian.
GaussRule composite_gauss_legendre(double a, double b, int panels, int points_per_panel);

}  // namespace dunkl
