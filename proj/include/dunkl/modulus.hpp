#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "dunkl/geometry.hpp"
#include "dunkl/kernels.hpp"
#include "dunkl/profile.hpp"
#include "dunkl/transform.hpp"
#include "dunkl/translation.hpp"

namespace dunkl {

/// sup_{t0 <= t <= x} h(t) for every x in [x_min, x_max], from one geometric
/// lattice t0 = floor_ratio * x_min < ... <= x_max.
///
/// Each lattice cell is probed at its geometric midpoint. A cell whose midpoint
/// beats both ends holds an interior maximum, which is located by golden
/// section; other cells are taken as monotone and contribute their larger end.
/// A query then combines the prefix maximum with the part of the last cell
/// below x, so the result is nondecreasing in x by construction.
class LatticeSupremum {
public:
    /// h evaluated at a batch of arguments.
    using Batch = std::function<std::vector<double>(std::span<const double>)>;

    LatticeSupremum(Batch h, double x_min, double x_max, int per_decade = 32, double floor_ratio = 1e-3);

    double operator()(double x) const;
    std::vector<double> operator()(std::span<const double> xs) const;

    const std::vector<double>& lattice() const noexcept { return t_; }
    const std::vector<double>& values() const noexcept { return h_; }
    double x_min() const noexcept { return x_min_; }
    double x_max() const noexcept { return x_max_; }
    int interior_cells() const noexcept { return interior_; }

private:
    enum class Cell { rising, falling, interior };

    double golden(double a, double b) const;
    std::size_t cell_of(double x) const;

    Batch h_fn_;
    double x_min_;
    double x_max_;
    std::vector<double> t_;
    std::vector<double> h_;
    std::vector<Cell> kind_;
    std::vector<double> prefix_;  // sup over [t0, t_i]
    int interior_ = 0;
};

struct ModulusOptions {
    int per_decade = 32;
    double floor_ratio = 1e-3;
    SpectralOptions spectral;
    /// Composite Gauss-Legendre layout of the spatial integral used off p = 2.
    double panel_width = 0.25;
    int points_per_panel = 16;
    /// Above this many (y, xi) pairs the kernel table is not stored.
    std::size_t max_table = std::size_t{1} << 22;
};

/// omega_{p,k}(f)(x) = sup_{0 < t <= x} sum_{u = +-1} ||tau_{tu} f - f||_{p,k}
/// for radial f on the line. Both points of the sphere carry weight 1, and
/// since f is even the two terms are equal.
/// p = 2: ||tau_t f - f||^2 = int |E_k(it, xi) - 1|^2 |F_k f(xi)|^2 |xi|^2k dxi.
/// 1 <= p < 2: tau_t f from a Rank1Translator, integrated on a fixed y rule.
class ContinuityModulus {
public:
    ContinuityModulus(double k, const RadialProfile& f, double p, double x_min, double x_max,
                      const ModulusOptions& opts = {}, Exec exec = Exec::parallel);

    double operator()(double x) const { return sup_(x); }
    std::vector<double> operator()(std::span<const double> xs) const { return sup_(xs); }
    /// The inner quantity h(t) = 2 ||tau_t f - f||_{p,k}.
    std::vector<double> defects(std::span<const double> t) const;
    double defect(double t) const;

    const LatticeSupremum& supremum() const noexcept { return sup_; }
    /// Bound on |h_computed - h| from truncating the spectral integral.
    double truncation_bound() const;
    /// ||f||_{p,k}.
    double norm() const;

    struct State;

private:
    std::shared_ptr<const State> state_;
    LatticeSupremum sup_;
};

/// One-shot omega_{p,k}(f)(x); builds a ContinuityModulus on [x, x].
double modulus_continuity(double k, const RadialProfile& f, double x, double p, const ModulusOptions& opts = {},
                          Exec exec = Exec::parallel);

/// The test function phi behind omega tilde.
struct TestBump {
    RadialProfile profile;
    RadialProfile transform_profile;
    /// |F_k phi| > annulus_floor on 1/2 < |z| < 1.
    double annulus_floor = 0.0;

    /// phi = exp(-r^2/2), its own transform, floor exp(-1/2).
    static TestBump gaussian();

    /// Samples the annulus (open ends) and checks the floor; also checks that
    /// transform_profile matches the quadrature transform of profile there.
    bool validate(const ModelParams& params, int samples = 64) const;
};

/// phi_t(y) = t^-(2 gamma + d) phi(y / t).
RadialProfile bump_dilation(const ModelParams& params, const RadialProfile& phi, double t);

/// max over s of |F_k(phi_t)(s) - F_k phi(t s)|, transforms by quadrature.
double dilation_identity_error(const ModelParams& params, const TestBump& bump, double t, std::span<const double> s);

/// omega tilde_{p,k}(f)(x) = sup_{0 < t <= x} ||f *_k phi_t||_{p,k}.
/// p = 2 is spectral in any (d, gamma): sum |F_k f|^2 F_k phi(t xi)^2 dmu_k.
/// p < 2 inverts F_k f(xi) F_k phi(t xi) on a radial grid.
class SmoothedModulus {
public:
    SmoothedModulus(const ModelParams& params, const RadialProfile& f, double p, const TestBump& bump, double x_min,
                    double x_max, const ModulusOptions& opts = {}, Exec exec = Exec::parallel);

    double operator()(double x) const { return sup_(x); }
    std::vector<double> operator()(std::span<const double> xs) const { return sup_(xs); }
    /// The inner quantity ||f *_k phi_t||_{p,k}.
    std::vector<double> norms(std::span<const double> t) const;

    const LatticeSupremum& supremum() const noexcept { return sup_; }
    double truncation_bound() const;

    struct State;

private:
    std::shared_ptr<const State> state_;
    LatticeSupremum sup_;
};

double modulus_tilde(const ModelParams& params, const RadialProfile& f, double x, double p, const TestBump& bump,
                     const ModulusOptions& opts = {}, Exec exec = Exec::parallel);

/// f *_k g defined by F_k(f *_k g) = F_k f . F_k g and evaluated as the grid
/// inverse transform of the product. Against the integral form
/// int tau_x f(-y) g(y) w_k(y) dy this carries an extra factor c_k.
struct Convolution {
    RadialProfile profile;
    /// Bound on the pointwise error from truncating the spectral integral.
    double truncation_bound = 0.0;
    double cutoff = 0.0;
};

Convolution convolve_k(const ModelParams& params, const RadialProfile& f, const RadialProfile& g,
                       const SpectralOptions& opts = {}, Exec exec = Exec::parallel);

}  // namespace dunkl
