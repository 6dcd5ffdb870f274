#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dunkl/quadrature.hpp"

namespace dunkl {

enum class Smoothness { continuous, piecewise };

/// A radial function f(x) = F(|x|) given through its profile F on [0, inf).
struct RadialProfile {
    std::string name;
    std::function<double(double)> eval;
    Decay decay = Decay::compact(0.0);
    Smoothness smoothness = Smoothness::continuous;
    /// Radii where F or one of its low derivatives jumps.
    std::vector<double> breakpoints;
    /// Envelope of the Dunkl transform of F as a function of the Bessel order
    /// gamma + d/2 - 1; empty when unknown.
    std::function<Decay(double)> transform_decay;

    double operator()(double r) const { return eval(r); }

    /// transform_decay if known, else the generic bound for a piecewise
    /// continuous profile, s^-(alpha + 3/2) with a fitted scale.
    Decay spectral_decay(double alpha) const;

    /// Spot-check the decay tag at three radii beyond its cutoff.
    bool decay_is_honest() const;
};

namespace profiles {

RadialProfile zero();
/// exp(-r^2 / (2 sigma^2)).
RadialProfile gaussian(double sigma = 1.0);
/// exp(-lambda r).
RadialProfile exponential(double lambda = 1.0);
/// 1 on [a, b], 0 elsewhere.
RadialProfile indicator(double a, double b);
/// (1 - r^2)^nu on [0, 1), nu >= 1: compactly supported with nu - 1
/// continuous derivatives across r = 1.
RadialProfile bump(double nu);
/// r^-a for r > cutoff, 0 otherwise.
RadialProfile power(double a, double cutoff);
/// Indicator of [-a, a] convolved with the N(0, sigma^2) density, restricted
/// to r >= 0: (erf((a - r)/(sqrt2 sigma)) + erf((a + r)/(sqrt2 sigma))) / 2.
RadialProfile smoothed_indicator(double a, double sigma);
/// Constant c (used as a weight g, not as an L^p function).
RadialProfile constant(double c);

/// r -> c * F(r).
RadialProfile scaled(const RadialProfile& f, double c);
/// r -> F(r / lambda).
RadialProfile dilated(const RadialProfile& f, double lambda);
/// r -> a F(r) + b G(r).
RadialProfile combination(double a, const RadialProfile& f, double b, const RadialProfile& g);

/// Parse "gaussian(1)", "exp(2)", "indicator(0,1)", "power(1.5,1)",
/// "smoothed_indicator(1,0.2)", "bump(3)", "constant(1)" or "zero".
RadialProfile parse(const std::string& text);

}  // namespace profiles

}  // namespace dunkl
