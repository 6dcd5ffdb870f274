#include "dunkl/profile.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace dunkl {

Decay RadialProfile::spectral_decay(double alpha) const {
    if (transform_decay) return transform_decay(alpha);
    return Decay::power(-(alpha + 1.5), std::numeric_limits<double>::quiet_NaN(), 1.0);
}

bool RadialProfile::decay_is_honest() const {
    double cutoff = 0.0;
    switch (decay.kind) {
        case Decay::Kind::compact: cutoff = decay.rate; break;
        case Decay::Kind::gaussian: cutoff = std::max(decay.from, std::sqrt(5.0 / decay.rate)); break;
        case Decay::Kind::exponential: cutoff = std::max(decay.from, 5.0 / decay.rate); break;
        case Decay::Kind::power: cutoff = std::max(decay.from, 2.0); break;
    }
    for (double f : {1.25, 2.0, 4.0}) {
        const double r = std::max(cutoff, 1.0) * f;
        const double value = std::abs(eval(r));
        if (!std::isfinite(value)) return false;
        if (decay.kind == Decay::Kind::compact) {
            if (value != 0.0) return false;
        } else if (std::isfinite(decay.scale) && value > (1.0 + 1e-9) * decay.envelope(r) + 1e-300) {
            return false;
        }
    }
    return true;
}

namespace profiles {

RadialProfile zero() {
    RadialProfile f;
    f.name = "zero";
    f.eval = [](double) { return 0.0; };
    f.decay = Decay::compact(0.0);
    f.transform_decay = [](double) { return Decay::compact(0.0); };
    return f;
}

RadialProfile gaussian(double sigma) {
    if (!(sigma > 0.0)) throw std::invalid_argument("gaussian: sigma must be positive");
    RadialProfile f;
    std::ostringstream os;
    os << "gaussian(" << sigma << ")";
    f.name = os.str();
    const double a = 0.5 / (sigma * sigma);
    f.eval = [a](double r) { return std::exp(-a * r * r); };
    f.decay = Decay::gaussian(a);
    // F_k of exp(-r^2/(2 sigma^2)) is sigma^(2 alpha + 2) exp(-sigma^2 s^2 / 2).
    f.transform_decay = [sigma](double alpha) {
        return Decay::gaussian(0.5 * sigma * sigma, std::pow(sigma, 2.0 * alpha + 2.0));
    };
    return f;
}

RadialProfile exponential(double lambda) {
    if (!(lambda > 0.0)) throw std::invalid_argument("exponential: rate must be positive");
    RadialProfile f;
    std::ostringstream os;
    os << "exp(" << lambda << ")";
    f.name = os.str();
    f.eval = [lambda](double r) { return std::exp(-lambda * r); };
    f.decay = Decay::exponential(lambda);
    // F_k(e^{-lambda r})(s) = 2^{alpha+1} lambda Gamma(alpha+3/2) / (sqrt(pi) (lambda^2+s^2)^{alpha+3/2}).
    f.transform_decay = [lambda](double alpha) {
        const double c = std::pow(2.0, alpha + 1.0) * lambda * std::tgamma(alpha + 1.5) / std::sqrt(std::numbers::pi);
        return Decay::power(-(2.0 * alpha + 3.0), c, 1.0);
    };
    return f;
}

RadialProfile indicator(double a, double b) {
    if (!(a >= 0.0) || !(b > a)) throw std::invalid_argument("indicator: need 0 <= a < b");
    RadialProfile f;
    std::ostringstream os;
    os << "indicator(" << a << "," << b << ")";
    f.name = os.str();
    f.eval = [a, b](double r) { return (r >= a && r <= b) ? 1.0 : 0.0; };
    f.decay = Decay::compact(b);
    f.smoothness = Smoothness::piecewise;
    if (a > 0.0) f.breakpoints.push_back(a);
    f.breakpoints.push_back(b);
    return f;
}

RadialProfile bump(double nu) {
    if (!(nu >= 1.0)) throw std::invalid_argument("bump: need nu >= 1");
    RadialProfile f;
    std::ostringstream os;
    os << "bump(" << nu << ")";
    f.name = os.str();
    f.eval = [nu](double r) { return r < 1.0 ? std::pow(1.0 - r * r, nu) : 0.0; };
    f.decay = Decay::compact(1.0);
    f.breakpoints.push_back(1.0);
    // Sonine: the transform is a multiple of j_{alpha+nu+1}, whose envelope is
    // s^-(alpha+nu+3/2) once s is past the turning point.
    f.transform_decay = [nu](double alpha) {
        const double mu = alpha + nu + 1.0;
        return Decay::power(-(mu + 0.5), std::numeric_limits<double>::quiet_NaN(), mu * mu + 2.0);
    };
    return f;
}

RadialProfile power(double a, double cutoff) {
    if (!(cutoff >= 0.0)) throw std::invalid_argument("power: cutoff must be nonnegative");
    RadialProfile f;
    std::ostringstream os;
    os << "power(" << a << "," << cutoff << ")";
    f.name = os.str();
    f.eval = [a, cutoff](double r) { return r > cutoff ? std::pow(r, -a) : 0.0; };
    f.decay = Decay::power(-a, 1.0, std::max(cutoff, 1e-300));
    if (cutoff > 0.0) {
        f.smoothness = Smoothness::piecewise;
        f.breakpoints.push_back(cutoff);
    }
    return f;
}

RadialProfile smoothed_indicator(double a, double sigma) {
    if (!(a > 0.0) || !(sigma > 0.0)) throw std::invalid_argument("smoothed_indicator: need a, sigma > 0");
    RadialProfile f;
    std::ostringstream os;
    os << "smoothed_indicator(" << a << "," << sigma << ")";
    f.name = os.str();
    const double c = 1.0 / (std::numbers::sqrt2 * sigma);
    f.eval = [a, c](double r) {
        if (r > a) return 0.5 * (std::erfc(c * (r - a)) - std::erfc(c * (a + r)));
        return 0.5 * (std::erf(c * (a - r)) + std::erf(c * (a + r)));
    };
    // For r >= 2a: F(r) <= erfc((r - a)/(sqrt2 sigma)) / 2 <= exp(-r^2 / (8 sigma^2)).
    f.decay = Decay::gaussian(1.0 / (8.0 * sigma * sigma), 1.0, 2.0 * a);
    f.transform_decay = [sigma](double) {
        return Decay::gaussian(0.5 * sigma * sigma, std::numeric_limits<double>::quiet_NaN(), 1.0);
    };
    return f;
}

RadialProfile constant(double c) {
    RadialProfile f;
    std::ostringstream os;
    os << "constant(" << c << ")";
    f.name = os.str();
    f.eval = [c](double) { return c; };
    f.decay = Decay::power(0.0, std::abs(c), 1.0);
    return f;
}

RadialProfile scaled(const RadialProfile& f, double c) {
    RadialProfile g = f;
    std::ostringstream os;
    os << c << "*" << f.name;
    g.name = os.str();
    g.eval = [inner = f.eval, c](double r) { return c * inner(r); };
    if (std::isfinite(g.decay.scale)) g.decay.scale *= std::abs(c);
    if (f.transform_decay)
        g.transform_decay = [inner = f.transform_decay, c](double alpha) {
            Decay d = inner(alpha);
            if (std::isfinite(d.scale)) d.scale *= std::abs(c);
            return d;
        };
    return g;
}

RadialProfile dilated(const RadialProfile& f, double lambda) {
    if (!(lambda > 0.0)) throw std::invalid_argument("dilated: lambda must be positive");
    RadialProfile g = f;
    std::ostringstream os;
    os << f.name << "(r/" << lambda << ")";
    g.name = os.str();
    g.eval = [inner = f.eval, lambda](double r) { return inner(r / lambda); };
    for (double& b : g.breakpoints) b *= lambda;
    Decay& d = g.decay;
    d.from *= lambda;
    switch (d.kind) {
        case Decay::Kind::gaussian: d.rate /= lambda * lambda; break;
        case Decay::Kind::exponential: d.rate /= lambda; break;
        case Decay::Kind::power:
            if (std::isfinite(d.scale)) d.scale *= std::pow(lambda, -d.rate);
            break;
        case Decay::Kind::compact: d.rate *= lambda; break;
    }
    d.poly = f.decay.poly;
    if (f.decay.poly != 0.0 && std::isfinite(d.scale)) d.scale *= std::pow(lambda, -f.decay.poly);
    // Transform scales as lambda^(2 alpha + 2) G(lambda s); the envelope is refit.
    if (f.transform_decay)
        g.transform_decay = [inner = f.transform_decay, lambda](double alpha) {
            Decay t = inner(alpha);
            t.scale = std::numeric_limits<double>::quiet_NaN();
            switch (t.kind) {
                case Decay::Kind::gaussian: t.rate *= lambda * lambda; break;
                case Decay::Kind::exponential: t.rate *= lambda; break;
                case Decay::Kind::power: break;
                case Decay::Kind::compact: t.rate /= lambda; break;
            }
            t.from /= lambda;
            return t;
        };
    return g;
}

RadialProfile combination(double a, const RadialProfile& f, double b, const RadialProfile& g) {
    RadialProfile h;
    std::ostringstream os;
    os << a << "*" << f.name << "+" << b << "*" << g.name;
    h.name = os.str();
    h.eval = [fe = f.eval, ge = g.eval, a, b](double r) { return a * fe(r) + b * ge(r); };
    // The slower envelope governs; scales are refit.
    auto slower = [](const Decay& x, const Decay& y) {
        using K = Decay::Kind;
        auto rank = [](K k) { return k == K::compact ? 0 : k == K::gaussian ? 1 : k == K::exponential ? 2 : 3; };
        if (rank(x.kind) != rank(y.kind)) return rank(x.kind) > rank(y.kind) ? x : y;
        switch (x.kind) {
            case K::compact: return x.rate > y.rate ? x : y;
            case K::power: return x.rate > y.rate ? x : y;
            default: return x.rate < y.rate ? x : y;
        }
    };
    h.decay = slower(f.decay, g.decay);
    if (h.decay.kind != Decay::Kind::compact) h.decay.scale = std::numeric_limits<double>::quiet_NaN();
    h.smoothness = (f.smoothness == Smoothness::piecewise || g.smoothness == Smoothness::piecewise) ? Smoothness::piecewise
                                                                                                    : Smoothness::continuous;
    h.breakpoints = f.breakpoints;
    h.breakpoints.insert(h.breakpoints.end(), g.breakpoints.begin(), g.breakpoints.end());
    std::sort(h.breakpoints.begin(), h.breakpoints.end());
    h.breakpoints.erase(std::unique(h.breakpoints.begin(), h.breakpoints.end()), h.breakpoints.end());
    if (f.transform_decay && g.transform_decay)
        h.transform_decay = [ft = f.transform_decay, gt = g.transform_decay, slower](double alpha) {
            Decay d = slower(ft(alpha), gt(alpha));
            d.scale = std::numeric_limits<double>::quiet_NaN();
            return d;
        };
    return h;
}

RadialProfile parse(const std::string& text) {
    static const std::regex call(R"(^\s*([a-z_]+)\s*(?:\(([^)]*)\))?\s*$)");
    std::smatch m;
    if (!std::regex_match(text, m, call)) throw std::invalid_argument("cannot parse profile '" + text + "'");
    const std::string name = m[1];
    std::vector<double> args;
    if (m[2].matched) {
        std::stringstream ss(m[2]);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                std::size_t used = 0;
                args.push_back(std::stod(item, &used));
                if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad numeric argument '" + item + "' in profile '" + text + "'");
            }
        }
    }
    auto need = [&](std::size_t lo, std::size_t hi) {
        if (args.size() < lo || args.size() > hi)
            throw std::invalid_argument("wrong number of arguments in profile '" + text + "'");
    };
    if (name == "zero") return need(0, 0), zero();
    if (name == "gaussian") return need(0, 1), gaussian(args.empty() ? 1.0 : args[0]);
    if (name == "exp" || name == "exponential") return need(0, 1), exponential(args.empty() ? 1.0 : args[0]);
    if (name == "indicator") return need(2, 2), indicator(args[0], args[1]);
    if (name == "bump") return need(0, 1), bump(args.empty() ? 3.0 : args[0]);
    if (name == "power") return need(1, 2), power(args[0], args.size() > 1 ? args[1] : 0.0);
    if (name == "smoothed_indicator") return need(2, 2), smoothed_indicator(args[0], args[1]);
    if (name == "constant") return need(0, 1), constant(args.empty() ? 1.0 : args[0]);
    throw std::invalid_argument("unknown profile '" + name + "'");
}

}  // namespace profiles

}  // namespace dunkl
