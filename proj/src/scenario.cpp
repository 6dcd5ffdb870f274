#include "dunkl/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "dunkl/besov.hpp"
#include "dunkl/herz.hpp"
#include "dunkl/special_functions.hpp"
#include "dunkl/theorems.hpp"
#include "dunkl/transform.hpp"
#include "dunkl/translation.hpp"

namespace dunkl {

const std::vector<ScenarioInfo>& scenario_catalog() {
    static const std::vector<ScenarioInfo> c{
        {"preliminaries", "constants c_k, d_k; Gaussian fixed point; Plancherel; roundtrip; rank-one kernel and translation"},
        {"thm31", "weighted integrability of F_k f against the L^p modulus of continuity (line)"},
        {"thm32", "the same against the smoothed modulus built from a test bump"},
        {"cor31", "Besov smoothness beta implies F_k f in L^q (beta <= m/p) or in L^1 (beta > m/p)"},
        {"thm41", "Cesaro operator on Herz spaces: I <= ||C_phi|| <= c_{q,beta} I; extremal family"},
        {"lemma41", "(int f)^q <= int f^q on [0,1], random piecewise-linear f >= 0"},
        {"lemma42", "(int f)^(1/q) <= ((1 + 1/q) / 2^(1/q)) int f^(1/q) for concave f >= 0"},
        {"example31", "g = 1 in the weight class G_theta: empirical kappa versus the closed-form bounds"},
    };
    return c;
}

// ---------------------------------------------------------------------------
// Configuration

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return {};
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double to_double(const std::string& key, const std::string& v) {
    try {
        std::size_t used = 0;
        const double x = std::stod(v, &used);
        if (trim(v.substr(used)).empty()) return x;
    } catch (const std::exception&) {
    }
    throw ConfigError("config: '" + key + "' expects a number, got '" + v + "'");
}

long long to_int(const std::string& key, const std::string& v) {
    try {
        std::size_t used = 0;
        const long long x = std::stoll(v, &used);
        if (trim(v.substr(used)).empty()) return x;
    } catch (const std::exception&) {
    }
    throw ConfigError("config: '" + key + "' expects an integer, got '" + v + "'");
}

std::vector<std::string> split(const std::string& v, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!trim(item).empty()) out.push_back(trim(item));
    return out;
}

std::vector<double> to_list(const std::string& key, const std::string& v) {
    std::vector<double> out;
    for (const auto& s : split(v, ',')) out.push_back(to_double(key, s));
    if (out.empty()) throw ConfigError("config: '" + key + "' must not be empty");
    return out;
}

template <class F>
auto config_guard(const std::string& what, F&& f) {
    try {
        return f();
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError("config: " + what + ": " + e.what());
    }
}

bool is_extremal(const std::string& s) { return s.rfind("extremal", 0) == 0; }

RadialProfile family_member(const std::string& text, const ModelParams& params, const HerzParams& hp) {
    if (is_extremal(text)) {
        const auto open = text.find('('), close = text.rfind(')');
        if (open == std::string::npos || close == std::string::npos || close < open)
            throw std::invalid_argument("expected extremal(eps), got '" + text + "'");
        const double eps = std::stod(text.substr(open + 1, close - open - 1));
        if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("extremal eps must lie in (0, 1)");
        return ExtremalFamily{eps, hp.beta, hp.p, params}.profile();
    }
    return profiles::parse(text);
}

}  // namespace

const std::vector<std::string>& ScenarioConfig::keys() {
    static const std::vector<std::string> k{"scenario", "k",       "d",       "gamma",   "p",     "q",
                                            "beta",     "profile", "weight",  "phi",     "family", "theta",
                                            "j_min",    "j_max",   "s_max",   "rel_tol", "abs_tol", "seed",
                                            "samples"};
    return k;
}

void ScenarioConfig::set(const std::string& key_in, const std::string& value_in) {
    std::string key = trim(key_in);
    std::replace(key.begin(), key.end(), '-', '_');
    const std::string v = trim(value_in);
    if (key == "scenario") scenario = v;
    else if (key == "k") k = to_list(key, v);
    else if (key == "d") d = int(to_int(key, v));
    else if (key == "gamma") gamma = to_double(key, v);
    else if (key == "p") p = to_double(key, v);
    else if (key == "q") q = to_double(key, v);
    else if (key == "beta") beta = to_double(key, v);
    else if (key == "profile") profile = v;
    else if (key == "weight") weight = v;
    else if (key == "phi") phi = v;
    else if (key == "family") {
        family = split(v, ';');
        if (family.empty()) throw ConfigError("config: 'family' must not be empty");
    } else if (key == "theta") theta = to_list(key, v);
    else if (key == "j_min") j_min = int(to_int(key, v));
    else if (key == "j_max") j_max = int(to_int(key, v));
    else if (key == "s_max") s_max = to_double(key, v);
    else if (key == "rel_tol") rel_tol = to_double(key, v);
    else if (key == "abs_tol") abs_tol = to_double(key, v);
    else if (key == "seed") {
        const long long s = to_int(key, v);
        if (s < 0) throw ConfigError("config: 'seed' must be >= 0");
        seed = std::uint64_t(s);
    } else if (key == "samples") samples = int(to_int(key, v));
    else throw ConfigError("config: unknown key '" + key_in + "'");
}

ScenarioConfig ScenarioConfig::parse(const std::string& text) {
    ScenarioConfig c;
    std::istringstream in(text);
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        ++n;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        if (trim(line).empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("config line " + std::to_string(n) + ": expected key = value");
        try {
            c.set(line.substr(0, eq), line.substr(eq + 1));
        } catch (const ConfigError& e) {
            throw ConfigError("config line " + std::to_string(n) + ": " + e.what());
        }
    }
    return c;
}

ScenarioConfig ScenarioConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

ModelParams ScenarioConfig::model() const {
    return config_guard("model", [&] {
        if (gamma) return ModelParams::radial(d.value_or(1), *gamma);
        if (d && std::size_t(*d) != k.size())
            throw ConfigError("config: d = " + std::to_string(*d) + " but k lists " + std::to_string(k.size()) +
                              " multiplicities (give k per coordinate, or gamma)");
        return ModelParams::product(k);
    });
}

QuadratureSpec ScenarioConfig::quadrature() const {
    QuadratureSpec q;
    q.rel_tol = rel_tol;
    q.abs_tol = abs_tol;
    return q;
}

void ScenarioConfig::validate() const {
    const auto& cat = scenario_catalog();
    if (std::none_of(cat.begin(), cat.end(), [&](const ScenarioInfo& s) { return scenario == s.id; }))
        throw ConfigError("config: unknown scenario '" + scenario + "'");
    const ModelParams P = model();
    config_guard("quadrature", [&] { quadrature().validate(); });
    if (samples < 1 || samples > 1000000) throw ConfigError("config: samples must lie in [1, 1e6]");
    if (!(s_max >= 16.0)) throw ConfigError("config: s_max must be >= 16");

    auto need_line = [&] {
        if (P.dim() != 1) throw ConfigError("config: scenario '" + scenario + "' runs on the line only (d = 1)");
    };
    if (scenario == "preliminaries") {
        config_guard("profile", [&] { return profiles::parse(profile); });
        if (P.dim() == 1 && !(p >= 1.0 && p <= 2.0)) throw ConfigError("config: p must lie in [1, 2]");
    } else if (scenario == "thm31" || scenario == "thm32") {
        if (scenario == "thm31" || p < 2.0) need_line();
        config_guard("exponents", [&] { AnalysisParams{p, q, beta}.validate(); });
        config_guard("profile", [&] { return profiles::parse(profile); });
        config_guard("weight", [&] { return profiles::parse(weight); });
    } else if (scenario == "cor31") {
        need_line();
        if (!(p > 1.0 && p <= 2.0)) throw ConfigError("config: need 1 < p <= 2");
        if (!(beta > 0.0)) throw ConfigError("config: need beta > 0");
        config_guard("profile", [&] { return profiles::parse(profile); });
    } else if (scenario == "thm41") {
        const HerzParams hp{beta, p, q, j_min, j_max};
        config_guard("Herz parameters", [&] { hp.validate(); });
        config_guard("phi", [&] { return CesaroWeight::parse(phi, P, p); });
        for (const auto& f : family) config_guard("family", [&] { return family_member(f, P, hp); });
    } else if (scenario == "lemma41" || scenario == "lemma42") {
        if (!(q >= 1.0) || !std::isfinite(q)) throw ConfigError("config: need 1 <= q < inf");
    } else if (scenario == "example31") {
        config_guard("weight", [&] { return profiles::parse(weight); });
        for (double t : theta)
            if (!(t >= 1.0) || !std::isfinite(t)) throw ConfigError("config: theta values must be finite and >= 1");
    }
}

// ---------------------------------------------------------------------------
// Scenarios

namespace {

CheckRecord compare(const std::string& name, double lhs, double rhs, double tol, const std::string& note = {}) {
    CheckRecord c;
    c.name = name;
    c.lhs = lhs;
    c.rhs = rhs;
    c.ratio = rhs != 0.0 ? lhs / rhs : std::numeric_limits<double>::quiet_NaN();
    c.tolerance = tol;
    c.residual = std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-300);
    c.outcome = c.residual <= tol ? Outcome::pass : Outcome::fail;
    c.note = note;
    return c;
}

// lhs <= rhs (1 + tol).
CheckRecord bound(const std::string& name, double lhs, double rhs, double tol, const std::string& note = {}) {
    CheckRecord c;
    c.name = name;
    c.lhs = lhs;
    c.rhs = rhs;
    c.ratio = lhs / rhs;
    c.tolerance = tol;
    c.residual = std::max(0.0, c.ratio - 1.0);
    c.outcome = lhs <= rhs * (1.0 + tol) ? Outcome::pass : Outcome::fail;
    c.note = note;
    return c;
}

void guarded(VerificationReport& r, const std::string& name, const std::function<void()>& fn) {
    try {
        fn();
    } catch (const std::exception& e) {
        CheckRecord c;
        c.name = name;
        c.outcome = Outcome::fail;
        c.note = std::string("error: ") + e.what();
        r.add(c);
    }
}

std::string join(const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + format_number(v[i]);
    return s;
}

std::vector<double> geometric(double a, double b, int n) {
    std::vector<double> x;
    for (int i = 0; i < n; ++i) x.push_back(a * std::pow(b / a, double(i) / (n - 1)));
    return x;
}

void preliminaries(const ScenarioConfig& cfg, VerificationReport& r) {
    const ModelParams P = cfg.model();
    const auto f = profiles::parse(cfg.profile);

    guarded(r, "c_k closed form vs quadrature", [&] {
        r.add(compare("c_k closed form vs quadrature", mehta_constant(P), mehta_constant_quadrature(P), 1e-10));
    });
    guarded(r, "d_k vs sphere integral of w_k", [&] {
        r.add(compare("d_k vs sphere integral of w_k", sphere_weight_dk(P), sphere_weight_direct(P), 1e-10));
    });
    guarded(r, "d_k at d=2 gamma=0", [&] {
        r.add(compare("d_k at d=2 gamma=0", sphere_weight_dk(ModelParams::radial(2, 0.0)), 2.0 * std::numbers::pi,
                      1e-10, "circumference of the unit circle"));
    });
    guarded(r, "d_k at d=1 gamma=0", [&] {
        r.add(compare("d_k at d=1 gamma=0", sphere_weight_dk(ModelParams::radial(1, 0.0)), 2.0, 1e-10,
                      "two points of weight 1"));
    });
    guarded(r, "Gaussian fixed point", [&] {
        double worst = 0.0;
        for (int i = 0; i <= 32; ++i) {
            const double s = 0.25 * i;
            worst = std::max(worst, std::abs(dunkl_transform_radial(P, profiles::gaussian(), s).value -
                                             std::exp(-0.5 * s * s)));
        }
        r.add(bound("Gaussian fixed point", worst, 1e-6, 0.0, "sup over s in [0, 8] of |F_k g - g|"));
    });
    guarded(r, "Plancherel " + cfg.profile, [&] {
        const auto hy = hausdorff_young_ratio(P, f, 2.0);
        r.add(compare("Plancherel " + cfg.profile, hy.transform_norm, hy.norm, 1e-5));
    });
    guarded(r, "inverse roundtrip of the Gaussian", [&] {
        const auto G = transformed_profile(P, profiles::gaussian());
        double worst = 0.0;
        for (int i = 0; i <= 16; ++i) {
            const double x = 0.5 * i;
            worst = std::max(worst, std::abs(inverse_dunkl_radial(P, G, x).value - std::exp(-0.5 * x * x)));
        }
        r.add(bound("inverse roundtrip of the Gaussian", worst, 1e-6, 0.0, "sup over r in [0, 8]"));
    });
    if (P.dim() != 1) return;

    const double k = P.gamma();
    guarded(r, "rank-one kernel |E_k| <= 1", [&] {
        const Rank1Kernel E(k);
        double worst = 0.0;
        for (int i = 0; i <= 20; ++i)
            for (int j = 0; j <= 20; ++j) worst = std::max(worst, std::abs(E(-3.0 + 0.3 * i, -3.0 + 0.3 * j)));
        r.add(bound("rank-one kernel |E_k| <= 1", worst, 1.0, 1e-10, "x, y in [-3, 3]"));
    });
    for (double x : {0.3, 1.0, 2.0}) {
        const std::string name = "translation contraction x=" + format_number(x);
        guarded(r, name, [&] {
            const auto c = translation_lp_ratio(k, f, x, cfg.p);
            auto rec = bound(name, c.translated_norm, c.norm, 1e-6);
            rec.note = "p=" + format_number(cfg.p) + " error bound " + format_number(c.error_bound);
            r.add(rec);
        });
    }
}

void theorem(const ScenarioConfig& cfg, VerificationReport& r, bool smoothed) {
    const ModelParams P = cfg.model();
    const AnalysisParams a{cfg.p, cfg.q, cfg.beta};
    TheoremOptions opts;
    opts.s_max = cfg.s_max;
    opts.quad = cfg.quadrature();
    const auto f = profiles::parse(cfg.profile);
    const auto g = profiles::parse(cfg.weight);
    const std::string name = cfg.profile + " g=" + cfg.weight + " q=" + format_number(cfg.q);
    guarded(r, name, [&] {
        const TheoremCheck c =
            smoothed ? verify_thm32(P, f, g, a, TestBump::gaussian(), opts) : verify_thm31(P.gamma(), f, g, a, opts);
        r.add(c.record(name));
        CheckRecord cls;
        cls.name = "weight class theta=" + format_number(a.theta());
        cls.lhs = c.weight_class.kappa_star;
        cls.rhs = c.weight_class.adjusted_bound;
        cls.ratio = cls.lhs / cls.rhs;
        cls.outcome = std::isfinite(c.weight_class.kappa_star) ? Outcome::pass : Outcome::fail;
        cls.note = "empirical kappa* (lhs) with the d_k-adjusted closed-form bound for g = 1 (rhs)";
        r.add(cls);
    });
}

void corollary(const ScenarioConfig& cfg, VerificationReport& r) {
    const ModelParams P = cfg.model();
    const auto f = profiles::parse(cfg.profile);
    const auto xs = geometric(1e-3, 10.0, 31);
    guarded(r, "Besov seminorm", [&] {
        const auto rep = verify_cor31(P, f, cfg.beta, cfg.p, xs);
        CheckRecord s;
        s.name = "Besov seminorm beta=" + format_number(cfg.beta);
        s.lhs = rep.seminorm.value;
        s.residual = rep.seminorm.truncation_bound;
        s.outcome = rep.seminorm.infinite ? Outcome::fail : Outcome::pass;
        s.note = "regime " + std::to_string(rep.regime) + ", q_lower " + format_number(rep.q_lower) +
                 ", small-x slope " + format_number(rep.seminorm.small_x_slope);
        r.add(s);
        for (const auto& c : rep.checks) {
            CheckRecord q;
            q.name = "||F_k f||_q q=" + format_number(c.q);
            q.lhs = c.norm;
            q.rhs = c.tail_bound;
            q.tolerance = 1e-6;
            q.residual = c.refinement_change;
            q.outcome = c.finite ? Outcome::pass : Outcome::fail;
            q.note = "rhs = tail bound; residual = relative change under refinement";
            r.add(q);
        }
    });
}

void cesaro(const ScenarioConfig& cfg, VerificationReport& r) {
    const ModelParams P = cfg.model();
    const HerzParams hp{cfg.beta, cfg.p, cfg.q, cfg.j_min, cfg.j_max};
    const auto w = CesaroWeight::parse(cfg.phi, P, cfg.p);
    std::vector<RadialProfile> fam;
    for (const auto& s : cfg.family) fam.push_back(family_member(s, P, hp));
    SandwichOptions opts;
    opts.quad = cfg.quadrature();
    guarded(r, "sandwich", [&] {
        const auto rep = sandwich_verify(P, w, hp, fam, opts);
        for (const auto& c : rep.checks) r.add(c);
    });
    guarded(r, "extremal Herz norm eps=0.5", [&] {
        const auto e = extremal_herz_norm(P, 0.5, hp, opts.quad);
        auto c = compare("extremal Herz norm eps=0.5", e.quadrature.value, e.closed_form, 5e-3);
        c.note = "geometric sum " + format_number(e.geometric_sum) + "; variant with 2^(-q eps) in the numerator " +
                 format_number(e.printed_variant) + " (reported, not asserted)";
        r.add(c);
    });
}

void lemmas(const ScenarioConfig& cfg, VerificationReport& r, bool concave) {
    std::mt19937_64 rng(cfg.seed);
    for (int i = 0; i < cfg.samples; ++i) {
        const std::string name = "sample " + std::to_string(i);
        const PiecewiseLinear f = concave ? random_concave(rng) : random_piecewise_linear(rng);
        guarded(r, name, [&] {
            if (concave && !midpoint_concave(f, 0.0, 1.0)) {
                CheckRecord c;
                c.name = name;
                c.outcome = Outcome::inconclusive;
                c.note = "rejected: fails the concavity grid check";
                r.add(c);
                return;
            }
            const LemmaSample s = concave ? lemma42_sample(f, cfg.q) : lemma41_sample(f, cfg.q);
            auto c = bound(name, s.lhs, s.rhs, 0.0);
            c.tolerance = 1e-9;
            c.outcome = s.pass ? Outcome::pass : Outcome::fail;
            r.add(c);
        });
    }
    if (concave) {
        guarded(r, "boundary f(t) = t", [&] {
            const auto s = lemma42_sample(PiecewiseLinear{{0.0, 1.0}, {0.0, 1.0}}, cfg.q);
            r.add(compare("boundary f(t) = t", s.lhs, s.rhs, 1e-8, "equality case"));
        });
    }
}

void weight_class(const ScenarioConfig& cfg, VerificationReport& r) {
    const ModelParams P = cfg.model();
    const auto g = profiles::parse(cfg.weight);
    for (double theta : cfg.theta) {
        const std::string name = "class G theta=" + format_number(theta);
        guarded(r, name, [&] {
            const auto probe = class_G_check({g, theta, 1.0}, P, 10, cfg.quadrature());
            const auto rerun = class_G_check({g, theta, probe.kappa_star}, P, 10, cfg.quadrature());
            CheckRecord c;
            c.name = name;
            c.lhs = probe.kappa_star;
            c.rhs = probe.printed_bound;
            c.ratio = c.lhs / c.rhs;
            c.residual = probe.adjusted_bound;
            c.outcome = std::isfinite(probe.kappa_star) && rerun.pass ? Outcome::pass : Outcome::fail;
            c.note = "lhs empirical kappa*; rhs closed-form bound without d_k; residual column carries the "
                     "d_k-adjusted bound (neither asserted)";
            r.add(c);
        });
    }
}

}  // namespace

VerificationReport run_scenario(const ScenarioConfig& cfg) {
    cfg.validate();
    VerificationReport r;
    r.scenario = cfg.scenario;
    const ModelParams P = cfg.model();
    r.set("model", P.describe());
    r.set("d", std::int64_t{P.dim()});
    r.set("gamma", P.gamma());
    r.set("k", join(cfg.k));
    r.set("p", cfg.p);
    r.set("q", cfg.q);
    r.set("beta", cfg.beta);
    r.set("profile", cfg.profile);
    r.set("weight", cfg.weight);
    r.set("phi", cfg.phi);
    std::string fam;
    for (std::size_t i = 0; i < cfg.family.size(); ++i) fam += (i ? ";" : "") + cfg.family[i];
    r.set("family", fam);
    r.set("theta", join(cfg.theta));
    r.set("j_min", std::int64_t{cfg.j_min});
    r.set("j_max", std::int64_t{cfg.j_max});
    r.set("s_max", cfg.s_max);
    r.set("rel_tol", cfg.rel_tol);
    r.set("abs_tol", cfg.abs_tol);
    r.set("seed", std::to_string(cfg.seed));
    r.set("samples", std::int64_t{cfg.samples});

    const std::string& s = cfg.scenario;
    if (s == "preliminaries") preliminaries(cfg, r);
    else if (s == "thm31") theorem(cfg, r, false);
    else if (s == "thm32") theorem(cfg, r, true);
    else if (s == "cor31") corollary(cfg, r);
    else if (s == "thm41") cesaro(cfg, r);
    else if (s == "lemma41") lemmas(cfg, r, false);
    else if (s == "lemma42") lemmas(cfg, r, true);
    else if (s == "example31") weight_class(cfg, r);
    return r;
}

}  // namespace dunkl
