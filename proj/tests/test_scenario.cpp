#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dunkl/scenario.hpp"

using namespace dunkl;

namespace {

ScenarioConfig config(const std::string& text) { return ScenarioConfig::parse(text); }

const CheckRecord* find(const VerificationReport& r, const std::string& name) {
    for (const auto& c : r.checks)
        if (c.name == name) return &c;
    return nullptr;
}

}  // namespace

TEST_CASE("config parsing") {
    const auto c = config(
        "# comment\n"
        "scenario = thm41\n"
        "beta = 0.5   # trailing comment\n"
        "k = 0.5, 1\n"
        "family = gaussian(1); extremal(0.3)\n"
        "seed = 42\n");
    CHECK(c.scenario == "thm41");
    CHECK(c.beta == 0.5);
    CHECK(c.k == std::vector<double>{0.5, 1.0});
    CHECK(c.family == std::vector<std::string>{"gaussian(1)", "extremal(0.3)"});
    CHECK(c.seed == 42u);
    CHECK(c.model().dim() == 2);
    CHECK(c.model().gamma() == 1.5);

    CHECK_THROWS_AS(config("bogus = 1\n"), ConfigError);
    CHECK_THROWS_AS(config("p = two\n"), ConfigError);
    CHECK_THROWS_AS(config("just a line\n"), ConfigError);
    CHECK_THROWS_WITH_AS(config("scenario = thm41\n\nsamples = 1.5\n"), doctest::Contains("line 3"), ConfigError);
}

TEST_CASE("validation happens before any computation") {
    auto c = config("scenario = nothing\n");
    CHECK_THROWS_AS(c.validate(), ConfigError);
    CHECK_THROWS_AS(run_scenario(c), ConfigError);

    c = config("scenario = thm31\nk = 0, 0\n");  // the line only
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = config("scenario = thm31\nq = 3\n");  // q > p'
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = config("scenario = thm41\nphi = wobble\n");
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = config("scenario = thm41\nfamily = extremal(2)\n");
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = config("scenario = preliminaries\nd = 2\n");  // k has one entry
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = config("scenario = preliminaries\nd = 2\ngamma = 1\n");
    CHECK_NOTHROW(c.validate());
}

TEST_CASE("lemma scenarios are deterministic in the seed") {
    auto c = config("scenario = lemma41\nseed = 7\n");
    const auto a = run_scenario(c);
    CHECK(a.checks.size() == 200);
    for (const auto& r : a.checks) CHECK(r.outcome == Outcome::pass);
    CHECK(render_report(run_scenario(c), ReportFormat::jsonl) == render_report(a, ReportFormat::jsonl));
    CHECK(render_report(run_scenario(c), ReportFormat::csv) == render_report(a, ReportFormat::csv));
    c.seed = 8;
    CHECK(render_report(run_scenario(c), ReportFormat::csv) != render_report(a, ReportFormat::csv));

    const auto b = run_scenario(config("scenario = lemma42\nseed = 7\nq = 3\n"));
    CHECK(b.overall() == Outcome::pass);
    REQUIRE(find(b, "boundary f(t) = t"));
    CHECK(find(b, "boundary f(t) = t")->residual < 1e-8);
}

TEST_CASE("thm41 with phi = 1 reports I = 2/3") {
    const auto r = run_scenario(config("scenario = thm41\nfamily = indicator(1,2)\n"));
    const CheckRecord* I = nullptr;
    for (const auto& c : r.checks)
        if (c.name.rfind("condition integral", 0) == 0) I = &c;
    REQUIRE(I);
    CHECK(I->lhs == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
    // psi = t^-1/2 is not concave: the upper bound is only reported.
    CHECK(r.overall() == Outcome::inconclusive);
    CHECK(r.exit_code() == 2);
}

TEST_CASE("preliminaries") {
    const auto r = run_scenario(config("scenario = preliminaries\n"));
    REQUIRE(find(r, "d_k at d=2 gamma=0"));
    CHECK(find(r, "d_k at d=2 gamma=0")->lhs == doctest::Approx(2.0 * std::numbers::pi).epsilon(1e-12));
    CHECK(r.overall() == Outcome::pass);
    CHECK(r.environment.front().first == "model");
}

TEST_CASE("a failing check does not abort its siblings") {
    // beta beyond the profile's smoothness: the seminorm check errors out and
    // is recorded as a failure.
    const auto r = run_scenario(config("scenario = cor31\nbeta = 3\n"));
    REQUIRE(r.checks.size() == 1);
    CHECK(r.checks[0].outcome == Outcome::fail);
    CHECK(r.checks[0].note.rfind("error:", 0) == 0);
    CHECK(r.exit_code() == 1);

    const auto e = run_scenario(config("scenario = example31\ntheta = 1, 2, 4\n"));
    CHECK(e.checks.size() == 3);
    CHECK(e.overall() == Outcome::pass);
}
