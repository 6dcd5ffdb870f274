#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "dunkl/report.hpp"

using namespace dunkl;

namespace {

VerificationReport two_checks() {
    VerificationReport r;
    r.scenario = "demo";
    r.set("d", std::int64_t{1});
    r.set("beta", 0.1);
    r.set("note", "a, \"quoted\" value");
    CheckRecord a;
    a.name = "first";
    a.lhs = 1.0 / 3.0;
    a.rhs = std::numeric_limits<double>::infinity();
    a.ratio = 0.0;
    a.outcome = Outcome::pass;
    r.add(a);
    CheckRecord b;
    b.name = "second, with comma";
    b.lhs = -2.5e-300;
    b.tolerance = 1e-3;
    b.outcome = Outcome::inconclusive;
    b.note = "line \"two\"";
    r.add(b);
    return r;
}

}  // namespace

TEST_CASE("number formatting round-trips") {
    for (double x : {0.1, 1.0 / 3.0, 2.5e-300, -7.0, 6.02214076e23}) CHECK(std::stod(format_number(x)) == x);
    CHECK(format_number(std::nan("")) == "nan");
    CHECK(format_number(-std::numeric_limits<double>::infinity()) == "-inf");
}

TEST_CASE("empty report is header only") {
    VerificationReport r;
    r.scenario = "empty";
    CHECK(render_report(r, ReportFormat::csv) == "scenario,name,lhs,rhs,ratio,tolerance,residual,outcome,note\n");
    const std::string j = render_report(r, ReportFormat::jsonl);
    CHECK(std::count(j.begin(), j.end(), '\n') == 1);
    CHECK(j.find("\"schema\":\"dunkl-report/1\"") != std::string::npos);
    CHECK(parse_jsonl(j) == r);
    CHECK(r.overall() == Outcome::pass);
    CHECK(r.exit_code() == 0);
}

TEST_CASE("two checks give two rows in insertion order") {
    const auto r = two_checks();
    std::istringstream csv(render_report(r, ReportFormat::csv));
    std::string header, row1, row2, extra;
    std::getline(csv, header);
    std::getline(csv, row1);
    std::getline(csv, row2);
    CHECK_FALSE(std::getline(csv, extra));
    CHECK(row1.rfind("demo,first,0.33333333333333331,inf,0,nan,nan,pass,", 0) == 0);
    CHECK(row2 == "demo,\"second, with comma\",-2.5e-300,nan,nan,0.001,nan,inconclusive,"
                  "\"line \"\"two\"\"\"");
    CHECK(r.overall() == Outcome::inconclusive);
    CHECK(r.exit_code() == 2);
}

TEST_CASE("JSON lines round-trip") {
    const auto r = two_checks();
    const auto text = render_report(r, ReportFormat::jsonl);
    const auto back = parse_jsonl(text);
    CHECK(back == r);
    CHECK(render_report(back, ReportFormat::jsonl) == text);
    CHECK(std::isinf(back.checks[0].rhs));
    CHECK(std::isnan(back.checks[1].rhs));

    CHECK_THROWS_AS(parse_jsonl("{\"schema\":\"other/9\",\"scenario\":\"x\",\"environment\":{},\"checks\":0}\n"),
                    std::invalid_argument);
    // Header promises more checks than follow.
    CHECK_THROWS_AS(parse_jsonl(text.substr(0, text.find('\n') + 1)), std::invalid_argument);
}

TEST_CASE("outcome aggregation") {
    auto r = two_checks();
    r.checks[1].outcome = Outcome::fail;
    CHECK(r.overall() == Outcome::fail);
    CHECK(r.exit_code() == 1);
    CHECK(parse_outcome("inconclusive") == Outcome::inconclusive);
    CHECK_THROWS(parse_outcome("maybe"));
    CHECK(parse_format("json-lines") == ReportFormat::jsonl);
    CHECK_THROWS(parse_format("xml"));
}

TEST_CASE("environment keys keep first-insertion order") {
    VerificationReport r;
    r.set("b", "1");
    r.set("a", "2");
    r.set("b", "3");
    REQUIRE(r.environment.size() == 2);
    CHECK(r.environment[0] == std::pair<std::string, std::string>{"b", "3"});
}

TEST_CASE("file output") {
    const auto r = two_checks();
    const auto path = std::filesystem::temp_directory_path() / "dunkl_report_test.jsonl";
    emit_report(r, ReportFormat::jsonl, path.string());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(parse_jsonl(ss.str()) == r);
    std::filesystem::remove(path);

    const std::string bad = "/nonexistent-dir/sub/report.csv";
    try {
        emit_report(r, ReportFormat::csv, bad);
        FAIL("expected an error");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find(bad) != std::string::npos);
    }
}
