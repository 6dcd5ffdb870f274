#include "dunkl/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace dunkl {

using json = nlohmann::ordered_json;

const char* outcome_name(Outcome o) {
    switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::inconclusive: return "inconclusive";
    }
    return "?";
}

Outcome parse_outcome(const std::string& s) {
    if (s == "pass") return Outcome::pass;
    if (s == "fail") return Outcome::fail;
    if (s == "inconclusive") return Outcome::inconclusive;
    throw std::invalid_argument("unknown outcome '" + s + "'");
}

static bool same(double a, double b) { return a == b || (std::isnan(a) && std::isnan(b)); }

bool CheckRecord::operator==(const CheckRecord& o) const {
    return name == o.name && same(lhs, o.lhs) && same(rhs, o.rhs) && same(ratio, o.ratio) &&
           same(tolerance, o.tolerance) && same(residual, o.residual) && outcome == o.outcome && note == o.note;
}

void VerificationReport::set(const std::string& key, const std::string& value) {
    for (auto& kv : environment)
        if (kv.first == key) {
            kv.second = value;
            return;
        }
    environment.emplace_back(key, value);
}

void VerificationReport::set(const std::string& key, double value) { set(key, format_number(value)); }
void VerificationReport::set(const std::string& key, std::int64_t value) { set(key, std::to_string(value)); }

CheckRecord& VerificationReport::add(CheckRecord c) {
    checks.push_back(std::move(c));
    return checks.back();
}

Outcome VerificationReport::overall() const {
    bool inconclusive = false;
    for (const auto& c : checks) {
        if (c.outcome == Outcome::fail) return Outcome::fail;
        if (c.outcome == Outcome::inconclusive) inconclusive = true;
    }
    return inconclusive ? Outcome::inconclusive : Outcome::pass;
}

int VerificationReport::exit_code() const {
    switch (overall()) {
    case Outcome::pass: return 0;
    case Outcome::fail: return 1;
    case Outcome::inconclusive: return 2;
    }
    return 1;
}

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

static double parse_number(const json& v) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
        if (s == "inf") return std::numeric_limits<double>::infinity();
        if (s == "-inf") return -std::numeric_limits<double>::infinity();
    }
    throw std::invalid_argument("report: bad numeric field " + v.dump());
}

ReportFormat parse_format(const std::string& s) {
    if (s == "csv") return ReportFormat::csv;
    if (s == "jsonl" || s == "json-lines") return ReportFormat::jsonl;
    throw std::invalid_argument("unknown report format '" + s + "' (csv | jsonl)");
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

// JSON has no non-finite numbers; those travel as strings.
json number_field(double x) {
    if (!std::isfinite(x)) return format_number(x);
    return x;
}

}  // namespace

void write_report(std::ostream& os, const VerificationReport& r, ReportFormat fmt) {
    if (fmt == ReportFormat::csv) {
        os << "scenario,name,lhs,rhs,ratio,tolerance,residual,outcome,note\n";
        for (const auto& c : r.checks) {
            os << csv_field(r.scenario) << ',' << csv_field(c.name) << ',' << format_number(c.lhs) << ','
               << format_number(c.rhs) << ',' << format_number(c.ratio) << ',' << format_number(c.tolerance) << ','
               << format_number(c.residual) << ',' << outcome_name(c.outcome) << ',' << csv_field(c.note) << '\n';
        }
        return;
    }
    json head;
    head["schema"] = VerificationReport::schema;
    head["scenario"] = r.scenario;
    json env = json::object();
    for (const auto& [k, v] : r.environment) env[k] = v;
    head["environment"] = env;
    head["checks"] = r.checks.size();
    os << head.dump() << '\n';
    for (const auto& c : r.checks) {
        json j;
        j["name"] = c.name;
        j["lhs"] = number_field(c.lhs);
        j["rhs"] = number_field(c.rhs);
        j["ratio"] = number_field(c.ratio);
        j["tolerance"] = number_field(c.tolerance);
        j["residual"] = number_field(c.residual);
        j["outcome"] = outcome_name(c.outcome);
        j["note"] = c.note;
        os << j.dump() << '\n';
    }
}

std::string render_report(const VerificationReport& r, ReportFormat fmt) {
    std::ostringstream os;
    write_report(os, r, fmt);
    return os.str();
}

void emit_report(const VerificationReport& r, ReportFormat fmt, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open report file '" + path + "' for writing");
    write_report(out, r, fmt);
    out.flush();
    if (!out) throw std::runtime_error("write to report file '" + path + "' failed");
}

VerificationReport parse_jsonl(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    VerificationReport r;
    bool have_head = false;
    std::size_t expected = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const json j = json::parse(line);
        if (!have_head) {
            if (j.value("schema", "") != VerificationReport::schema)
                throw std::invalid_argument("report: unsupported schema " + j.value("schema", std::string("<none>")));
            r.scenario = j.at("scenario").get<std::string>();
            for (const auto& [k, v] : j.at("environment").items()) r.environment.emplace_back(k, v.get<std::string>());
            expected = j.at("checks").get<std::size_t>();
            have_head = true;
            continue;
        }
        CheckRecord c;
        c.name = j.at("name").get<std::string>();
        c.lhs = parse_number(j.at("lhs"));
        c.rhs = parse_number(j.at("rhs"));
        c.ratio = parse_number(j.at("ratio"));
        c.tolerance = parse_number(j.at("tolerance"));
        c.residual = parse_number(j.at("residual"));
        c.outcome = parse_outcome(j.at("outcome").get<std::string>());
        c.note = j.at("note").get<std::string>();
        r.checks.push_back(std::move(c));
    }
    if (!have_head) throw std::invalid_argument("report: missing header record");
    if (r.checks.size() != expected) throw std::invalid_argument("report: check count does not match header");
    return r;
}

}  // namespace dunkl
