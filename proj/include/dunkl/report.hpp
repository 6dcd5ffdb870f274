#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace dunkl {

enum class Outcome { pass, fail, inconclusive };

const char* outcome_name(Outcome o);
Outcome parse_outcome(const std::string& s);

struct CheckRecord {
    std::string name;
    double lhs = std::numeric_limits<double>::quiet_NaN();
    double rhs = std::numeric_limits<double>::quiet_NaN();
    double ratio = std::numeric_limits<double>::quiet_NaN();
    double tolerance = std::numeric_limits<double>::quiet_NaN();
    /// Truncation/quadrature residual behind the numbers (same units as the
    /// quantity the tolerance applies to).
    double residual = std::numeric_limits<double>::quiet_NaN();
    Outcome outcome = Outcome::fail;
    std::string note;

    /// Field-wise; two NaNs compare equal (unset numbers survive a round trip).
    bool operator==(const CheckRecord& o) const;
};

struct VerificationReport {
    static constexpr const char* schema = "dunkl-report/1";

    std::string scenario;
    /// Every parameter that shaped the run, in insertion order.
    std::vector<std::pair<std::string, std::string>> environment;
    std::vector<CheckRecord> checks;

    void set(const std::string& key, const std::string& value);
    void set(const std::string& key, double value);
    void set(const std::string& key, std::int64_t value);
    CheckRecord& add(CheckRecord c);

    /// fail if any check failed, else inconclusive if any was, else pass.
    Outcome overall() const;
    /// 0 all pass, 1 any fail, 2 inconclusive without failures.
    int exit_code() const;

    bool operator==(const VerificationReport&) const = default;
};

/// Shortest decimal that round-trips ("%.17g"); nan, inf, -inf spelled out.
std::string format_number(double x);

enum class ReportFormat { csv, jsonl };

ReportFormat parse_format(const std::string& s);

/// CSV: a header row and one row per check (the environment is not part of
/// the table). JSON lines: a header record carrying the schema, scenario and
/// environment, then one record per check.
void write_report(std::ostream& os, const VerificationReport& r, ReportFormat fmt);
std::string render_report(const VerificationReport& r, ReportFormat fmt);

/// Writes to path; failures throw std::runtime_error naming the path.
void emit_report(const VerificationReport& r, ReportFormat fmt, const std::string& path);

/// Inverse of the JSON-lines writer.
VerificationReport parse_jsonl(const std::string& text);

}  // namespace dunkl
