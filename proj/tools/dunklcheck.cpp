// dunklcheck: run one verification scenario and write its report.
//
//   dunklcheck --list
//   dunklcheck thm41 --phi "power(1)" --beta 0.5 --format jsonl -o out.jsonl
//   dunklcheck lemma41 --config lemma.cfg --seed 7
//
// Exit status: 0 all checks pass, 1 some check fails, 2 inconclusive checks
// but no failure, 3 configuration or I/O error.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>

#include "dunkl/scenario.hpp"

namespace {

constexpr int kConfigError = 3;

struct Common {
    std::string config_path;
    std::string format = "csv";
    std::string output;
    std::map<std::string, std::string> overrides;
    std::vector<std::string> sets;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("-c,--config", c.config_path, "plain-text config file (key = value)");
    sub->add_option("-f,--format", c.format, "csv | jsonl")->check(CLI::IsMember({"csv", "jsonl", "json-lines"}));
    sub->add_option("-o,--output", c.output, "report file (default: stdout)");
    sub->add_option("--set", c.sets, "key=value override, repeatable");
    for (const auto& key : dunkl::ScenarioConfig::keys()) {
        if (key == "scenario") continue;
        std::string flag = "--" + key;
        std::replace(flag.begin(), flag.end(), '_', '-');
        sub->add_option_function<std::string>(
            flag, [&c, key](const std::string& v) { c.overrides[key] = v; }, "overrides config key '" + key + "'");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical verification of Fourier and Cesaro inequalities in the rational Dunkl setting"};
    app.require_subcommand(0, 1);
    bool list = false;
    app.add_flag("--list", list, "list scenarios and exit");

    Common common;
    for (const auto& s : dunkl::scenario_catalog()) add_common(app.add_subcommand(s.id, s.summary), common);

    CLI11_PARSE(app, argc, argv);

    if (list) {
        for (const auto& s : dunkl::scenario_catalog()) std::printf("%-14s %s\n", s.id, s.summary);
        return 0;
    }
    const auto subs = app.get_subcommands();
    if (subs.empty()) {
        std::cerr << app.help();
        return kConfigError;
    }

    dunkl::VerificationReport report;
    try {
        dunkl::ScenarioConfig cfg =
            common.config_path.empty() ? dunkl::ScenarioConfig{} : dunkl::ScenarioConfig::load(common.config_path);
        cfg.scenario = subs.front()->get_name();
        for (const auto& kv : common.sets) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos) throw dunkl::ConfigError("--set expects key=value, got '" + kv + "'");
            cfg.set(kv.substr(0, eq), kv.substr(eq + 1));
        }
        for (const auto& [k, v] : common.overrides) cfg.set(k, v);
        cfg.validate();
        report = dunkl::run_scenario(cfg);
        const auto fmt = dunkl::parse_format(common.format);
        if (common.output.empty())
            dunkl::write_report(std::cout, report, fmt);
        else
            dunkl::emit_report(report, fmt, common.output);
    } catch (const dunkl::ConfigError& e) {
        std::cerr << "dunklcheck: " << e.what() << '\n';
        return kConfigError;
    } catch (const std::exception& e) {
        std::cerr << "dunklcheck: " << e.what() << '\n';
        return kConfigError;
    }
    std::cerr << report.scenario << ": " << dunkl::outcome_name(report.overall()) << " (" << report.checks.size()
              << " checks)\n";
    return report.exit_code();
}
