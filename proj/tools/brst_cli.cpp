#include "brst/errors.hpp"
#include "brst/pipeline.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <iostream>

using namespace brst;

namespace {

constexpr int kPass = 0;
constexpr int kCheckFailure = 1;
constexpr int kUsage = 2;

struct RunArgs {
    std::string target;
    std::optional<int> order;
    std::optional<int> degree;
    std::string report_path;
    std::string format;
    std::vector<std::string> sets;
    bool no_timing = false;
};

ScenarioParams parse_sets(const std::vector<std::string>& sets)
{
    ScenarioParams p;
    for (const auto& s : sets) {
        const auto eq = s.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ConfigError("--set expects key=value, got '" + s + "'");
        p[s.substr(0, eq)] = s.substr(eq + 1);
    }
    return p;
}

// A registered name, or a path to a config file.
ScenarioConfig resolve(const std::string& target, const std::vector<std::string>& sets)
{
    for (const auto& e : scenario_registry())
        if (e.name == target)
            return registry_config(target, parse_sets(sets));
    if (!sets.empty())
        throw ConfigError("--set applies to registered scenarios only");
    if (!std::filesystem::exists(target))
        throw ConfigError("'" + target + "' is neither a registered scenario nor a readable file");
    return read_scenario_file(target);
}

void add_run_options(CLI::App* cmd, RunArgs& a)
{
    cmd->add_option("target", a.target, "registered scenario name or config file")->required();
    cmd->add_option("--order", a.order, "truncation order N")->check(CLI::Range(0, 12));
    cmd->add_option("--degree", a.degree, "degree bound d")->check(CLI::Range(1, 16));
    cmd->add_option("--report", a.report_path, "write the report to this file");
    cmd->add_option("--format", a.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--set", a.sets, "scenario parameter key=value");
    cmd->add_flag("--no-timing", a.no_timing, "report wall times as 0");
}

int execute(const RunArgs& a, std::set<Stage> stages)
{
    RunOptions opt;
    opt.order = a.order;
    opt.degree = a.degree;
    opt.stages = std::move(stages);
    opt.timing = !a.no_timing;
    const Report r = run_scenario(resolve(a.target, a.sets), opt);
    if (a.report_path.empty()) {
        std::cout << (a.format == "json" ? report_json(r) : report_text(r));
    } else {
        emit_report(r, a.format.empty() ? "json" : a.format, a.report_path);
        std::cout << r.scenario << ": " << (r.passed() ? "pass" : "fail");
        if (const CheckRecord* f = r.first_failure())
            std::cout << " (first failure: " << f->id << ")";
        std::cout << "\n";
    }
    return r.passed() ? kPass : kCheckFailure;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact BRST reduction checks for deformation quantization"};
    app.require_subcommand(1);
    app.set_version_flag("--version", engine_version());

    auto* list = app.add_subcommand("list", "list the registered scenarios");

    std::string config_name;
    std::vector<std::string> config_sets;
    auto* config = app.add_subcommand("config", "print the config file of a registered scenario");
    config->add_option("name", config_name)->required();
    config->add_option("--set", config_sets, "scenario parameter key=value");

    RunArgs run_args;
    auto* run = app.add_subcommand("run", "run every stage on a scenario");
    add_run_options(run, run_args);

    RunArgs check_args;
    std::string stage_name;
    auto* check = app.add_subcommand("check", "run a single stage on a scenario");
    check->add_option("stage", stage_name, "load|invariance|koszul|classical|quantum|deformed|reduction")->required();
    add_run_options(check, check_args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*list) {
            for (const auto& e : scenario_registry()) {
                std::cout << e.name << "  " << e.summary;
                for (const auto& [k, v] : e.params)
                    std::cout << "  [" << k << "=" << v << "]";
                std::cout << "\n";
            }
            return kPass;
        }
        if (*config) {
            std::cout << registry_config_text(config_name, parse_sets(config_sets));
            return kPass;
        }
        if (*run)
            return execute(run_args, {});
        if (*check)
            return execute(check_args, {parse_stage(stage_name)});
    } catch (const ConventionError& e) {
        std::cerr << "load check failed: " << e.what() << "\n";
        return kCheckFailure;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
