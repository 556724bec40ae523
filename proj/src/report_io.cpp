#include "brst/errors.hpp"
#include "brst/pipeline.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace brst {

namespace {

using Json = nlohmann::ordered_json;

Json config_json(const ScenarioConfig& c)
{
    Json brackets = Json::array();
    for (const auto& b : c.brackets)
        brackets.push_back({{"x", b.x}, {"y", b.y}, {"value", b.value}});
    Json structure = Json::array();
    for (const auto& s : c.structure)
        structure.push_back({{"a", s.a + 1}, {"b", s.b + 1}, {"c", s.c + 1}, {"value", s.value}});
    Json action = Json::array();
    for (const auto& [key, expr] : c.action)
        action.push_back({{"component", key.first + 1}, {"variable", key.second}, {"value", expr}});
    Json invariants = Json::array();
    for (const auto& f : c.invariants)
        invariants.push_back(f);
    return Json{
        {"name", c.name},
        {"title", c.title},
        {"justification", c.justification},
        {"variables", c.variables},
        {"weights", c.weights},
        {"poisson", brackets},
        {"lie_dim", c.lie_dim},
        {"structure_constants", structure},
        {"moment_map", c.moment_map},
        {"action", action},
        {"invariants", c.invariants.empty() ? Json("derive") : invariants},
        {"invariant_degree", c.invariant_degree},
        {"order", c.order},
        {"degree", c.degree},
        {"probes", c.probes},
        {"light_probes", c.light_probes},
        {"seed", c.seed},
        {"reduction", c.reduction},
        {"reduction_note", c.reduction_note},
        {"star_sign", c.sign == TensorSign::koszul ? "koszul" : "naive"},
        {"expect", c.expect},
    };
}

std::string verdict(const Report& r) { return r.passed() ? "pass" : "fail"; }

} // namespace

std::string report_json(const Report& report)
{
    Json checks = Json::array();
    for (const auto& [stage, rec] : report.checks) {
        checks.push_back({
            {"id", rec.id},
            {"stage", to_string(stage)},
            {"anchor", rec.anchor},
            {"status", to_string(rec.status)},
            {"residual", {{"nonzero_coefficients", rec.nonzero_coefficients},
                          {"max_degree", rec.max_residual_degree}}},
            {"probes", rec.probes},
            {"wall_ms", rec.wall_ms},
            {"witnesses", rec.witnesses},
            {"detail", rec.detail},
        });
    }
    Json j{
        {"scenario", report.scenario},
        {"engine_version", report.engine_version},
        {"verdict", verdict(report)},
        {"checks", checks},
        {"config", config_json(report.config)},
    };
    return j.dump(2) + "\n";
}

std::string report_text(const Report& report)
{
    std::ostringstream out;
    out << "scenario " << report.scenario << " (engine " << report.engine_version << ")\n";
    out << "order " << report.config.order << ", degree bound " << report.config.degree << "\n\n";
    for (const auto& [stage, rec] : report.checks) {
        out << "  [" << to_string(rec.status) << "] " << to_string(stage) << "/" << rec.id;
        if (rec.probes > 0)
            out << "  probes " << rec.probes;
        if (rec.status == Status::fail)
            out << "  nonzero " << rec.nonzero_coefficients << ", max degree " << rec.max_residual_degree;
        out << "\n      " << rec.anchor << "\n";
        if (!rec.detail.empty())
            out << "      " << rec.detail << "\n";
        for (const auto& w : rec.witnesses)
            out << "      witness: " << w << "\n";
    }
    out << "\nverdict: " << verdict(report) << "\n";
    return out.str();
}

void emit_report(const Report& report, const std::string& format, const std::string& path)
{
    std::string text;
    if (format == "json")
        text = report_json(report);
    else if (format == "text")
        text = report_text(report);
    else
        throw ConfigError("unknown report format '" + format + "'");
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw ConfigError("cannot open report file '" + path + "'");
    f << text;
    f.flush();
    if (!f)
        throw ConfigError("cannot write report file '" + path + "'");
}

} // namespace brst
