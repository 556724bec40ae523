#pragma once

#include "brst/report.hpp"
#include "brst/scenario.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace brst {

const char* engine_version();

enum class Stage { load, invariance, koszul, classical, quantum, deformed, reduction };

std::string to_string(Stage s);
// Throws ConfigError for an unknown name.
Stage parse_stage(const std::string& name);
const std::vector<Stage>& all_stages();

struct RunOptions {
    std::optional<int> order;
    std::optional<int> degree;
    // Empty runs every stage.
    std::set<Stage> stages;
    // Wall times are reported as 0 when false, which makes reports of
    // identical inputs byte-identical.
    bool timing = true;
};

struct ReportCheck {
    Stage stage;
    CheckRecord record;
};

struct Report {
    std::string scenario;
    std::string engine_version;
    ScenarioConfig config;
    std::vector<ReportCheck> checks;

    bool passed() const;
    const CheckRecord* find(const std::string& id) const;
    const CheckRecord* first_failure() const;
};

// Runs load checks, invariance, Koszul acyclicity and contraction, classical
// BRST, quantum BRST, deformed restriction and quantum reduction in that
// order. A stage whose prerequisites failed is reported as skipped.
// Throws ConfigError/ConventionError when the scenario does not load.
Report run_scenario(const ScenarioConfig& config, const RunOptions& options = {});

std::string report_json(const Report& report);
std::string report_text(const Report& report);
// Writes the report; throws ConfigError on I/O failure.
void emit_report(const Report& report, const std::string& format, const std::string& path);

} // namespace brst
