#pragma once

#include "brst/lie.hpp"
#include "brst/poisson.hpp"
#include "brst/report.hpp"
#include "brst/super.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace brst {

// A scenario as written in an INI file. Expressions stay as text until
// load_scenario() parses them against the declared variables.
//
//   [scenario]     name, title, justification, order, degree, probes,
//                  light_probes, seed, reduction, reduction_note, star_sign,
//                  expect
//   [variables]    names = x1 x2 ...; weights = rows separated by '|'
//   [poisson]      "x y = value" for each nonzero bracket {x, y}
//   [lie]          dim = l; "a b c = value" sets f_ab^c (1-based)
//   [moment_map]   J1 = ..., J2 = ...
//   [action]       "J1 x = expr" declares {J_1, x} for calibration
//   [invariants]   generators = derive | f1; f2; ...   degree = 2
struct ScenarioConfig {
    struct Bracket {
        std::string x, y, value;
    };
    struct Structure {
        std::size_t a, b, c;  // 0-based
        std::string value;
    };

    std::string name;
    std::string title;
    std::string justification;
    std::vector<std::string> variables;
    std::vector<std::vector<long>> weights;
    std::vector<Bracket> brackets;
    std::size_t lie_dim = 0;
    std::vector<Structure> structure;
    std::vector<std::string> moment_map;
    std::map<std::pair<std::size_t, std::string>, std::string> action;
    // Empty: weight-zero monomials of degree <= invariant_degree.
    std::vector<std::string> invariants;
    unsigned invariant_degree = 2;

    int order = 4;
    int degree = 6;
    std::size_t probes = 50;
    std::size_t light_probes = 20;
    std::uint64_t seed = 1;
    bool reduction = true;
    std::string reduction_note;
    TensorSign sign = TensorSign::koszul;
    // "pass", or the id of the check this scenario must fail.
    std::string expect = "pass";
};

ScenarioConfig parse_scenario_config(std::istream& in);
ScenarioConfig parse_scenario_config_text(const std::string& text);
// Throws ConfigError when the file cannot be read.
ScenarioConfig read_scenario_file(const std::string& path);

struct Scenario {
    ScenarioConfig config;
    ContextPtr ctx;
    PoissonData lambda;
    MomentMapData J;
    // action[a][v] = declared {J_a, x_v}; empty when nothing is declared.
    std::vector<std::vector<Poly>> action;
    std::vector<Poly> invariant_candidates;
    // Lie Jacobi, calibration and equivariance, in that order.
    std::vector<CheckRecord> load_checks;
    // Set when calibration succeeded only after negating Lambda.
    bool poisson_negated = false;
};

// Parses and validates. Throws ConfigError on malformed data or a failed
// load check, ConventionError when neither Lambda nor -Lambda reproduces the
// declared action.
Scenario load_scenario(const ScenarioConfig& config);

using ScenarioParams = std::map<std::string, std::string>;

struct RegistryEntry {
    std::string name;
    std::string summary;
    // Accepted keys of ScenarioParams with their defaults.
    std::map<std::string, std::string> params;
    std::function<std::string(const ScenarioParams&)> config_text;
};

const std::vector<RegistryEntry>& scenario_registry();
const RegistryEntry& registry_entry(const std::string& name);
// INI text of a registered scenario; unknown parameters raise ConfigError.
std::string registry_config_text(const std::string& name, const ScenarioParams& params = {});
ScenarioConfig registry_config(const std::string& name, const ScenarioParams& params = {});

} // namespace brst
