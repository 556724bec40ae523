#include "doctest.h"

#include "brst/errors.hpp"
#include "brst/pipeline.hpp"

#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace brst;

namespace {

std::string describe(const Report& r)
{
    std::string out;
    for (const auto& c : r.checks)
        if (c.record.status == Status::fail)
            out += c.record.id + ": " + (c.record.witnesses.empty() ? c.record.detail : c.record.witnesses.front()) + "\n";
    return out;
}

Status status_of(const Report& r, const std::string& id)
{
    const CheckRecord* rec = r.find(id);
    REQUIRE_MESSAGE(rec != nullptr, id);
    return rec->status;
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("circle scenario passes every stage")
{
    RunOptions opt;
    opt.timing = false;
    const Report r = run_scenario(registry_config("s1-c4"), opt);
    CHECK_MESSAGE(r.passed(), describe(r));
    for (const auto& c : r.checks) {
        CAPTURE(c.record.id);
        CHECK(c.record.status == Status::pass);
        CHECK_FALSE(c.record.anchor.empty());
    }
    CHECK(r.find("reduced-star-associativity") != nullptr);
    CHECK(r.find("koszul-contraction")->probes >= 50);

    // Every check id appears once.
    std::set<std::string> ids;
    for (const auto& c : r.checks)
        CHECK(ids.insert(c.record.id).second);
}

TEST_CASE("non complete intersection stops after acyclicity")
{
    const Report r = run_scenario(registry_config("negative-control-qq"));
    CHECK_FALSE(r.passed());
    CHECK(r.first_failure()->id == "koszul-acyclicity");
    CHECK_FALSE(r.first_failure()->witnesses.empty());
    for (const char* id : {"koszul-contraction", "charge-closed", "quantum-splitting", "deformed-contraction",
                           "reduced-star-associativity"})
        CHECK(status_of(r, id) == Status::skipped);
}

TEST_CASE("nonabelian commuting variety: BRST checks pass, reduction scoped out")
{
    RunOptions opt;
    opt.stages = {Stage::load, Stage::classical, Stage::quantum, Stage::reduction};
    const Report r = run_scenario(registry_config("commuting-n3"), opt);
    CHECK_MESSAGE(r.passed(), describe(r));
    for (const char* id : {"charge-closed", "classical-splitting", "quantum-charge-square", "quantum-splitting"})
        CHECK(status_of(r, id) == Status::pass);
    const CheckRecord* red = r.find("reduced-star-associativity");
    REQUIRE(red != nullptr);
    CHECK(red->status == Status::not_attempted);
    CHECK(red->detail.find("scoped out") != std::string::npos);
    // Stages left out of the selection do not appear.
    CHECK(r.find("strong-invariance") == nullptr);
}

TEST_CASE("negative controls fail their target check with a witness")
{
    RunOptions opt;
    opt.order = 3;
    for (const std::string name : {"broken-sign", "negative-control-cubic"}) {
        CAPTURE(name);
        const ScenarioConfig c = registry_config(name);
        const Report r = run_scenario(c, opt);
        const CheckRecord* rec = r.find(c.expect);
        REQUIRE(rec != nullptr);
        CHECK(rec->status == Status::fail);
        CHECK_FALSE(rec->witnesses.empty());
        CHECK_FALSE(r.passed());
    }
}

TEST_CASE("reports are byte-stable and written in both formats")
{
    RunOptions opt;
    opt.timing = false;
    opt.stages = {Stage::load, Stage::invariance, Stage::koszul};
    const Report a = run_scenario(registry_config("zero-angular-momentum"), opt);
    const Report b = run_scenario(registry_config("zero-angular-momentum"), opt);
    CHECK(report_json(a) == report_json(b));
    CHECK(report_text(a) == report_text(b));

    const auto j = nlohmann::json::parse(report_json(a));
    CHECK(j["scenario"] == "zero-angular-momentum");
    CHECK(j["verdict"] == "pass");
    CHECK(j["engine_version"] == engine_version());
    CHECK(j["config"]["order"] == 4);
    CHECK(j["checks"].size() == a.checks.size());
    for (const auto& c : j["checks"])
        for (const char* key : {"id", "stage", "anchor", "status", "residual", "probes", "wall_ms", "witnesses"})
            CHECK(c.contains(key));

    const auto dir = std::filesystem::temp_directory_path() / "brst_report_test";
    std::filesystem::create_directories(dir);
    emit_report(a, "json", (dir / "r.json").string());
    emit_report(a, "text", (dir / "r.txt").string());
    CHECK(slurp(dir / "r.json") == report_json(a));
    CHECK(slurp(dir / "r.txt").find("verdict: pass") != std::string::npos);
    CHECK_THROWS_AS(emit_report(a, "json", (dir / "missing" / "r.json").string()), ConfigError);
    CHECK_THROWS_AS(emit_report(a, "yaml", (dir / "r.yaml").string()), ConfigError);
    std::filesystem::remove_all(dir);
}

TEST_CASE("stage names")
{
    for (Stage s : all_stages())
        CHECK(parse_stage(to_string(s)) == s);
    CHECK_THROWS_AS(parse_stage("everything"), ConfigError);
}
