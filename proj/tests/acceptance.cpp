// One line per acceptance criterion; exit status 1 if any line fails.

#include "brst/errors.hpp"
#include "brst/hpt_random.hpp"
#include "brst/pipeline.hpp"

#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

using namespace brst;

namespace {

const std::vector<std::string> kExamples = {"zero-angular-momentum", "s1-c4", "t2-c4", "commuting-n2"};
const std::vector<std::string> kBrst = {"zero-angular-momentum", "s1-c4", "t2-c4", "commuting-n2", "commuting-n3"};
const std::vector<std::string> kTorus = {"zero-angular-momentum", "s1-c4", "t2-c4"};

struct Outcome {
    bool ok = true;
    std::ostringstream note;

    void require(bool cond, const std::string& what)
    {
        if (!cond) {
            if (ok)
                note << what;
            ok = false;
        }
    }
};

std::map<std::string, Report>& reports()
{
    static std::map<std::string, Report> r;
    return r;
}

const Report& report(const std::string& name)
{
    auto it = reports().find(name);
    if (it == reports().end()) {
        RunOptions opt;
        opt.order = 4;
        it = reports().emplace(name, run_scenario(registry_config(name), opt)).first;
    }
    return it->second;
}

std::string why(const CheckRecord& rec)
{
    if (!rec.witnesses.empty())
        return rec.witnesses.front();
    return rec.detail.empty() ? to_string(rec.status) : rec.detail;
}

// Requires `id` to pass in the report of `name`.
void require_pass(Outcome& o, const std::string& name, const std::string& id, std::size_t min_probes = 0)
{
    const CheckRecord* rec = report(name).find(id);
    if (!rec) {
        o.require(false, name + "/" + id + " missing");
        return;
    }
    o.require(rec->status == Status::pass, name + "/" + id + ": " + why(*rec));
    o.require(rec->probes >= min_probes, name + "/" + id + ": only " + std::to_string(rec->probes) + " probes");
}

// Requires `id` to fail with a witness that names a nonzero residual.
void require_witnessed_failure(Outcome& o, const std::string& name, const std::string& id)
{
    const CheckRecord* rec = report(name).find(id);
    o.require(rec != nullptr, name + "/" + id + " missing");
    if (!rec)
        return;
    o.require(rec->status == Status::fail, name + "/" + id + " did not fail");
    o.require(!rec->witnesses.empty(), name + "/" + id + " has no witness");
    o.require(rec->nonzero_coefficients > 0, name + "/" + id + " has no nonzero residual");
}

Outcome acyclicity()
{
    Outcome o;
    for (const auto& s : kExamples) {
        o.require(report(s).config.degree == 6, s + " degree bound is not 6");
        require_pass(o, s, "koszul-acyclicity");
    }
    const CheckRecord* qq = report("negative-control-qq").find("koszul-acyclicity");
    o.require(qq && qq->status == Status::fail && !qq->witnesses.empty() &&
                  qq->witnesses.front().find("H_1") != std::string::npos,
              "(q, q) does not report H_1");
    if (qq && !qq->witnesses.empty())
        o.note << "(q, q): " << qq->witnesses.front();
    return o;
}

Outcome contraction_axioms()
{
    Outcome o;
    for (const auto& s : kExamples) {
        o.require(report(s).config.probes >= 50, s + " uses fewer than 50 probes per degree");
        require_pass(o, s, "koszul-contraction", 100);
        require_pass(o, s, "koszul-side-conditions", 100);
    }
    o.note << "res prol = id, dh + hd = id - prol res, hh = h prol = res h = 0";
    return o;
}

Outcome classical_brst()
{
    Outcome o;
    for (const auto& s : kBrst) {
        require_pass(o, s, "charge-closed");
        require_pass(o, s, "classical-splitting", 200);
    }
    o.note << "including the nonabelian commuting-n3";
    return o;
}

Outcome quantum_brst()
{
    Outcome o;
    for (const auto& s : kBrst) {
        o.require(report(s).config.order == 4, s + " not run at N = 4");
        require_pass(o, s, "quantum-charge-square");
        require_pass(o, s, "quantum-splitting", 200);
        require_pass(o, s, "super-star-associativity", 100);
    }
    o.note << "modulo nu^5, 100 mixed triples per scenario";
    return o;
}

Outcome invariance()
{
    Outcome o;
    for (const auto& s : kBrst) {
        require_pass(o, s, "quantum-covariance");
        require_pass(o, s, "strong-invariance", 20);
    }
    return o;
}

Outcome deformed_restriction()
{
    Outcome o;
    for (const auto& s : kExamples) {
        require_pass(o, s, "deformed-contraction");
        require_pass(o, s, "deformed-restriction-closed-form", 20);
    }
    o.note << "generic transfer equals the closed form; nu = 0 part is res";
    return o;
}

Outcome quantized_representation()
{
    Outcome o;
    for (const auto& s : kTorus)
        require_pass(o, s, "quantized-representation", 20);
    return o;
}

Outcome reduced_star()
{
    Outcome o;
    const std::string s = "s1-c4";
    o.require(report(s).config.degree == 6, "degree bound is not 6");
    require_pass(o, s, "reduced-star-associativity");
    require_pass(o, s, "reduced-star-classical-limit");
    require_pass(o, s, "reduced-star-first-order");
    require_pass(o, s, "reduced-star-representatives", 20);
    require_pass(o, s, "reduced-star-closed-form");
    if (const CheckRecord* a = report(s).find("reduced-star-associativity"))
        o.note << a->probes << " generator triples";
    return o;
}

Outcome perturbation_lemmas()
{
    Outcome o;
    ProbeGenerator gen(9001);
    auto same = [](const LinearOp<Vector>& a, const LinearOp<Vector>& b, const std::vector<Vector>& probes) {
        for (const auto& x : probes)
            if (a(x) != b(x))
                return false;
        return true;
    };
    const auto zero = LinearOp<Vector>::zero();
    for (int k = 0; k < 10; ++k) {
        const std::string tag = "complex " + std::to_string(k) + ": ";
        auto cs = random_filtered_contraction(gen);
        auto base = check_contraction(cs.contraction, cs.probes, "random", "");
        o.require(base.passed(), tag + "input " + why(base));

        auto c1 = perturb_v1(cs.contraction, cs.tY_v1, cs.tX_v1, cs.probes);
        o.require(c1.all_side_conditions(), tag + "first lemma lost a side condition");
        auto r1 = check_contraction(c1, cs.probes, "v1", "");
        o.require(r1.passed(), tag + "first lemma " + why(r1));
        o.require(same(c1.p, cs.contraction.p, cs.probes.y), tag + "first lemma changed p");

        auto c2 = perturb_v2(cs.contraction, cs.tY_v2, cs.tX_v2, cs.probes);
        o.require(c2.all_side_conditions(), tag + "second lemma lost a side condition");
        auto r2 = check_contraction(c2, cs.probes, "v2", "");
        o.require(r2.passed(), tag + "second lemma " + why(r2));
        o.require(same(c2.i, cs.contraction.i, cs.probes.x), tag + "second lemma changed i");

        for (const auto& c : {perturb_v1(cs.contraction, zero, zero, cs.probes),
                              perturb_v2(cs.contraction, zero, zero, cs.probes)}) {
            o.require(same(c.p, cs.contraction.p, cs.probes.y) && same(c.i, cs.contraction.i, cs.probes.x) &&
                          same(c.h, cs.contraction.h, cs.probes.y) && same(c.dY, cs.contraction.dY, cs.probes.y),
                      tag + "t = 0 is not the identity transformation");
        }
    }
    o.note << "10 random filtered complexes";
    return o;
}

Outcome negative_controls()
{
    Outcome o;
    require_witnessed_failure(o, "broken-sign", "quantum-splitting");
    require_witnessed_failure(o, "negative-control-qq", "koszul-acyclicity");
    require_witnessed_failure(o, "negative-control-cubic", "strong-invariance");
    for (const auto& name : {"broken-sign", "negative-control-qq", "negative-control-cubic"})
        o.require(report(name).config.expect == report(name).first_failure()->id,
                  std::string(name) + " first fails elsewhere");
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"Koszul acyclicity", acyclicity},
        {"contraction axioms", contraction_axioms},
        {"classical BRST", classical_brst},
        {"quantum BRST", quantum_brst},
        {"covariance and strong invariance", invariance},
        {"deformed restriction", deformed_restriction},
        {"quantized representation", quantized_representation},
        {"reduced star product", reduced_star},
        {"perturbation lemmas", perturbation_lemmas},
        {"negative controls", negative_controls},
    };
    int failures = 0;
    // The scenario pipelines are shared between criteria; run them first.
    Stopwatch pipelines;
    for (const auto& name : scenario_registry()) {
        try {
            (void)report(name.name);
        } catch (const std::exception& e) {
            std::cout << "pipeline " << name.name << " did not run: " << e.what() << std::endl;
        }
    }
    std::printf("scenario pipelines: %zu runs, %.0f ms\n", reports().size(), pipelines.elapsed_ms());
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        Stopwatch clock;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o.ok = false;
            o.note << "exception: " << e.what();
        }
        failures += o.ok ? 0 : 1;
        char ms[32];
        std::snprintf(ms, sizeof ms, "%.0f ms", clock.elapsed_ms());
        std::cout << "criterion " << (k + 1) << " " << (o.ok ? "PASS" : "FAIL") << "  " << criteria[k].first
                  << "  [" << ms << "]";
        if (!o.note.str().empty())
            std::cout << "  " << o.note.str();
        std::cout << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
