#include "brst/pipeline.hpp"

#include "brst/brst_classical.hpp"
#include "brst/brst_quantum.hpp"
#include "brst/errors.hpp"
#include "brst/koszul.hpp"
#include "brst/reduction.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <memory>
#include <optional>

namespace brst {

#ifndef BRST_VERSION
#define BRST_VERSION "0.0.0"
#endif

const char* engine_version() { return BRST_VERSION; }

namespace {

struct CheckInfo {
    const char* id;
    Stage stage;
    const char* anchor;
};

const std::vector<CheckInfo>& check_table()
{
    static const std::vector<CheckInfo> t = {
        {"lie-jacobi", Stage::load, "Lie algebra data: antisymmetry and Jacobi identity"},
        {"calibration", Stage::load, "sign convention: {J_a, x} reproduces the declared infinitesimal action"},
        {"classical-equivariance", Stage::load, "equivariant moment map: {J_a, J_b} = f_ab^c J_c"},
        {"quantum-covariance", Stage::invariance, "quantum covariance: J_a * J_b - J_b * J_a = nu f_ab^c J_c"},
        {"strong-invariance", Stage::invariance, "strong invariance: J_a * f - f * J_a = nu {J_a, f}"},
        {"koszul-acyclicity", Stage::koszul, "Koszul complex of the moment map: no homology in positive degree"},
        {"koszul-contraction", Stage::koszul, "Koszul contraction (res, prol, h): res prol = id, dh + hd = id - prol res"},
        {"koszul-side-conditions", Stage::koszul, "normalized Koszul homotopy: h h = 0, h prol = 0, res h = 0"},
        {"charge-closed", Stage::classical, "classical BRST charge: {theta, theta} = 0"},
        {"classical-splitting", Stage::classical, "classical BRST differential: D = delta + 2d, D D = 0"},
        {"classical-contraction", Stage::classical, "classical transfer: first perturbation lemma with initiator delta"},
        {"classical-transfer-closed-forms", Stage::classical, "classical transfer: closed forms of H and Phi"},
        {"classical-reduced-bracket", Stage::classical, "reduced Poisson bracket on invariants"},
        {"quantum-charge-square", Stage::quantum, "quantum BRST charge: theta_nu * theta_nu = 0"},
        {"quantum-splitting", Stage::quantum, "quantum BRST differential: D_nu = delta_nu + 2 d_nu"},
        {"super-star-associativity", Stage::quantum, "graded star product with Clifford factor: associativity"},
        {"deformed-contraction", Stage::deformed, "deformed Koszul contraction (res_nu, prol, h_nu)"},
        {"deformed-restriction-closed-form", Stage::deformed, "deformed restriction: res (id + (d_nu - d) h)^-1"},
        {"quantized-representation", Stage::reduction, "quantized representation agrees with res L prol"},
        {"quantum-contraction", Stage::reduction, "quantum transfer: first perturbation lemma with initiator delta_nu"},
        {"quantum-transfer-closed-forms", Stage::reduction, "quantum transfer: closed forms, Phi_nu = prol on invariants"},
        {"reduced-star-classical-limit", Stage::reduction, "reduced star product: unit and nu^0 part res(fg)"},
        {"reduced-star-first-order", Stage::reduction, "reduced star product: f*g - g*f = nu {f, g}_red + O(nu^2)"},
        {"reduced-star-associativity", Stage::reduction, "reduced star product: associativity on generator triples"},
        {"reduced-star-representatives", Stage::reduction, "reduced star product: independent of the representative"},
        {"reduced-star-closed-form", Stage::reduction, "reduced star product: transfer route equals res_nu(prol f * prol g)"},
    };
    return t;
}

const CheckInfo& info(const std::string& id)
{
    for (const auto& c : check_table())
        if (id == c.id)
            return c;
    throw ConfigError("internal: unknown check id " + id);
}

std::vector<const CheckInfo*> checks_of(Stage s)
{
    std::vector<const CheckInfo*> out;
    for (const auto& c : check_table())
        if (c.stage == s)
            out.push_back(&c);
    return out;
}

std::uint16_t random_mask(ProbeGenerator& gen, std::size_t dim, std::optional<int> popcount)
{
    const long top = (1L << dim) - 1;
    for (;;) {
        auto m = static_cast<std::uint16_t>(gen.integer(0, top));
        if (!popcount || std::popcount(m) == *popcount)
            return m;
    }
}

// Random element whose terms all have Koszul weight (polynomial degree plus
// generator degrees of the antighosts) at most `bound`.
SuperElement bounded_element(ProbeGenerator& gen, const ContextPtr& ctx, std::size_t dim, int gen_degree, int order,
                             int bound, std::size_t terms, std::optional<int> antighosts, bool ghosts)
{
    SuperElement x(ctx, order);
    for (std::size_t t = 0; t < terms; ++t) {
        SuperKey k;
        int w = 0;
        for (int tries = 0;; ++tries) {
            k.antighosts = random_mask(gen, dim, antighosts);
            k.ghosts = ghosts ? random_mask(gen, dim, std::nullopt) : 0;
            w = gen_degree * k.antighost_count();
            if (w <= bound)
                break;
            if (tries > 1000)
                throw ShapeError("no probe fits the degree bound");
        }
        Series s(ctx, order);
        for (int j = 0; j <= order; ++j)
            s[j] = gen.poly(ctx, static_cast<unsigned>(bound - w), 2, true);
        x.add_term(k, s);
    }
    return x;
}

template <class F>
void each_pair(std::size_t n, F&& f)
{
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            f(i, j);
}

std::string short_str(const Series& s) { return ResidualTally::truncate_text(s.str(), 80); }

class Runner {
public:
    Runner(const ScenarioConfig& config, const RunOptions& opt) : opt_(opt), s_(load_scenario(config))
    {
        report_.scenario = config.name;
        report_.engine_version = engine_version();
        report_.config = config;
    }

    Report run()
    {
        for (const auto& rec : s_.load_checks)
            add(rec);
        stage_invariance();
        stage_koszul();
        stage_classical();
        stage_quantum();
        stage_deformed();
        stage_reduction();
        return std::move(report_);
    }

private:
    const ScenarioConfig& cfg() const { return s_.config; }
    int N() const { return cfg().order; }
    int d() const { return cfg().degree; }
    std::size_t probes() const { return cfg().probes; }
    std::size_t light() const { return cfg().light_probes; }

    bool enabled(Stage st) const { return opt_.stages.empty() || opt_.stages.count(st); }

    void add(CheckRecord rec)
    {
        const CheckInfo& ci = info(rec.id);
        if (!enabled(ci.stage))
            return;
        rec.anchor = ci.anchor;
        if (!opt_.timing)
            rec.wall_ms = 0;
        report_.checks.push_back({ci.stage, std::move(rec)});
    }

    void mark(const std::string& id, Status status, const std::string& detail)
    {
        CheckRecord rec = make_record(id, "");
        rec.status = status;
        rec.detail = detail;
        add(rec);
    }

    void mark_stage(Stage st, Status status, const std::string& detail)
    {
        for (const auto* c : checks_of(st))
            mark(c->id, status, detail);
    }

    // Runs a check; an exception becomes a failure with the message as witness.
    bool guarded(const std::string& id, const std::function<CheckRecord()>& f)
    {
        if (!enabled(info(id).stage))
            return true;
        Stopwatch clock;
        CheckRecord rec;
        try {
            rec = f();
        } catch (const Error& e) {
            rec = make_record(id, "");
            rec.status = Status::fail;
            rec.witnesses.push_back(std::string("exception: ") + e.what());
            rec.wall_ms = clock.elapsed_ms();
        }
        rec.id = id;
        const bool ok = rec.status != Status::fail;
        add(std::move(rec));
        return ok;
    }

    // Builds a record from a tally filled by `body`.
    CheckRecord tallied(const std::string& id, const std::function<void(ResidualTally&)>& body)
    {
        Stopwatch clock;
        ResidualTally tally;
        body(tally);
        CheckRecord rec = make_record(id, "");
        tally.finish(rec);
        rec.wall_ms = clock.elapsed_ms();
        return rec;
    }

    std::vector<Poly> poly_probes(std::size_t count, unsigned degree, std::uint64_t salt)
    {
        ProbeGenerator gen(cfg().seed * 1000003u + salt);
        std::vector<Poly> out;
        for (std::size_t k = 0; k < count; ++k)
            out.push_back(gen.poly(s_.ctx, degree, 3, true));
        return out;
    }

    std::vector<SuperElement> super_probes(std::size_t count, int order, unsigned degree, std::uint64_t salt)
    {
        ProbeGenerator gen(cfg().seed * 1000003u + salt);
        std::vector<SuperElement> out;
        for (std::size_t k = 0; k < count; ++k)
            out.push_back(random_super_element(gen, s_.ctx, s_.J.dim(), order, degree, 2));
        return out;
    }

    // Probes for contractions over the Koszul complex: y with weight <= d,
    // x = res of such elements (antighost-free).
    ProbeSet<SuperElement> bounded_probes(std::size_t count, int order, bool ghosts, std::uint64_t salt)
    {
        ProbeGenerator gen(cfg().seed * 1000003u + salt);
        const int gd = static_cast<int>(s_.J.degree());
        ProbeSet<SuperElement> p;
        for (std::size_t k = 0; k < count; ++k) {
            p.y.push_back(bounded_element(gen, s_.ctx, s_.J.dim(), gd, order, d(), 2, std::nullopt, ghosts));
            p.x.push_back(koszul_->res(bounded_element(gen, s_.ctx, s_.J.dim(), gd, order, d(), 3, 0, ghosts)));
        }
        return p;
    }

    // ------------------------------------------------------------ stages

    void stage_invariance()
    {
        MoyalStar star(s_.lambda, N());
        guarded("quantum-covariance", [&] { return check_quantum_covariance(s_.J, star); });
        strong_ok_ = guarded("strong-invariance",
                             [&] { return check_strong_invariance(s_.J, star, poly_probes(light(), 4, 1)); });
    }

    void stage_koszul()
    {
        try {
            (void)s_.J.degree();
        } catch (const ConfigError& e) {
            koszul_note_ = std::string("not attempted: ") + e.what();
            mark_stage(Stage::koszul, Status::not_attempted, koszul_note_);
            return;
        }
        koszul_ = std::make_unique<KoszulComplex>(s_.J, d());
        acyclic_ = guarded("koszul-acyclicity", [&] {
            return koszul_->check_acyclicity().record("koszul-acyclicity", "");
        });
        if (!acyclic_) {
            koszul_note_ = "skipped: the Koszul complex is not acyclic";
            mark("koszul-contraction", Status::skipped, koszul_note_);
            mark("koszul-side-conditions", Status::skipped, koszul_note_);
            return;
        }
        if (!enabled(Stage::koszul))
            return;
        // probes() chains in every homological degree that fits the bound.
        ProbeGenerator gen(cfg().seed * 1000003u + 2);
        const int gd = static_cast<int>(s_.J.degree());
        ProbeSet<SuperElement> p;
        std::string detail;
        for (int i = 0; i <= static_cast<int>(s_.J.dim()); ++i) {
            if (i * gd > d()) {
                detail += "homological degree " + std::to_string(i) + " exceeds the degree bound; ";
                continue;
            }
            for (std::size_t k = 0; k < probes(); ++k)
                p.y.push_back(bounded_element(gen, s_.ctx, s_.J.dim(), gd, 0, d(), 2, i, false));
        }
        for (std::size_t k = 0; k < probes(); ++k)
            p.x.push_back(koszul_->res(bounded_element(gen, s_.ctx, s_.J.dim(), gd, 0, d(), 3, 0, false)));
        const auto c = koszul_->contraction();
        guarded("koszul-contraction", [&] {
            auto rec = check_contraction(c, p, "koszul-contraction", "");
            rec.detail = detail;
            return rec;
        });
        guarded("koszul-side-conditions", [&] {
            auto rec = check_contraction(enforce_side_conditions(c), p, "koszul-side-conditions", "");
            rec.detail = detail;
            return rec;
        });
    }

    bool upstream_blocked(Stage st)
    {
        if (koszul_ && !acyclic_) {
            mark_stage(st, Status::skipped, "skipped: the Koszul complex is not acyclic");
            return true;
        }
        return false;
    }

    void stage_classical()
    {
        if (upstream_blocked(Stage::classical))
            return;
        const SuperElement theta = classical_charge(s_.J);
        guarded("charge-closed", [&] { return check_charge_closed(theta, s_.lambda); });
        guarded("classical-splitting", [&] {
            return check_classical_splitting(theta, s_.J, s_.lambda, super_probes(probes(), 0, 3, 3));
        });
        if (!koszul_) {
            for (const char* id : {"classical-contraction", "classical-transfer-closed-forms", "classical-reduced-bracket"})
                mark(id, Status::not_attempted, koszul_note_);
            return;
        }
        if (!enabled(Stage::classical))
            return;
        std::unique_ptr<ClassicalReduction> red;
        ProbeSet<SuperElement> p;
        const bool built = guarded("classical-contraction", [&] {
            p = bounded_probes(light(), 0, true, 4);
            red = std::make_unique<ClassicalReduction>(*koszul_, s_.lambda, p);
            return check_contraction(red->contraction(), p, "classical-contraction", "");
        });
        if (!red) {
            mark("classical-transfer-closed-forms", Status::skipped, "skipped: the transfer could not be built");
            mark("classical-reduced-bracket", Status::skipped, "skipped: the transfer could not be built");
            return;
        }
        (void)built;
        guarded("classical-transfer-closed-forms", [&] {
            return tallied("classical-transfer-closed-forms", [&](ResidualTally& t) {
                for (std::size_t k = 0; k < p.y.size(); ++k)
                    t.add("H on probe " + std::to_string(k), red->H(p.y[k]) - red->H_closed_form(p.y[k]));
                for (std::size_t k = 0; k < p.x.size(); ++k)
                    t.add("Phi on probe " + std::to_string(k), red->Phi(p.x[k]) - red->Phi_closed_form(p.x[k]));
            });
        });
        const std::vector<Poly> gens = generators();
        if (gens.empty()) {
            mark("classical-reduced-bracket", Status::not_attempted, "no invariant generators declared");
            return;
        }
        guarded("classical-reduced-bracket", [&] {
            return tallied("classical-reduced-bracket", [&](ResidualTally& t) {
                auto br = [&](const Poly& f, const Poly& g) { return red->reduced_poisson(f, g); };
                each_pair(gens.size(), [&](std::size_t i, std::size_t j) {
                    t.add("antisymmetry (" + gens[i].str() + ", " + gens[j].str() + ")", br(gens[i], gens[j]) + br(gens[j], gens[i]));
                });
                ProbeGenerator gen(cfg().seed * 1000003u + 5);
                auto pick = [&] { return gens[static_cast<std::size_t>(gen.integer(0, static_cast<long>(gens.size()) - 1))]; };
                for (std::size_t k = 0; k < light(); ++k) {
                    const Poly f = pick(), g = pick(), h = pick();
                    t.add("Jacobi (" + f.str() + ", " + g.str() + ", " + h.str() + ")",
                          br(f, br(g, h)) + br(g, br(h, f)) + br(h, br(f, g)));
                    // f + J_a u represents the same function on the zero level.
                    const std::size_t a = static_cast<std::size_t>(gen.integer(0, static_cast<long>(s_.J.dim()) - 1));
                    const int room = std::max(0, d() - static_cast<int>(s_.J.degree()) - 2);
                    const Poly u = gen.poly(s_.ctx, static_cast<unsigned>(std::min(room, 1)), 2, true);
                    t.add("ideal shift of " + f.str(), br(f + s_.J.J[a] * u, g) - br(f, g));
                }
            });
        });
    }

    void stage_quantum()
    {
        if (upstream_blocked(Stage::quantum))
            return;
        brst_ = std::make_unique<QuantumBrst>(s_.J, s_.lambda, N(), cfg().sign);
        bool ok = guarded("quantum-charge-square", [&] { return check_charge_square(*brst_); });
        ok = guarded("quantum-splitting", [&] {
            return check_quantum_splitting(*brst_, super_probes(probes(), N(), 3, 6));
        }) && ok;
        ok = guarded("super-star-associativity", [&] {
            return check_super_associativity(brst_->star(), super_probes(300, N(), 2, 7));
        }) && ok;
        quantum_ok_ = ok;
    }

    // Empty string when the deformed and reduction stages may run.
    std::string reduction_blocker() const
    {
        if (!koszul_)
            return koszul_note_;
        if (!acyclic_)
            return "skipped: the Koszul complex is not acyclic";
        if (!strong_ok_)
            return "skipped: strong invariance failed";
        if (!quantum_ok_)
            return "skipped: quantum BRST checks failed";
        return {};
    }

    void stage_deformed()
    {
        if (const std::string why = reduction_blocker(); !why.empty()) {
            mark_stage(Stage::deformed, why.rfind("not attempted", 0) == 0 ? Status::not_attempted : Status::skipped, why);
            return;
        }
        if (!enabled(Stage::deformed) && !enabled(Stage::reduction))
            return;
        red_probes_ = bounded_probes(light(), N(), true, 8);
        const bool built = guarded("deformed-contraction", [&] {
            red_ = std::make_unique<QuantumReduction>(*koszul_, *brst_, red_probes_);
            return check_contraction(red_->deformed(), red_probes_, "deformed-contraction", "");
        });
        if (!red_) {
            mark("deformed-restriction-closed-form", Status::skipped, "skipped: the deformed contraction could not be built");
            return;
        }
        (void)built;
        guarded("deformed-restriction-closed-form", [&] {
            return tallied("deformed-restriction-closed-form", [&](ResidualTally& t) {
                const auto pr = bounded_probes(light(), N(), true, 9);
                for (std::size_t k = 0; k < pr.y.size(); ++k) {
                    const SuperElement r = red_->res_nu(pr.y[k]);
                    t.add("probe " + std::to_string(k), r - red_->res_nu_closed_form(pr.y[k]));
                    t.add("nu = 0 on probe " + std::to_string(k), r.nu_coefficient(0) - koszul_->res(pr.y[k]).nu_coefficient(0));
                }
                for (std::size_t a = 0; a < s_.J.dim(); ++a)
                    t.add("J" + std::to_string(a + 1), red_->res_nu(SuperElement::from_poly(s_.J.J[a], N())));
            });
        });
    }

    void stage_reduction()
    {
        if (const std::string why = reduction_blocker(); !why.empty()) {
            mark_stage(Stage::reduction, why.rfind("not attempted", 0) == 0 ? Status::not_attempted : Status::skipped, why);
            return;
        }
        if (!cfg().reduction) {
            const std::string note = cfg().reduction_note.empty() ? "not attempted" : cfg().reduction_note;
            mark_stage(Stage::reduction, Status::not_attempted, note);
            return;
        }
        if (!red_) {
            mark_stage(Stage::reduction, Status::skipped, "skipped: the deformed contraction could not be built");
            return;
        }
        if (!enabled(Stage::reduction))
            return;
        const bool lemma = guarded("quantized-representation", [&] {
            return tallied("quantized-representation", [&](ResidualTally& t) {
                ProbeGenerator gen(cfg().seed * 1000003u + 10);
                for (std::size_t k = 0; k < light(); ++k) {
                    Series f(s_.ctx, N());
                    for (int j = 0; j <= N(); ++j)
                        f[j] = koszul_->res(gen.poly(s_.ctx, static_cast<unsigned>(d() - static_cast<int>(s_.J.degree()) + 2), 3, true));
                    for (std::size_t a = 0; a < s_.J.dim(); ++a)
                        t.add("J" + std::to_string(a + 1) + " on " + short_str(f),
                              red_->quantized_rep(a, f) - red_->classical_rep(a, f));
                }
            });
        });
        guarded("quantum-contraction", [&] {
            return check_contraction(red_->transferred(), red_probes_, "quantum-contraction", "");
        });
        const std::vector<Poly> gens = generators();
        guarded("quantum-transfer-closed-forms", [&] {
            return tallied("quantum-transfer-closed-forms", [&](ResidualTally& t) {
                for (std::size_t k = 0; k < red_probes_.y.size(); ++k)
                    t.add("H on probe " + std::to_string(k), red_->H(red_probes_.y[k]) - red_->H_closed_form(red_probes_.y[k]));
                for (std::size_t k = 0; k < red_probes_.x.size(); ++k)
                    t.add("Phi on probe " + std::to_string(k), red_->Phi(red_probes_.x[k]) - red_->Phi_closed_form(red_probes_.x[k]));
                for (const auto& g : gens) {
                    const SuperElement f = SuperElement::from_poly(g, N());
                    t.add("Phi = prol on " + g.str(), red_->Phi(f) - koszul_->prol(f));
                }
            });
        });
        if (!lemma) {
            for (const char* id : {"reduced-star-classical-limit", "reduced-star-first-order", "reduced-star-associativity",
                                   "reduced-star-representatives", "reduced-star-closed-form"})
                mark(id, Status::skipped, "skipped: the quantized representation differs from the classical one");
            return;
        }
        if (gens.empty()) {
            for (const char* id : {"reduced-star-classical-limit", "reduced-star-first-order", "reduced-star-associativity",
                                   "reduced-star-representatives", "reduced-star-closed-form"})
                mark(id, Status::not_attempted, "no invariant generators declared");
            return;
        }
        std::vector<Series> G;
        for (const auto& g : gens)
            G.emplace_back(g, N());
        const std::size_t n = G.size();
        std::vector<std::vector<std::optional<Series>>> prod(n, std::vector<std::optional<Series>>(n));
        auto star = [&](std::size_t i, std::size_t j) -> const Series& {
            if (!prod[i][j])
                prod[i][j] = red_->reduced_star(G[i], G[j]);
            return *prod[i][j];
        };
        ClassicalReduction classical(*koszul_, s_.lambda, {});
        guarded("reduced-star-classical-limit", [&] {
            return tallied("reduced-star-classical-limit", [&](ResidualTally& t) {
                const Series one(Poly::constant(s_.ctx, Scalar(1)), N());
                for (std::size_t i = 0; i < n; ++i)
                    t.add(gens[i].str() + " * 1", red_->reduced_star(G[i], one) - G[i]);
                each_pair(n, [&](std::size_t i, std::size_t j) {
                    t.add("(" + gens[i].str() + ", " + gens[j].str() + ")", star(i, j)[0] - koszul_->res(gens[i] * gens[j]));
                });
            });
        });
        guarded("reduced-star-first-order", [&] {
            return tallied("reduced-star-first-order", [&](ResidualTally& t) {
                each_pair(n, [&](std::size_t i, std::size_t j) {
                    const Series c = star(i, j) - star(j, i);
                    Series expected = Series::nu_power(s_.ctx, N(), 1, classical.reduced_poisson(gens[i], gens[j]));
                    t.add("(" + gens[i].str() + ", " + gens[j].str() + ")", (c - expected).truncated(1));
                });
            });
        });
        guarded("reduced-star-associativity", [&] {
            return tallied("reduced-star-associativity", [&](ResidualTally& t) {
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        for (std::size_t k = 0; k < n; ++k)
                            t.add("(" + gens[i].str() + ", " + gens[j].str() + ", " + gens[k].str() + ")",
                                  red_->reduced_star(star(i, j), G[k]) - red_->reduced_star(G[i], star(j, k)));
            });
        });
        guarded("reduced-star-representatives", [&] {
            return tallied("reduced-star-representatives", [&](ResidualTally& t) {
                ProbeGenerator gen(cfg().seed * 1000003u + 11);
                const MoyalStar& ms = brst_->star().moyal();
                auto pick = [&] { return static_cast<std::size_t>(gen.integer(0, static_cast<long>(n) - 1)); };
                auto comp = [&] { return static_cast<std::size_t>(gen.integer(0, static_cast<long>(s_.J.dim()) - 1)); };
                // Keeps the product of the two representatives within the degree bound.
                const int room = d() - 2 * static_cast<int>(s_.J.degree()) - 2;
                for (std::size_t k = 0; k < light(); ++k) {
                    const std::size_t i = pick(), j = pick();
                    const Series u(gen.poly(s_.ctx, static_cast<unsigned>(std::clamp(room, 0, 1)), 2, true), N());
                    const Series v(Poly::constant(s_.ctx, gen.small_scalar(true)), N());
                    const Series F = G[i] + ms(u, Series(s_.J.J[comp()], N()));
                    const Series Gj = G[j] + ms(v, Series(s_.J.J[comp()], N()));
                    t.add("(" + short_str(F) + ", " + short_str(Gj) + ")",
                          red_->reduced_star_representatives(F, Gj) - star(i, j));
                }
            });
        });
        guarded("reduced-star-closed-form", [&] {
            return tallied("reduced-star-closed-form", [&](ResidualTally& t) {
                ProbeGenerator gen(cfg().seed * 1000003u + 12);
                for (std::size_t k = 0; k < light(); ++k) {
                    const auto i = static_cast<std::size_t>(gen.integer(0, static_cast<long>(n) - 1));
                    const auto j = static_cast<std::size_t>(gen.integer(0, static_cast<long>(n) - 1));
                    t.add("(" + gens[i].str() + ", " + gens[j].str() + ")",
                          star(i, j) - red_->reduced_star_closed_form(G[i], G[j]));
                }
            });
        });
    }

    // Normal forms of the invariant candidates, zero and duplicates dropped.
    std::vector<Poly> generators() const
    {
        std::vector<Poly> out;
        for (const auto& c : s_.invariant_candidates) {
            const Poly g = koszul_->res(c);
            if (!g.is_zero() && std::find(out.begin(), out.end(), g) == out.end())
                out.push_back(g);
        }
        return out;
    }

    RunOptions opt_;
    Scenario s_;
    Report report_;
    std::unique_ptr<KoszulComplex> koszul_;
    std::string koszul_note_;
    bool acyclic_ = false;
    bool strong_ok_ = true;
    bool quantum_ok_ = true;
    std::unique_ptr<QuantumBrst> brst_;
    ProbeSet<SuperElement> red_probes_;
    std::unique_ptr<QuantumReduction> red_;
};

} // namespace

std::string to_string(Stage s)
{
    switch (s) {
    case Stage::load: return "load";
    case Stage::invariance: return "invariance";
    case Stage::koszul: return "koszul";
    case Stage::classical: return "classical";
    case Stage::quantum: return "quantum";
    case Stage::deformed: return "deformed";
    case Stage::reduction: return "reduction";
    }
    return "unknown";
}

const std::vector<Stage>& all_stages()
{
    static const std::vector<Stage> s = {Stage::load,    Stage::invariance, Stage::koszul,   Stage::classical,
                                         Stage::quantum, Stage::deformed,   Stage::reduction};
    return s;
}

Stage parse_stage(const std::string& name)
{
    for (Stage s : all_stages())
        if (to_string(s) == name)
            return s;
    throw ConfigError("unknown stage '" + name + "'");
}

bool Report::passed() const { return first_failure() == nullptr; }

const CheckRecord* Report::find(const std::string& id) const
{
    for (const auto& c : checks)
        if (c.record.id == id)
            return &c.record;
    return nullptr;
}

const CheckRecord* Report::first_failure() const
{
    for (const auto& c : checks)
        if (c.record.status == Status::fail)
            return &c.record;
    return nullptr;
}

Report run_scenario(const ScenarioConfig& config, const RunOptions& options)
{
    ScenarioConfig c = config;
    if (options.order)
        c.order = *options.order;
    if (options.degree)
        c.degree = *options.degree;
    return Runner(c, options).run();
}

} // namespace brst
