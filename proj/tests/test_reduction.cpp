#include "doctest.h"

#include "brst/errors.hpp"
#include "brst/parse.hpp"
#include "brst/reduction.hpp"
#include "brst/scenario.hpp"

#include <memory>

using namespace brst;

namespace {

std::string first_witness(const CheckRecord& rec)
{
    return rec.witnesses.empty() ? rec.detail : rec.witnesses.front();
}

// Everything the reduction needs for one scenario, built once per test.
struct Pipeline {
    Scenario s;
    std::unique_ptr<KoszulComplex> koszul;
    std::unique_ptr<QuantumBrst> brst;
    ProbeSet<SuperElement> probes;
    std::unique_ptr<QuantumReduction> red;

    Pipeline(const std::string& name, int order, std::uint64_t seed = 3) : s(load_scenario(registry_config(name)))
    {
        koszul = std::make_unique<KoszulComplex>(s.J, s.config.degree);
        brst = std::make_unique<QuantumBrst>(s.J, s.lambda, order);
        ProbeGenerator gen(seed);
        for (int t = 0; t < 8; ++t) {
            probes.y.push_back(random_super_element(gen, s.ctx, s.J.dim(), order, 2, 2));
            probes.x.push_back(koszul->res(random_super_element(gen, s.ctx, s.J.dim(), order, 4, 3)));
        }
        red = std::make_unique<QuantumReduction>(*koszul, *brst, probes);
    }

    Series series(const Poly& p) const { return Series(p, brst->order()); }
    Series gen(std::size_t i) const { return series(koszul->res(s.invariant_candidates.at(i))); }
};

} // namespace

TEST_CASE("deformed restriction")
{
    Pipeline p("s1-c4", 4);
    auto rec = check_contraction(p.red->deformed(), p.probes, "deformed-contraction", "deformed restriction");
    CHECK_MESSAGE(rec.passed(), first_witness(rec));
    CHECK(p.red->deformed().all_side_conditions());

    ProbeGenerator gen(5);
    for (int t = 0; t < 10; ++t) {
        const SuperElement x = random_super_element(gen, p.s.ctx, 1, 4, 4, 3);
        const SuperElement r = p.red->res_nu(x);
        CHECK(r == p.red->res_nu_closed_form(x));
        CHECK(r.nu_coefficient(0) == p.koszul->res(x).nu_coefficient(0));
    }
    const SuperElement J = SuperElement::from_poly(p.s.J.J[0], 4);
    CHECK(p.red->res_nu(J).is_zero());
    for (const auto& x : p.probes.x)
        CHECK(p.red->res_nu(p.koszul->prol(x)) == x);
}

TEST_CASE("quantum transfer contraction")
{
    Pipeline p("t2-c4", 4);
    auto rec = check_contraction(p.red->transferred(), p.probes, "quantum-contraction", "quantum reduction");
    CHECK_MESSAGE(rec.passed(), first_witness(rec));
    for (const auto& y : p.probes.y) {
        CHECK(p.red->H(y) == p.red->H_closed_form(y));
        // Equivariant homotopy: the Neumann series of the first lemma stops at once.
        CHECK(p.red->H(y) == p.red->deformed().h(y) * Scalar(1, 2));
        CHECK(p.red->H(p.red->H(y)).is_zero());
    }
    for (const auto& x : p.probes.x) {
        CHECK(p.red->Phi(x) == p.red->Phi_closed_form(x));
        CHECK(p.red->H(p.red->Phi(x)).is_zero());
    }
    for (std::size_t i = 0; i < p.s.invariant_candidates.size(); ++i) {
        const SuperElement f = SuperElement::from_series(p.gen(i));
        CHECK(p.red->Phi(f) == p.koszul->prol(f));
    }
}

TEST_CASE("quantized representation equals the classical one for torus actions")
{
    for (const char* name : {"zero-angular-momentum", "s1-c4", "t2-c4"}) {
        const std::string n = name;
        CAPTURE(n);
        Pipeline p(name, 4);
        ProbeGenerator gen(7);
        for (int t = 0; t < 10; ++t) {
            Series f(p.s.ctx, 4);
            for (int k = 0; k <= 4; ++k)
                f[k] = p.koszul->res(gen.poly(p.s.ctx, 4, 3, true));
            for (std::size_t a = 0; a < p.s.J.dim(); ++a)
                CHECK(p.red->quantized_rep(a, f) == p.red->classical_rep(a, f));
            if (p.s.J.dim() == 2)
                CHECK(p.red->quantized_rep(0, p.red->quantized_rep(1, f)) ==
                      p.red->quantized_rep(1, p.red->quantized_rep(0, f)));
        }
        CHECK(p.red->invariant(p.gen(1)));
    }
}

TEST_CASE("reduced star product on the circle quotient")
{
    Pipeline p("s1-c4", 4);
    ClassicalReduction classical(*p.koszul, p.s.lambda, {});
    const std::size_t n = p.s.invariant_candidates.size();
    const Series one = p.gen(0);
    for (std::size_t i = 0; i < n; ++i) {
        const Series f = p.gen(i);
        CHECK(p.red->reduced_star(f, one) == f);
        CHECK(p.red->reduced_star(one, f) == f);
    }
    for (std::size_t i = 1; i < n; i += 3)
        for (std::size_t j = 2; j < n; j += 4) {
            const Series f = p.gen(i), g = p.gen(j);
            const Series fg = p.red->reduced_star(f, g), gf = p.red->reduced_star(g, f);
            CHECK(fg[0] == p.koszul->res(f[0] * g[0]));
            const Series comm = fg - gf;
            CHECK(comm[0].is_zero());
            CHECK(comm[1] == classical.reduced_poisson(f[0], g[0]));
            CHECK(fg == p.red->reduced_star_closed_form(f, g));
            const Series h = p.gen((i + j) % n);
            CHECK(p.red->reduced_star(p.red->reduced_star(f, g), h) == p.red->reduced_star(f, p.red->reduced_star(g, h)));
        }
    CHECK_THROWS_AS(p.red->reduced_star(p.series(parse_polynomial("z1", p.s.ctx)), one), InvarianceError);
}

TEST_CASE("reduced star product does not depend on the representative")
{
    Pipeline p("s1-c4", 4);
    const MoyalStar& star = p.brst->star().moyal();
    const Series J = p.series(p.s.J.J[0]);
    ProbeGenerator gen(11);
    for (int t = 0; t < 5; ++t) {
        const Series f = p.gen(static_cast<std::size_t>(gen.integer(1, 16)));
        const Series g = p.gen(static_cast<std::size_t>(gen.integer(1, 16)));
        // Degrees stay within the bound: deg F <= 3, deg G <= 2.
        const Series u = p.series(gen.poly(p.s.ctx, 1, 3, true));
        const Series v = p.series(Poly::constant(p.s.ctx, gen.small_scalar(true)));
        const Series F = f + star(u, J), G = g + star(v, J);
        CHECK(p.red->reduced_star_representatives(F, G) == p.red->reduced_star(f, g));
    }
}

TEST_CASE("product of cochain classes")
{
    Pipeline p("s1-c4", 3);
    const auto e1 = [&](const Series& f) {
        SuperElement x(p.s.ctx, 3);
        x.add_term(SuperKey::ghost(0), f);
        return x;
    };
    const Series f = p.gen(3), g = p.gen(5);
    const SuperElement F = SuperElement::from_series(f), G = SuperElement::from_series(g);
    CHECK(p.red->reduced_star_cochains(F, G).scalar_part() == p.red->reduced_star(f, g));

    ProbeGenerator gen(13);
    const SuperElement a = e1(f);
    for (int t = 0; t < 5; ++t) {
        const SuperElement c = SuperElement::from_poly(p.koszul->res(gen.homogeneous(p.s.ctx, 2, 3, true)), 3);
        const SuperElement dc = p.red->cochain_diff(c);
        const SuperElement lhs = p.red->reduced_star_cochains(a, dc + G) - p.red->reduced_star_cochains(a, G);
        const SuperElement rhs = -p.red->cochain_diff(p.red->res_nu(p.brst->star()(p.red->Phi(a), p.red->Phi(c))));
        CHECK(lhs == rhs);
        if (!dc.is_zero())
            CHECK_THROWS_AS(p.red->reduced_star_cochains(c, G), ClosednessError);
    }
}
