#include "doctest.h"

#include "brst/errors.hpp"
#include "brst/koszul.hpp"
#include "brst/parse.hpp"
#include "brst/probes.hpp"

using namespace brst;

namespace {

Poly P(const char* s, const ContextPtr& ctx) { return parse_polynomial(s, ctx); }

MomentMapData abelian_map(std::vector<Poly> J)
{
    MomentMapData m;
    m.lie = LieAlgebraData(J.size());
    m.J = std::move(J);
    return m;
}

ContextPtr c4()
{
    // Circle weights: z3, z4 carry +1; z1, z2 carry -1; conjugates opposite.
    return make_context({"z1", "z2", "z3", "z4", "zb1", "zb2", "zb3", "zb4"}, {{-1, -1, 1, 1, 1, 1, -1, -1}});
}

MomentMapData circle_map(const ContextPtr& ctx)
{
    return abelian_map({P("1/2*(z3*zb3 + z4*zb4 - z1*zb1 - z2*zb2)", ctx)});
}

std::string first_witness(const CheckRecord& rec)
{
    return rec.witnesses.empty() ? std::string() : rec.witnesses.front();
}

// Three random terms with `anti` antighosts, random ghosts if `ghost_bits`,
// coefficients of degree at most `max_poly`.
SuperElement random_chain(ProbeGenerator& gen, const ContextPtr& ctx, std::size_t l, int anti, int ghost_bits,
                          unsigned max_poly, int order = 0)
{
    SuperElement x(ctx, order);
    for (int t = 0; t < 3; ++t) {
        std::uint16_t a = 0;
        while (std::popcount(a) != anti)
            a = static_cast<std::uint16_t>(gen.integer(0, (1 << l) - 1));
        auto g = static_cast<std::uint16_t>(ghost_bits ? gen.integer(0, (1 << l) - 1) : 0);
        Series s(ctx, order);
        for (int j = 0; j <= order; ++j)
            s[j] = gen.poly(ctx, max_poly, 3, true);
        x.add_term(SuperKey{g, a}, s);
    }
    return x;
}

} // namespace

TEST_CASE("Koszul differential examples")
{
    auto ctx = make_context({"q", "p"});
    KoszulComplex k(abelian_map({P("q", ctx)}), 8);
    CHECK(k.diff(KoszulChain{{1, P("1", ctx)}}) == KoszulChain{{0, P("q", ctx)}});

    auto ctx2 = make_context({"x", "y", "f"});
    KoszulComplex k2(abelian_map({P("x", ctx2), P("y", ctx2)}), 8);
    auto d = k2.diff(KoszulChain{{3, P("f", ctx2)}});
    CHECK(d == KoszulChain{{2, P("x*f", ctx2)}, {1, P("-y*f", ctx2)}});
    CHECK(chain_is_zero(k2.diff(d)));
}

TEST_CASE("single generator restriction, prolongation and homotopy")
{
    auto ctx = make_context({"q", "p"});
    KoszulComplex k(abelian_map({P("q", ctx)}), 8);
    CHECK(k.res(P("q*p^3", ctx)).is_zero());
    CHECK(k.prol(P("p^3", ctx)) == P("p^3", ctx));
    CHECK(k.res(P("1", ctx)) == P("1", ctx));
    CHECK(k.res(P("q*p + p^2 + 3", ctx)) == P("p^2 + 3", ctx));
    CHECK(k.h(KoszulChain{{0, P("q*p^3", ctx)}}) == KoszulChain{{1, P("p^3", ctx)}});
    CHECK(k.h(KoszulChain{{0, P("p^3", ctx)}}).empty());
    CHECK(k.check_acyclicity().acyclic());
    CHECK_THROWS_AS(k.res(P("p^9", ctx)), DegreeOverflow);
}

TEST_CASE("repeated generator is not a complete intersection")
{
    auto ctx = make_context({"q", "p"});
    KoszulComplex k(abelian_map({P("q", ctx), P("q", ctx)}), 4);
    auto rep = k.check_acyclicity();
    CHECK_FALSE(rep.acyclic());
    CHECK(rep.total_homology(1) > 0);
    CHECK(rep.witness.find("e_1") != std::string::npos);
    auto rec = rep.record("koszul-acyclicity", "Koszul resolution");
    CHECK_FALSE(rec.passed());
    CHECK_FALSE(rec.witnesses.empty());
    CHECK_THROWS_AS(k.h(KoszulChain{{1, P("1", ctx)}, {2, P("-1", ctx)}}), AcyclicityViolation);
}

TEST_CASE("inhomogeneous components are rejected")
{
    auto ctx = make_context({"q", "p"});
    CHECK_THROWS_AS(KoszulComplex(abelian_map({P("q^2 + q^3", ctx)}), 6), ConfigError);
}

TEST_CASE("Koszul differential squares to zero")
{
    auto ctx = make_context({"x1", "x2", "x3", "y1", "y2", "y3"});
    KoszulComplex k(abelian_map({P("x1*y2 - x2*y1", ctx), P("x2*y3 - x3*y2", ctx), P("x1*y3 - x3*y1", ctx)}), 10);
    ProbeGenerator gen(8);
    for (int t = 0; t < 30; ++t) {
        auto x = random_chain(gen, ctx, 3, static_cast<int>(gen.integer(0, 3)), 1, 3);
        CHECK(k.diff(k.diff(x)).is_zero());
    }
}

TEST_CASE("circle action: acyclic and a contraction with side conditions")
{
    auto ctx = c4();
    KoszulComplex k(circle_map(ctx), 6);
    auto rep = k.check_acyclicity();
    CHECK(rep.acyclic());
    CHECK(rep.total_homology(0) > 0);

    CHECK(k.res(k.moment_map().J[0]).is_zero());
    Poly nf = k.res(P("z1*zb1", ctx));
    CHECK(k.in_complement(nf));
    // z1 zb1 and its normal form differ by a multiple of J.
    auto diff = P("z1*zb1", ctx) - nf;
    CHECK(k.h(KoszulChain{{0, diff}}).size() == 1);

    ProbeGenerator gen(31);
    ProbeSet<SuperElement> probes;
    for (int t = 0; t < 20; ++t) {
        probes.y.push_back(random_chain(gen, ctx, 1, 0, 1, 4, 1));
        probes.y.push_back(random_chain(gen, ctx, 1, 1, 1, 4, 1));
        probes.x.push_back(k.res(random_chain(gen, ctx, 1, 0, 1, 4, 1)));
    }
    auto rec = check_contraction(k.contraction(), probes, "koszul-contraction", "Koszul contraction");
    CHECK_MESSAGE(rec.passed(), first_witness(rec));
}

TEST_CASE("homotopy respects the torus weights")
{
    auto ctx = c4();
    KoszulComplex k(circle_map(ctx), 6);
    ProbeGenerator gen(41);
    for (int t = 0; t < 20; ++t) {
        Poly f = gen.homogeneous(ctx, 4, 4, true);
        for (const auto& [m, c] : f.terms()) {
            const long w = m.weight(ctx->weights()[0]);
            Poly single = Poly::term(ctx, m, c);
            for (const auto& [mask, g] : k.h(KoszulChain{{0, single}}))
                for (const auto& [m2, c2] : g.terms())
                    CHECK(m2.weight(ctx->weights()[0]) == w);
            const Poly r = k.res(single);
            for (const auto& [m2, c2] : r.terms())
                CHECK(m2.weight(ctx->weights()[0]) == w);
        }
    }
}

TEST_CASE("enforced side conditions do not change a normalized homotopy")
{
    auto ctx = make_context({"q", "p"});
    KoszulComplex k(abelian_map({P("q", ctx)}), 8);
    auto c = k.contraction();
    auto n = enforce_side_conditions(c);
    ProbeGenerator gen(3);
    for (int t = 0; t < 20; ++t) {
        auto x = random_chain(gen, ctx, 1, static_cast<int>(gen.integer(0, 1)), 0, 5);
        CHECK(n.h(x) == c.h(x));
    }
}
