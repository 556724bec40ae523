#include "doctest.h"

#include "brst/brst_quantum.hpp"
#include "brst/errors.hpp"
#include "brst/parse.hpp"
#include "brst/scenario.hpp"

using namespace brst;

namespace {

Poly P(const char* s, const ContextPtr& ctx) { return parse_polynomial(s, ctx); }

std::string first_witness(const CheckRecord& rec)
{
    return rec.witnesses.empty() ? rec.detail : rec.witnesses.front();
}

std::vector<SuperElement> probes_for(const ContextPtr& ctx, std::size_t dim, std::size_t count, int order,
                                     unsigned max_poly, std::uint64_t seed)
{
    ProbeGenerator gen(seed);
    std::vector<SuperElement> out;
    for (std::size_t k = 0; k < count; ++k)
        out.push_back(random_super_element(gen, ctx, dim, order, max_poly, 2));
    return out;
}

// {qp, p^2} = 2 p^2: the two-dimensional nonunimodular algebra with f_12^2 = 2.
MomentMapData affine_map(const ContextPtr& ctx)
{
    MomentMapData m;
    m.lie = LieAlgebraData(2);
    m.lie.set(0, 1, 1, Scalar(2));
    m.J = {P("q*p", ctx), P("p^2", ctx)};
    return m;
}

const char* const kScenarios[] = {"zero-angular-momentum", "s1-c4", "t2-c4", "commuting-n2", "commuting-n3"};

} // namespace

TEST_CASE("quantum charge squares to zero")
{
    for (const std::string name : kScenarios) {
        CAPTURE(name);
        Scenario s = load_scenario(registry_config(name));
        QuantumBrst q(s.J, s.lambda, 4);
        auto rec = check_charge_square(q);
        CHECK_MESSAGE(rec.passed(), first_witness(rec));
    }
}

TEST_CASE("nonunimodular algebra needs the trace correction")
{
    auto ctx = make_context({"q", "p"});
    auto lambda = poisson_from_pairs(ctx, {{0, 1, Scalar(1)}});
    const MomentMapData J = affine_map(ctx);
    CHECK(check_classical_equivariance(J, lambda).passed());
    QuantumBrst q(J, lambda, 3);
    CHECK(q.charge() != classical_charge(J, 3));
    auto rec = check_charge_square(q);
    CHECK_MESSAGE(rec.passed(), first_witness(rec));
    // The correction is nu/2 tr(ad e_1) e^1 with tr(ad e_1) = 2.
    const SuperElement corr = q.charge() - classical_charge(J, 3);
    CHECK(corr == SuperElement::basis(ctx, 3, SuperKey::ghost(0), P("1", ctx)).shifted(1));

    auto split = check_quantum_splitting(q, probes_for(ctx, 2, 10, 3, 3, 17));
    CHECK_MESSAGE(split.passed(), first_witness(split));
}

TEST_CASE("quantum splitting on the scenarios")
{
    for (const std::string name : kScenarios) {
        CAPTURE(name);
        Scenario s = load_scenario(registry_config(name));
        QuantumBrst q(s.J, s.lambda, 4);
        auto rec = check_quantum_splitting(q, probes_for(s.ctx, s.J.dim(), 5, 4, 3, 23));
        CHECK_MESSAGE(rec.passed(), first_witness(rec));
    }
}

TEST_CASE("classical limit and quadratic components")
{
    Scenario s = load_scenario(registry_config("commuting-n3"));
    QuantumBrst q(s.J, s.lambda, 3);
    const SuperElement theta = classical_charge(s.J);
    for (const auto& x : probes_for(s.ctx, 3, 6, 3, 2, 29)) {
        const SuperElement x0 = x.nu_coefficient(0);
        CHECK(q.D(x).nu_coefficient(0).with_order(0) == classical_brst_diff(x0.with_order(0), theta, s.lambda));
        // Quadratic J: nu^-1 [J, f] = {J, f} exactly.
        CHECK(q.delta(x) == ce_codifferential(x, s.J.lie, poisson_representation(s.J, s.lambda)));
        CHECK(q.koszul(x).nu_coefficient(0) == koszul_diff(x, s.J).nu_coefficient(0));
    }
}

TEST_CASE("graded star product is associative")
{
    Scenario s = load_scenario(registry_config("t2-c4"));
    QuantumBrst q(s.J, s.lambda, 4);
    auto rec = check_super_associativity(q.star(), probes_for(s.ctx, 2, 30, 4, 2, 31));
    CHECK_MESSAGE(rec.passed(), first_witness(rec));
    CHECK(rec.probes == 10);
}

TEST_CASE("dropping the Koszul sign is detected")
{
    Scenario s = load_scenario(registry_config("broken-sign"));
    CHECK(s.config.sign == TensorSign::naive);
    QuantumBrst q(s.J, s.lambda, 4, s.config.sign);
    auto rec = check_quantum_splitting(q, probes_for(s.ctx, 1, 5, 4, 2, 37));
    CHECK_FALSE(rec.passed());
    CHECK_FALSE(rec.witnesses.empty());

    Scenario t = load_scenario(registry_config("t2-c4"));
    QuantumBrst qt(t.J, t.lambda, 2, TensorSign::naive);
    CHECK_FALSE(check_super_associativity(qt.star(), probes_for(t.ctx, 2, 30, 2, 1, 41)).passed());
}

TEST_CASE("nu-inverse operators need nu-divisible commutators")
{
    auto ctx = make_context({"q", "p"});
    auto lambda = poisson_from_pairs(ctx, {{0, 1, Scalar(1)}});
    const MomentMapData J = affine_map(ctx);
    QuantumBrst q(J, lambda, 2);
    const Series s(P("q^3*p", ctx), 2);
    const Series r = q.act(0, s);
    CHECK(r[0] == poisson_bracket(J.J[0], s[0], lambda));
    CHECK(r.order() == 2);
}
