// Values computed outside the engine: Moyal expansions from
// tests/oracles/moyal.py (sympy), Koszul H_0 from the Hilbert function of a
// complete intersection.

#include "doctest.h"

#include "brst/koszul.hpp"
#include "brst/parse.hpp"
#include "brst/poisson.hpp"
#include "brst/scenario.hpp"

using namespace brst;

namespace {

Series S(const ContextPtr& ctx, std::initializer_list<const char*> coeffs)
{
    Series s(ctx, static_cast<int>(coeffs.size()) - 1);
    int k = 0;
    for (const char* c : coeffs)
        s[k++] = parse_polynomial(c, ctx);
    return s;
}

long binomial(long n, long k)
{
    if (k < 0 || n < k)
        return 0;
    long r = 1;
    for (long j = 1; j <= k; ++j)
        r = r * (n - k + j) / j;
    return r;
}

// dim of C[x_1..x_n] / (r quadrics forming a regular sequence) in degrees <= d.
long complete_intersection_dim(long n, long r, long d)
{
    long total = 0;
    for (long k = 0; k <= d; ++k)
        for (long j = 0; j <= r; ++j)
            total += (j % 2 ? -1 : 1) * binomial(r, j) * binomial(k - 2 * j + n - 1, n - 1);
    return total;
}

} // namespace

TEST_CASE("Moyal products against an independent expansion")
{
    auto qp = make_context({"q", "p"});
    MoyalStar canonical(poisson_from_pairs(qp, {{0, 1, Scalar(1)}}), 4);
    CHECK(canonical(parse_polynomial("q^2*p + q", qp), parse_polynomial("q*p^3 - p^2", qp)) ==
          S(qp, {"p^4*q^3 - p^2*q", "5*p^3*q^2/2 - p^2*q/2 - p", "-p/2", "-3*p/4", "0"}));

    auto zz = make_context({"z1", "zb1"});
    MoyalStar complex(poisson_from_pairs(zz, {{0, 1, Scalar::i() * Scalar(2)}}), 4);
    CHECK(complex(parse_polynomial("z1^2*zb1", zz), parse_polynomial("z1*zb1^3", zz)) ==
          S(zz, {"z1^3*zb1^4", "5*I*z1^2*zb1^3", "0", "6*I*zb1", "0"}));
}

TEST_CASE("strong invariance residual of a cubic component")
{
    auto qp = make_context({"q", "p"});
    const PoissonData lambda = poisson_from_pairs(qp, {{0, 1, Scalar(1)}});
    MoyalStar star(lambda, 4);
    const Poly J = parse_polynomial("q^2 + q^3", qp), f = parse_polynomial("p^3", qp);
    const Series residual = star.commutator(Series(J, 4), Series(f, 4)) -
                            Series::nu_power(qp, 4, 1, poisson_bracket(J, f, lambda));
    CHECK(residual == S(qp, {"0", "0", "0", "3/2", "0"}));
}

TEST_CASE("Koszul H_0 matches the Hilbert function of a complete intersection")
{
    struct Case {
        const char* name;
        long vars, components, degree;
    };
    for (const Case c : {Case{"zero-angular-momentum", 8, 1, 6}, Case{"s1-c4", 8, 1, 6}, Case{"t2-c4", 8, 2, 6},
                         Case{"commuting-n2", 6, 1, 6}, Case{"commuting-n3", 12, 3, 5}}) {
        const std::string name = c.name;
        CAPTURE(name);
        const Scenario s = load_scenario(registry_config(c.name));
        REQUIRE(static_cast<long>(s.ctx->size()) == c.vars);
        REQUIRE(static_cast<long>(s.J.dim()) == c.components);
        const KoszulComplex k(s.J, static_cast<int>(c.degree));
        const auto rep = k.check_acyclicity();
        CHECK(rep.acyclic());
        CHECK(static_cast<long>(rep.total_homology(0)) == complete_intersection_dim(c.vars, c.components, c.degree));
    }
}
