#include "doctest.h"

#include "brst/errors.hpp"
#include "brst/parse.hpp"
#include "brst/poisson.hpp"
#include "brst/probes.hpp"
#include "brst/series.hpp"

using namespace brst;

namespace {

ContextPtr qp() { return make_context({"q", "p"}); }

Poly P(const char* s, const ContextPtr& ctx) { return parse_polynomial(s, ctx); }

Series S(const ContextPtr& ctx, int order, std::initializer_list<const char*> coeffs)
{
    Series s(ctx, order);
    int k = 0;
    for (const char* c : coeffs)
        s[k++] = P(c, ctx);
    return s;
}

PoissonData canonical(const ContextPtr& ctx)
{
    return poisson_from_pairs(ctx, {{0, 1, Scalar(1)}});
}

} // namespace

TEST_CASE("series product truncates")
{
    auto ctx = qp();
    Series a = S(ctx, 2, {"1", "q"});
    Series b = S(ctx, 2, {"1", "-q"});
    CHECK(series_arith(a, b, SeriesKind::mul) == S(ctx, 2, {"1", "0", "-q^2"}));
    CHECK(series_arith(a.with_order(1), b.with_order(1), SeriesKind::mul) == S(ctx, 1, {"1", "0"}));
    CHECK_THROWS_AS(series_arith(a, b.with_order(1), SeriesKind::add), TruncationError);
}

TEST_CASE("division by nu")
{
    auto ctx = qp();
    Series a = S(ctx, 3, {"0", "q", "p^2", "1"});
    Series d = series_div_nu(a);
    CHECK(d[0] == P("q", ctx));
    CHECK(d[1] == P("p^2", ctx));
    CHECK(d[2] == P("1", ctx));
    CHECK(d.reliable_order() == 2);
    CHECK_THROWS_AS(series_div_nu(S(ctx, 2, {"q"})), DivisibilityError);
}

TEST_CASE("series helpers")
{
    auto ctx = qp();
    Series a = S(ctx, 2, {"q", "p"});
    CHECK(a.shifted(1) == S(ctx, 2, {"0", "q", "p"}));
    CHECK(a.shifted(2) == S(ctx, 2, {"0", "0", "q"}));
    CHECK(a.valuation() == 0);
    CHECK(a.shifted(1).valuation() == 1);
    Series padded = a.with_order(4);
    CHECK(padded.order() == 4);
    CHECK(padded.reliable_order() == 2);
    CHECK(a.padded_exact(4).reliable_order() == 4);
    CHECK(a.truncated(0) == S(ctx, 2, {"q"}));
}

TEST_CASE("Moyal star examples")
{
    auto ctx = qp();
    auto lam = canonical(ctx);
    CHECK(moyal_star(P("q", ctx), P("p", ctx), lam, 2) == S(ctx, 2, {"q*p", "1/2"}));
    CHECK(moyal_star(P("p", ctx), P("q", ctx), lam, 2) == S(ctx, 2, {"q*p", "-1/2"}));
    CHECK(moyal_star(P("q^2", ctx), P("p^2", ctx), lam, 2) == S(ctx, 2, {"q^2*p^2", "2*q*p", "1/2"}));
    CHECK(poisson_bracket(P("q^2", ctx), P("p", ctx), lam) == P("2*q", ctx));
    CHECK(moyal_star(P("q^3", ctx), P("p^3", ctx), lam, 0) == S(ctx, 0, {"q^3*p^3"}));
}

TEST_CASE("Moyal star is associative with unit and commutator limit")
{
    auto ctx = make_context({"x1", "y1", "x2", "y2"});
    auto lam = poisson_from_pairs(ctx, {{0, 1, Scalar(1)}, {2, 3, Scalar(2, 3)}, {0, 3, Scalar(-1)}});
    MoyalStar star(lam, 4);
    ProbeGenerator gen(21);
    Series one(P("1", ctx), 4);
    for (int t = 0; t < 12; ++t) {
        Series f(gen.poly(ctx, 3, 3), 4), g(gen.poly(ctx, 3, 3), 4), h(gen.poly(ctx, 3, 3), 4);
        CHECK(star(star(f, g), h) == star(f, star(g, h)));
        CHECK(star(one, f) == f);
        CHECK(star(f, one) == f);
        Series c = star.commutator(f, g);
        CHECK(c[0].is_zero());
        CHECK(c[1] == poisson_bracket(f[0], g[0], lam));
        CHECK(c[2].is_zero());
    }
}

TEST_CASE("Poisson data validation")
{
    auto ctx = qp();
    DenseMatrix sym(2, 2);
    sym(0, 1) = 1;
    sym(1, 0) = 1;
    CHECK_THROWS_AS(PoissonData(ctx, sym), ConfigError);
    DenseMatrix degenerate(2, 2);
    CHECK_THROWS_AS(PoissonData(ctx, degenerate), ConfigError);
}

TEST_CASE("Jacobi identity for the bracket")
{
    auto ctx = make_context({"x1", "y1", "x2", "y2"});
    auto lam = poisson_from_pairs(ctx, {{0, 1, Scalar(1)}, {2, 3, Scalar(1)}, {1, 2, Scalar(1, 2)}});
    ProbeGenerator gen(4);
    for (int t = 0; t < 20; ++t) {
        Poly f = gen.poly(ctx, 3, 3), g = gen.poly(ctx, 3, 3), h = gen.poly(ctx, 3, 3);
        Poly jac = poisson_bracket(f, poisson_bracket(g, h, lam), lam) +
                   poisson_bracket(g, poisson_bracket(h, f, lam), lam) +
                   poisson_bracket(h, poisson_bracket(f, g, lam), lam);
        CHECK(jac.is_zero());
    }
}
