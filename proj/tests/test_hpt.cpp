#include "doctest.h"

#include "brst/hpt_random.hpp"
#include "brst/parse.hpp"
#include "brst/series.hpp"

using namespace brst;

namespace {

bool agree(const LinearOp<Vector>& a, const LinearOp<Vector>& b, const std::vector<Vector>& probes)
{
    for (const auto& x : probes)
        if (a(x) != b(x))
            return false;
    return true;
}

std::string first_witness(const CheckRecord& rec)
{
    return rec.witnesses.empty() ? std::string() : rec.witnesses.front();
}

} // namespace

TEST_CASE("Neumann inverse of zero is the identity")
{
    auto t = LinearOp<Vector>::zero();
    auto inv = neumann_inverse(t);
    Vector v{Scalar(1), Scalar(-2)};
    CHECK(inv(v) == v);
}

TEST_CASE("Neumann inverse of nu q is a geometric series")
{
    auto ctx = make_context({"q", "p"});
    Poly q = parse_polynomial("q", ctx);
    LinearOp<Series> t("nu q", [q](const Series& s) { return (s * q).shifted(1); }, 0, true);
    Series one(parse_polynomial("1", ctx), 2);
    Series expected(ctx, 2);
    expected[0] = parse_polynomial("1", ctx);
    expected[1] = parse_polynomial("-q", ctx);
    expected[2] = parse_polynomial("q^2", ctx);
    CHECK(neumann_inverse(t)(one) == expected);
    // (id + T) after the inverse is the identity.
    Series x(parse_polynomial("q*p + 3", ctx), 2);
    Series y = neumann_inverse(t)(x);
    CHECK(y + t(y) == x);
}

TEST_CASE("Neumann inverse requires the filtration flag")
{
    auto t = matrix_op("m", DenseMatrix::identity(2));
    CHECK_THROWS_AS(neumann_inverse(t), FiltrationError);
    // A flagged operator that is not nilpotent runs into the cap.
    auto bad = matrix_op("m", DenseMatrix::identity(2), 0, true);
    CHECK_THROWS_AS(neumann_inverse(bad, 16)(Vector{Scalar(1), Scalar(0)}), FiltrationError);
}

TEST_CASE("random filtered contractions satisfy the axioms")
{
    ProbeGenerator gen(101);
    for (int k = 0; k < 10; ++k) {
        auto cs = random_filtered_contraction(gen);
        auto rec = check_contraction(cs.contraction, cs.probes, "random", "contraction axioms");
        CHECK_MESSAGE(rec.passed(), first_witness(rec));
    }
}

TEST_CASE("both perturbation lemmas produce contractions")
{
    ProbeGenerator gen(202);
    int nontrivial = 0;
    for (int k = 0; k < 10; ++k) {
        auto cs = random_filtered_contraction(gen);
        if (!agree(cs.tY_v1, LinearOp<Vector>::zero(), cs.probes.y) &&
            !agree(cs.tY_v2, LinearOp<Vector>::zero(), cs.probes.y))
            ++nontrivial;
        auto c1 = perturb_v1(cs.contraction, cs.tY_v1, cs.tX_v1, cs.probes);
        CHECK(c1.all_side_conditions());
        auto r1 = check_contraction(c1, cs.probes, "v1", "first lemma");
        CHECK_MESSAGE(r1.passed(), first_witness(r1));
        CHECK(agree(c1.p, cs.contraction.p, cs.probes.y));

        auto c2 = perturb_v2(cs.contraction, cs.tY_v2, cs.tX_v2, cs.probes);
        CHECK(c2.all_side_conditions());
        auto r2 = check_contraction(c2, cs.probes, "v2", "second lemma");
        CHECK_MESSAGE(r2.passed(), first_witness(r2));
        CHECK(agree(c2.i, cs.contraction.i, cs.probes.x));
    }
    CHECK(nontrivial >= 5);
}

TEST_CASE("zero perturbation changes nothing")
{
    ProbeGenerator gen(303);
    auto cs = random_filtered_contraction(gen);
    auto zero = LinearOp<Vector>::zero();
    for (auto c : {perturb_v1(cs.contraction, zero, zero, cs.probes), perturb_v2(cs.contraction, zero, zero, cs.probes)}) {
        CHECK(agree(c.p, cs.contraction.p, cs.probes.y));
        CHECK(agree(c.i, cs.contraction.i, cs.probes.x));
        CHECK(agree(c.h, cs.contraction.h, cs.probes.y));
        CHECK(agree(c.dY, cs.contraction.dY, cs.probes.y));
    }
}

TEST_CASE("lemma hypotheses are enforced")
{
    ProbeGenerator gen(404);
    auto cs = random_filtered_contraction(gen);
    auto c = cs.contraction;
    c.sc3 = false;
    CHECK_THROWS_AS(perturb_v1(c, cs.tY_v1, cs.tX_v1, cs.probes), LemmaHypothesisError);
    c = cs.contraction;
    c.sc2 = false;
    CHECK_THROWS_AS(perturb_v2(c, cs.tY_v2, cs.tX_v2, cs.probes), LemmaHypothesisError);

    // t_Y = id is not a perturbation: D_Y squared is 2 d_Y + id.
    auto ident = matrix_op("id", DenseMatrix::identity(cs.dim_y), 1, true);
    auto zero = LinearOp<Vector>::zero();
    CHECK_THROWS_AS(perturb_v2(cs.contraction, ident, zero, cs.probes), LemmaHypothesisError);
}

TEST_CASE("side conditions can be enforced")
{
    ProbeGenerator gen(505);
    for (int k = 0; k < 5; ++k) {
        auto cs = random_filtered_contraction(gen);
        auto c = cs.contraction;
        DenseMatrix s(cs.dim_y, cs.dim_y);
        for (std::size_t r = 0; r < cs.dim_y; ++r)
            for (std::size_t col = 0; col < cs.dim_y; ++col)
                s(r, col) = Scalar(gen.integer(-2, 2));
        auto sop = matrix_op("s", s);
        // h + d s d is still a homotopy but breaks the side conditions.
        c.h = c.h + c.dY * sop * c.dY;
        c.sc1 = c.sc2 = c.sc3 = false;
        CHECK(check_contraction(c, cs.probes, "twisted", "").passed());
        auto fixed = enforce_side_conditions(c);
        auto rec = check_contraction(fixed, cs.probes, "fixed", "");
        CHECK_MESSAGE(rec.passed(), first_witness(rec));
    }
}
