#include "doctest.h"

#include "brst/errors.hpp"
#include "brst/parse.hpp"
#include "brst/scenario.hpp"

using namespace brst;

TEST_CASE("every registered scenario loads and passes its load checks")
{
    for (const auto& e : scenario_registry()) {
        CAPTURE(e.name);
        Scenario s = load_scenario(registry_config(e.name));
        CHECK(s.config.name == e.name);
        REQUIRE(s.load_checks.size() == 3);
        for (const auto& rec : s.load_checks)
            CHECK(rec.status != Status::fail);
        CHECK_FALSE(s.poisson_negated);
    }
}

TEST_CASE("commuting variety data")
{
    Scenario s3 = load_scenario(registry_config("commuting-n3"));
    REQUIRE(s3.J.dim() == 3);
    // f_ab^c = epsilon_abc in the basis E_12 - E_21, E_13 - E_31, E_23 - E_32.
    CHECK(s3.J.lie.f(0, 1, 2) == Scalar(1));
    CHECK(s3.J.lie.f(0, 2, 1) == Scalar(-1));
    CHECK(s3.J.lie.f(1, 2, 0) == Scalar(1));
    CHECK(s3.J.lie.f(1, 0, 2) == Scalar(-1));
    CHECK(s3.load_checks[1].passed());
    CHECK(s3.ctx->size() == 12);

    Scenario s2 = load_scenario(registry_config("commuting-n2"));
    CHECK(s2.J.J[0] == parse_polynomial("x11*y12 - x12*y11 + x12*y22 - x22*y12", s2.ctx));
    CHECK(s2.J.lie.abelian());
    CHECK_FALSE(s2.config.reduction);
}

TEST_CASE("derived torus action and invariant candidates")
{
    Scenario s = load_scenario(registry_config("s1-c4"));
    REQUIRE(s.action.size() == 1);
    CHECK(s.action[0][0] == parse_polynomial("I*z1", s.ctx));
    CHECK(s.action[0][6] == parse_polynomial("I*zb3", s.ctx));
    // 1 and the 16 weight-zero quadratic monomials.
    CHECK(s.invariant_candidates.size() == 17);

    Scenario z = load_scenario(registry_config("zero-angular-momentum", {{"m", "3"}}));
    CHECK(z.ctx->size() == 12);
    CHECK(z.load_checks[1].passed());
}

TEST_CASE("parameter validation")
{
    CHECK_THROWS_AS(registry_config("t2-c4", {{"alpha", "1"}}), ConfigError);
    CHECK_THROWS_AS(registry_config("t2-c4", {{"gamma", "1"}}), ConfigError);
    CHECK_THROWS_AS(registry_config("nope"), ConfigError);
    CHECK_THROWS_AS(registry_config("zero-angular-momentum", {{"m", "5"}}), ConfigError);
    Scenario t = load_scenario(registry_config("t2-c4", {{"alpha", "-2"}, {"beta", "3"}}));
    CHECK(t.load_checks[1].passed());
}

TEST_CASE("calibration flips the bivector or rejects the data")
{
    const std::string base = "[scenario]\nname = flip\n[variables]\nnames = q p\n[poisson]\nq p = -1\n"
                             "[moment_map]\nJ1 = 1/2*(q^2 + p^2)\n[action]\n";
    // With {q, p} = 1 the flow of J rotates q into -p; the declared action
    // assumes that convention while the file states {q, p} = -1.
    Scenario s = load_scenario(parse_scenario_config_text(base + "J1 q = -p\nJ1 p = q\n"));
    CHECK(s.poisson_negated);
    CHECK(s.load_checks[1].passed());
    CHECK(poisson_bracket(parse_polynomial("q", s.ctx), parse_polynomial("p", s.ctx), s.lambda) ==
          parse_polynomial("1", s.ctx));

    CHECK_THROWS_AS(load_scenario(parse_scenario_config_text(base + "J1 q = 2*p\nJ1 p = q\n")), ConventionError);
}

TEST_CASE("malformed configs")
{
    CHECK_THROWS_AS(parse_scenario_config_text("[scenario]\nname = x\n"), ConfigError);
    CHECK_THROWS_AS(parse_scenario_config_text("[bogus]\na = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_scenario_config_text("[scenario]\nname = x\norder = four\n[variables]\nnames = q\n"),
                    ConfigError);
    CHECK_THROWS_AS(parse_scenario_config_text("[scenario]\nname = x\nname = y\n"), ConfigError);
    // Non-equivariant data is rejected at load time.
    auto bad = parse_scenario_config_text("[scenario]\nname = x\n[variables]\nnames = q p\n[poisson]\nq p = 1\n"
                                          "[lie]\ndim = 2\n[moment_map]\nJ1 = q\nJ2 = p\n");
    CHECK_THROWS_AS(load_scenario(bad), ConfigError);
    // A failed Jacobi identity is rejected as well.
    auto jac = parse_scenario_config_text("[scenario]\nname = x\n[variables]\nnames = q p\n[poisson]\nq p = 1\n"
                                          "[lie]\ndim = 3\n1 2 2 = 1\n1 3 1 = 1\n[moment_map]\nJ1 = q\nJ2 = q\nJ3 = q\n");
    CHECK_THROWS_AS(load_scenario(jac), ConfigError);
    CHECK_THROWS_AS(read_scenario_file("/nonexistent/file.ini"), ConfigError);
}
