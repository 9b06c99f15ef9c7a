#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "vemsupg/config.hpp"
#include "vemsupg/expr.hpp"

using namespace vemsupg;

TEST_CASE("expression parsing") {
  CHECK(Expr::parse("1+2*3").eval(0, 0) == doctest::Approx(7.0));
  CHECK(Expr::parse("(1+2)*3").eval(0, 0) == doctest::Approx(9.0));
  CHECK(Expr::parse("2^3^2").eval(0, 0) == doctest::Approx(512.0));  // right associative
  CHECK(Expr::parse("-x^2").eval(3, 0) == doctest::Approx(-9.0));
  CHECK(Expr::parse("x*y - y/2").eval(4, 2) == doctest::Approx(7.0));
  CHECK(Expr::parse("sin(pi/2) + cos(0)").eval(0, 0) == doctest::Approx(2.0));
  CHECK(Expr::parse("exp(x+y)").eval(0.25, 0.5) == doctest::Approx(std::exp(0.75)));
  CHECK(Expr::parse("0.1*sin(2*pi*x)*sin(2*pi*y)").eval(0.25, 0.25) ==
        doctest::Approx(0.1).epsilon(1e-14));

  CHECK_THROWS_WITH_AS(Expr::parse("2*"), doctest::Contains("position"), ExprError);
  CHECK_THROWS_WITH_AS(Expr::parse("foo(3)"), doctest::Contains("unknown identifier"), ExprError);
  CHECK_THROWS_AS(Expr::parse("sin 3"), ExprError);
  CHECK_THROWS_AS(Expr::parse("(1+2"), ExprError);
}

TEST_CASE("config parsing") {
  SUBCASE("named problem with defaults") {
    const RunConfig cfg = RunConfig::from_json_text(
        R"json({"problem":"accuracy","family":"m2","n":5,"k":[1,2],"refinements":3})json");
    CHECK(cfg.family == MeshFamily::M2);
    CHECK(cfg.degrees == std::vector<int>{1, 2});
    CHECK(cfg.refinements == 3);
    CHECK(cfg.problem.has_exact);
    CHECK(cfg.assembly.convection == ConvectionForm::Direct);
  }
  SUBCASE("inline coefficient expressions") {
    const RunConfig cfg = RunConfig::from_json_text(R"json({
      "problem": {
        "K": [["1+x^2", "x*y"], ["x*y", "1+y^2"]],
        "beta": ["cos(2*pi*x)", "sin(2*pi*y)"],
        "gamma": "exp(x+y)",
        "f": "1",
        "dirichlet": "0"
      },
      "family": "m1", "k": 1
    })json");
    const Eigen::Matrix2d K = cfg.problem.coeffs.K({1.0, 1.0});
    CHECK(K(0, 0) == doctest::Approx(2.0));
    CHECK(K(0, 1) == doctest::Approx(1.0));
    CHECK(cfg.problem.coeffs.beta({0.0, 0.25})(0) == doctest::Approx(1.0));
    CHECK(cfg.problem.coeffs.gamma({1.0, 1.0}) == doctest::Approx(std::exp(2.0)));
  }
  SUBCASE("errors name the offending field") {
    CHECK_THROWS_WITH_AS(RunConfig::from_json_text(R"json({"n":1})json"), doctest::Contains("'n'"),
                         ConfigError);
    CHECK_THROWS_WITH_AS(RunConfig::from_json_text(R"json({"c_tau":1.5})json"),
                         doctest::Contains("'c_tau'"), ConfigError);
    CHECK_THROWS_WITH_AS(RunConfig::from_json_text(R"json({"k":5})json"), doctest::Contains("'k'"),
                         ConfigError);
    CHECK_THROWS_WITH_AS(RunConfig::from_json_text(R"json({"problem":{"beta":["x","y"]}})json"),
                         doctest::Contains("problem.K"), ConfigError);
    CHECK_THROWS_WITH_AS(
        RunConfig::from_json_text(R"json({"problem":{"K":"1","beta":["x","y"],"gamma":"bad("}})json"),
        doctest::Contains("problem.gamma"), ConfigError);
    CHECK_THROWS_WITH_AS(RunConfig::from_json_text("not json"), doctest::Contains("json"),
                         ConfigError);
    CHECK_THROWS_WITH_AS(RunConfig::from_json_text(R"json({"convection_form":"upwind"})json"),
                         doctest::Contains("convection_form"), ConfigError);
  }
  SUBCASE("solver options") {
    const RunConfig cfg = RunConfig::from_json_text(
        R"json({"solver":{"method":"krylov","tolerance":1e-9,"max_iterations":500}})json");
    CHECK(cfg.solver.method == SolveMethod::Krylov);
    CHECK(cfg.solver.tolerance == doctest::Approx(1e-9));
    CHECK(cfg.solver.max_iterations == 500);
  }
}

TEST_CASE("inline manufactured problem runs end to end") {
  // u = x*y with unit diffusion, constant advection and reaction.
  const RunConfig cfg = RunConfig::from_json_text(R"json({
    "problem": {
      "K": "1",
      "beta": ["1", "1"],
      "gamma": "1",
      "f": "y + x + x*y",
      "u": "x*y",
      "grad_u": ["y", "x"],
      "dirichlet": "x*y"
    },
    "family": "m3", "n": 4, "k": 2
  })json");
  const RunSummary sum = run_solve(cfg);
  CHECK(sum.report.has_errors);
  CHECK(sum.report.err_l2 <= 1e-9);  // quadratic reproduced exactly
}
