#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "vemsupg/analysis.hpp"
#include "vemsupg/supg.hpp"

using namespace vemsupg;

namespace {

Mesh unit_square() { return Mesh::from_data({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {{0, 1, 2, 3}}); }

CoefficientField constant_coeffs(const Eigen::Matrix2d& K, const Eigen::Vector2d& beta,
                                 double gamma) {
  CoefficientField c;
  c.K = [K](const Point2&) { return K; };
  c.grad_K = [](const Point2&) {
    return std::make_pair(Eigen::Matrix2d(Eigen::Matrix2d::Zero()),
                          Eigen::Matrix2d(Eigen::Matrix2d::Zero()));
  };
  c.beta = [beta](const Point2&) { return beta; };
  c.gamma = [gamma](const Point2&) { return gamma; };
  c.f = [](const Point2&) { return 0.0; };
  return c;
}

}  // namespace

TEST_CASE("coefficient bounds") {
  const Mesh mesh = unit_square();
  const ElementOperators ops = build_element_operators(mesh, 0, 1);

  SUBCASE("scaled identity tensor") {
    const CoefficientField c =
        constant_coeffs(1e-7 * Eigen::Matrix2d::Identity(), {0, 0}, 0.0);
    const LocalBounds b = local_bounds(mesh, 0, c, ops.cell_quad);
    CHECK(b.kappa_min == doctest::Approx(1e-7).epsilon(1e-12));
    CHECK(b.kappa_max == doctest::Approx(1e-7).epsilon(1e-12));
  }
  SUBCASE("anisotropic tensor eigenvalues via the closed form") {
    Eigen::Matrix2d K;
    K << 2, 1, 1, 2;
    const double alpha = 1e-7;
    const CoefficientField c = constant_coeffs(alpha * K, {0, 0}, 0.0);
    const LocalBounds b = local_bounds(mesh, 0, c, ops.cell_quad);
    // Oracle: trace/determinant formula for the 2x2 eigenvalues.
    const double tr = 4, det = 3;
    const double lo = 0.5 * tr - std::sqrt(0.25 * tr * tr - det);
    const double hi = 0.5 * tr + std::sqrt(0.25 * tr * tr - det);
    CHECK(lo == doctest::Approx(1.0));
    CHECK(hi == doctest::Approx(3.0));
    CHECK(b.kappa_min == doctest::Approx(alpha * lo).epsilon(1e-12));
    CHECK(b.kappa_max == doctest::Approx(alpha * hi).epsilon(1e-12));
  }
  SUBCASE("advection magnitude reaches one on the left boundary") {
    CoefficientField c = constant_coeffs(Eigen::Matrix2d::Identity(), {0, 0}, 0.0);
    c.beta = [](const Point2& p) {
      return Eigen::Vector2d(std::cos(2 * M_PI * p.x), std::sin(2 * M_PI * p.y));
    };
    const LocalBounds b = local_bounds(mesh, 0, c, ops.cell_quad);
    CHECK(b.beta_max >= 1.0);
  }
  SUBCASE("a non-spd sample is rejected with its location") {
    Eigen::Matrix2d K;
    K << 1, 2, 2, 1;  // eigenvalues 3 and -1
    const CoefficientField c = constant_coeffs(K, {0, 0}, 0.0);
    CHECK_THROWS_WITH_AS(local_bounds(mesh, 0, c, ops.cell_quad),
                         doctest::Contains("not positive definite"), std::runtime_error);
  }
}

TEST_CASE("inverse-inequality constant") {
  const Mesh mesh = unit_square();

  SUBCASE("k=1 with constant diffusion is divergence free") {
    const ElementOperators ops = build_element_operators(mesh, 0, 1);
    const CoefficientField c = constant_coeffs(Eigen::Matrix2d::Identity(), {0, 0}, 0.0);
    const InverseConstant inv = inverse_constant(ops, c);
    CHECK(inv.divergence_free);
    const SupgParams sp = tau_from_bounds(local_bounds(mesh, 0, c, ops.cell_quad), inv, ops.h, 0.5);
    CHECK(sp.m_k == doctest::Approx(1.0 / 3.0));
  }

  SUBCASE("k=2 identity diffusion against a sampled rayleigh quotient") {
    const ElementOperators ops = build_element_operators(mesh, 0, 2);
    const CoefficientField c = constant_coeffs(Eigen::Matrix2d::Identity(), {0, 0}, 0.0);
    const InverseConstant inv = inverse_constant(ops, c);
    CHECK_FALSE(inv.divergence_free);

    // Independent route: assemble ||div grad p||^2 and ||grad p||^2 with a
    // composite two-point Gauss rule (exact for these quadratic integrands)
    // and maximize the quotient by a dense eigensolve.
    const int nq = 5;  // non-constant quadratic monomials
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(nq, nq), B = Eigen::MatrixXd::Zero(nq, nq);
    const int g = 8;
    const double node = 0.5 / std::sqrt(3.0);
    for (int i = 0; i < g; ++i)
      for (int j = 0; j < g; ++j)
        for (int si = -1; si <= 1; si += 2)
          for (int sj = -1; sj <= 1; sj += 2) {
            const Point2 p{(i + 0.5 + si * node) / g, (j + 0.5 + sj * node) / g};
            const double w = 0.25 / (g * g);
            const auto grads = ops.basis.grad(p);
            const auto laps = ops.basis.laplacian(p);
            for (int a = 0; a < nq; ++a)
              for (int b = 0; b < nq; ++b) {
                A(a, b) += w * laps[static_cast<std::size_t>(a + 1)] *
                           laps[static_cast<std::size_t>(b + 1)];
                B(a, b) +=
                    w * (grads[static_cast<std::size_t>(a + 1)].x * grads[static_cast<std::size_t>(b + 1)].x +
                         grads[static_cast<std::size_t>(a + 1)].y * grads[static_cast<std::size_t>(b + 1)].y);
              }
          }
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(A, B);
    const double ck_ref = 1.0 / (ops.h * ops.h * es.eigenvalues().maxCoeff());
    CHECK(inv.Ck == doctest::Approx(ck_ref).epsilon(1e-9));
  }

  SUBCASE("scaling the tensor leaves the constant unchanged") {
    const ElementOperators ops = build_element_operators(mesh, 0, 3);
    const CoefficientField c1 = constant_coeffs(Eigen::Matrix2d::Identity(), {0, 0}, 0.0);
    const CoefficientField c2 = constant_coeffs(7.3 * Eigen::Matrix2d::Identity(), {0, 0}, 0.0);
    const double a = inverse_constant(ops, c1).Ck;
    const double b = inverse_constant(ops, c2).Ck;
    CHECK(a == doctest::Approx(b).epsilon(1e-10));
  }
}

TEST_CASE("stabilization parameter") {
  SUBCASE("convective regime with vanishing reaction") {
    LocalBounds b{1e-7, 1e-7, 1.0, 0.0};
    InverseConstant inv{1.0 / 6.0, true};
    const SupgParams sp = tau_from_bounds(b, inv, 0.2, 0.5);
    // Candidates: (1/6)*0.04/1e-7 = 66666.7, 0.1, inf.
    CHECK(sp.tau == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(sp.regime == TauRegime::Convective);
    CHECK(std::isinf(sp.Ka));
  }
  SUBCASE("moderate reaction still selects the convective branch") {
    LocalBounds b{1e-7, 1e-7, 1.0, 2.0};
    InverseConstant inv{1.0 / 6.0, true};
    const SupgParams sp = tau_from_bounds(b, inv, 0.2, 0.5);
    // min{huge, 0.1, 0.25} = 0.1
    CHECK(sp.tau == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(sp.Ka == doctest::Approx(2.0 * 1.0 * 0.5 / (0.2 * 2.0)).epsilon(1e-14));
  }
  SUBCASE("pure diffusion keeps only the diffusive branch") {
    LocalBounds b{2.5, 2.5, 0.0, 0.0};
    InverseConstant inv{0.37, false};
    const SupgParams sp = tau_from_bounds(b, inv, 0.3, 0.5);
    CHECK(sp.tau == doctest::Approx(0.37 * 0.09 / 2.5).epsilon(1e-14));
    CHECK(sp.regime == TauRegime::Diffusive);
  }
  SUBCASE("reaction guard: tau * gamma never exceeds C_tau") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int i = 0; i < 500; ++i) {
      LocalBounds b;
      b.kappa_min = b.kappa_max = std::pow(10.0, -8.0 * unif(rng));
      b.beta_max = 2.0 * unif(rng);
      b.gamma_max = 3.0 * unif(rng);
      InverseConstant inv{0.05 + unif(rng), false};
      const double ctau = 0.1 + 0.8 * unif(rng);
      const double h = 0.01 + unif(rng);
      const SupgParams sp = tau_from_bounds(b, inv, h, ctau);
      CHECK(sp.tau * sp.gamma_E <= ctau + 1e-15);
      CHECK(sp.tau > 0.0);
    }
  }
  SUBCASE("monotonicity in the coefficient bounds") {
    InverseConstant inv{0.2, false};
    LocalBounds b{1e-3, 1e-3, 1.0, 1.0};
    const SupgParams base = tau_from_bounds(b, inv, 0.1, 0.5);
    LocalBounds b2 = b;
    b2.beta_max = 2.0;
    CHECK(tau_from_bounds(b2, inv, 0.1, 0.5).tau <= base.tau);
    LocalBounds b3 = b;
    b3.gamma_max = 10.0;
    CHECK(tau_from_bounds(b3, inv, 0.1, 0.5).tau <= base.tau);
  }
  SUBCASE("vanishing mesh size lands in the diffusive regime") {
    InverseConstant inv{0.2, false};
    LocalBounds b{1e-3, 1e-3, 1.0, 1.0};
    double h = 0.5;
    TauRegime last = TauRegime::Convective;
    for (int i = 0; i < 20; ++i, h /= 2) last = tau_from_bounds(b, inv, h, 0.5).regime;
    CHECK(last == TauRegime::Diffusive);
    // And the diffusive branch grows like h^2 from there.
    const double t1 = tau_from_bounds(b, inv, h, 0.5).tau;
    const double t2 = tau_from_bounds(b, inv, h / 2, 0.5).tau;
    CHECK(t1 / t2 == doctest::Approx(4.0).epsilon(1e-10));
  }
}

TEST_CASE("full per-element computation on the accuracy benchmark") {
  const BenchmarkProblem prob = accuracy_problem();
  const Mesh mesh = generate_mesh(MeshFamily::M1, 5);
  for (std::size_t c = 0; c < mesh.num_cells(); c += 7) {
    const ElementOperators ops = build_element_operators(mesh, c, 2);
    const SupgParams sp = compute_tau(mesh, ops, prob.coeffs, 0.5);
    CHECK(sp.tau > 0.0);
    CHECK(sp.Pe > 1e4);  // convection dominated
    CHECK(sp.tau * sp.gamma_E <= 0.5 + 1e-15);

    // The effective tensor stays symmetric positive definite and reduces to
    // K where the advection vanishes.
    const Eigen::Matrix2d Kb = effective_tensor(prob.coeffs, sp, ops.centroid);
    CHECK((Kb - Kb.transpose()).lpNorm<Eigen::Infinity>() <= 1e-15 * Kb.norm());
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(Kb);
    CHECK(es.eigenvalues().minCoeff() > 0.0);
    SupgParams no_stream = sp;
    no_stream.tau = 0.0;
    CHECK((effective_tensor(prob.coeffs, no_stream, ops.centroid) -
           prob.coeffs.K(ops.centroid))
              .lpNorm<Eigen::Infinity>() <= 1e-18);
  }
}
