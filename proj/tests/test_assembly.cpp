#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <cstring>
#include <random>

#include "vemsupg/analysis.hpp"
#include "vemsupg/assembly.hpp"
#include "vemsupg/parallel.hpp"
#include "vemsupg/solver.hpp"

using namespace vemsupg;

namespace {

CoefficientField constant_coeffs(double kappa, Eigen::Vector2d beta, double gamma) {
  CoefficientField c;
  c.K = [kappa](const Point2&) { return Eigen::Matrix2d(kappa * Eigen::Matrix2d::Identity()); };
  c.grad_K = [](const Point2&) {
    return std::make_pair(Eigen::Matrix2d(Eigen::Matrix2d::Zero()),
                          Eigen::Matrix2d(Eigen::Matrix2d::Zero()));
  };
  c.beta = [beta](const Point2&) { return beta; };
  c.gamma = [gamma](const Point2&) { return gamma; };
  c.f = [](const Point2&) { return 0.0; };
  return c;
}

BenchmarkProblem monomial_problem(int mu, int nu, double kappa, Eigen::Vector2d beta,
                                  double gamma) {
  BenchmarkProblem p;
  p.name = "patch";
  p.has_exact = true;
  p.coeffs = constant_coeffs(kappa, beta, gamma);
  auto u = [mu, nu](const Point2& q) { return std::pow(q.x, mu) * std::pow(q.y, nu); };
  auto ux = [mu, nu](const Point2& q) {
    return mu > 0 ? mu * std::pow(q.x, mu - 1) * std::pow(q.y, nu) : 0.0;
  };
  auto uy = [mu, nu](const Point2& q) {
    return nu > 0 ? nu * std::pow(q.x, mu) * std::pow(q.y, nu - 1) : 0.0;
  };
  p.coeffs.f = [mu, nu, kappa, beta, gamma, u, ux, uy](const Point2& q) {
    const double uxx = mu > 1 ? mu * (mu - 1) * std::pow(q.x, mu - 2) * std::pow(q.y, nu) : 0.0;
    const double uyy = nu > 1 ? nu * (nu - 1) * std::pow(q.x, mu) * std::pow(q.y, nu - 2) : 0.0;
    return -kappa * (uxx + uyy) + beta(0) * ux(q) + beta(1) * uy(q) + gamma * u(q);
  };
  p.coeffs.exact_u = u;
  p.coeffs.exact_grad_u = [ux, uy](const Point2& q) { return Eigen::Vector2d(ux(q), uy(q)); };
  p.dirichlet = u;
  return p;
}

std::vector<std::pair<Mesh, std::size_t>> sample_cells(int per_family, int n = 4) {
  std::vector<std::pair<Mesh, std::size_t>> out;
  std::mt19937 rng(4242);
  for (MeshFamily fam : {MeshFamily::M1, MeshFamily::M2, MeshFamily::M3, MeshFamily::M4}) {
    const Mesh mesh = generate_mesh(fam, n);
    std::uniform_int_distribution<std::size_t> pick(0, mesh.num_cells() - 1);
    for (int i = 0; i < per_family; ++i) out.emplace_back(mesh, pick(rng));
  }
  return out;
}

}  // namespace

TEST_CASE("skew convective form is exactly antisymmetric") {
  const BenchmarkProblem prob = accuracy_problem();
  AssemblyOptions opt;
  opt.convection = ConvectionForm::Skew;
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  int cells = 0;
  for (auto& [mesh, c] : sample_cells(9, 5)) {
    const int k = 1 + (cells % 3);
    const ElementOperators ops = build_element_operators(mesh, c, k);
    const SupgParams params = compute_tau(mesh, ops, prob.coeffs, 0.5);
    const LocalSystem ls = local_forms(ops, params, prob.coeffs, opt);
    const double scale = std::max(1e-30, ls.b.lpNorm<Eigen::Infinity>());
    CHECK((ls.b + ls.b.transpose()).lpNorm<Eigen::Infinity>() <= 1e-13 * scale);
    // b(v,v) = 0 for every dof vector.
    Eigen::VectorXd v(static_cast<int>(ops.n_dofs));
    for (int i = 0; i < v.size(); ++i) v(i) = unif(rng);
    CHECK(std::abs(v.dot(ls.b * v)) <= 1e-13 * scale * v.squaredNorm());
    ++cells;
  }
  CHECK(cells >= 36);
}

TEST_CASE("stabilization kernel contains the polynomial dof vectors") {
  const BenchmarkProblem prob = accuracy_problem();
  AssemblyOptions opt;
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (auto& [mesh, c] : sample_cells(4)) {
    for (int k = 1; k <= 3; ++k) {
      const ElementOperators ops = build_element_operators(mesh, c, k);
      const SupgParams params = compute_tau(mesh, ops, prob.coeffs, 0.5);
      const LocalSystem ls = local_forms(ops, params, prob.coeffs, opt);
      Eigen::VectorXd coeff(static_cast<int>(poly_space_dim(k)));
      for (int i = 0; i < coeff.size(); ++i) coeff(i) = unif(rng);
      const Eigen::VectorXd pdofs = ops.D * coeff;
      const double sscale = std::max(1e-30, ls.S.lpNorm<Eigen::Infinity>());
      CHECK((ls.S * pdofs).lpNorm<Eigen::Infinity>() <=
            1e-10 * sscale * (1.0 + pdofs.lpNorm<Eigen::Infinity>()));
      // Symmetric positive semidefinite.
      CHECK((ls.S - ls.S.transpose()).lpNorm<Eigen::Infinity>() <= 1e-12 * sscale);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(ls.S);
      CHECK(es.eigenvalues().minCoeff() >= -1e-12 * sscale);
    }
  }
}

TEST_CASE("pure diffusion local matrix: spd with a constant kernel") {
  // One hexagon, K = I, beta = 0, gamma = 0; eigendecomposition oracle.
  std::vector<Point2> v;
  for (int i = 0; i < 6; ++i)
    v.push_back({0.5 + 0.4 * std::cos(M_PI * i / 3.0), 0.5 + 0.4 * std::sin(M_PI * i / 3.0)});
  const Mesh mesh = Mesh::from_data(std::move(v), {{0, 1, 2, 3, 4, 5}});
  const CoefficientField coeffs = constant_coeffs(1.0, {0, 0}, 0.0);
  const ElementOperators ops = build_element_operators(mesh, 0, 2);
  const SupgParams params = compute_tau(mesh, ops, coeffs, 0.5);
  const LocalSystem ls = local_forms(ops, params, coeffs, AssemblyOptions{});

  CHECK((ls.A - ls.A.transpose()).lpNorm<Eigen::Infinity>() <= 1e-12 * ls.A.norm());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(ls.A);
  const Eigen::VectorXd ev = es.eigenvalues();
  // Exactly one zero eigenvalue, the constant mode.
  CHECK(std::abs(ev(0)) <= 1e-12 * ev(ev.size() - 1));
  CHECK(ev(1) > 1e-8 * ev(ev.size() - 1));
  const Eigen::VectorXd ones_dofs = ops.D.col(0);  // dofs of the constant monomial
  CHECK((ls.A * ones_dofs).lpNorm<Eigen::Infinity>() <= 1e-12 * ls.A.norm());
}

TEST_CASE("two-cell patch residual vanishes") {
  const Mesh mesh = Mesh::from_data({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}},
                                    {{0, 1, 4, 3}, {1, 2, 5, 4}});
  const BenchmarkProblem prob = monomial_problem(1, 0, 1.0, {1, 1}, 1.0);
  const DofMap dofs(mesh, 1);
  const GlobalSystem sys = assemble(mesh, dofs, prob.coeffs, AssemblyOptions{}, prob.dirichlet);
  const Eigen::VectorXd du = interpolate_dofs(mesh, dofs, *prob.coeffs.exact_u);
  CHECK((sys.A * du - sys.rhs).lpNorm<Eigen::Infinity>() <= 1e-10);
}

TEST_CASE("patch solutions reproduce monomials") {
  for (MeshFamily fam : {MeshFamily::M1, MeshFamily::M3}) {
    const Mesh mesh = generate_mesh(fam, 3);
    for (int k = 1; k <= 2; ++k) {
      const DofMap dofs(mesh, k);
      for (int mu = 0; mu <= k; ++mu)
        for (int nu = 0; mu + nu <= k; ++nu) {
          const BenchmarkProblem prob = monomial_problem(mu, nu, 1.0, {1, 1}, 1.0);
          const GlobalSystem sys =
              assemble(mesh, dofs, prob.coeffs, AssemblyOptions{}, prob.dirichlet);
          const Eigen::VectorXd x = solve(sys.A, sys.rhs, {});
          const Eigen::VectorXd du = interpolate_dofs(mesh, dofs, *prob.coeffs.exact_u);
          INFO(family_name(fam), " k=", k, " x^", mu, " y^", nu);
          CHECK((x - du).lpNorm<Eigen::Infinity>() <=
                1e-9 * (1.0 + du.lpNorm<Eigen::Infinity>()));
        }
    }
  }
}

TEST_CASE("coercivity of the antisymmetrized operator on random vectors") {
  AssemblyOptions opt;
  opt.convection = ConvectionForm::Skew;
  std::mt19937 rng(31);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const BenchmarkProblem prob = accuracy_problem();  // convection dominated
  for (MeshFamily fam : {MeshFamily::M2, MeshFamily::M4}) {
    const Mesh mesh = generate_mesh(fam, 4);
    for (int k = 1; k <= 2; ++k) {
      const DofMap dofs(mesh, k);
      const GlobalSystem sys = assemble(mesh, dofs, prob.coeffs, opt, prob.dirichlet);
      for (int trial = 0; trial < 100; ++trial) {
        Eigen::VectorXd v(static_cast<int>(dofs.size()));
        for (int i = 0; i < v.size(); ++i) v(i) = gauss(rng);
        for (std::size_t d = 0; d < dofs.size(); ++d)
          if (dofs.boundary_mask()[d]) v(static_cast<int>(d)) = 0.0;
        CHECK(v.dot(sys.A * v) > 0.0);
      }
    }
  }
}

TEST_CASE("assembly is deterministic for any worker count") {
  const BenchmarkProblem prob = accuracy_problem();
  const Mesh mesh = generate_mesh(MeshFamily::M2, 5);
  const DofMap dofs(mesh, 2);
  set_thread_cap(1);
  const GlobalSystem a = assemble(mesh, dofs, prob.coeffs, AssemblyOptions{}, prob.dirichlet);
  set_thread_cap(4);
  const GlobalSystem b = assemble(mesh, dofs, prob.coeffs, AssemblyOptions{}, prob.dirichlet);
  set_thread_cap(0);
  REQUIRE(a.A.nonZeros() == b.A.nonZeros());
  CHECK(std::memcmp(a.A.valuePtr(), b.A.valuePtr(), sizeof(double) * a.A.nonZeros()) == 0);
  CHECK(std::memcmp(a.rhs.data(), b.rhs.data(), sizeof(double) * a.rhs.size()) == 0);
}

TEST_CASE("dirichlet handling") {
  SUBCASE("zero data leaves zero boundary values") {
    const Mesh mesh = generate_mesh(MeshFamily::M1, 3);
    const DofMap dofs(mesh, 2);
    const Eigen::VectorXd g = dirichlet_moments(mesh, dofs, [](const Point2&) { return 0.0; });
    CHECK(g.lpNorm<Eigen::Infinity>() == 0.0);
  }
  SUBCASE("single-cell system reduces to the identity") {
    const Mesh mesh = Mesh::from_data({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {{0, 1, 2, 3}});
    const DofMap dofs(mesh, 1);
    const BenchmarkProblem prob = monomial_problem(1, 1, 1.0, {1, 0}, 0.5);
    const GlobalSystem sys =
        assemble(mesh, dofs, prob.coeffs, AssemblyOptions{}, prob.dirichlet);
    CHECK(dofs.num_boundary() == dofs.size());
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        CHECK(sys.A.coeff(i, j) == (i == j ? 1.0 : 0.0));
    const Eigen::VectorXd x = solve(sys.A, sys.rhs, {});
    const Eigen::VectorXd du = interpolate_dofs(mesh, dofs, *prob.coeffs.exact_u);
    CHECK((x - du).lpNorm<Eigen::Infinity>() <= 1e-13);
  }
}
