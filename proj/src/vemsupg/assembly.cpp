#include "vemsupg/assembly.hpp"

#include <vector>

#include "vemsupg/parallel.hpp"

namespace vemsupg {

LocalSystem local_forms(const ElementOperators& ops, const SupgParams& params,
                        const CoefficientField& coeffs, const AssemblyOptions& options) {
  const int nd = static_cast<int>(ops.n_dofs);
  const int nk1 = static_cast<int>(poly_space_dim(ops.k - 1));
  const int nk = static_cast<int>(poly_space_dim(ops.k));
  const double tau = params.tau;
  const double fd_step = 1e-6 * ops.h;

  LocalSystem ls;
  ls.params = params;
  ls.a = Eigen::MatrixXd::Zero(nd, nd);
  ls.b = Eigen::MatrixXd::Zero(nd, nd);
  ls.c = Eigen::MatrixXd::Zero(nd, nd);
  ls.d = Eigen::MatrixXd::Zero(nd, nd);
  ls.F = Eigen::VectorXd::Zero(nd);
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(nd, nd);  // one-sided convective term

  const bool skew = options.convection == ConvectionForm::Skew;
  const bool conv_full_degree = options.bh_function_projection == BhFunctionProjection::K;
  const bool load_full_degree = options.load_function_projection == BhFunctionProjection::K;

  Eigen::RowVectorXd mk1(nk1), mk(nk), dmx(nk1), dmy(nk1);
  for (std::size_t p = 0; p < ops.cell_quad.size(); ++p) {
    const Point2 x = ops.cell_quad.points[p];
    const double w = ops.cell_quad.weights[p];
    const std::vector<double> mv = ops.basis.eval(x);
    const std::vector<Point2> mg = ops.basis.grad(x);
    for (int a = 0; a < nk; ++a) mk(a) = mv[static_cast<std::size_t>(a)];
    for (int a = 0; a < nk1; ++a) {
      mk1(a) = mv[static_cast<std::size_t>(a)];
      dmx(a) = mg[static_cast<std::size_t>(a)].x;
      dmy(a) = mg[static_cast<std::size_t>(a)].y;
    }

    const Eigen::RowVectorXd Gx = mk1 * ops.pi0_grad[0];
    const Eigen::RowVectorXd Gy = mk1 * ops.pi0_grad[1];
    const Eigen::RowVectorXd V1 = mk1 * ops.pi0_km1;
    const Eigen::RowVectorXd Vk = mk * ops.pi0_k;
    // Function-slot projections. The load/reaction pair at full degree k
    // (through the enhancement) avoids losing half an order of consistency
    // at high Peclet numbers; the convective slot is switchable. Either
    // setting preserves the exact polynomial patch test because the load and
    // reaction slots move together.
    const Eigen::RowVectorXd& Vconv = conv_full_degree ? Vk : V1;
    const Eigen::RowVectorXd& Vload = load_full_degree ? Vk : V1;

    const Eigen::Matrix2d K = coeffs.K(x);
    const Eigen::Vector2d beta = coeffs.beta(x);
    const double gamma = coeffs.gamma(x);
    const double f = coeffs.f(x);

    const Eigen::RowVectorXd KGx = K(0, 0) * Gx + K(0, 1) * Gy;
    const Eigen::RowVectorXd KGy = K(1, 0) * Gx + K(1, 1) * Gy;
    const Eigen::RowVectorXd Bv = beta(0) * Gx + beta(1) * Gy;

    ls.a.noalias() += w * (Gx.transpose() * KGx + Gy.transpose() * KGy);
    ls.a.noalias() += (w * tau) * (Bv.transpose() * Bv);

    if (skew)
      T.noalias() += w * (Vconv.transpose() * Bv);
    else
      ls.b.noalias() += w * (Vconv.transpose() * Bv);

    ls.c.noalias() += (w * gamma) * (Vload.transpose() * Vload);
    ls.c.noalias() += (w * gamma * tau) * (Bv.transpose() * Vload);

    if (tau != 0.0) {
      // div(K . projected gradient) of each basis function.
      Eigen::Matrix2d dKx, dKy;
      if (coeffs.grad_K) {
        auto [gx, gy] = coeffs.grad_K(x);
        dKx = gx;
        dKy = gy;
      } else {
        dKx = (coeffs.K({x.x + fd_step, x.y}) - coeffs.K({x.x - fd_step, x.y})) / (2.0 * fd_step);
        dKy = (coeffs.K({x.x, x.y + fd_step}) - coeffs.K({x.x, x.y - fd_step})) / (2.0 * fd_step);
      }
      const Eigen::RowVectorXd Jxx = dmx * ops.pi0_grad[0];
      const Eigen::RowVectorXd Jxy = dmy * ops.pi0_grad[0];
      const Eigen::RowVectorXd Jyx = dmx * ops.pi0_grad[1];
      const Eigen::RowVectorXd Jyy = dmy * ops.pi0_grad[1];
      const Eigen::RowVectorXd Dv = dKx(0, 0) * Gx + dKx(0, 1) * Gy + dKy(1, 0) * Gx +
                                    dKy(1, 1) * Gy + K(0, 0) * Jxx + K(0, 1) * Jyx +
                                    K(1, 0) * Jxy + K(1, 1) * Jyy;
      ls.d.noalias() -= (w * tau) * (Bv.transpose() * Dv);
    }

    ls.F.noalias() += (w * f) * Vload.transpose();
    ls.F.noalias() += (w * f * tau) * Bv.transpose();
  }

  if (skew) ls.b = 0.5 * (T - T.transpose());

  const Eigen::MatrixXd defect =
      Eigen::MatrixXd::Identity(nd, nd) - ops.D * ops.pi_nabla;
  ls.S = (params.kappa_max + tau * params.beta_E * params.beta_E) *
         (defect.transpose() * defect);

  ls.A = ls.a + ls.b + ls.c + ls.d + ls.S;
  return ls;
}

Eigen::VectorXd dirichlet_moments(const Mesh& mesh, const DofMap& dofs,
                                  const ScalarField& dirichlet) {
  const int k = dofs.degree();
  Eigen::VectorXd values = Eigen::VectorXd::Zero(static_cast<int>(dofs.size()));
  for (std::size_t e = 0; e < mesh.num_edges(); ++e) {
    const Edge& edge = mesh.edges()[e];
    if (!edge.is_boundary()) continue;
    const Point2 v0 = mesh.vertices()[edge.v0];
    const Point2 v1 = mesh.vertices()[edge.v1];
    const EdgeBasis eb(k - 1, v0, v1);
    const QuadratureRule q = edge_quadrature(v0, v1, 2 * k + 1);
    for (std::size_t p = 0; p < q.size(); ++p) {
      const double w = q.weights[p] / edge.length;
      const std::vector<double> ev = eb.eval(q.points[p]);
      const double g = dirichlet(q.points[p]);
      for (int m = 0; m < k; ++m)
        values(static_cast<int>(dofs.edge_dof(e, m))) += w * ev[m] * g;
    }
  }
  return values;
}

GlobalSystem assemble(const Mesh& mesh, const DofMap& dofs, const CoefficientField& coeffs,
                      const AssemblyOptions& options, const ScalarField& dirichlet) {
  const std::size_t ncells = mesh.num_cells();
  const std::size_t n = dofs.size();

  struct CellContribution {
    Eigen::MatrixXd A;
    Eigen::VectorXd F;
    SupgParams params;
  };
  std::vector<CellContribution> contrib(ncells);
  parallel_for(ncells, [&](std::size_t c) {
    const ElementOperators ops = build_element_operators(mesh, c, dofs.degree());
    const SupgParams params = compute_tau(mesh, ops, coeffs, options.C_tau);
    LocalSystem ls = local_forms(ops, params, coeffs, options);
    contrib[c] = {std::move(ls.A), std::move(ls.F), params};
  });

  GlobalSystem sys;
  sys.dirichlet_values = dirichlet_moments(mesh, dofs, dirichlet);
  sys.rhs = Eigen::VectorXd::Zero(static_cast<int>(n));
  sys.cell_params.resize(ncells);

  const std::vector<bool>& bmask = dofs.boundary_mask();
  std::vector<Eigen::Triplet<double>> trips;
  std::size_t nnz_guess = 0;
  for (std::size_t c = 0; c < ncells; ++c)
    nnz_guess += contrib[c].A.rows() * contrib[c].A.cols();
  trips.reserve(nnz_guess + n);

  for (std::size_t c = 0; c < ncells; ++c) {
    sys.cell_params[c] = contrib[c].params;
    const std::vector<std::size_t> gids = dofs.cell_dofs(mesh, c);
    const Eigen::MatrixXd& A = contrib[c].A;
    const Eigen::VectorXd& F = contrib[c].F;
    for (std::size_t i = 0; i < gids.size(); ++i) {
      const std::size_t gi = gids[i];
      if (bmask[gi]) continue;  // identity row added below
      sys.rhs(static_cast<int>(gi)) += F(static_cast<int>(i));
      for (std::size_t j = 0; j < gids.size(); ++j) {
        const std::size_t gj = gids[j];
        const double v = A(static_cast<int>(i), static_cast<int>(j));
        if (v == 0.0) continue;
        if (bmask[gj])
          sys.rhs(static_cast<int>(gi)) -= v * sys.dirichlet_values(static_cast<int>(gj));
        else
          trips.emplace_back(static_cast<int>(gi), static_cast<int>(gj), v);
      }
    }
  }
  for (std::size_t d = 0; d < n; ++d)
    if (bmask[d]) {
      trips.emplace_back(static_cast<int>(d), static_cast<int>(d), 1.0);
      sys.rhs(static_cast<int>(d)) = sys.dirichlet_values(static_cast<int>(d));
    }

  sys.A.resize(static_cast<int>(n), static_cast<int>(n));
  sys.A.setFromTriplets(trips.begin(), trips.end());
  sys.A.makeCompressed();
  return sys;
}

}  // namespace vemsupg
