#include "vemsupg/vemspace.hpp"

#include <cmath>
#include <stdexcept>

namespace vemsupg {

DofMap::DofMap(const Mesh& mesh, int k) : k_(k) {
  if (k < 1 || k > 6) throw VemError("polynomial degree must be in 1..6");
  const std::size_t ne = mesh.num_edges();
  const std::size_t nc = mesh.num_cells();
  const std::size_t per_cell = poly_space_dim(k - 2);
  edge_start_.assign(ne, 0);
  cell_start_.assign(nc, 0);

  std::size_t next = 0;
  for (std::size_t e = 0; e < ne; ++e)
    if (!mesh.edges()[e].is_boundary()) {
      edge_start_[e] = next;
      next += static_cast<std::size_t>(k);
    }
  const std::size_t boundary_begin = next;
  for (std::size_t e = 0; e < ne; ++e)
    if (mesh.edges()[e].is_boundary()) {
      edge_start_[e] = next;
      next += static_cast<std::size_t>(k);
    }
  num_boundary_ = next - boundary_begin;
  for (std::size_t c = 0; c < nc; ++c) {
    cell_start_[c] = next;
    next += per_cell;
  }
  total_ = next;
  boundary_mask_.assign(total_, false);
  for (std::size_t d = boundary_begin; d < boundary_begin + num_boundary_; ++d)
    boundary_mask_[d] = true;
}

std::vector<std::size_t> DofMap::cell_dofs(const Mesh& mesh, std::size_t cell_id) const {
  const Cell& cell = mesh.cells()[cell_id];
  std::vector<std::size_t> out;
  out.reserve(local_dof_count(mesh, cell_id));
  for (std::size_t e : cell.edge_ids)
    for (int m = 0; m < k_; ++m) out.push_back(edge_dof(e, m));
  const std::size_t per_cell = poly_space_dim(k_ - 2);
  for (std::size_t m = 0; m < per_cell; ++m) out.push_back(cell_dof(cell_id, m));
  return out;
}

std::size_t DofMap::local_dof_count(const Mesh& mesh, std::size_t cell_id) const {
  return mesh.cells()[cell_id].num_vertices() * static_cast<std::size_t>(k_) +
         poly_space_dim(k_ - 2);
}

namespace {

// Expansions of every cell monomial (and of the cell-normal derivative) on one
// edge, in the canonical edge monomial basis up to degree k-1.
struct EdgeExpansion {
  Eigen::MatrixXd trace;   // (k) x (dim P_k): m_a|_e coefficients
  Eigen::MatrixXd normal;  // (k) x (dim P_k): (n_cell . grad m_a)|_e coefficients
};

EdgeExpansion expand_on_edge(const MonomialBasis& basis, const ElementOperators::EdgeRef& er,
                             int k) {
  const std::size_t nk = basis.size();
  const EdgeBasis eb(k - 1, er.v0, er.v1);
  const QuadratureRule q = edge_quadrature(er.v0, er.v1, 2 * k + 1);

  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(k, k);
  Eigen::MatrixXd rhs_t = Eigen::MatrixXd::Zero(k, static_cast<int>(nk));
  Eigen::MatrixXd rhs_n = Eigen::MatrixXd::Zero(k, static_cast<int>(nk));
  for (std::size_t p = 0; p < q.size(); ++p) {
    const double w = q.weights[p];
    const std::vector<double> ev = eb.eval(q.points[p]);
    const std::vector<double> mv = basis.eval(q.points[p]);
    const std::vector<Point2> mg = basis.grad(q.points[p]);
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b <= a; ++b) gram(a, b) += w * ev[a] * ev[b];
      for (std::size_t c = 0; c < nk; ++c) {
        rhs_t(a, static_cast<int>(c)) += w * ev[a] * mv[c];
        rhs_n(a, static_cast<int>(c)) += w * ev[a] * mg[c].dot(er.outward_normal);
      }
    }
  }
  gram = gram.selfadjointView<Eigen::Lower>();
  Eigen::LLT<Eigen::MatrixXd> llt(gram);
  EdgeExpansion ex;
  ex.trace = llt.solve(rhs_t);
  ex.normal = llt.solve(rhs_n);
  return ex;
}

}  // namespace

ElementOperators build_element_operators(const Mesh& mesh, std::size_t cell_id, int k) {
  if (k < 1) throw VemError("build_element_operators: k must be >= 1");
  const Cell& cell = mesh.cells()[cell_id];
  const std::size_t ne = cell.num_vertices();
  const std::size_t nk = poly_space_dim(k);
  const std::size_t nkm1 = poly_space_dim(k - 1);
  const std::size_t nkm2 = poly_space_dim(k - 2);
  const std::size_t ndof = ne * static_cast<std::size_t>(k) + nkm2;

  ElementOperators ops;
  ops.k = k;
  ops.cell_id = cell_id;
  ops.n_edges = ne;
  ops.n_dofs = ndof;
  ops.area = cell.area;
  ops.h = cell.diameter;
  ops.centroid = cell.centroid;
  ops.basis = MonomialBasis(k, cell.centroid, cell.diameter);
  ops.cell_quad = cell_quadrature(mesh.cell_polygon(cell_id), 2 * k + 2);

  ops.edges.reserve(ne);
  for (std::size_t s = 0; s < ne; ++s) {
    const Edge& e = mesh.edges()[cell.edge_ids[s]];
    ElementOperators::EdgeRef er;
    er.edge_id = cell.edge_ids[s];
    er.length = e.length;
    const double sign = (e.cells[0] == cell_id) ? 1.0 : -1.0;
    er.outward_normal = e.normal * sign;
    er.v0 = mesh.vertices()[e.v0];
    er.v1 = mesh.vertices()[e.v1];
    ops.edges.push_back(er);
  }

  const int NK = static_cast<int>(nk);
  const int ND = static_cast<int>(ndof);

  // Gram matrices by quadrature (polynomial integrands within exactness).
  ops.mass = Eigen::MatrixXd::Zero(NK, NK);
  ops.stiffness = Eigen::MatrixXd::Zero(NK, NK);
  for (std::size_t p = 0; p < ops.cell_quad.size(); ++p) {
    const double w = ops.cell_quad.weights[p];
    const std::vector<double> mv = ops.basis.eval(ops.cell_quad.points[p]);
    const std::vector<Point2> mg = ops.basis.grad(ops.cell_quad.points[p]);
    for (int a = 0; a < NK; ++a)
      for (int b = 0; b <= a; ++b) {
        ops.mass(a, b) += w * mv[a] * mv[b];
        ops.stiffness(a, b) += w * mg[a].dot(mg[b]);
      }
  }
  ops.mass = ops.mass.selfadjointView<Eigen::Lower>();
  ops.stiffness = ops.stiffness.selfadjointView<Eigen::Lower>();

  // D: dof functionals applied to the monomials.
  ops.D = Eigen::MatrixXd::Zero(ND, NK);
  std::vector<EdgeExpansion> ex;
  ex.reserve(ne);
  for (std::size_t s = 0; s < ne; ++s) {
    ex.push_back(expand_on_edge(ops.basis, ops.edges[s], k));
    const QuadratureRule q = edge_quadrature(ops.edges[s].v0, ops.edges[s].v1, 2 * k + 1);
    const EdgeBasis eb(k - 1, ops.edges[s].v0, ops.edges[s].v1);
    for (std::size_t p = 0; p < q.size(); ++p) {
      const double w = q.weights[p] / ops.edges[s].length;
      const std::vector<double> ev = eb.eval(q.points[p]);
      const std::vector<double> mv = ops.basis.eval(q.points[p]);
      for (int m = 0; m < k; ++m)
        for (int a = 0; a < NK; ++a)
          ops.D(static_cast<int>(ops.edge_slot(s, m)), a) += w * ev[m] * mv[a];
    }
  }
  for (std::size_t b = 0; b < nkm2; ++b)
    for (int a = 0; a < NK; ++a)
      ops.D(static_cast<int>(ops.cell_slot(b)), a) = ops.mass(static_cast<int>(b), a) / ops.area;

  // Elliptic projector: integrate by parts against every monomial, with the
  // mean constraint in the first row (the constant row of the stiffness Gram
  // is zero).
  Eigen::MatrixXd G = ops.stiffness;
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(NK, ND);
  for (int a = 0; a < NK; ++a) {
    // Volume term -(v, lap m_a): the scaled-monomial Laplacian expands exactly.
    const MultiIndex mi = ops.basis.exponents()[static_cast<std::size_t>(a)];
    const double s2 = ops.h * ops.h;
    if (mi.a1 > 1) {
      const std::size_t b = monomial_position(mi.a1 - 2, mi.a2);
      B(a, static_cast<int>(ops.cell_slot(b))) -= mi.a1 * (mi.a1 - 1) / s2 * ops.area;
    }
    if (mi.a2 > 1) {
      const std::size_t b = monomial_position(mi.a1, mi.a2 - 2);
      B(a, static_cast<int>(ops.cell_slot(b))) -= mi.a2 * (mi.a2 - 1) / s2 * ops.area;
    }
    for (std::size_t s = 0; s < ne; ++s)
      for (int m = 0; m < k; ++m)
        B(a, static_cast<int>(ops.edge_slot(s, m))) += ex[s].normal(m, a) * ops.edges[s].length;
  }
  // Constraint row.
  for (int a = 0; a < NK; ++a) G(0, a) = 0.0;
  B.row(0).setZero();
  if (k == 1) {
    for (std::size_t s = 0; s < ne; ++s) {
      const QuadratureRule q = edge_quadrature(ops.edges[s].v0, ops.edges[s].v1, k + 1);
      for (std::size_t p = 0; p < q.size(); ++p) {
        const std::vector<double> mv = ops.basis.eval(q.points[p]);
        for (int a = 0; a < NK; ++a) G(0, a) += q.weights[p] * mv[a];
      }
      B(0, static_cast<int>(ops.edge_slot(s, 0))) = ops.edges[s].length;
    }
  } else {
    for (int a = 0; a < NK; ++a) G(0, a) = ops.mass(0, a);
    B(0, static_cast<int>(ops.cell_slot(0))) = ops.area;
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(G);
  if (!lu.isInvertible())
    throw VemError("singular elliptic-projector system on cell " + std::to_string(cell_id));
  ops.pi_nabla = lu.solve(B);

  // Moments (v, m_a)_E for all a: interior moments directly up to k-2, the
  // enhancement property for the orthogonal remainder of degrees k-1 and k.
  ops.moments = Eigen::MatrixXd::Zero(NK, ND);
  const Eigen::MatrixXd& H = ops.mass;
  Eigen::LLT<Eigen::MatrixXd> h22;
  if (nkm2 > 0) h22.compute(H.topLeftCorner(static_cast<int>(nkm2), static_cast<int>(nkm2)));
  for (std::size_t a = 0; a < nk; ++a) {
    if (a < nkm2) {
      ops.moments(static_cast<int>(a), static_cast<int>(ops.cell_slot(a))) = ops.area;
      continue;
    }
    Eigen::VectorXd c;  // P_{k-2} component of m_a
    if (nkm2 > 0) c = h22.solve(H.topLeftCorner(static_cast<int>(nkm2), NK).col(static_cast<int>(a)));
    // (v, p0) from interior moments.
    for (std::size_t b = 0; b < nkm2; ++b)
      ops.moments(static_cast<int>(a), static_cast<int>(ops.cell_slot(b))) += c(static_cast<int>(b)) * ops.area;
    // (Pi_nabla v, m_a - p0).
    Eigen::VectorXd r = H.col(static_cast<int>(a));
    for (std::size_t b = 0; b < nkm2; ++b) r -= c(static_cast<int>(b)) * H.col(static_cast<int>(b));
    ops.moments.row(static_cast<int>(a)) += r.transpose() * ops.pi_nabla;
  }

  // L2 projectors from the moments.
  Eigen::LLT<Eigen::MatrixXd> hk(H);
  ops.pi0_k = hk.solve(ops.moments);
  Eigen::LLT<Eigen::MatrixXd> hk1(H.topLeftCorner(static_cast<int>(nkm1), static_cast<int>(nkm1)));
  ops.pi0_km1 = hk1.solve(ops.moments.topRows(static_cast<int>(nkm1)));

  // Projected gradient components by integration by parts.
  for (int comp = 0; comp < 2; ++comp) {
    Eigen::MatrixXd R = Eigen::MatrixXd::Zero(static_cast<int>(nkm1), ND);
    for (std::size_t a = 0; a < nkm1; ++a) {
      for (const auto& [idx, coeff] : ops.basis.derivative_expansion(a, comp)) {
        // -(v, d m_a): derivative lives in P_{k-2}, use interior moments.
        if (idx < nkm2)
          R(static_cast<int>(a), static_cast<int>(ops.cell_slot(idx))) -= coeff * ops.area;
        else
          R.row(static_cast<int>(a)) -= coeff * ops.moments.row(static_cast<int>(idx));
      }
      for (std::size_t s = 0; s < ne; ++s) {
        const double nc = (comp == 0) ? ops.edges[s].outward_normal.x : ops.edges[s].outward_normal.y;
        for (int m = 0; m < k; ++m)
          R(static_cast<int>(a), static_cast<int>(ops.edge_slot(s, m))) +=
              nc * ex[s].trace(m, static_cast<int>(a)) * ops.edges[s].length;
      }
    }
    ops.pi0_grad[comp] = hk1.solve(R);
  }
  return ops;
}

Eigen::VectorXd dof_functionals(const Mesh& mesh, std::size_t cell_id, int k,
                                const ScalarField& f) {
  const Cell& cell = mesh.cells()[cell_id];
  const std::size_t ne = cell.num_vertices();
  const std::size_t nkm2 = poly_space_dim(k - 2);
  Eigen::VectorXd out = Eigen::VectorXd::Zero(static_cast<int>(ne * static_cast<std::size_t>(k) + nkm2));

  for (std::size_t s = 0; s < ne; ++s) {
    const Edge& e = mesh.edges()[cell.edge_ids[s]];
    const Point2 v0 = mesh.vertices()[e.v0];
    const Point2 v1 = mesh.vertices()[e.v1];
    const EdgeBasis eb(k - 1, v0, v1);
    const QuadratureRule q = edge_quadrature(v0, v1, 2 * k + 1);
    for (std::size_t p = 0; p < q.size(); ++p) {
      const double w = q.weights[p] / e.length;
      const std::vector<double> ev = eb.eval(q.points[p]);
      const double fv = f(q.points[p]);
      for (int m = 0; m < k; ++m)
        out(static_cast<int>(s * static_cast<std::size_t>(k)) + m) += w * ev[m] * fv;
    }
  }
  if (nkm2 > 0) {
    const MonomialBasis basis(k - 2, cell.centroid, cell.diameter);
    const QuadratureRule q = cell_quadrature(mesh.cell_polygon(cell_id), 2 * k + 2);
    for (std::size_t p = 0; p < q.size(); ++p) {
      const double w = q.weights[p] / cell.area;
      const std::vector<double> mv = basis.eval(q.points[p]);
      const double fv = f(q.points[p]);
      for (std::size_t b = 0; b < nkm2; ++b)
        out(static_cast<int>(ne * static_cast<std::size_t>(k) + b)) += w * mv[b] * fv;
    }
  }
  return out;
}

Eigen::VectorXd interpolate_dofs(const Mesh& mesh, const DofMap& dofs, const ScalarField& f) {
  const int k = dofs.degree();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(static_cast<int>(dofs.size()));
  // Edge dofs are shared; recomputing them per cell writes identical values.
  for (std::size_t c = 0; c < mesh.num_cells(); ++c) {
    const Eigen::VectorXd local = dof_functionals(mesh, c, k, f);
    const std::vector<std::size_t> gids = dofs.cell_dofs(mesh, c);
    for (std::size_t i = 0; i < gids.size(); ++i)
      out(static_cast<int>(gids[i])) = local(static_cast<int>(i));
  }
  return out;
}

}  // namespace vemsupg
