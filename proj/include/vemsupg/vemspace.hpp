#ifndef VEMSUPG_VEMSPACE_HPP
#define VEMSUPG_VEMSPACE_HPP

#include <Eigen/Dense>
#include <cstddef>
#include <functional>
#include <vector>

#include "vemsupg/mesh.hpp"
#include "vemsupg/poly.hpp"

namespace vemsupg {

using ScalarField = std::function<double(const Point2&)>;

/// Degrees of freedom of the nonconforming space of order k:
/// k moments per edge (orders 0..k-1) and dim P_{k-2} moments per cell.
/// Numbering: interior-edge dofs first (edge index major, moment order minor),
/// then boundary-edge dofs, then cell moments.
class DofMap {
 public:
  DofMap(const Mesh& mesh, int k);

  int degree() const { return k_; }
  std::size_t size() const { return total_; }
  std::size_t num_boundary() const { return num_boundary_; }
  const std::vector<bool>& boundary_mask() const { return boundary_mask_; }

  std::size_t edge_dof(std::size_t edge_id, int moment) const {
    return edge_start_[edge_id] + static_cast<std::size_t>(moment);
  }
  std::size_t cell_dof(std::size_t cell_id, std::size_t moment) const {
    return cell_start_[cell_id] + moment;
  }

  /// Global ids of a cell's local dofs, in the local ordering used by
  /// ElementOperators (edge-slot major / moment minor, then cell moments).
  std::vector<std::size_t> cell_dofs(const Mesh& mesh, std::size_t cell_id) const;

  std::size_t local_dof_count(const Mesh& mesh, std::size_t cell_id) const;

 private:
  int k_;
  std::size_t total_ = 0;
  std::size_t num_boundary_ = 0;
  std::vector<std::size_t> edge_start_;
  std::vector<std::size_t> cell_start_;
  std::vector<bool> boundary_mask_;
};

/// Per-element dense operators, all acting on local dof vectors:
///  - D: dofs of the scaled monomials (N_E x dim P_k)
///  - pi_nabla: elliptic projector coefficients (dim P_k x N_E)
///  - pi0_k, pi0_km1: L2 projector coefficients via the enhancement property
///  - pi0_grad[c]: component c of the projected gradient (dim P_{k-1} x N_E)
///  - moments: dofs -> (v, m_a)_E for all m_a up to degree k
/// mass and stiffness are the monomial Gram matrices of the cell.
struct ElementOperators {
  int k = 1;
  std::size_t cell_id = 0;
  std::size_t n_edges = 0;
  std::size_t n_dofs = 0;
  double area = 0.0;
  double h = 0.0;
  Point2 centroid;

  MonomialBasis basis{1, Point2{0, 0}, 1.0};
  QuadratureRule cell_quad;

  Eigen::MatrixXd D;
  Eigen::MatrixXd mass;
  Eigen::MatrixXd stiffness;
  Eigen::MatrixXd pi_nabla;
  Eigen::MatrixXd pi0_k;
  Eigen::MatrixXd pi0_km1;
  Eigen::MatrixXd pi0_grad[2];
  Eigen::MatrixXd moments;

  struct EdgeRef {
    std::size_t edge_id = 0;
    double length = 0.0;
    Point2 outward_normal;  // of this cell
    Point2 v0, v1;          // canonical orientation of the shared edge
  };
  std::vector<EdgeRef> edges;

  std::size_t edge_slot(std::size_t local_edge, int moment) const {
    return local_edge * static_cast<std::size_t>(k) + static_cast<std::size_t>(moment);
  }
  std::size_t cell_slot(std::size_t moment) const {
    return n_edges * static_cast<std::size_t>(k) + moment;
  }
};

/// Build all projector matrices of one cell from its geometry alone.
ElementOperators build_element_operators(const Mesh& mesh, std::size_t cell_id, int k);

/// Evaluate the dof functionals of a smooth function on one cell, in the
/// local ordering (edge dofs in edge order then moment order, cell dofs last).
Eigen::VectorXd dof_functionals(const Mesh& mesh, std::size_t cell_id, int k,
                                const ScalarField& f);

/// Global dof vector of a smooth function (the VEM interpolant's dofs).
Eigen::VectorXd interpolate_dofs(const Mesh& mesh, const DofMap& dofs, const ScalarField& f);

struct VemError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace vemsupg

#endif
