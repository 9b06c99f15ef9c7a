#ifndef VEMSUPG_ASSEMBLY_HPP
#define VEMSUPG_ASSEMBLY_HPP

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "vemsupg/supg.hpp"
#include "vemsupg/vemspace.hpp"

namespace vemsupg {

/// Discretization of the convective term.
///  - Skew: the antisymmetrized form; b(v,v) = 0 holds exactly, which makes
///    the assembled operator unconditionally coercive, at the cost of exact
///    polynomial reproduction (the projections of the two half-terms do not
///    cancel elementwise for degree-k solutions).
///  - Direct: (beta . projected gradient of the trial, projected trial of the
///    test); reproduces polynomial solutions of degree k exactly with
///    constant coefficients.
enum class ConvectionForm { Skew, Direct };

/// Projection degree of a function slot: the literal degree k-1 or the full
/// degree k available through the enhancement property.
enum class BhFunctionProjection { Km1, K };

struct AssemblyOptions {
  double C_tau = 0.5;
  ConvectionForm convection = ConvectionForm::Direct;
  /// Function slots of the convective form.
  BhFunctionProjection bh_function_projection = BhFunctionProjection::Km1;
  /// Function slots of the reaction form and of the load functional; these
  /// two move together so polynomial solutions stay exactly reproduced.
  BhFunctionProjection load_function_projection = BhFunctionProjection::Km1;
};

struct LocalSystem {
  Eigen::MatrixXd a;  // diffusion + streamline consistency terms
  Eigen::MatrixXd b;  // convective form (skew or direct per options)
  Eigen::MatrixXd c;  // reaction terms
  Eigen::MatrixXd d;  // streamline second-order term
  Eigen::MatrixXd S;  // dof-defect stabilization, (kappa_E + tau beta_E^2)-weighted
  Eigen::MatrixXd A;  // a + b + c + d + S
  Eigen::VectorXd F;
  SupgParams params;
};

LocalSystem local_forms(const ElementOperators& ops, const SupgParams& params,
                        const CoefficientField& coeffs, const AssemblyOptions& options);

struct GlobalSystem {
  Eigen::SparseMatrix<double, Eigen::RowMajor> A;
  Eigen::VectorXd rhs;
  Eigen::VectorXd dirichlet_values;  // full length, zero on interior dofs
  std::vector<SupgParams> cell_params;
  std::size_t size() const { return static_cast<std::size_t>(rhs.size()); }
};

/// Assemble the stabilized system with strong Dirichlet data: boundary-edge
/// dofs are fixed to the edge moments of g, their rows replaced by identity
/// and their columns folded into the right-hand side. Deterministic for any
/// worker count.
GlobalSystem assemble(const Mesh& mesh, const DofMap& dofs, const CoefficientField& coeffs,
                      const AssemblyOptions& options, const ScalarField& dirichlet);

/// Moments of the Dirichlet datum on every boundary-edge dof.
Eigen::VectorXd dirichlet_moments(const Mesh& mesh, const DofMap& dofs,
                                  const ScalarField& dirichlet);

}  // namespace vemsupg

#endif
