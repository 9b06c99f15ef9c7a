#ifndef VEMSUPG_SOLVER_HPP
#define VEMSUPG_SOLVER_HPP

#include <Eigen/Sparse>
#include <stdexcept>
#include <string>

namespace vemsupg {

enum class SolveMethod { Direct, Krylov };

struct SolveOptions {
  SolveMethod method = SolveMethod::Direct;
  double tolerance = 1e-12;  // relative residual for the krylov path
  int max_iterations = 2000;
  int restart = 80;
};

SolveMethod solve_method_from_name(const std::string& name);

struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Solve the assembled nonsymmetric sparse system. Direct: sparse LU with
/// partial pivoting. Krylov: restarted GMRES preconditioned by an incomplete
/// LU factorization; throws with the final residual on non-convergence.
Eigen::VectorXd solve(const Eigen::SparseMatrix<double, Eigen::RowMajor>& A,
                      const Eigen::VectorXd& rhs, const SolveOptions& opts = {});

/// Relative residual ||Ax - b|| / ||b||.
double relative_residual(const Eigen::SparseMatrix<double, Eigen::RowMajor>& A,
                         const Eigen::VectorXd& x, const Eigen::VectorXd& rhs);

}  // namespace vemsupg

#endif
