#include "vemsupg/solver.hpp"

#include <Eigen/SparseLU>
#include <unsupported/Eigen/IterativeSolvers>

namespace vemsupg {

SolveMethod solve_method_from_name(const std::string& name) {
  if (name == "direct") return SolveMethod::Direct;
  if (name == "krylov") return SolveMethod::Krylov;
  throw SolverError("unknown solver method '" + name + "' (expected direct or krylov)");
}

double relative_residual(const Eigen::SparseMatrix<double, Eigen::RowMajor>& A,
                         const Eigen::VectorXd& x, const Eigen::VectorXd& rhs) {
  const double nb = rhs.norm();
  if (nb == 0.0) return (A * x).norm();
  return (A * x - rhs).norm() / nb;
}

Eigen::VectorXd solve(const Eigen::SparseMatrix<double, Eigen::RowMajor>& A,
                      const Eigen::VectorXd& rhs, const SolveOptions& opts) {
  if (A.rows() != A.cols() || A.rows() != rhs.size())
    throw SolverError("solve: dimension mismatch");

  if (opts.method == SolveMethod::Direct) {
    Eigen::SparseMatrix<double> Ac = A;  // SparseLU wants column-major
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
    lu.analyzePattern(Ac);
    lu.factorize(Ac);
    if (lu.info() != Eigen::Success)
      throw SolverError("sparse LU factorization failed (matrix singular?)");
    Eigen::VectorXd x = lu.solve(rhs);
    if (lu.info() != Eigen::Success) throw SolverError("sparse LU solve failed");
    return x;
  }

  if (!(opts.tolerance > 0)) throw SolverError("solver tolerance must be positive");
  Eigen::SparseMatrix<double> Ac = A;
  Eigen::GMRES<Eigen::SparseMatrix<double>, Eigen::IncompleteLUT<double>> gmres;
  gmres.setTolerance(opts.tolerance);
  gmres.setMaxIterations(opts.max_iterations);
  gmres.set_restart(opts.restart);
  gmres.preconditioner().setFillfactor(20);
  gmres.preconditioner().setDroptol(1e-8);
  gmres.compute(Ac);
  if (gmres.info() != Eigen::Success)
    throw SolverError("incomplete-LU preconditioner setup failed");
  Eigen::VectorXd x = gmres.solve(rhs);
  if (gmres.info() != Eigen::Success)
    throw SolverError("gmres did not converge within " + std::to_string(opts.max_iterations) +
                      " iterations, residual " + std::to_string(gmres.error()));
  return x;
}

}  // namespace vemsupg
