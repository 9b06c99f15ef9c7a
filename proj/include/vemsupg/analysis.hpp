#ifndef VEMSUPG_ANALYSIS_HPP
#define VEMSUPG_ANALYSIS_HPP

#include <optional>
#include <string>
#include <vector>

#include "vemsupg/assembly.hpp"
#include "vemsupg/solver.hpp"

namespace vemsupg {

struct BenchmarkProblem {
  std::string name;
  CoefficientField coeffs;
  ScalarField dirichlet;
  bool has_exact = false;
};

/// Variable-coefficient accuracy benchmark on (0,1)^2: anisotropic diffusion
/// scaled by alpha, trigonometric advection, exponential reaction (optional),
/// exact solution sin(2 pi x) sin(2 pi y) + x^5 + y^5 + 1 with the matching
/// source term hard-coded in closed form.
BenchmarkProblem accuracy_problem(double alpha = 1e-7, bool with_reaction = true);

/// Transport of a discontinuous inflow profile at Peclet ~ 1e6: constant
/// diffusion 1e-6, unit velocity at 45 degrees, u = 1 on the inflow segments
/// {y=0} and {x=0, y<0.2}, u = 0 on the rest of the boundary.
BenchmarkProblem layer_problem();

struct ErrorReport {
  double err_l2 = 0.0;
  double err_h1 = 0.0;      // broken seminorm
  double err_energy = 0.0;  // stabilized-norm diagnostic
  double h_max = 0.0;
  std::size_t ndof = 0;
  bool has_errors = false;
};

/// Relative projection-based errors of a discrete solution:
/// L2 against Pi0_k u_h, broken H1 against Pi0_{k-1} grad u_h, and the
/// stabilized norm with the dof-defect term applied to u_I - u_h.
ErrorReport compute_errors(const Mesh& mesh, const DofMap& dofs, const Eigen::VectorXd& solution,
                           const BenchmarkProblem& problem, const AssemblyOptions& options);

struct SolveResult {
  Eigen::VectorXd solution;
  ErrorReport report;
};

/// Assemble, solve and measure errors in one step.
SolveResult solve_problem(const Mesh& mesh, int k, const BenchmarkProblem& problem,
                          const AssemblyOptions& options, const SolveOptions& sopts = {});

struct ConvergenceRow {
  int refinement = 0;
  int n = 0;
  ErrorReport report;
  double rate_l2 = 0.0, rate_h1 = 0.0, rate_energy = 0.0;
  bool has_rates = false;
};

struct ConvergenceTable {
  MeshFamily family = MeshFamily::M1;
  int k = 1;
  std::vector<ConvergenceRow> rows;
};

ConvergenceTable run_convergence(MeshFamily family, int k, int refinements,
                                 const BenchmarkProblem& problem, const AssemblyOptions& options,
                                 const SolveOptions& sopts = {}, int base_resolution = 5);

/// Exact CSV schema used by the command-line tools:
/// family,k,refinement,h_max,ndof,err_l2,err_h1,err_energy,rate_l2,rate_h1,rate_energy
/// with empty rate cells on the first row of each series.
std::string convergence_csv(const std::vector<ConvergenceTable>& tables);

struct AlphaSweepRow {
  MeshFamily family;
  int k;
  double alpha;
  ErrorReport report;
};

std::vector<AlphaSweepRow> sweep_alpha(MeshFamily family, int n, int k,
                                       const std::vector<double>& alphas,
                                       const AssemblyOptions& options,
                                       const SolveOptions& sopts = {});

std::string alpha_sweep_csv(const std::vector<AlphaSweepRow>& rows);

/// Piecewise-polynomial view of a discrete solution (Pi0_k on each cell).
class SampledSolution {
 public:
  SampledSolution(const Mesh& mesh, const DofMap& dofs, const Eigen::VectorXd& solution);
  double operator()(const Point2& p) const;

 private:
  const Mesh& mesh_;
  int k_;
  std::vector<Eigen::VectorXd> cell_coeffs_;
};

struct LayerReport {
  int grid = 200;
  std::vector<double> samples;  // row-major, y fastest? no: index j*grid+i, u at cell centers
  double min_u = 0.0;
  double max_u = 0.0;
  double plateau_low_mean_err = 0.0;   // mean |u_h - 1| below the internal layer
  double plateau_high_mean_err = 0.0;  // mean |u_h| above it
  double h_max = 0.0;
  std::size_t ndof = 0;
};

/// Solve the layer benchmark on the given mesh and sample Pi0_k u_h on a
/// uniform grid; plateau statistics exclude a band of width 5 h_max around
/// the internal layer line y = x + 0.2 and the outflow boundaries x=1, y=1.
LayerReport layer_problem_report(const Mesh& mesh, int k, const AssemblyOptions& options,
                                 const SolveOptions& sopts = {}, int grid = 200);

std::string layer_samples_csv(const LayerReport& report);

}  // namespace vemsupg

#endif
