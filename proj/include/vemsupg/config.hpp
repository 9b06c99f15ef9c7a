#ifndef VEMSUPG_CONFIG_HPP
#define VEMSUPG_CONFIG_HPP

#include <optional>
#include <string>
#include <vector>

#include "vemsupg/analysis.hpp"

namespace vemsupg {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One JSON document drives every run kind; see the README for the schema.
struct RunConfig {
  BenchmarkProblem problem;
  MeshFamily family = MeshFamily::M1;
  std::optional<std::string> mesh_path;  // overrides family/n for single solves
  int n = 5;
  std::vector<int> degrees = {1};
  int refinements = 1;
  double c_tau = 0.5;
  AssemblyOptions assembly;
  SolveOptions solver;
  std::vector<double> alphas;  // sweep-alpha only
  double alpha = 1e-7;         // accuracy-problem diffusion scale
  bool with_reaction = true;
  std::string output;        // csv path ("" = stdout)
  std::string samples_out;   // layer sample grid path
  int sample_grid = 200;

  static RunConfig from_json_text(const std::string& text);
  static RunConfig from_file(const std::string& path);
};

/// Execute one CLI-level run; returns the primary result summary for solve
/// and layer runs (see the C api). Writes any files named in the config.
struct RunSummary {
  ErrorReport report;        // solve runs
  LayerReport layer;         // layer runs
  bool has_layer = false;
};

RunSummary run_solve(const RunConfig& cfg);
RunSummary run_convergence_cmd(const RunConfig& cfg);
RunSummary run_sweep_alpha(const RunConfig& cfg);
RunSummary run_layer(const RunConfig& cfg);

}  // namespace vemsupg

#endif
