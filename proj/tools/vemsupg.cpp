// Command-line front end; all functionality is reached through the C api of
// the shared library.
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "vemsupg.h"

namespace {

int fail(const char* what) {
  std::fprintf(stderr, "vemsupg: %s: %s\n", what, vsp_last_error());
  return 1;
}

std::string read_file(const std::string& path, bool& ok) {
  std::ifstream in(path);
  if (!in) {
    ok = false;
    return {};
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  ok = true;
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polygonal-mesh solver for convection-diffusion-reaction problems"};
  app.require_subcommand(1);

  std::string family = "m1", out_path, config_path;
  int n = 5;

  CLI::App* mesh = app.add_subcommand("mesh", "Generate a mesh file");
  mesh->add_option("--family", family, "mesh family: m1, m2, m3 or m4")->required();
  mesh->add_option("--n", n, "partitions per direction (>= 2)")->required();
  mesh->add_option("--out", out_path, "output mesh path")->required();

  CLI::App* solve = app.add_subcommand("solve", "Solve one problem from a config file");
  solve->add_option("--config", config_path, "json config path")->required();

  CLI::App* conv = app.add_subcommand("convergence", "Run a refinement study");
  conv->add_option("--config", config_path, "json config path")->required();

  CLI::App* sweep = app.add_subcommand("sweep-alpha", "Sweep the diffusion scale");
  sweep->add_option("--config", config_path, "json config path")->required();

  CLI::App* layer = app.add_subcommand("layer", "Run the internal-layer benchmark");
  layer->add_option("--config", config_path, "json config path")->required();

  CLI11_PARSE(app, argc, argv);

  if (mesh->parsed()) {
    vsp_mesh* m = nullptr;
    if (vsp_mesh_generate(family.c_str(), n, &m) != VSP_OK) return fail("mesh generation failed");
    const vsp_status s = vsp_mesh_write(m, out_path.c_str());
    vsp_mesh_free(m);
    if (s != VSP_OK) return fail("mesh write failed");
    std::printf("wrote %s\n", out_path.c_str());
    return 0;
  }

  bool ok = false;
  const std::string config = read_file(config_path, ok);
  if (!ok) {
    std::fprintf(stderr, "vemsupg: cannot read config file '%s'\n", config_path.c_str());
    return 1;
  }

  if (solve->parsed()) {
    vsp_solve_summary sum{};
    if (vsp_run_solve(config.c_str(), &sum) != VSP_OK) return fail("solve failed");
    std::printf("ndof %zu  h_max %.6g\n", sum.ndof, sum.h_max);
    if (sum.has_errors)
      std::printf("err_l2 %.6g  err_h1 %.6g  err_energy %.6g\n", sum.err_l2, sum.err_h1,
                  sum.err_energy);
    return 0;
  }
  if (conv->parsed()) {
    vsp_solve_summary sum{};
    if (vsp_run_convergence(config.c_str(), &sum) != VSP_OK) return fail("convergence run failed");
    return 0;
  }
  if (sweep->parsed()) {
    vsp_solve_summary sum{};
    if (vsp_run_sweep_alpha(config.c_str(), &sum) != VSP_OK) return fail("alpha sweep failed");
    return 0;
  }
  if (layer->parsed()) {
    vsp_layer_metrics met{};
    if (vsp_run_layer(config.c_str(), &met) != VSP_OK) return fail("layer run failed");
    std::printf("min_u %.6g  max_u %.6g  plateau_low %.6g  plateau_high %.6g\n", met.min_u,
                met.max_u, met.plateau_low_mean_err, met.plateau_high_mean_err);
    return 0;
  }
  return 1;
}
