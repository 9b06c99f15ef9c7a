#include "vemsupg.h"

#include <cstring>
#include <string>

#include "vemsupg/config.hpp"
#include "vemsupg/expr.hpp"
#include "vemsupg/parallel.hpp"

using namespace vemsupg;

struct vsp_mesh {
  Mesh mesh;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

template <typename Fn>
vsp_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return VSP_OK;
  } catch (const ConfigError& e) {
    set_error(e.what());
    return VSP_ERR_PARSE;
  } catch (const ExprError& e) {
    set_error(e.what());
    return VSP_ERR_PARSE;
  } catch (const MeshError& e) {
    set_error(e.what());
    return VSP_ERR_VALIDATION;
  } catch (const SolverError& e) {
    set_error(e.what());
    return VSP_ERR_SOLVER;
  } catch (const std::exception& e) {
    set_error(e.what());
    return VSP_ERR_INTERNAL;
  }
}

vsp_status require(bool cond, const char* msg) {
  if (cond) return VSP_OK;
  set_error(msg);
  return VSP_ERR_INVALID_ARGUMENT;
}

void fill_summary(const ErrorReport& r, vsp_solve_summary* out) {
  if (!out) return;
  out->h_max = r.h_max;
  out->ndof = r.ndof;
  out->has_errors = r.has_errors ? 1 : 0;
  out->err_l2 = r.err_l2;
  out->err_h1 = r.err_h1;
  out->err_energy = r.err_energy;
}

}  // namespace

extern "C" {

const char* vsp_version(void) { return "1.0.0"; }

const char* vsp_last_error(void) { return g_last_error.c_str(); }

vsp_status vsp_mesh_generate(const char* family, int n, vsp_mesh** out) {
  if (vsp_status s = require(family && out, "null argument"); s != VSP_OK) return s;
  return guarded([&] { *out = new vsp_mesh{generate_mesh(family_from_name(family), n)}; });
}

vsp_status vsp_mesh_read(const char* path, vsp_mesh** out) {
  if (vsp_status s = require(path && out, "null argument"); s != VSP_OK) return s;
  return guarded([&] { *out = new vsp_mesh{read_mesh(path)}; });
}

vsp_status vsp_mesh_write(const vsp_mesh* mesh, const char* path) {
  if (vsp_status s = require(mesh && path, "null argument"); s != VSP_OK) return s;
  return guarded([&] { write_mesh(mesh->mesh, path); });
}

void vsp_mesh_free(vsp_mesh* mesh) { delete mesh; }

vsp_status vsp_mesh_num_vertices(const vsp_mesh* mesh, size_t* out) {
  if (vsp_status s = require(mesh && out, "null argument"); s != VSP_OK) return s;
  *out = mesh->mesh.num_vertices();
  return VSP_OK;
}

vsp_status vsp_mesh_num_cells(const vsp_mesh* mesh, size_t* out) {
  if (vsp_status s = require(mesh && out, "null argument"); s != VSP_OK) return s;
  *out = mesh->mesh.num_cells();
  return VSP_OK;
}

vsp_status vsp_mesh_num_edges(const vsp_mesh* mesh, size_t* out) {
  if (vsp_status s = require(mesh && out, "null argument"); s != VSP_OK) return s;
  *out = mesh->mesh.num_edges();
  return VSP_OK;
}

vsp_status vsp_mesh_h_max(const vsp_mesh* mesh, double* out) {
  if (vsp_status s = require(mesh && out, "null argument"); s != VSP_OK) return s;
  *out = mesh->mesh.h_max();
  return VSP_OK;
}

vsp_status vsp_mesh_total_area(const vsp_mesh* mesh, double* out) {
  if (vsp_status s = require(mesh && out, "null argument"); s != VSP_OK) return s;
  *out = mesh->mesh.total_area();
  return VSP_OK;
}

vsp_status vsp_mesh_validate(const vsp_mesh* mesh, double rho, vsp_quality_report* out) {
  if (vsp_status s = require(mesh && out, "null argument"); s != VSP_OK) return s;
  return guarded([&] {
    const QualityReport rep = validate_mesh(mesh->mesh, rho);
    out->min_edge_ratio = rep.min_edge_ratio;
    out->all_star_shaped = rep.all_star_shaped() ? 1 : 0;
    out->max_vertices_per_cell = rep.max_vertices_per_cell;
  });
}

vsp_status vsp_run_solve(const char* config_json, vsp_solve_summary* out) {
  if (vsp_status s = require(config_json, "null config"); s != VSP_OK) return s;
  return guarded([&] {
    const RunSummary sum = run_solve(RunConfig::from_json_text(config_json));
    fill_summary(sum.report, out);
  });
}

vsp_status vsp_run_convergence(const char* config_json, vsp_solve_summary* out) {
  if (vsp_status s = require(config_json, "null config"); s != VSP_OK) return s;
  return guarded([&] {
    const RunSummary sum = run_convergence_cmd(RunConfig::from_json_text(config_json));
    fill_summary(sum.report, out);
  });
}

vsp_status vsp_run_sweep_alpha(const char* config_json, vsp_solve_summary* out) {
  if (vsp_status s = require(config_json, "null config"); s != VSP_OK) return s;
  return guarded([&] {
    const RunSummary sum = run_sweep_alpha(RunConfig::from_json_text(config_json));
    fill_summary(sum.report, out);
  });
}

vsp_status vsp_run_layer(const char* config_json, vsp_layer_metrics* out) {
  if (vsp_status s = require(config_json, "null config"); s != VSP_OK) return s;
  return guarded([&] {
    const RunSummary sum = run_layer(RunConfig::from_json_text(config_json));
    if (out) {
      out->min_u = sum.layer.min_u;
      out->max_u = sum.layer.max_u;
      out->plateau_low_mean_err = sum.layer.plateau_low_mean_err;
      out->plateau_high_mean_err = sum.layer.plateau_high_mean_err;
      out->h_max = sum.layer.h_max;
      out->ndof = sum.layer.ndof;
    }
  });
}

void vsp_set_threads(int n) { set_thread_cap(n); }

}  // extern "C"
