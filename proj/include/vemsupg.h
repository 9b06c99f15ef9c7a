/* C interface to the vemsupg solver library.
 *
 * All functions return VSP_OK on success; on failure they return an error
 * code and leave a message retrievable with vsp_last_error() on the calling
 * thread. Handles are opaque and must be released with their _free function.
 */
#ifndef VEMSUPG_H
#define VEMSUPG_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vsp_status {
  VSP_OK = 0,
  VSP_ERR_INVALID_ARGUMENT = 1,
  VSP_ERR_PARSE = 2,
  VSP_ERR_VALIDATION = 3,
  VSP_ERR_SOLVER = 4,
  VSP_ERR_IO = 5,
  VSP_ERR_INTERNAL = 6
} vsp_status;

const char* vsp_version(void);

/* Message for the most recent failure on this thread ("" if none). */
const char* vsp_last_error(void);

/* ---- meshes ---- */

typedef struct vsp_mesh vsp_mesh;

/* family: "m1" | "m2" | "m3" | "m4"; n >= 2. */
vsp_status vsp_mesh_generate(const char* family, int n, vsp_mesh** out);
vsp_status vsp_mesh_read(const char* path, vsp_mesh** out);
vsp_status vsp_mesh_write(const vsp_mesh* mesh, const char* path);
void vsp_mesh_free(vsp_mesh* mesh);

vsp_status vsp_mesh_num_vertices(const vsp_mesh* mesh, size_t* out);
vsp_status vsp_mesh_num_cells(const vsp_mesh* mesh, size_t* out);
vsp_status vsp_mesh_num_edges(const vsp_mesh* mesh, size_t* out);
vsp_status vsp_mesh_h_max(const vsp_mesh* mesh, double* out);
vsp_status vsp_mesh_total_area(const vsp_mesh* mesh, double* out);

typedef struct vsp_quality_report {
  double min_edge_ratio;
  int all_star_shaped;
  size_t max_vertices_per_cell;
} vsp_quality_report;

vsp_status vsp_mesh_validate(const vsp_mesh* mesh, double rho, vsp_quality_report* out);

/* ---- runs ----
 *
 * Every run is driven by a json config document (text, not a path); the
 * schema is described in the project README. Output files named in the
 * config are written as a side effect.
 */

typedef struct vsp_solve_summary {
  double h_max;
  size_t ndof;
  int has_errors;
  double err_l2;
  double err_h1;
  double err_energy;
} vsp_solve_summary;

typedef struct vsp_layer_metrics {
  double min_u;
  double max_u;
  double plateau_low_mean_err;
  double plateau_high_mean_err;
  double h_max;
  size_t ndof;
} vsp_layer_metrics;

vsp_status vsp_run_solve(const char* config_json, vsp_solve_summary* out);
vsp_status vsp_run_convergence(const char* config_json, vsp_solve_summary* out);
vsp_status vsp_run_sweep_alpha(const char* config_json, vsp_solve_summary* out);
vsp_status vsp_run_layer(const char* config_json, vsp_layer_metrics* out);

/* Cap the worker count (0 restores probing of VEMSUPG_THREADS). */
void vsp_set_threads(int n);

#ifdef __cplusplus
}
#endif

#endif /* VEMSUPG_H */
