#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstring>
#include <string>

#include "vemsupg.h"

TEST_CASE("version string") {
  CHECK(vsp_version() != nullptr);
  CHECK(std::strlen(vsp_version()) > 0);
}

TEST_CASE("mesh lifecycle through the c api") {
  vsp_mesh* mesh = nullptr;
  REQUIRE(vsp_mesh_generate("m1", 5, &mesh) == VSP_OK);
  REQUIRE(mesh != nullptr);

  size_t nv = 0, nc = 0, ne = 0;
  CHECK(vsp_mesh_num_vertices(mesh, &nv) == VSP_OK);
  CHECK(vsp_mesh_num_cells(mesh, &nc) == VSP_OK);
  CHECK(vsp_mesh_num_edges(mesh, &ne) == VSP_OK);
  CHECK(nv > 0);
  CHECK(nc > 10);
  CHECK(ne > nc);

  double area = 0.0, h = 0.0;
  CHECK(vsp_mesh_total_area(mesh, &area) == VSP_OK);
  CHECK(area == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(vsp_mesh_h_max(mesh, &h) == VSP_OK);
  CHECK(h > 0.1);
  CHECK(h < 0.5);

  vsp_quality_report rep{};
  CHECK(vsp_mesh_validate(mesh, 0.1, &rep) == VSP_OK);
  CHECK(rep.min_edge_ratio > 0.0);
  CHECK(rep.all_star_shaped == 1);

  const char* path = "t_capi_roundtrip.mesh";
  REQUIRE(vsp_mesh_write(mesh, path) == VSP_OK);
  vsp_mesh* back = nullptr;
  REQUIRE(vsp_mesh_read(path, &back) == VSP_OK);
  size_t nv2 = 0;
  CHECK(vsp_mesh_num_vertices(back, &nv2) == VSP_OK);
  CHECK(nv2 == nv);
  vsp_mesh_free(back);
  vsp_mesh_free(mesh);
  std::remove(path);
}

TEST_CASE("error paths set codes and messages") {
  vsp_mesh* mesh = nullptr;
  CHECK(vsp_mesh_generate("m9", 5, &mesh) == VSP_ERR_VALIDATION);
  CHECK(std::string(vsp_last_error()).find("family") != std::string::npos);
  CHECK(vsp_mesh_generate("m1", 1, &mesh) == VSP_ERR_VALIDATION);
  CHECK(vsp_mesh_read("no_such_file.mesh", &mesh) == VSP_ERR_VALIDATION);
  CHECK(vsp_mesh_generate(nullptr, 5, &mesh) == VSP_ERR_INVALID_ARGUMENT);
  vsp_solve_summary sum{};
  CHECK(vsp_run_solve("{\"n\": 0}", &sum) == VSP_ERR_PARSE);
  CHECK(std::string(vsp_last_error()).find("'n'") != std::string::npos);
}

TEST_CASE("solve run through json config text") {
  const char* cfg = R"({"problem":"accuracy","family":"m1","n":5,"k":1})";
  vsp_solve_summary sum{};
  REQUIRE(vsp_run_solve(cfg, &sum) == VSP_OK);
  CHECK(sum.ndof > 50);
  CHECK(sum.has_errors == 1);
  CHECK(sum.err_l2 > 0.0);
  CHECK(sum.err_l2 < 0.5);
  CHECK(sum.err_h1 > 0.0);
}

TEST_CASE("layer run reports oscillation metrics") {
  vsp_set_threads(2);
  const char* cfg = R"({"problem":"layer","family":"m1","n":10,"k":1,"sample_grid":40})";
  vsp_layer_metrics met{};
  REQUIRE(vsp_run_layer(cfg, &met) == VSP_OK);
  CHECK(met.ndof > 100);
  CHECK(met.min_u < 0.5);
  CHECK(met.max_u > 0.5);
  vsp_set_threads(0);
}

TEST_CASE("convergence run writes the csv named in the config") {
  const char* cfg =
      R"({"problem":"accuracy","family":"m4","n":4,"k":1,"refinements":2,"output":"t_capi_conv.csv"})";
  vsp_solve_summary sum{};
  REQUIRE(vsp_run_convergence(cfg, &sum) == VSP_OK);
  std::FILE* f = std::fopen("t_capi_conv.csv", "r");
  REQUIRE(f != nullptr);
  char line[256] = {0};
  CHECK(std::fgets(line, sizeof(line), f) != nullptr);
  CHECK(std::string(line).rfind("family,k,refinement", 0) == 0);
  std::fclose(f);
  std::remove("t_capi_conv.csv");
}
