#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>

#include "vemsupg/mesh.hpp"

using namespace vemsupg;

namespace {
const MeshFamily kFamilies[] = {MeshFamily::M1, MeshFamily::M2, MeshFamily::M3, MeshFamily::M4};

std::string temp_path(const char* name) {
  return std::string("t_") + name;
}
}  // namespace

TEST_CASE("generated meshes tile the unit square") {
  for (MeshFamily fam : kFamilies) {
    for (int n : {2, 5, 10}) {
      const Mesh mesh = generate_mesh(fam, n);
      INFO(family_name(fam), " n=", n);
      CHECK(mesh.total_area() == doctest::Approx(1.0).epsilon(1e-10));
      // Shoelace oracle, independent of the cached area field.
      double shoelace = 0.0;
      for (std::size_t c = 0; c < mesh.num_cells(); ++c)
        shoelace += signed_area(mesh.cell_polygon(c));
      CHECK(shoelace == doctest::Approx(1.0).epsilon(1e-10));
      for (const Cell& c : mesh.cells()) {
        CHECK(c.area > 0.0);
        CHECK(c.area ==
              doctest::Approx(signed_area(mesh.cell_polygon(&c - mesh.cells().data()))).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("edge table and normals") {
  for (MeshFamily fam : kFamilies) {
    const Mesh mesh = generate_mesh(fam, 4);
    // Every cell edge appears exactly once in the edge table; interior edges
    // are shared by exactly two cells.
    std::vector<int> uses(mesh.num_edges(), 0);
    for (const Cell& c : mesh.cells())
      for (std::size_t e : c.edge_ids) ++uses[e];
    for (std::size_t e = 0; e < mesh.num_edges(); ++e) {
      const Edge& edge = mesh.edges()[e];
      CHECK(uses[e] == (edge.is_boundary() ? 1 : 2));
      CHECK(std::abs(edge.normal.norm() - 1.0) <= 1e-14);
      // Normal points out of the first adjacent cell.
      const Point2 centroid = mesh.cells()[edge.cells[0]].centroid;
      CHECK(edge.normal.dot(edge.midpoint - centroid) > 0.0);
    }
  }
}

TEST_CASE("interior hexagonal cells of m1") {
  const Mesh mesh = generate_mesh(MeshFamily::M1, 5);
  std::size_t hexes = 0;
  for (const Cell& c : mesh.cells()) {
    bool interior = true;
    for (std::size_t e : c.edge_ids)
      if (mesh.edges()[e].is_boundary()) interior = false;
    if (interior) {
      CHECK(c.num_vertices() == 6);
      ++hexes;
    }
  }
  CHECK(hexes > 10);
}

TEST_CASE("resolution doubling halves the mesh size") {
  for (MeshFamily fam : kFamilies) {
    for (int n : {5, 10, 20}) {
      // The m2 remap has a fixed displacement amplitude, so its coarsest pair
      // sits below the asymptotic ratio; start that family one level higher.
      if (fam == MeshFamily::M2 && n == 5) continue;
      const double h1 = generate_mesh(fam, n).h_max();
      const double h2 = generate_mesh(fam, 2 * n).h_max();
      INFO(std::string(family_name(fam)), " n=", n);
      CHECK(h1 / h2 >= 1.8);
      CHECK(h1 / h2 <= 2.2);
    }
  }
}

TEST_CASE("m4 octagon tiling at base resolution") {
  const Mesh mesh = generate_mesh(MeshFamily::M4, 5);
  CHECK(mesh.num_cells() == 25);
  double shoelace = 0.0;
  for (std::size_t c = 0; c < mesh.num_cells(); ++c)
    shoelace += signed_area(mesh.cell_polygon(c));
  CHECK(shoelace == doctest::Approx(1.0).epsilon(1e-10));
  // Interior cells are the non-convex octagons.
  std::size_t octagons = 0;
  for (const Cell& c : mesh.cells()) octagons += (c.num_vertices() == 8);
  CHECK(octagons == 9);  // (n-2)^2 interior cells
}

TEST_CASE("m2 remap fixes the grid center") {
  const Point2 p = m2_remap({0.5, 0.5});
  CHECK(p.x == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(p.y == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("generate rejects tiny resolutions") {
  CHECK_THROWS_AS(generate_mesh(MeshFamily::M1, 1), MeshError);
  CHECK_THROWS_AS(generate_mesh(MeshFamily::M3, 0), MeshError);
}

TEST_CASE("quality report") {
  SUBCASE("unit square cell") {
    const Mesh mesh = Mesh::from_data({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {{0, 1, 2, 3}});
    const QualityReport rep = validate_mesh(mesh, 0.1);
    CHECK(rep.min_edge_ratio == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(rep.max_vertices_per_cell == 4);
    CHECK(rep.all_star_shaped());
  }
  SUBCASE("regular hexagons are star shaped") {
    const Mesh mesh = generate_mesh(MeshFamily::M1, 5);
    const QualityReport rep = validate_mesh(mesh, 0.1);
    CHECK(rep.all_star_shaped());
    CHECK(rep.min_edge_ratio > 0.05);
  }
  SUBCASE("zero-length edge flags a zero ratio") {
    const Mesh mesh = Mesh::from_data({{0, 0}, {1, 0}, {1, 0}, {1, 1}, {0, 1}},
                                      {{0, 1, 2, 3, 4}}, /*strict=*/false);
    const QualityReport rep = validate_mesh(mesh, 0.1);
    CHECK(rep.min_edge_ratio == 0.0);
  }
}

TEST_CASE("mesh io round trip") {
  const std::string path = temp_path("roundtrip.mesh");
  const Mesh mesh = generate_mesh(MeshFamily::M1, 5);
  write_mesh(mesh, path);
  const Mesh back = read_mesh(path);
  REQUIRE(back.num_vertices() == mesh.num_vertices());
  REQUIRE(back.num_cells() == mesh.num_cells());
  REQUIRE(back.num_edges() == mesh.num_edges());
  for (std::size_t v = 0; v < mesh.num_vertices(); ++v) {
    CHECK(back.vertices()[v].x == mesh.vertices()[v].x);  // full-precision round trip
    CHECK(back.vertices()[v].y == mesh.vertices()[v].y);
  }
  for (std::size_t c = 0; c < mesh.num_cells(); ++c)
    CHECK(back.cells()[c].vertex_ids == mesh.cells()[c].vertex_ids);
  std::remove(path.c_str());
}

TEST_CASE("mesh io rejects malformed files") {
  const std::string path = temp_path("bad.mesh");

  SUBCASE("empty file") {
    std::ofstream(path).close();
    CHECK_THROWS_WITH_AS(read_mesh(path), doctest::Contains("parse error"), MeshError);
  }
  SUBCASE("missing vertex reference names the cell") {
    std::ofstream out(path);
    out << "vem-mesh 1\nvertices 3\n0 0\n1 0\n1 1\ncells 1\n0 1 7\nboundary 0\n";
    out.close();
    CHECK_THROWS_WITH_AS(read_mesh(path), doctest::Contains("cell 0"), MeshError);
  }
  SUBCASE("non-simple polygon is rejected") {
    std::ofstream out(path);
    out << "vem-mesh 1\nvertices 4\n0 0\n1 0\n1 1\n0 1\ncells 1\n0 1 3 2\nboundary 4\n"
        << "0 1\n1 3\n3 2\n2 0\n";
    out.close();
    CHECK_THROWS_AS(read_mesh(path), MeshError);
  }
  SUBCASE("bad header") {
    std::ofstream out(path);
    out << "not-a-mesh\n";
    out.close();
    CHECK_THROWS_WITH_AS(read_mesh(path), doctest::Contains("line 1"), MeshError);
  }
  SUBCASE("clockwise cell is rejected") {
    std::ofstream out(path);
    out << "vem-mesh 1\nvertices 4\n0 0\n1 0\n1 1\n0 1\ncells 1\n0 3 2 1\nboundary 4\n"
        << "0 1\n1 2\n2 3\n3 0\n";
    out.close();
    CHECK_THROWS_WITH_AS(read_mesh(path), doctest::Contains("counterclockwise"), MeshError);
  }
  SUBCASE("boundary section must match the derived boundary") {
    std::ofstream out(path);
    out << "vem-mesh 1\nvertices 4\n0 0\n1 0\n1 1\n0 1\ncells 1\n0 1 2 3\nboundary 3\n"
        << "0 1\n1 2\n2 3\n";
    out.close();
    CHECK_THROWS_WITH_AS(read_mesh(path), doctest::Contains("boundary"), MeshError);
  }
  std::remove(path.c_str());
}

TEST_CASE("cell lookup") {
  const Mesh mesh = generate_mesh(MeshFamily::M2, 5);
  for (const Point2 p : {Point2{0.31, 0.47}, Point2{0.05, 0.95}, Point2{0.99, 0.01}}) {
    const std::size_t c = mesh.locate(p);
    CHECK(point_in_polygon(mesh.cell_polygon(c), p, 1e-9));
  }
}
