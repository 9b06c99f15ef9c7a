#ifndef VEMSUPG_MESH_HPP
#define VEMSUPG_MESH_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "vemsupg/geometry.hpp"

namespace vemsupg {

struct Cell {
  std::vector<std::size_t> vertex_ids;  // counterclockwise
  std::vector<std::size_t> edge_ids;    // edge_ids[i] joins vertex i and i+1
  double area = 0.0;
  Point2 centroid;
  double diameter = 0.0;
  std::size_t num_vertices() const { return vertex_ids.size(); }
};

struct Edge {
  std::size_t v0 = 0;  // canonical orientation: v0 -> v1 as traversed by cell(0)
  std::size_t v1 = 0;
  double length = 0.0;
  Point2 normal;    // unit, points out of cell(0)
  Point2 midpoint;
  std::size_t cells[2] = {kNoCell, kNoCell};
  bool is_boundary() const { return cells[1] == kNoCell; }
  static constexpr std::size_t kNoCell = static_cast<std::size_t>(-1);
};

enum class MeshFamily { M1, M2, M3, M4, Custom };

const char* family_name(MeshFamily f);
MeshFamily family_from_name(const std::string& name);  // accepts m1/M1/...

struct QualityReport {
  double min_edge_ratio = 0.0;             // min over cells of (min_e h_e / h_E)
  std::vector<bool> star_shaped_ok;        // per cell, kernel holds a disk of radius rho*h_E
  std::size_t max_vertices_per_cell = 0;
  bool all_star_shaped() const;
};

class Mesh {
 public:
  /// Build a mesh from raw vertices and cell->vertex lists. With strict=true,
  /// rejects non-simple or non-counterclockwise cells.
  static Mesh from_data(std::vector<Point2> vertices,
                        std::vector<std::vector<std::size_t>> cells, bool strict = true,
                        MeshFamily family = MeshFamily::Custom, int resolution = 0);

  const std::vector<Point2>& vertices() const { return vertices_; }
  const std::vector<Cell>& cells() const { return cells_; }
  const std::vector<Edge>& edges() const { return edges_; }
  MeshFamily family() const { return family_; }
  int resolution() const { return resolution_; }

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_cells() const { return cells_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  std::size_t num_boundary_edges() const;

  Polygon cell_polygon(std::size_t c) const;
  double h_max() const;
  double total_area() const;

  /// Index of the cell containing p (grid-accelerated); nearest centroid as a
  /// fallback for points marginally outside all cells.
  std::size_t locate(const Point2& p) const;

 private:
  std::vector<Point2> vertices_;
  std::vector<Cell> cells_;
  std::vector<Edge> edges_;
  MeshFamily family_ = MeshFamily::Custom;
  int resolution_ = 0;

  void build_topology(bool strict);
};

/// Generate one of the four built-in families on (0,1)^2 at resolution n
/// (number of partitions per direction, n >= 2).
Mesh generate_mesh(MeshFamily family, int n);

/// Regularity report: per-cell edge-length ratio and a star-shapedness test
/// (largest disk in the kernel of each cell vs rho*h_E). Never mutates.
QualityReport validate_mesh(const Mesh& mesh, double rho);

/// Node remap used by the M2 family: x -> x + (1/10) sin(2 pi x) sin(2 pi y)
/// in both coordinates.
Point2 m2_remap(const Point2& p);

/// Text format round-trip (see README for the schema).
Mesh read_mesh(const std::string& path);
void write_mesh(const Mesh& mesh, const std::string& path);

struct MeshError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace vemsupg

#endif
