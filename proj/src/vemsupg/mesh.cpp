#include "vemsupg/mesh.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace vemsupg {

const char* family_name(MeshFamily f) {
  switch (f) {
    case MeshFamily::M1: return "m1";
    case MeshFamily::M2: return "m2";
    case MeshFamily::M3: return "m3";
    case MeshFamily::M4: return "m4";
    default: return "custom";
  }
}

MeshFamily family_from_name(const std::string& name) {
  std::string s;
  for (char c : name) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s == "m1") return MeshFamily::M1;
  if (s == "m2") return MeshFamily::M2;
  if (s == "m3") return MeshFamily::M3;
  if (s == "m4") return MeshFamily::M4;
  throw MeshError("unknown mesh family '" + name + "' (expected m1, m2, m3 or m4)");
}

bool QualityReport::all_star_shaped() const {
  for (bool ok : star_shaped_ok)
    if (!ok) return false;
  return true;
}

Mesh Mesh::from_data(std::vector<Point2> vertices, std::vector<std::vector<std::size_t>> cells,
                     bool strict, MeshFamily family, int resolution) {
  Mesh mesh;
  mesh.vertices_ = std::move(vertices);
  mesh.family_ = family;
  mesh.resolution_ = resolution;
  mesh.cells_.reserve(cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c) {
    Cell cell;
    cell.vertex_ids = std::move(cells[c]);
    if (cell.vertex_ids.size() < 3)
      throw MeshError("cell " + std::to_string(c) + " has fewer than 3 vertices");
    for (std::size_t v : cell.vertex_ids)
      if (v >= mesh.vertices_.size())
        throw MeshError("cell " + std::to_string(c) + " references missing vertex " +
                        std::to_string(v));
    mesh.cells_.push_back(std::move(cell));
  }
  mesh.build_topology(strict);
  return mesh;
}

void Mesh::build_topology(bool strict) {
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    Cell& cell = cells_[c];
    Polygon poly;
    poly.reserve(cell.vertex_ids.size());
    for (std::size_t v : cell.vertex_ids) poly.push_back(vertices_[v]);
    const double a = signed_area(poly);
    if (strict) {
      if (a <= 0)
        throw MeshError("cell " + std::to_string(c) + " is not counterclockwise");
      if (!polygon_is_simple(poly))
        throw MeshError("cell " + std::to_string(c) + " is not a simple polygon");
    }
    cell.area = a;
    cell.centroid = polygon_centroid(poly);
    cell.diameter = polygon_diameter(poly);
  }

  edges_.clear();
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_of;
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    Cell& cell = cells_[c];
    const std::size_t nv = cell.vertex_ids.size();
    cell.edge_ids.assign(nv, 0);
    for (std::size_t i = 0; i < nv; ++i) {
      const std::size_t a = cell.vertex_ids[i];
      const std::size_t b = cell.vertex_ids[(i + 1) % nv];
      const auto key = std::minmax(a, b);
      auto it = edge_of.find(key);
      if (it == edge_of.end()) {
        Edge e;
        e.v0 = a;
        e.v1 = b;
        const Point2 d = vertices_[b] - vertices_[a];
        e.length = d.norm();
        e.normal = (e.length > 0) ? Point2{d.y / e.length, -d.x / e.length} : Point2{0, 0};
        e.midpoint = (vertices_[a] + vertices_[b]) * 0.5;
        e.cells[0] = c;
        edges_.push_back(e);
        it = edge_of.emplace(key, edges_.size() - 1).first;
      } else {
        Edge& e = edges_[it->second];
        if (e.cells[1] != Edge::kNoCell)
          throw MeshError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                          ") shared by more than two cells");
        e.cells[1] = c;
      }
      cell.edge_ids[i] = it->second;
    }
  }
}

std::size_t Mesh::num_boundary_edges() const {
  std::size_t n = 0;
  for (const Edge& e : edges_)
    if (e.is_boundary()) ++n;
  return n;
}

Polygon Mesh::cell_polygon(std::size_t c) const {
  Polygon poly;
  poly.reserve(cells_[c].vertex_ids.size());
  for (std::size_t v : cells_[c].vertex_ids) poly.push_back(vertices_[v]);
  return poly;
}

double Mesh::h_max() const {
  double h = 0.0;
  for (const Cell& c : cells_) h = std::max(h, c.diameter);
  return h;
}

double Mesh::total_area() const {
  double a = 0.0;
  for (const Cell& c : cells_) a += c.area;
  return a;
}

std::size_t Mesh::locate(const Point2& p) const {
  // Coarse uniform binning over cell bounding boxes, rebuilt on demand.
  const int nb = std::max(1, static_cast<int>(std::sqrt(static_cast<double>(cells_.size()))));
  double xlo = std::numeric_limits<double>::max(), xhi = -xlo;
  double ylo = xlo, yhi = -xlo;
  for (const Point2& v : vertices_) {
    xlo = std::min(xlo, v.x);
    xhi = std::max(xhi, v.x);
    ylo = std::min(ylo, v.y);
    yhi = std::max(yhi, v.y);
  }
  const double dx = (xhi - xlo) / nb, dy = (yhi - ylo) / nb;
  auto bin_of = [&](const Point2& q) {
    int bx = std::clamp(static_cast<int>((q.x - xlo) / dx), 0, nb - 1);
    int by = std::clamp(static_cast<int>((q.y - ylo) / dy), 0, nb - 1);
    return std::pair<int, int>{bx, by};
  };
  const auto [pbx, pby] = bin_of(p);
  std::size_t nearest = 0;
  double dmin = std::numeric_limits<double>::max();
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    // Quick reject by bin distance of the centroid.
    const auto [cbx, cby] = bin_of(cells_[c].centroid);
    if (std::abs(cbx - pbx) > 2 || std::abs(cby - pby) > 2) continue;
    const Polygon poly = cell_polygon(c);
    if (point_in_polygon(poly, p, 1e-12)) return c;
    const double d = (cells_[c].centroid - p).norm();
    if (d < dmin) {
      dmin = d;
      nearest = c;
    }
  }
  if (dmin == std::numeric_limits<double>::max()) {
    for (std::size_t c = 0; c < cells_.size(); ++c) {
      const double d = (cells_[c].centroid - p).norm();
      if (d < dmin) {
        dmin = d;
        nearest = c;
      }
    }
  }
  return nearest;
}

Point2 m2_remap(const Point2& p) {
  const double s = 0.1 * std::sin(2.0 * M_PI * p.x) * std::sin(2.0 * M_PI * p.y);
  return {p.x + s, p.y + s};
}

namespace {

using CellList = std::vector<std::vector<std::size_t>>;

struct VertexPool {
  std::map<std::pair<long long, long long>, std::size_t> index;
  std::vector<Point2> points;
  std::size_t add(long long kx, long long ky, const Point2& p) {
    auto it = index.find({kx, ky});
    if (it != index.end()) return it->second;
    points.push_back(p);
    index.emplace(std::pair<long long, long long>{kx, ky}, points.size() - 1);
    return points.size() - 1;
  }
};

// --- M1: regular hexagons clipped to the unit square -----------------------
//
// Pointy-top hexagons on the half-index lattice: a vertex with index (m, l)
// sits at (m * W/2, l * Rv/2) where W = 1/n is the column width and Rv the
// vertical circumradius chosen so an integer number of rows spans [0,1].
Mesh generate_m1(int n) {
  const int jmax = std::max(2, static_cast<int>(std::lround(2.0 / std::sqrt(3.0) * n)));
  const long long MX = 2LL * n;       // m index of x = 1
  const long long LY = 3LL * jmax;    // l index of y = 1
  const double w2 = 0.5 / n;
  const double r2 = 1.0 / (3.0 * jmax);

  auto coord = [&](long long m, long long l) -> Point2 {
    const double x = (m == 0) ? 0.0 : (m == MX ? 1.0 : m * w2);
    const double y = (l == 0) ? 0.0 : (l == LY ? 1.0 : l * r2);
    return {x, y};
  };

  VertexPool pool;
  CellList cells;
  for (int j = 0; j <= jmax; ++j) {
    const bool odd = (j % 2) != 0;
    const int i0 = 0;
    const int i1 = odd ? n - 1 : n;
    for (int i = i0; i <= i1; ++i) {
      const long long mx = odd ? 2LL * i + 1 : 2LL * i;
      const long long ly = 3LL * j;
      // CCW hexagon in index space.
      Polygon hex = {{double(mx + 1), double(ly + 1)}, {double(mx), double(ly + 2)},
                     {double(mx - 1), double(ly + 1)}, {double(mx - 1), double(ly - 1)},
                     {double(mx), double(ly - 2)},     {double(mx + 1), double(ly - 1)}};
      Polygon clipped = clip_to_box(hex, 0.0, double(MX), 0.0, double(LY));
      if (clipped.size() < 3) continue;
      std::vector<std::size_t> cell;
      for (const Point2& q : clipped) {
        const long long km = std::llround(q.x);
        const long long kl = std::llround(q.y);
        cell.push_back(pool.add(km, kl, coord(km, kl)));
      }
      cells.push_back(std::move(cell));
    }
  }
  return Mesh::from_data(std::move(pool.points), std::move(cells), true, MeshFamily::M1, n);
}

// --- M2: dual of a remapped, triangulated grid ------------------------------
Mesh generate_m2(int n) {
  const int np = n + 1;
  std::vector<Point2> node(static_cast<std::size_t>(np) * np);
  auto nid = [&](int i, int j) { return static_cast<std::size_t>(j) * np + i; };
  for (int j = 0; j < np; ++j)
    for (int i = 0; i < np; ++i) {
      Point2 p{double(i) / n, double(j) / n};
      if (i > 0 && i < n && j > 0 && j < n) p = m2_remap(p);
      node[nid(i, j)] = p;
    }

  // Two triangles per quad, split along the (i,j)-(i+1,j+1) diagonal.
  struct Tri {
    std::size_t v[3];
    Point2 bary;
  };
  std::vector<Tri> tris;
  tris.reserve(static_cast<std::size_t>(2) * n * n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      const std::size_t a = nid(i, j), b = nid(i + 1, j), c = nid(i + 1, j + 1), d = nid(i, j + 1);
      tris.push_back({{a, b, c}, (node[a] + node[b] + node[c]) * (1.0 / 3.0)});
      tris.push_back({{a, c, d}, (node[a] + node[c] + node[d]) * (1.0 / 3.0)});
    }

  std::vector<std::vector<std::size_t>> tris_of_node(node.size());
  for (std::size_t t = 0; t < tris.size(); ++t)
    for (std::size_t k = 0; k < 3; ++k) tris_of_node[tris[t].v[k]].push_back(t);

  // Dual vertices: triangle barycenters, boundary-edge midpoints, boundary nodes.
  std::vector<Point2> dv;
  std::vector<std::size_t> bary_id(tris.size());
  for (std::size_t t = 0; t < tris.size(); ++t) {
    bary_id[t] = dv.size();
    dv.push_back(tris[t].bary);
  }
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> mid_id;
  auto midpoint_id = [&](std::size_t a, std::size_t b) {
    const auto key = std::minmax(a, b);
    auto it = mid_id.find(key);
    if (it != mid_id.end()) return it->second;
    dv.push_back((node[a] + node[b]) * 0.5);
    mid_id.emplace(key, dv.size() - 1);
    return dv.size() - 1;
  };
  std::vector<std::size_t> corner_id(node.size(), std::size_t(-1));
  auto node_dual_id = [&](std::size_t v) {
    if (corner_id[v] == std::size_t(-1)) {
      dv.push_back(node[v]);
      corner_id[v] = dv.size() - 1;
    }
    return corner_id[v];
  };

  CellList cells(node.size());
  for (int j = 0; j < np; ++j)
    for (int i = 0; i < np; ++i) {
      const std::size_t v = nid(i, j);
      const Point2 pv = node[v];
      const bool boundary = (i == 0 || i == n || j == 0 || j == n);
      std::vector<std::size_t> pts;
      for (std::size_t t : tris_of_node[v]) pts.push_back(bary_id[t]);
      if (boundary) {
        if (i > 0 && (j == 0 || j == n)) pts.push_back(midpoint_id(v, nid(i - 1, j)));
        if (i < n && (j == 0 || j == n)) pts.push_back(midpoint_id(v, nid(i + 1, j)));
        if (j > 0 && (i == 0 || i == n)) pts.push_back(midpoint_id(v, nid(i, j - 1)));
        if (j < n && (i == 0 || i == n)) pts.push_back(midpoint_id(v, nid(i, j + 1)));
      }
      std::vector<std::pair<double, std::size_t>> ang;
      ang.reserve(pts.size());
      for (std::size_t id : pts) ang.emplace_back(std::atan2(dv[id].y - pv.y, dv[id].x - pv.x), id);
      std::sort(ang.begin(), ang.end());
      std::vector<std::size_t> cell;
      if (boundary) {
        // Rotate the angular order to start after the widest gap, then close
        // the cell through the node itself.
        std::size_t gap = 0;
        double wmax = -1.0;
        for (std::size_t k = 0; k < ang.size(); ++k) {
          const double a0 = ang[k].first;
          const double a1 = (k + 1 < ang.size()) ? ang[k + 1].first : ang[0].first + 2.0 * M_PI;
          if (a1 - a0 > wmax) {
            wmax = a1 - a0;
            gap = k + 1;
          }
        }
        for (std::size_t k = 0; k < ang.size(); ++k) cell.push_back(ang[(gap + k) % ang.size()].second);
        cell.push_back(node_dual_id(v));
      } else {
        for (auto& a : ang) cell.push_back(a.second);
      }
      cells[v] = std::move(cell);
    }
  return Mesh::from_data(std::move(dv), std::move(cells), true, MeshFamily::M2, n);
}

// --- M3: deterministically jittered and sheared quadrilaterals --------------
//
// Stand-in for an external benchmark suite of highly skewed quads: interior
// nodes of a uniform grid get a hash-seeded jitter, a row-alternating shear
// and a sinusoidal drift. Boundary nodes stay fixed.
double hash01(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  x = x ^ (x >> 31);
  return static_cast<double>(x >> 11) * (1.0 / 9007199254740992.0);
}

Mesh generate_m3(int n) {
  const int np = n + 1;
  const double w = 1.0 / n;
  std::vector<Point2> node(static_cast<std::size_t>(np) * np);
  auto nid = [&](int i, int j) { return static_cast<std::size_t>(j) * np + i; };
  for (int j = 0; j < np; ++j)
    for (int i = 0; i < np; ++i) {
      Point2 p{double(i) / n, double(j) / n};
      if (i > 0 && i < n && j > 0 && j < n) {
        const std::uint64_t key =
            (static_cast<std::uint64_t>(i) << 32) ^ static_cast<std::uint64_t>(j);
        const double u1 = hash01(key), u2 = hash01(key ^ 0x5bf03635ULL);
        p.x += w * (0.20 * (u1 - 0.5) + (j % 2 ? 0.11 : -0.11) + 0.06 * std::sin(2.0 * M_PI * p.y));
        p.y += w * (0.20 * (u2 - 0.5) + 0.06 * std::sin(3.0 * M_PI * p.x));
      }
      node[nid(i, j)] = p;
    }
  CellList cells;
  cells.reserve(static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      cells.push_back({nid(i, j), nid(i + 1, j), nid(i + 1, j + 1), nid(i, j + 1)});
  return Mesh::from_data(std::move(node), std::move(cells), true, MeshFamily::M3, n);
}

// --- M4: interlocking non-convex octagons -----------------------------------
//
// Each lattice cell is a square with its top and right sides dented inward by
// d = w/5 at the midpoint and its bottom and left sides poking outward by the
// same amount, so dents and pokes interlock. Pokes and dents are dropped on
// the domain boundary. All vertices live on the w/10 lattice.
Mesh generate_m4(int n) {
  const long long S = 10;  // subdivisions of one cell width
  const long long D = 2;   // dent depth in lattice units (= 0.2 w)
  const double unit = 1.0 / (static_cast<double>(S) * n);
  const long long MAXK = S * n;

  auto coord = [&](long long kx, long long ky) -> Point2 {
    const double x = (kx == 0) ? 0.0 : (kx == MAXK ? 1.0 : kx * unit);
    const double y = (ky == 0) ? 0.0 : (ky == MAXK ? 1.0 : ky * unit);
    return {x, y};
  };

  VertexPool pool;
  CellList cells;
  auto add = [&](std::vector<std::size_t>& cell, long long kx, long long ky) {
    cell.push_back(pool.add(kx, ky, coord(kx, ky)));
  };
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      const long long x0 = S * i, y0 = S * j, x1 = S * (i + 1), y1 = S * (j + 1);
      std::vector<std::size_t> cell;
      add(cell, x0, y0);
      if (j > 0) add(cell, x0 + S / 2, y0 - D);  // bottom poke
      add(cell, x1, y0);
      if (i < n - 1) add(cell, x1 - D, y0 + S / 2);  // right dent
      add(cell, x1, y1);
      if (j < n - 1) add(cell, x0 + S / 2, y1 - D);  // top dent
      add(cell, x0, y1);
      if (i > 0) add(cell, x0 - D, y0 + S / 2);  // left poke
      cells.push_back(std::move(cell));
    }
  return Mesh::from_data(std::move(pool.points), std::move(cells), true, MeshFamily::M4, n);
}

}  // namespace

Mesh generate_mesh(MeshFamily family, int n) {
  if (n < 2) throw MeshError("mesh resolution must be at least 2, got " + std::to_string(n));
  switch (family) {
    case MeshFamily::M1: return generate_m1(n);
    case MeshFamily::M2: return generate_m2(n);
    case MeshFamily::M3: return generate_m3(n);
    case MeshFamily::M4: return generate_m4(n);
    default: throw MeshError("cannot generate a custom-family mesh");
  }
}

QualityReport validate_mesh(const Mesh& mesh, double rho) {
  QualityReport rep;
  rep.min_edge_ratio = std::numeric_limits<double>::max();
  rep.star_shaped_ok.resize(mesh.num_cells(), false);
  for (std::size_t c = 0; c < mesh.num_cells(); ++c) {
    const Cell& cell = mesh.cells()[c];
    rep.max_vertices_per_cell = std::max(rep.max_vertices_per_cell, cell.num_vertices());
    double hmin = std::numeric_limits<double>::max();
    for (std::size_t e : cell.edge_ids) hmin = std::min(hmin, mesh.edges()[e].length);
    const double ratio = (cell.diameter > 0) ? hmin / cell.diameter : 0.0;
    rep.min_edge_ratio = std::min(rep.min_edge_ratio, ratio);
    const double r = kernel_disk_radius(mesh.cell_polygon(c));
    rep.star_shaped_ok[c] = (r >= rho * cell.diameter);
  }
  if (mesh.num_cells() == 0) rep.min_edge_ratio = 0.0;
  return rep;
}

// --- mesh file io ------------------------------------------------------------

namespace {

struct LineReader {
  std::istream& in;
  int lineno = 0;
  bool next(std::string& line) {
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw MeshError("mesh parse error at line " + std::to_string(lineno) + ": " + msg);
  }
};

}  // namespace

Mesh read_mesh(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MeshError("cannot open mesh file '" + path + "'");
  LineReader rd{in};
  std::string line;

  if (!rd.next(line)) throw MeshError("mesh parse error: empty file '" + path + "'");
  if (line != "vem-mesh 1") rd.fail("expected header 'vem-mesh 1'");

  auto expect_count = [&](const char* tag) -> std::size_t {
    if (!rd.next(line)) rd.fail(std::string("expected '") + tag + " N'");
    std::istringstream ss(line);
    std::string word;
    long long count = -1;
    if (!(ss >> word >> count) || word != tag || count < 0)
      rd.fail(std::string("expected '") + tag + " N'");
    return static_cast<std::size_t>(count);
  };

  const std::size_t nv = expect_count("vertices");
  std::vector<Point2> verts(nv);
  for (std::size_t i = 0; i < nv; ++i) {
    if (!rd.next(line)) rd.fail("unexpected end of file in vertex list");
    std::istringstream ss(line);
    if (!(ss >> verts[i].x >> verts[i].y)) rd.fail("bad vertex line");
    if (!std::isfinite(verts[i].x) || !std::isfinite(verts[i].y)) rd.fail("non-finite vertex");
  }

  const std::size_t nc = expect_count("cells");
  std::vector<std::vector<std::size_t>> cells(nc);
  for (std::size_t i = 0; i < nc; ++i) {
    if (!rd.next(line)) rd.fail("unexpected end of file in cell list");
    std::istringstream ss(line);
    long long v;
    while (ss >> v) {
      if (v < 0 || static_cast<std::size_t>(v) >= nv)
        throw MeshError("cell " + std::to_string(i) + " references missing vertex " +
                        std::to_string(v));
      cells[i].push_back(static_cast<std::size_t>(v));
    }
    if (cells[i].size() < 3) rd.fail("cell " + std::to_string(i) + " has fewer than 3 vertices");
  }

  const std::size_t nb = expect_count("boundary");
  std::vector<std::pair<std::size_t, std::size_t>> bnd(nb);
  for (std::size_t i = 0; i < nb; ++i) {
    if (!rd.next(line)) rd.fail("unexpected end of file in boundary list");
    std::istringstream ss(line);
    long long a, b;
    if (!(ss >> a >> b)) rd.fail("bad boundary edge line");
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= nv || static_cast<std::size_t>(b) >= nv)
      rd.fail("boundary edge references missing vertex");
    bnd[i] = std::minmax(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
  }

  Mesh mesh = Mesh::from_data(std::move(verts), std::move(cells), true);
  std::size_t nbd = 0;
  std::map<std::pair<std::size_t, std::size_t>, bool> listed;
  for (auto& p : bnd) listed[p] = true;
  for (const Edge& e : mesh.edges()) {
    if (!e.is_boundary()) continue;
    ++nbd;
    if (!listed.count(std::minmax(e.v0, e.v1)))
      throw MeshError("boundary edge (" + std::to_string(e.v0) + "," + std::to_string(e.v1) +
                      ") missing from boundary section");
  }
  if (nbd != nb)
    throw MeshError("boundary section lists " + std::to_string(nb) + " edges, mesh has " +
                    std::to_string(nbd));
  return mesh;
}

void write_mesh(const Mesh& mesh, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw MeshError("cannot open '" + path + "' for writing");
  char buf[80];
  out << "vem-mesh 1\n";
  out << "vertices " << mesh.num_vertices() << "\n";
  for (const Point2& p : mesh.vertices()) {
    std::snprintf(buf, sizeof(buf), "%.17g %.17g\n", p.x, p.y);
    out << buf;
  }
  out << "cells " << mesh.num_cells() << "\n";
  for (const Cell& c : mesh.cells()) {
    for (std::size_t i = 0; i < c.vertex_ids.size(); ++i)
      out << (i ? " " : "") << c.vertex_ids[i];
    out << "\n";
  }
  std::vector<const Edge*> bnd;
  for (const Edge& e : mesh.edges())
    if (e.is_boundary()) bnd.push_back(&e);
  out << "boundary " << bnd.size() << "\n";
  for (const Edge* e : bnd) out << e->v0 << " " << e->v1 << "\n";
  if (!out) throw MeshError("failed writing mesh to '" + path + "'");
}

}  // namespace vemsupg
