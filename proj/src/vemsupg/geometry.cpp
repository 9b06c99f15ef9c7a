#include "vemsupg/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace vemsupg {

double Point2::norm() const { return std::hypot(x, y); }

double signed_area(const Polygon& poly) {
  const std::size_t n = poly.size();
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = poly[i];
    const Point2& b = poly[(i + 1) % n];
    acc += a.x * b.y - b.x * a.y;
  }
  return 0.5 * acc;
}

Point2 polygon_centroid(const Polygon& poly) {
  const std::size_t n = poly.size();
  double a = 0.0, cx = 0.0, cy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& p = poly[i];
    const Point2& q = poly[(i + 1) % n];
    const double w = p.x * q.y - q.x * p.y;
    a += w;
    cx += (p.x + q.x) * w;
    cy += (p.y + q.y) * w;
  }
  a *= 0.5;
  if (std::abs(a) < std::numeric_limits<double>::min()) {
    // Degenerate polygon: fall back to the vertex average.
    Point2 m;
    for (const Point2& p : poly) m = m + p;
    return m * (1.0 / static_cast<double>(poly.size()));
  }
  return {cx / (6.0 * a), cy / (6.0 * a)};
}

double polygon_diameter(const Polygon& poly) {
  double d = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i)
    for (std::size_t j = i + 1; j < poly.size(); ++j)
      d = std::max(d, (poly[i] - poly[j]).norm());
  return d;
}

namespace {

// Proper or touching intersection of open segments, endpoints excluded on the
// shared-vertex side by the caller.
bool segments_intersect(const Point2& a, const Point2& b, const Point2& c, const Point2& d,
                        double tol) {
  const Point2 ab = b - a;
  const Point2 cd = d - c;
  const double denom = ab.cross(cd);
  const Point2 ac = c - a;
  if (std::abs(denom) < tol) {
    // Parallel: overlap only if collinear and ranges intersect.
    if (std::abs(ab.cross(ac)) > tol) return false;
    const double la = ab.dot(ab);
    double t0 = ab.dot(ac) / la;
    double t1 = ab.dot(d - a) / la;
    if (t0 > t1) std::swap(t0, t1);
    return t1 > tol && t0 < 1.0 - tol;
  }
  const double t = ac.cross(cd) / denom;
  const double s = ac.cross(ab) / denom;
  return t > tol && t < 1.0 - tol && s > tol && s < 1.0 - tol;
}

}  // namespace

bool polygon_is_simple(const Polygon& poly, double tol) {
  const std::size_t n = poly.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if ((poly[(i + 1) % n] - poly[i]).norm() <= tol) return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) continue;
      if (segments_intersect(poly[i], poly[(i + 1) % n], poly[j], poly[(j + 1) % n], tol))
        return false;
    }
  }
  return true;
}

bool point_in_polygon(const Polygon& poly, const Point2& p, double tol) {
  const std::size_t n = poly.size();
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point2& a = poly[j];
    const Point2& b = poly[i];
    // On-edge check.
    const Point2 ab = b - a;
    const double len2 = ab.dot(ab);
    if (len2 > 0) {
      const double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
      const Point2 proj = a + ab * t;
      if ((p - proj).norm() <= tol) return true;
    }
    if ((b.y > p.y) != (a.y > p.y)) {
      const double xint = b.x + (p.y - b.y) * (a.x - b.x) / (a.y - b.y);
      if (p.x < xint) inside = !inside;
    }
  }
  return inside;
}

Polygon clip_to_box(const Polygon& poly, double xlo, double xhi, double ylo, double yhi) {
  // Each clip plane is (n, d) with the kept side n.p <= d.
  struct Plane {
    double nx, ny, d;
  };
  const Plane planes[4] = {{-1, 0, -xlo}, {1, 0, xhi}, {0, -1, -ylo}, {0, 1, yhi}};
  Polygon in = poly;
  for (const Plane& pl : planes) {
    Polygon out;
    const std::size_t n = in.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point2& cur = in[i];
      const Point2& nxt = in[(i + 1) % n];
      const double dc = pl.nx * cur.x + pl.ny * cur.y - pl.d;
      const double dn = pl.nx * nxt.x + pl.ny * nxt.y - pl.d;
      const bool cin = dc <= 0.0;
      const bool nin = dn <= 0.0;
      if (cin) out.push_back(cur);
      if (cin != nin) {
        const double t = dc / (dc - dn);
        out.push_back(cur + (nxt - cur) * t);
      }
    }
    in = std::move(out);
    if (in.size() < 3) return {};
  }
  return dedup_vertices(in, 1e-13);
}

Polygon dedup_vertices(const Polygon& poly, double tol) {
  Polygon out;
  for (const Point2& p : poly) {
    if (out.empty() || (p - out.back()).norm() > tol) out.push_back(p);
  }
  while (out.size() > 1 && (out.front() - out.back()).norm() <= tol) out.pop_back();
  return out;
}

std::vector<std::array<std::size_t, 3>> ear_clip(const Polygon& poly) {
  const std::size_t n = poly.size();
  if (n < 3) throw std::runtime_error("ear_clip: polygon with fewer than 3 vertices");
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;

  auto tri_area2 = [&](std::size_t a, std::size_t b, std::size_t c) {
    return (poly[b] - poly[a]).cross(poly[c] - poly[a]);
  };
  auto inside_tri = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t p) {
    const double s1 = (poly[b] - poly[a]).cross(poly[p] - poly[a]);
    const double s2 = (poly[c] - poly[b]).cross(poly[p] - poly[b]);
    const double s3 = (poly[a] - poly[c]).cross(poly[p] - poly[c]);
    return s1 > 0 && s2 > 0 && s3 > 0;
  };

  std::vector<std::array<std::size_t, 3>> tris;
  std::size_t guard = 0;
  while (idx.size() > 3) {
    const std::size_t m = idx.size();
    bool clipped = false;
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t ia = idx[(i + m - 1) % m];
      const std::size_t ib = idx[i];
      const std::size_t ic = idx[(i + 1) % m];
      if (tri_area2(ia, ib, ic) <= 0) continue;  // reflex or degenerate corner
      bool ear = true;
      for (std::size_t j = 0; j < m; ++j) {
        const std::size_t ip = idx[j];
        if (ip == ia || ip == ib || ip == ic) continue;
        if (inside_tri(ia, ib, ic, ip)) {
          ear = false;
          break;
        }
      }
      if (!ear) continue;
      tris.push_back({ia, ib, ic});
      idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(i));
      clipped = true;
      break;
    }
    if (!clipped) {
      // Collinear chains can stall the strict test; drop the flattest corner.
      std::size_t best = 0;
      double amin = std::numeric_limits<double>::max();
      for (std::size_t i = 0; i < idx.size(); ++i) {
        const std::size_t m2 = idx.size();
        const double a = std::abs(tri_area2(idx[(i + m2 - 1) % m2], idx[i], idx[(i + 1) % m2]));
        if (a < amin) {
          amin = a;
          best = i;
        }
      }
      idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(best));
    }
    if (++guard > 4 * n * n) throw std::runtime_error("ear_clip: failed to triangulate polygon");
  }
  if (tri_area2(idx[0], idx[1], idx[2]) > 0) tris.push_back({idx[0], idx[1], idx[2]});
  return tris;
}

double kernel_disk_radius(const Polygon& poly) {
  // Chebyshev center of the kernel: maximize r subject to
  //   n_i . c + r <= n_i . p_i   for every edge (n_i outward unit normal).
  // Three variables; enumerate active-constraint triples.
  const std::size_t n = poly.size();
  struct Row {
    double a, b, d;  // a*cx + b*cy + r <= d
  };
  std::vector<Row> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& p = poly[i];
    const Point2& q = poly[(i + 1) % n];
    const Point2 t = q - p;
    const double len = t.norm();
    if (len <= 0) return 0.0;
    const Point2 nrm{t.y / len, -t.x / len};  // outward for CCW
    rows.push_back({nrm.x, nrm.y, nrm.x * p.x + nrm.y * p.y});
  }

  auto feasible = [&](double cx, double cy, double r) {
    for (const Row& rw : rows)
      if (rw.a * cx + rw.b * cy + r > rw.d + 1e-12) return false;
    return true;
  };

  double best = -std::numeric_limits<double>::max();
  // Centroid witness: lower bound even when the triple enumeration degenerates.
  const Point2 c0 = polygon_centroid(poly);
  double r0 = std::numeric_limits<double>::max();
  for (const Row& rw : rows) r0 = std::min(r0, rw.d - rw.a * c0.x - rw.b * c0.y);
  best = std::max(best, r0);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Row& A = rows[i];
        const Row& B = rows[j];
        const Row& C = rows[k];
        // Solve the 3x3 system with all three constraints active.
        const double m[3][4] = {{A.a, A.b, 1, A.d}, {B.a, B.b, 1, B.d}, {C.a, C.b, 1, C.d}};
        double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                     m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                     m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        if (std::abs(det) < 1e-14) continue;
        auto det3 = [&](int col) {
          double mm[3][3];
          for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) mm[r][c] = (c == col) ? m[r][3] : m[r][c];
          return mm[0][0] * (mm[1][1] * mm[2][2] - mm[1][2] * mm[2][1]) -
                 mm[0][1] * (mm[1][0] * mm[2][2] - mm[1][2] * mm[2][0]) +
                 mm[0][2] * (mm[1][0] * mm[2][1] - mm[1][1] * mm[2][0]);
        };
        const double cx = det3(0) / det;
        const double cy = det3(1) / det;
        const double r = det3(2) / det;
        if (r > best && feasible(cx, cy, r)) best = r;
      }
  return best;
}

}  // namespace vemsupg
