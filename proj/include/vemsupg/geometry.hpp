#ifndef VEMSUPG_GEOMETRY_HPP
#define VEMSUPG_GEOMETRY_HPP

#include <array>
#include <cstddef>
#include <vector>

namespace vemsupg {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  Point2() = default;
  Point2(double px, double py) : x(px), y(py) {}

  Point2 operator+(const Point2& o) const { return {x + o.x, y + o.y}; }
  Point2 operator-(const Point2& o) const { return {x - o.x, y - o.y}; }
  Point2 operator*(double s) const { return {x * s, y * s}; }
  double dot(const Point2& o) const { return x * o.x + y * o.y; }
  double cross(const Point2& o) const { return x * o.y - y * o.x; }
  double norm() const;
};

using Polygon = std::vector<Point2>;

/// Signed area by the shoelace formula; positive for counterclockwise polygons.
double signed_area(const Polygon& poly);

/// Area centroid of a simple polygon.
Point2 polygon_centroid(const Polygon& poly);

/// Maximum pairwise vertex distance.
double polygon_diameter(const Polygon& poly);

/// True if no two non-adjacent edges intersect and no edge degenerates to a point.
bool polygon_is_simple(const Polygon& poly, double tol = 1e-12);

/// Crossing-number test; points within tol of the boundary count as inside.
bool point_in_polygon(const Polygon& poly, const Point2& p, double tol = 1e-12);

/// Clip a convex polygon against the axis-aligned box [xlo,xhi]x[ylo,yhi]
/// (Sutherland-Hodgman). Returns an empty polygon if nothing remains.
Polygon clip_to_box(const Polygon& poly, double xlo, double xhi, double ylo, double yhi);

/// Remove consecutive duplicate vertices (within tol) from a polygon.
Polygon dedup_vertices(const Polygon& poly, double tol = 1e-12);

/// Triangulate a simple polygon by ear clipping. Triangles are index triples
/// into the input vertex list, all counterclockwise.
std::vector<std::array<std::size_t, 3>> ear_clip(const Polygon& poly);

/// Radius of the largest disk contained in the kernel of a simple polygon
/// (the intersection of the inward half-planes of its edges). Negative when
/// the kernel is empty. The polygon must be counterclockwise.
double kernel_disk_radius(const Polygon& poly);

}  // namespace vemsupg

#endif
