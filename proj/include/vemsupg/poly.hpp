#ifndef VEMSUPG_POLY_HPP
#define VEMSUPG_POLY_HPP

#include <cstddef>
#include <vector>

#include "vemsupg/geometry.hpp"

namespace vemsupg {

struct MultiIndex {
  int a1 = 0;
  int a2 = 0;
  int order() const { return a1 + a2; }
};

/// dim P_k in two dimensions, (k+1)(k+2)/2.
inline std::size_t poly_space_dim(int k) {
  return static_cast<std::size_t>((k + 1) * (k + 2) / 2);
}

/// Graded lexicographic list of multi-indices of total order <= k:
/// (0,0); (1,0),(0,1); (2,0),(1,1),(0,2); ...
/// This ordering is fixed library-wide.
std::vector<MultiIndex> monomial_exponents(int k);

/// Position of (a1,a2) in the graded lexicographic ordering.
std::size_t monomial_position(int a1, int a2);

/// Scaled monomials m_a(x) = ((x-xc)/h)^a1 * ((y-yc)/h)^a2 on a cell.
class MonomialBasis {
 public:
  MonomialBasis(int degree, Point2 center, double scale);

  int degree() const { return degree_; }
  std::size_t size() const { return exps_.size(); }
  const std::vector<MultiIndex>& exponents() const { return exps_; }
  Point2 center() const { return center_; }
  double scale() const { return scale_; }

  std::vector<double> eval(const Point2& p) const;
  std::vector<Point2> grad(const Point2& p) const;
  std::vector<double> laplacian(const Point2& p) const;

  /// Exact expansion of d(m_a)/dx_comp (comp 0 or 1) in this basis; the
  /// derivative of a scaled monomial is a scaled monomial one grade lower.
  std::vector<std::pair<std::size_t, double>> derivative_expansion(std::size_t a, int comp) const;

 private:
  int degree_;
  Point2 center_;
  double scale_;
  std::vector<MultiIndex> exps_;
};

/// Scaled monomials on an edge, m_a(s) = ((s - s_mid)/h_e)^a with s the signed
/// coordinate along the edge through its midpoint.
class EdgeBasis {
 public:
  EdgeBasis(int degree, Point2 v0, Point2 v1);

  int degree() const { return degree_; }
  std::size_t size() const { return static_cast<std::size_t>(degree_) + 1; }
  double length() const { return length_; }
  Point2 midpoint() const { return mid_; }
  Point2 tangent() const { return tangent_; }

  /// Signed edge coordinate of a point (projection onto the tangent).
  double coordinate(const Point2& p) const { return (p - mid_).dot(tangent_); }
  std::vector<double> eval(const Point2& p) const;

 private:
  int degree_;
  Point2 mid_;
  Point2 tangent_;
  double length_;
};

struct QuadratureRule {
  std::vector<Point2> points;
  std::vector<double> weights;
  std::size_t size() const { return points.size(); }
  double total_weight() const;
};

/// Gauss-Legendre nodes/weights on [-1,1].
void gauss_legendre(int npoints, std::vector<double>& nodes, std::vector<double>& weights);

/// Quadrature on a segment, exact for polynomials of the requested total degree.
QuadratureRule edge_quadrature(const Point2& v0, const Point2& v1, int exactness);

/// Quadrature on a simple polygon, exact to the requested total degree.
/// Triangulates by fanning from the centroid; if the fan produces inverted
/// triangles (non-convex cells) it falls back to ear clipping.
QuadratureRule cell_quadrature(const Polygon& poly, int exactness);

}  // namespace vemsupg

#endif
