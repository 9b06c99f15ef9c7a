#include "vemsupg/poly.hpp"

#include <cmath>
#include <stdexcept>

namespace vemsupg {

std::vector<MultiIndex> monomial_exponents(int k) {
  std::vector<MultiIndex> out;
  out.reserve(poly_space_dim(k));
  for (int d = 0; d <= k; ++d)
    for (int a2 = 0; a2 <= d; ++a2) out.push_back({d - a2, a2});
  return out;
}

std::size_t monomial_position(int a1, int a2) {
  const int d = a1 + a2;
  return static_cast<std::size_t>(d * (d + 1) / 2 + a2);
}

MonomialBasis::MonomialBasis(int degree, Point2 center, double scale)
    : degree_(degree), center_(center), scale_(scale), exps_(monomial_exponents(degree)) {
  if (degree < 0) throw std::invalid_argument("MonomialBasis: negative degree");
  if (!(scale > 0)) throw std::invalid_argument("MonomialBasis: nonpositive scale");
}

namespace {
inline double ipow(double b, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}
}  // namespace

std::vector<double> MonomialBasis::eval(const Point2& p) const {
  const double u = (p.x - center_.x) / scale_;
  const double v = (p.y - center_.y) / scale_;
  std::vector<double> out(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) out[i] = ipow(u, exps_[i].a1) * ipow(v, exps_[i].a2);
  return out;
}

std::vector<Point2> MonomialBasis::grad(const Point2& p) const {
  const double u = (p.x - center_.x) / scale_;
  const double v = (p.y - center_.y) / scale_;
  std::vector<Point2> out(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    const int a1 = exps_[i].a1, a2 = exps_[i].a2;
    const double gx = (a1 > 0) ? a1 * ipow(u, a1 - 1) * ipow(v, a2) / scale_ : 0.0;
    const double gy = (a2 > 0) ? a2 * ipow(u, a1) * ipow(v, a2 - 1) / scale_ : 0.0;
    out[i] = {gx, gy};
  }
  return out;
}

std::vector<double> MonomialBasis::laplacian(const Point2& p) const {
  const double u = (p.x - center_.x) / scale_;
  const double v = (p.y - center_.y) / scale_;
  const double s2 = scale_ * scale_;
  std::vector<double> out(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    const int a1 = exps_[i].a1, a2 = exps_[i].a2;
    double lap = 0.0;
    if (a1 > 1) lap += a1 * (a1 - 1) * ipow(u, a1 - 2) * ipow(v, a2);
    if (a2 > 1) lap += a2 * (a2 - 1) * ipow(u, a1) * ipow(v, a2 - 2);
    out[i] = lap / s2;
  }
  return out;
}

std::vector<std::pair<std::size_t, double>> MonomialBasis::derivative_expansion(std::size_t a,
                                                                                int comp) const {
  const MultiIndex mi = exps_[a];
  std::vector<std::pair<std::size_t, double>> out;
  if (comp == 0 && mi.a1 > 0)
    out.emplace_back(monomial_position(mi.a1 - 1, mi.a2), mi.a1 / scale_);
  if (comp == 1 && mi.a2 > 0)
    out.emplace_back(monomial_position(mi.a1, mi.a2 - 1), mi.a2 / scale_);
  return out;
}

EdgeBasis::EdgeBasis(int degree, Point2 v0, Point2 v1) : degree_(degree) {
  mid_ = (v0 + v1) * 0.5;
  const Point2 d = v1 - v0;
  length_ = d.norm();
  if (!(length_ > 0)) throw std::invalid_argument("EdgeBasis: zero-length edge");
  tangent_ = d * (1.0 / length_);
}

std::vector<double> EdgeBasis::eval(const Point2& p) const {
  const double s = coordinate(p) / length_;
  std::vector<double> out(size());
  double cur = 1.0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = cur;
    cur *= s;
  }
  return out;
}

double QuadratureRule::total_weight() const {
  double s = 0.0;
  for (double w : weights) s += w;
  return s;
}

void gauss_legendre(int npoints, std::vector<double>& nodes, std::vector<double>& weights) {
  if (npoints < 1) throw std::invalid_argument("gauss_legendre: need at least one point");
  nodes.assign(static_cast<std::size_t>(npoints), 0.0);
  weights.assign(static_cast<std::size_t>(npoints), 0.0);
  const int n = npoints;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Newton iteration from the Chebyshev estimate.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[static_cast<std::size_t>(i)] = -x;
    nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    weights[static_cast<std::size_t>(i)] = w;
    weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
}

QuadratureRule edge_quadrature(const Point2& v0, const Point2& v1, int exactness) {
  const int q = std::max(1, (exactness + 2) / 2);  // 2q-1 >= exactness
  std::vector<double> xs, ws;
  gauss_legendre(q, xs, ws);
  const Point2 mid = (v0 + v1) * 0.5;
  const Point2 half = (v1 - v0) * 0.5;
  const double jac = half.norm();
  QuadratureRule rule;
  rule.points.reserve(xs.size());
  rule.weights.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    rule.points.push_back(mid + half * xs[i]);
    rule.weights.push_back(ws[i] * jac);
  }
  return rule;
}

namespace {

// Tensor Gauss rule collapsed onto a triangle via the Duffy map; exact for
// total degree d with q = ceil((d+2)/2) points per direction (the collapse
// raises the s-degree by one).
void triangle_rule(const Point2& a, const Point2& b, const Point2& c, int exactness,
                   QuadratureRule& rule) {
  const int q = std::max(1, (exactness + 3) / 2);
  std::vector<double> xs, ws;
  gauss_legendre(q, xs, ws);
  const double area2 = (b - a).cross(c - a);  // twice the signed area
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double s = 0.5 * (xs[i] + 1.0);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      const double t = 0.5 * (xs[j] + 1.0);
      const double l1 = s;
      const double l2 = t * (1.0 - s);
      const Point2 p = a + (b - a) * l1 + (c - a) * l2;
      const double w = 0.25 * ws[i] * ws[j] * (1.0 - s) * area2;
      rule.points.push_back(p);
      rule.weights.push_back(w);
    }
  }
}

}  // namespace

QuadratureRule cell_quadrature(const Polygon& poly, int exactness) {
  if (poly.size() < 3) throw std::invalid_argument("cell_quadrature: not a polygon");
  QuadratureRule rule;

  const Point2 xc = polygon_centroid(poly);
  const std::size_t n = poly.size();
  bool fan_ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& p = poly[i];
    const Point2& q = poly[(i + 1) % n];
    if ((p - xc).cross(q - xc) < 0.0) {
      fan_ok = false;
      break;
    }
  }
  if (fan_ok) {
    for (std::size_t i = 0; i < n; ++i) {
      const Point2& p = poly[i];
      const Point2& q = poly[(i + 1) % n];
      if (std::abs((p - xc).cross(q - xc)) < 1e-30) continue;  // collinear sliver
      triangle_rule(xc, p, q, exactness, rule);
    }
    return rule;
  }

  if (!polygon_is_simple(poly, 1e-14))
    throw std::runtime_error("cell_quadrature: non-simple polygon");
  for (const auto& t : ear_clip(poly)) triangle_rule(poly[t[0]], poly[t[1]], poly[t[2]], exactness, rule);
  return rule;
}

}  // namespace vemsupg
