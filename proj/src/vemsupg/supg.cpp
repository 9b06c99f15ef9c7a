#include "vemsupg/supg.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace vemsupg {

const char* regime_name(TauRegime r) {
  switch (r) {
    case TauRegime::Diffusive: return "diffusive";
    case TauRegime::Convective: return "convective";
    default: return "reactive";
  }
}

namespace {

void eigen_range_2x2(const Eigen::Matrix2d& K, double& lo, double& hi) {
  const double tr = K(0, 0) + K(1, 1);
  const double det = K(0, 0) * K(1, 1) - K(0, 1) * K(1, 0);
  const double disc = std::sqrt(std::max(0.0, 0.25 * tr * tr - det));
  lo = 0.5 * tr - disc;
  hi = 0.5 * tr + disc;
}

void sample_bounds(const CoefficientField& coeffs, const Point2& p, LocalBounds& b) {
  const Eigen::Matrix2d K = coeffs.K(p);
  if (std::abs(K(0, 1) - K(1, 0)) > 1e-12 * (1.0 + K.cwiseAbs().maxCoeff()))
    throw std::runtime_error("diffusion tensor not symmetric at (" + std::to_string(p.x) + ", " +
                             std::to_string(p.y) + ")");
  double lo, hi;
  eigen_range_2x2(K, lo, hi);
  if (!(lo > 0))
    throw std::runtime_error("diffusion tensor not positive definite at (" + std::to_string(p.x) +
                             ", " + std::to_string(p.y) + ")");
  b.kappa_min = std::min(b.kappa_min, lo);
  b.kappa_max = std::max(b.kappa_max, hi);
  b.beta_max = std::max(b.beta_max, coeffs.beta(p).norm());
  const double g = coeffs.gamma(p);
  if (g < -1e-14) throw std::runtime_error("negative reaction coefficient sampled");
  b.gamma_max = std::max(b.gamma_max, g);
}

}  // namespace

LocalBounds local_bounds(const Mesh& mesh, std::size_t cell_id, const CoefficientField& coeffs,
                         const QuadratureRule& quad) {
  LocalBounds b;
  b.kappa_min = std::numeric_limits<double>::max();
  for (const Point2& p : quad.points) sample_bounds(coeffs, p, b);
  for (std::size_t v : mesh.cells()[cell_id].vertex_ids) sample_bounds(coeffs, mesh.vertices()[v], b);
  return b;
}

double div_K_g(const CoefficientField& coeffs, const Point2& p, const Eigen::Vector2d& g,
               const Eigen::Matrix2d& jac_g, double fd_step) {
  Eigen::Matrix2d dKx, dKy;
  if (coeffs.grad_K) {
    auto [gx, gy] = coeffs.grad_K(p);
    dKx = gx;
    dKy = gy;
  } else {
    const double h = fd_step;
    dKx = (coeffs.K({p.x + h, p.y}) - coeffs.K({p.x - h, p.y})) / (2.0 * h);
    dKy = (coeffs.K({p.x, p.y + h}) - coeffs.K({p.x, p.y - h})) / (2.0 * h);
  }
  const Eigen::Matrix2d K = coeffs.K(p);
  // div(K g) = sum_i d_i (K g)_i = (d_i K)_row_i . g + K : (dg)
  double out = 0.0;
  out += dKx.row(0).dot(g) + dKy.row(1).dot(g);
  out += K(0, 0) * jac_g(0, 0) + K(0, 1) * jac_g(1, 0) + K(1, 0) * jac_g(0, 1) +
         K(1, 1) * jac_g(1, 1);
  return out;
}

InverseConstant inverse_constant(const ElementOperators& ops, const CoefficientField& coeffs) {
  const int k = ops.k;
  const std::size_t nk = poly_space_dim(k);
  const int nq = static_cast<int>(nk) - 1;  // gradients of the non-constant monomials
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(nq, nq);
  Eigen::MatrixXd Bm = Eigen::MatrixXd::Zero(nq, nq);
  const double fd_step = 1e-6 * ops.h;

  std::vector<double> divs(static_cast<std::size_t>(nq));
  std::vector<Eigen::Vector2d> kgs(static_cast<std::size_t>(nq));
  for (std::size_t p = 0; p < ops.cell_quad.size(); ++p) {
    const Point2 x = ops.cell_quad.points[p];
    const double w = ops.cell_quad.weights[p];
    const Eigen::Matrix2d K = coeffs.K(x);
    const std::vector<Point2> mg = ops.basis.grad(x);
    for (int a = 0; a < nq; ++a) {
      const std::size_t ma = static_cast<std::size_t>(a) + 1;
      const Eigen::Vector2d g(mg[ma].x, mg[ma].y);
      // Jacobian of grad m_a from the exact derivative expansions.
      Eigen::Matrix2d jac = Eigen::Matrix2d::Zero();
      for (int c = 0; c < 2; ++c)
        for (const auto& [idx, coeff] : ops.basis.derivative_expansion(ma, c)) {
          jac(0, c) += coeff * mg[idx].x;
          jac(1, c) += coeff * mg[idx].y;
        }
      kgs[static_cast<std::size_t>(a)] = K * g;
      divs[static_cast<std::size_t>(a)] = div_K_g(coeffs, x, g, jac, fd_step);
    }
    for (int a = 0; a < nq; ++a)
      for (int b = 0; b <= a; ++b) {
        A(a, b) += w * divs[static_cast<std::size_t>(a)] * divs[static_cast<std::size_t>(b)];
        Bm(a, b) += w * kgs[static_cast<std::size_t>(a)].dot(kgs[static_cast<std::size_t>(b)]);
      }
  }
  A = A.selfadjointView<Eigen::Lower>();
  Bm = Bm.selfadjointView<Eigen::Lower>();

  InverseConstant out;
  const double scale = A.trace() / std::max(Bm.trace(), std::numeric_limits<double>::min());
  if (!(scale * ops.h * ops.h > 1e-12)) {
    out.divergence_free = true;
    out.Ck = kCkSentinel;
    return out;
  }
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(A, Bm);
  const double lmax = es.eigenvalues().maxCoeff();
  // The constant of the underlying space is bounded independently of h; the
  // gradient-space surrogate can lose that bound when the divergence carries
  // no second-order content (k=1 with variable K gives lmax independent of
  // h), so cap at the divergence-free sentinel value, its continuous limit.
  out.Ck = std::min(1.0 / (ops.h * ops.h * lmax), kCkSentinel);
  return out;
}

SupgParams tau_from_bounds(const LocalBounds& b, const InverseConstant& inv, double h,
                           double C_tau) {
  if (!(C_tau > 0.0 && C_tau < 1.0))
    throw std::invalid_argument("C_tau must lie in (0,1)");
  SupgParams sp;
  sp.kappa_min = b.kappa_min;
  sp.kappa_max = b.kappa_max;
  sp.beta_E = b.beta_max;
  sp.gamma_E = b.gamma_max;
  sp.divergence_free = inv.divergence_free;
  sp.Ck = inv.Ck;
  sp.m_k = inv.divergence_free ? 1.0 / 3.0 : 2.0 * inv.Ck;
  sp.C_tau = C_tau;
  sp.h = h;

  const double inf = std::numeric_limits<double>::infinity();
  const double diffusive = sp.Ck * h * h / sp.kappa_max;
  const double convective = (sp.beta_E > 0) ? h / (2.0 * sp.beta_E) : inf;
  const double reactive = (sp.gamma_E > 0) ? C_tau / sp.gamma_E : inf;

  sp.tau = diffusive;
  sp.regime = TauRegime::Diffusive;
  if (convective < sp.tau) {
    sp.tau = convective;
    sp.regime = TauRegime::Convective;
  }
  if (reactive < sp.tau) {
    sp.tau = reactive;
    sp.regime = TauRegime::Reactive;
  }
  sp.Pe = sp.m_k * sp.beta_E * h / (2.0 * sp.kappa_max);
  sp.Ka = (sp.gamma_E > 0 && sp.beta_E > 0) ? 2.0 * sp.beta_E * C_tau / (h * sp.gamma_E) : inf;
  return sp;
}

SupgParams compute_tau(const Mesh& mesh, const ElementOperators& ops,
                       const CoefficientField& coeffs, double C_tau) {
  const LocalBounds b = local_bounds(mesh, ops.cell_id, coeffs, ops.cell_quad);
  const InverseConstant inv = inverse_constant(ops, coeffs);
  return tau_from_bounds(b, inv, ops.h, C_tau);
}

Eigen::Matrix2d effective_tensor(const CoefficientField& coeffs, const SupgParams& params,
                                 const Point2& p) {
  const Eigen::Vector2d beta = coeffs.beta(p);
  return coeffs.K(p) + params.tau * beta * beta.transpose();
}

}  // namespace vemsupg
