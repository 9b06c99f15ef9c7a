#ifndef VEMSUPG_SUPG_HPP
#define VEMSUPG_SUPG_HPP

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <string>

#include "vemsupg/mesh.hpp"
#include "vemsupg/vemspace.hpp"

namespace vemsupg {

using MatrixField = std::function<Eigen::Matrix2d(const Point2&)>;
using VectorField = std::function<Eigen::Vector2d(const Point2&)>;

/// Problem data: diffusion tensor K (symmetric positive definite), advection
/// field beta (divergence-free), reaction gamma >= 0 and source f, plus the
/// optional derivative of K and exact solution for verification runs.
struct CoefficientField {
  MatrixField K;
  VectorField beta;
  ScalarField gamma;
  ScalarField f;
  /// grad_K(p) = (dK/dx, dK/dy); when absent, divergence terms fall back to
  /// componentwise central differences with step 1e-6 * h_E.
  std::function<std::pair<Eigen::Matrix2d, Eigen::Matrix2d>(const Point2&)> grad_K;
  std::optional<ScalarField> exact_u;
  std::optional<VectorField> exact_grad_u;
};

struct LocalBounds {
  double kappa_min = 0.0;  // smallest eigenvalue of K over the sample set
  double kappa_max = 0.0;  // largest eigenvalue of K over the sample set
  double beta_max = 0.0;   // sup |beta|
  double gamma_max = 0.0;  // sup gamma
};

enum class TauRegime { Diffusive, Convective, Reactive };

const char* regime_name(TauRegime r);

struct SupgParams {
  double kappa_min = 0.0;
  double kappa_max = 0.0;  // kappa_E
  double beta_E = 0.0;
  double gamma_E = 0.0;
  double Ck = 0.0;          // inverse-inequality constant (1/6 sentinel value when divergence-free)
  bool divergence_free = false;
  double m_k = 0.0;         // 1/3 when divergence-free, else 2*Ck
  double Pe = 0.0;          // mesh Peclet number, m_k * beta_E * h_E / (2 kappa_E)
  double Ka = 0.0;          // Karlovitz number, 2 beta_E C_tau / (h_E gamma_E); inf when gamma = 0
  double tau = 0.0;
  double C_tau = 0.5;
  double h = 0.0;
  TauRegime regime = TauRegime::Diffusive;
};

/// Eigenvalue extremes of K and sup norms of beta, gamma sampled at the
/// cell's quadrature points and vertices. Throws if K is not SPD at a sample.
LocalBounds local_bounds(const Mesh& mesh, std::size_t cell_id, const CoefficientField& coeffs,
                         const QuadratureRule& quad);

/// Value of the inverse-inequality constant when div(K grad p) vanishes on
/// the whole gradient space (m_k = 1/3 and the diffusive branch of tau uses
/// m_k/2); computed constants are capped here as well.
inline constexpr double kCkSentinel = 1.0 / 6.0;

struct InverseConstant {
  double Ck = 0.0;
  bool divergence_free = false;  // div(K grad p) vanishes on the whole space
};

/// Largest constant with Ck h^2 ||div(K q)||^2 <= ||K q||^2 for q in the
/// gradient space {grad p : p in P_k(E)}, by a generalized eigenproblem.
InverseConstant inverse_constant(const ElementOperators& ops, const CoefficientField& coeffs);

/// tau_E = min{ Ck_eff h^2/kappa_E, h/(2 beta_E), C_tau/gamma_E } with the
/// vanishing-coefficient arguments dropped; Ck_eff = m_k/2 when the
/// divergence-free sentinel applies.
SupgParams tau_from_bounds(const LocalBounds& b, const InverseConstant& inv, double h,
                           double C_tau);

/// Full per-element SUPG parameter computation.
SupgParams compute_tau(const Mesh& mesh, const ElementOperators& ops,
                       const CoefficientField& coeffs, double C_tau);

/// div(K(x) g(x)) for a polynomial vector field g given by value and Jacobian,
/// using analytic grad_K when available and central differences otherwise.
double div_K_g(const CoefficientField& coeffs, const Point2& p, const Eigen::Vector2d& g,
               const Eigen::Matrix2d& jac_g, double fd_step);

/// Effective advection-diffusion tensor K + tau_E beta beta^T; the streamline
/// term turns the gradient part of the stabilized form into a single
/// positive-definite tensor product.
Eigen::Matrix2d effective_tensor(const CoefficientField& coeffs, const SupgParams& params,
                                 const Point2& p);

}  // namespace vemsupg

#endif
