#include "vemsupg/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "vemsupg/parallel.hpp"

namespace vemsupg {

namespace {
constexpr double kTwoPi = 2.0 * M_PI;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}
}  // namespace

BenchmarkProblem accuracy_problem(double alpha, bool with_reaction) {
  BenchmarkProblem p;
  p.name = with_reaction ? "accuracy" : "accuracy-noreaction";
  p.has_exact = true;

  auto u = [](const Point2& q) {
    return std::sin(kTwoPi * q.x) * std::sin(kTwoPi * q.y) + std::pow(q.x, 5) +
           std::pow(q.y, 5) + 1.0;
  };
  auto ux = [](const Point2& q) {
    return kTwoPi * std::cos(kTwoPi * q.x) * std::sin(kTwoPi * q.y) + 5.0 * std::pow(q.x, 4);
  };
  auto uy = [](const Point2& q) {
    return kTwoPi * std::sin(kTwoPi * q.x) * std::cos(kTwoPi * q.y) + 5.0 * std::pow(q.y, 4);
  };

  p.coeffs.K = [alpha](const Point2& q) {
    Eigen::Matrix2d K;
    K << 1.0 + q.x * q.x, q.x * q.y, q.x * q.y, 1.0 + q.y * q.y;
    return Eigen::Matrix2d(alpha * K);
  };
  p.coeffs.grad_K = [alpha](const Point2& q) {
    Eigen::Matrix2d dx, dy;
    dx << 2.0 * q.x, q.y, q.y, 0.0;
    dy << 0.0, q.x, q.x, 2.0 * q.y;
    return std::make_pair(Eigen::Matrix2d(alpha * dx), Eigen::Matrix2d(alpha * dy));
  };
  p.coeffs.beta = [](const Point2& q) {
    return Eigen::Vector2d(std::cos(kTwoPi * q.x), std::sin(kTwoPi * q.y));
  };
  if (with_reaction)
    p.coeffs.gamma = [](const Point2& q) { return std::exp(q.x + q.y); };
  else
    p.coeffs.gamma = [](const Point2&) { return 0.0; };

  p.coeffs.f = [alpha, with_reaction, u, ux, uy](const Point2& q) {
    const double sx = std::sin(kTwoPi * q.x), cx = std::cos(kTwoPi * q.x);
    const double sy = std::sin(kTwoPi * q.y), cy = std::cos(kTwoPi * q.y);
    const double uxx = -kTwoPi * kTwoPi * sx * sy + 20.0 * std::pow(q.x, 3);
    const double uyy = -kTwoPi * kTwoPi * sx * sy + 20.0 * std::pow(q.y, 3);
    const double uxy = kTwoPi * kTwoPi * cx * cy;
    const double div_flux =
        alpha * ((1.0 + q.x * q.x) * uxx + (1.0 + q.y * q.y) * uyy + 2.0 * q.x * q.y * uxy +
                 3.0 * q.x * ux(q) + 3.0 * q.y * uy(q));
    double out = -div_flux + cx * ux(q) + sy * uy(q);
    if (with_reaction) out += std::exp(q.x + q.y) * u(q);
    return out;
  };
  p.coeffs.exact_u = u;
  p.coeffs.exact_grad_u = [ux, uy](const Point2& q) { return Eigen::Vector2d(ux(q), uy(q)); };
  p.dirichlet = u;
  return p;
}

BenchmarkProblem layer_problem() {
  BenchmarkProblem p;
  p.name = "layer";
  p.has_exact = false;
  const double c = std::cos(std::atan(1.0));
  const double s = std::sin(std::atan(1.0));
  p.coeffs.K = [](const Point2&) { return Eigen::Matrix2d(1e-6 * Eigen::Matrix2d::Identity()); };
  p.coeffs.grad_K = [](const Point2&) {
    return std::make_pair(Eigen::Matrix2d(Eigen::Matrix2d::Zero()),
                          Eigen::Matrix2d(Eigen::Matrix2d::Zero()));
  };
  p.coeffs.beta = [c, s](const Point2&) { return Eigen::Vector2d(c, s); };
  p.coeffs.gamma = [](const Point2&) { return 0.0; };
  p.coeffs.f = [](const Point2&) { return 0.0; };
  p.dirichlet = [](const Point2& q) {
    if (q.y <= 1e-12) return 1.0;
    if (q.x <= 1e-12 && q.y < 0.2) return 1.0;
    return 0.0;
  };
  return p;
}

ErrorReport compute_errors(const Mesh& mesh, const DofMap& dofs, const Eigen::VectorXd& solution,
                           const BenchmarkProblem& problem, const AssemblyOptions& options) {
  ErrorReport rep;
  rep.h_max = mesh.h_max();
  rep.ndof = dofs.size();
  if (!problem.has_exact || !problem.coeffs.exact_u || !problem.coeffs.exact_grad_u) return rep;

  const int k = dofs.degree();
  const ScalarField& u = *problem.coeffs.exact_u;
  const VectorField& gu = *problem.coeffs.exact_grad_u;
  const std::size_t nc = mesh.num_cells();

  struct Acc {
    double l2n = 0, l2d = 0, h1n = 0, h1d = 0, enn = 0, end_ = 0;
  };
  std::vector<Acc> acc(nc);

  parallel_for(nc, [&](std::size_t c) {
    const ElementOperators ops = build_element_operators(mesh, c, k);
    const SupgParams params = compute_tau(mesh, ops, problem.coeffs, options.C_tau);
    const int nk = static_cast<int>(poly_space_dim(k));
    const int nk1 = static_cast<int>(poly_space_dim(k - 1));

    const std::vector<std::size_t> gids = dofs.cell_dofs(mesh, c);
    Eigen::VectorXd lh(static_cast<int>(gids.size()));
    for (std::size_t i = 0; i < gids.size(); ++i)
      lh(static_cast<int>(i)) = solution(static_cast<int>(gids[i]));

    const Eigen::VectorXd ck = ops.pi0_k * lh;        // Pi0_k u_h coefficients
    const Eigen::VectorXd ck1 = ops.pi0_km1 * lh;     // Pi0_{k-1} u_h
    const Eigen::VectorXd cgx = ops.pi0_grad[0] * lh; // projected gradient
    const Eigen::VectorXd cgy = ops.pi0_grad[1] * lh;

    // Pi0_{k-1} of the exact solution, for the reaction part of the norm.
    const QuadratureRule quad = cell_quadrature(mesh.cell_polygon(c), 2 * k + 6);
    Eigen::VectorXd mu = Eigen::VectorXd::Zero(nk1);
    for (std::size_t p = 0; p < quad.size(); ++p) {
      const std::vector<double> mv = ops.basis.eval(quad.points[p]);
      const double uv = u(quad.points[p]);
      for (int a = 0; a < nk1; ++a) mu(a) += quad.weights[p] * mv[static_cast<std::size_t>(a)] * uv;
    }
    const Eigen::VectorXd cu1 = ops.mass.topLeftCorner(nk1, nk1).llt().solve(mu);

    Acc& A = acc[c];
    for (std::size_t p = 0; p < quad.size(); ++p) {
      const Point2 x = quad.points[p];
      const double w = quad.weights[p];
      const std::vector<double> mv = ops.basis.eval(x);
      double vk = 0, v1 = 0, w1 = 0, gxh = 0, gyh = 0;
      for (int a = 0; a < nk; ++a) vk += ck(a) * mv[static_cast<std::size_t>(a)];
      for (int a = 0; a < nk1; ++a) {
        v1 += ck1(a) * mv[static_cast<std::size_t>(a)];
        w1 += cu1(a) * mv[static_cast<std::size_t>(a)];
        gxh += cgx(a) * mv[static_cast<std::size_t>(a)];
        gyh += cgy(a) * mv[static_cast<std::size_t>(a)];
      }
      const double uv = u(x);
      const Eigen::Vector2d gv = gu(x);
      const Eigen::Matrix2d K = problem.coeffs.K(x);
      const Eigen::Vector2d bv = problem.coeffs.beta(x);
      const double gval = problem.coeffs.gamma(x);

      A.l2n += w * (uv - vk) * (uv - vk);
      A.l2d += w * uv * uv;
      const Eigen::Vector2d de(gv(0) - gxh, gv(1) - gyh);
      A.h1n += w * de.squaredNorm();
      A.h1d += w * gv.squaredNorm();
      A.enn += w * (2.0 * de.dot(K * de) + 2.0 * params.tau * std::pow(bv.dot(de), 2) +
                    gval * (w1 - v1) * (w1 - v1));
      A.end_ += w * (2.0 * gv.dot(K * gv) + 2.0 * params.tau * std::pow(bv.dot(gv), 2) +
                     gval * w1 * w1);
    }
    // Stability contribution on the interpolation defect.
    const Eigen::VectorXd lu = dof_functionals(mesh, c, k, u);
    const Eigen::MatrixXd defect =
        Eigen::MatrixXd::Identity(static_cast<int>(ops.n_dofs), static_cast<int>(ops.n_dofs)) -
        ops.D * ops.pi_nabla;
    const double sw = params.kappa_max + params.tau * params.beta_E * params.beta_E;
    A.enn += sw * (defect * (lu - lh)).squaredNorm();
    A.end_ += sw * (defect * lu).squaredNorm();
  });

  double l2n = 0, l2d = 0, h1n = 0, h1d = 0, enn = 0, end_ = 0;
  for (const Acc& a : acc) {
    l2n += a.l2n;
    l2d += a.l2d;
    h1n += a.h1n;
    h1d += a.h1d;
    enn += a.enn;
    end_ += a.end_;
  }
  rep.err_l2 = std::sqrt(l2n / l2d);
  rep.err_h1 = std::sqrt(h1n / h1d);
  rep.err_energy = std::sqrt(enn / end_);
  rep.has_errors = true;
  return rep;
}

SolveResult solve_problem(const Mesh& mesh, int k, const BenchmarkProblem& problem,
                          const AssemblyOptions& options, const SolveOptions& sopts) {
  const DofMap dofs(mesh, k);
  const GlobalSystem sys = assemble(mesh, dofs, problem.coeffs, options, problem.dirichlet);
  SolveResult out;
  out.solution = solve(sys.A, sys.rhs, sopts);
  out.report = compute_errors(mesh, dofs, out.solution, problem, options);
  return out;
}

ConvergenceTable run_convergence(MeshFamily family, int k, int refinements,
                                 const BenchmarkProblem& problem, const AssemblyOptions& options,
                                 const SolveOptions& sopts, int base_resolution) {
  ConvergenceTable table;
  table.family = family;
  table.k = k;
  int n = base_resolution;
  for (int r = 0; r < refinements; ++r, n *= 2) {
    const Mesh mesh = generate_mesh(family, n);
    ConvergenceRow row;
    row.refinement = r;
    row.n = n;
    try {
      const SolveResult res = solve_problem(mesh, k, problem, options, sopts);
      row.report = res.report;
    } catch (const SolverError&) {
      continue;  // a failed solve drops the row, not the table
    }
    if (!table.rows.empty() && table.rows.back().report.has_errors && row.report.has_errors) {
      const ErrorReport& prev = table.rows.back().report;
      row.rate_l2 = std::log2(prev.err_l2 / row.report.err_l2);
      row.rate_h1 = std::log2(prev.err_h1 / row.report.err_h1);
      row.rate_energy = std::log2(prev.err_energy / row.report.err_energy);
      row.has_rates = true;
    }
    table.rows.push_back(row);
  }
  return table;
}

std::string convergence_csv(const std::vector<ConvergenceTable>& tables) {
  std::ostringstream out;
  out << "family,k,refinement,h_max,ndof,err_l2,err_h1,err_energy,rate_l2,rate_h1,rate_energy\n";
  for (const ConvergenceTable& t : tables)
    for (const ConvergenceRow& r : t.rows) {
      out << family_name(t.family) << ',' << t.k << ',' << r.refinement << ','
          << fmt(r.report.h_max) << ',' << r.report.ndof << ',' << fmt(r.report.err_l2) << ','
          << fmt(r.report.err_h1) << ',' << fmt(r.report.err_energy) << ',';
      if (r.has_rates)
        out << fmt(r.rate_l2) << ',' << fmt(r.rate_h1) << ',' << fmt(r.rate_energy);
      else
        out << ",,";
      out << '\n';
    }
  return out.str();
}

std::vector<AlphaSweepRow> sweep_alpha(MeshFamily family, int n, int k,
                                       const std::vector<double>& alphas,
                                       const AssemblyOptions& options, const SolveOptions& sopts) {
  const Mesh mesh = generate_mesh(family, n);
  std::vector<AlphaSweepRow> rows;
  rows.reserve(alphas.size());
  for (double alpha : alphas) {
    const BenchmarkProblem problem = accuracy_problem(alpha, /*with_reaction=*/false);
    const SolveResult res = solve_problem(mesh, k, problem, options, sopts);
    rows.push_back({family, k, alpha, res.report});
  }
  return rows;
}

std::string alpha_sweep_csv(const std::vector<AlphaSweepRow>& rows) {
  std::ostringstream out;
  out << "family,k,alpha,h_max,ndof,err_l2,err_h1,err_energy\n";
  for (const AlphaSweepRow& r : rows)
    out << family_name(r.family) << ',' << r.k << ',' << fmt(r.alpha) << ','
        << fmt(r.report.h_max) << ',' << r.report.ndof << ',' << fmt(r.report.err_l2) << ','
        << fmt(r.report.err_h1) << ',' << fmt(r.report.err_energy) << '\n';
  return out.str();
}

SampledSolution::SampledSolution(const Mesh& mesh, const DofMap& dofs,
                                 const Eigen::VectorXd& solution)
    : mesh_(mesh), k_(dofs.degree()), cell_coeffs_(mesh.num_cells()) {
  parallel_for(mesh.num_cells(), [&](std::size_t c) {
    const ElementOperators ops = build_element_operators(mesh, c, k_);
    const std::vector<std::size_t> gids = dofs.cell_dofs(mesh, c);
    Eigen::VectorXd lh(static_cast<int>(gids.size()));
    for (std::size_t i = 0; i < gids.size(); ++i)
      lh(static_cast<int>(i)) = solution(static_cast<int>(gids[i]));
    cell_coeffs_[c] = ops.pi0_k * lh;
  });
}

double SampledSolution::operator()(const Point2& p) const {
  const std::size_t c = mesh_.locate(p);
  const Cell& cell = mesh_.cells()[c];
  const MonomialBasis basis(k_, cell.centroid, cell.diameter);
  const std::vector<double> mv = basis.eval(p);
  double v = 0.0;
  for (std::size_t a = 0; a < mv.size(); ++a)
    v += cell_coeffs_[c](static_cast<int>(a)) * mv[a];
  return v;
}

LayerReport layer_problem_report(const Mesh& mesh, int k, const AssemblyOptions& options,
                                 const SolveOptions& sopts, int grid) {
  const BenchmarkProblem problem = layer_problem();
  const DofMap dofs(mesh, k);
  const GlobalSystem sys = assemble(mesh, dofs, problem.coeffs, options, problem.dirichlet);
  const Eigen::VectorXd sol = solve(sys.A, sys.rhs, sopts);
  const SampledSolution view(mesh, dofs, sol);

  LayerReport rep;
  rep.grid = grid;
  rep.h_max = mesh.h_max();
  rep.ndof = dofs.size();
  rep.samples.resize(static_cast<std::size_t>(grid) * grid);

  parallel_for(static_cast<std::size_t>(grid), [&](std::size_t j) {
    for (int i = 0; i < grid; ++i) {
      const Point2 p{(i + 0.5) / grid, (static_cast<double>(j) + 0.5) / grid};
      rep.samples[j * static_cast<std::size_t>(grid) + static_cast<std::size_t>(i)] = view(p);
    }
  });

  rep.min_u = rep.samples[0];
  rep.max_u = rep.samples[0];
  double low_sum = 0, high_sum = 0;
  std::size_t low_n = 0, high_n = 0;
  const double margin = 5.0 * rep.h_max;
  for (int j = 0; j < grid; ++j)
    for (int i = 0; i < grid; ++i) {
      const Point2 p{(i + 0.5) / grid, (j + 0.5) / grid};
      const double v = rep.samples[static_cast<std::size_t>(j) * grid + static_cast<std::size_t>(i)];
      rep.min_u = std::min(rep.min_u, v);
      rep.max_u = std::max(rep.max_u, v);
      // Distance to the internal layer line y = x + 0.2 (velocity at 45 deg
      // from the boundary-data jump at (0, 0.2)).
      const double dist_layer = std::abs(p.y - p.x - 0.2) / std::sqrt(2.0);
      if (dist_layer <= margin) continue;
      if (p.y < p.x + 0.2) {
        if (p.x < 1.0 - margin && p.y < 1.0 - margin) {
          low_sum += std::abs(v - 1.0);
          ++low_n;
        }
      } else {
        if (p.x < 1.0 - margin && p.y < 1.0 - margin) {
          high_sum += std::abs(v);
          ++high_n;
        }
      }
    }
  rep.plateau_low_mean_err = low_n ? low_sum / static_cast<double>(low_n) : 0.0;
  rep.plateau_high_mean_err = high_n ? high_sum / static_cast<double>(high_n) : 0.0;
  return rep;
}

std::string layer_samples_csv(const LayerReport& report) {
  std::ostringstream out;
  out << "x,y,u\n";
  for (int j = 0; j < report.grid; ++j)
    for (int i = 0; i < report.grid; ++i)
      out << fmt((i + 0.5) / report.grid) << ',' << fmt((j + 0.5) / report.grid) << ','
          << fmt(report.samples[static_cast<std::size_t>(j) * report.grid +
                                static_cast<std::size_t>(i)])
          << '\n';
  return out.str();
}

}  // namespace vemsupg
