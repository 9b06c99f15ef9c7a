#include "vemsupg/config.hpp"

#include <fstream>
#include <iostream>

#include <json.hpp>

#include "vemsupg/expr.hpp"

namespace vemsupg {

using nlohmann::json;

namespace {

ScalarField scalar_from(const json& j, const std::string& field) {
  if (j.is_number()) {
    const double v = j.get<double>();
    return [v](const Point2&) { return v; };
  }
  if (j.is_string()) {
    try {
      Expr e = Expr::parse(j.get<std::string>());
      return [e](const Point2& p) { return e.eval(p.x, p.y); };
    } catch (const ExprError& err) {
      throw ConfigError("field '" + field + "': " + err.what());
    }
  }
  throw ConfigError("field '" + field + "' must be a number or an expression string");
}

BenchmarkProblem problem_from(const json& j, const RunConfig& cfg) {
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    if (name == "accuracy") return accuracy_problem(cfg.alpha, cfg.with_reaction);
    if (name == "layer") return layer_problem();
    throw ConfigError("field 'problem': unknown problem '" + name +
                      "' (expected accuracy, layer, or an object)");
  }
  if (!j.is_object()) throw ConfigError("field 'problem' must be a string or an object");

  BenchmarkProblem p;
  p.name = j.value("name", "custom");
  if (!j.contains("K")) throw ConfigError("field 'problem.K' is required");
  if (j["K"].is_array()) {
    const auto& K = j["K"];
    if (K.size() != 2 || !K[0].is_array() || K[0].size() != 2 || K[1].size() != 2)
      throw ConfigError("field 'problem.K' must be a scalar or a 2x2 array");
    ScalarField k00 = scalar_from(K[0][0], "problem.K[0][0]");
    ScalarField k01 = scalar_from(K[0][1], "problem.K[0][1]");
    ScalarField k10 = scalar_from(K[1][0], "problem.K[1][0]");
    ScalarField k11 = scalar_from(K[1][1], "problem.K[1][1]");
    p.coeffs.K = [=](const Point2& q) {
      Eigen::Matrix2d m;
      m << k00(q), k01(q), k10(q), k11(q);
      return m;
    };
  } else {
    ScalarField kk = scalar_from(j["K"], "problem.K");
    p.coeffs.K = [kk](const Point2& q) {
      return Eigen::Matrix2d(kk(q) * Eigen::Matrix2d::Identity());
    };
  }
  if (!j.contains("beta") || !j["beta"].is_array() || j["beta"].size() != 2)
    throw ConfigError("field 'problem.beta' must be a 2-element array");
  ScalarField b0 = scalar_from(j["beta"][0], "problem.beta[0]");
  ScalarField b1 = scalar_from(j["beta"][1], "problem.beta[1]");
  p.coeffs.beta = [b0, b1](const Point2& q) { return Eigen::Vector2d(b0(q), b1(q)); };
  p.coeffs.gamma =
      j.contains("gamma") ? scalar_from(j["gamma"], "problem.gamma") : ScalarField([](const Point2&) {
        return 0.0;
      });
  p.coeffs.f = j.contains("f") ? scalar_from(j["f"], "problem.f")
                               : ScalarField([](const Point2&) { return 0.0; });
  if (j.contains("u")) {
    p.coeffs.exact_u = scalar_from(j["u"], "problem.u");
    p.has_exact = j.contains("grad_u");
  }
  if (j.contains("grad_u")) {
    if (!j["grad_u"].is_array() || j["grad_u"].size() != 2)
      throw ConfigError("field 'problem.grad_u' must be a 2-element array");
    ScalarField g0 = scalar_from(j["grad_u"][0], "problem.grad_u[0]");
    ScalarField g1 = scalar_from(j["grad_u"][1], "problem.grad_u[1]");
    p.coeffs.exact_grad_u = [g0, g1](const Point2& q) { return Eigen::Vector2d(g0(q), g1(q)); };
  }
  if (j.contains("dirichlet"))
    p.dirichlet = scalar_from(j["dirichlet"], "problem.dirichlet");
  else if (p.coeffs.exact_u)
    p.dirichlet = *p.coeffs.exact_u;
  else
    p.dirichlet = [](const Point2&) { return 0.0; };
  return p;
}

}  // namespace

RunConfig RunConfig::from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid json: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a json object");

  RunConfig cfg;
  if (j.contains("family")) cfg.family = family_from_name(j["family"].get<std::string>());
  if (j.contains("mesh_path")) cfg.mesh_path = j["mesh_path"].get<std::string>();
  if (j.contains("n")) cfg.n = j["n"].get<int>();
  if (cfg.n < 2) throw ConfigError("field 'n' must be at least 2");

  cfg.degrees.clear();
  if (j.contains("k")) {
    if (j["k"].is_array())
      for (const auto& v : j["k"]) cfg.degrees.push_back(v.get<int>());
    else
      cfg.degrees.push_back(j["k"].get<int>());
  } else {
    cfg.degrees.push_back(1);
  }
  for (int k : cfg.degrees)
    if (k < 1 || k > 3) throw ConfigError("field 'k' must contain degrees in 1..3");

  if (j.contains("refinements")) cfg.refinements = j["refinements"].get<int>();
  if (cfg.refinements < 1) throw ConfigError("field 'refinements' must be at least 1");

  if (j.contains("c_tau")) cfg.c_tau = j["c_tau"].get<double>();
  if (!(cfg.c_tau > 0.0 && cfg.c_tau < 1.0))
    throw ConfigError("field 'c_tau' must lie strictly between 0 and 1");
  cfg.assembly.C_tau = cfg.c_tau;

  if (j.contains("convection_form")) {
    const std::string form = j["convection_form"].get<std::string>();
    if (form == "direct")
      cfg.assembly.convection = ConvectionForm::Direct;
    else if (form == "skew")
      cfg.assembly.convection = ConvectionForm::Skew;
    else
      throw ConfigError("field 'convection_form' must be 'direct' or 'skew'");
  }
  auto parse_projection = [](const json& v, const char* field) {
    const std::string proj = v.get<std::string>();
    if (proj == "k-1") return BhFunctionProjection::Km1;
    if (proj == "k") return BhFunctionProjection::K;
    throw ConfigError(std::string("field '") + field + "' must be 'k-1' or 'k'");
  };
  if (j.contains("bh_function_projection"))
    cfg.assembly.bh_function_projection =
        parse_projection(j["bh_function_projection"], "bh_function_projection");
  if (j.contains("load_function_projection"))
    cfg.assembly.load_function_projection =
        parse_projection(j["load_function_projection"], "load_function_projection");

  if (j.contains("solver")) {
    const auto& s = j["solver"];
    if (s.contains("method"))
      cfg.solver.method = solve_method_from_name(s["method"].get<std::string>());
    if (s.contains("tolerance")) cfg.solver.tolerance = s["tolerance"].get<double>();
    if (s.contains("max_iterations")) cfg.solver.max_iterations = s["max_iterations"].get<int>();
    if (!(cfg.solver.tolerance > 0)) throw ConfigError("field 'solver.tolerance' must be positive");
  }

  if (j.contains("alpha")) cfg.alpha = j["alpha"].get<double>();
  if (j.contains("with_reaction")) cfg.with_reaction = j["with_reaction"].get<bool>();
  if (j.contains("alphas"))
    for (const auto& v : j["alphas"]) cfg.alphas.push_back(v.get<double>());
  if (cfg.alphas.empty())
    for (int i = 4; i <= 11; ++i) cfg.alphas.push_back(std::pow(10.0, -i));

  if (j.contains("output")) cfg.output = j["output"].get<std::string>();
  if (j.contains("samples_out")) cfg.samples_out = j["samples_out"].get<std::string>();
  if (j.contains("sample_grid")) cfg.sample_grid = j["sample_grid"].get<int>();
  if (cfg.sample_grid < 2) throw ConfigError("field 'sample_grid' must be at least 2");

  cfg.problem = problem_from(j.contains("problem") ? j["problem"] : json("accuracy"), cfg);
  return cfg;
}

RunConfig RunConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

namespace {

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open output file '" + path + "'");
  out << text;
}

Mesh config_mesh(const RunConfig& cfg) {
  if (cfg.mesh_path) return read_mesh(*cfg.mesh_path);
  return generate_mesh(cfg.family, cfg.n);
}

}  // namespace

RunSummary run_solve(const RunConfig& cfg) {
  const Mesh mesh = config_mesh(cfg);
  RunSummary sum;
  const SolveResult res = solve_problem(mesh, cfg.degrees.front(), cfg.problem, cfg.assembly,
                                        cfg.solver);
  sum.report = res.report;
  if (!cfg.output.empty()) {
    ConvergenceTable t;
    t.family = mesh.family();
    t.k = cfg.degrees.front();
    ConvergenceRow row;
    row.refinement = 0;
    row.n = mesh.resolution();
    row.report = res.report;
    t.rows.push_back(row);
    write_text(cfg.output, convergence_csv({t}));
  }
  return sum;
}

RunSummary run_convergence_cmd(const RunConfig& cfg) {
  std::vector<ConvergenceTable> tables;
  for (int k : cfg.degrees)
    tables.push_back(
        run_convergence(cfg.family, k, cfg.refinements, cfg.problem, cfg.assembly, cfg.solver,
                        cfg.n));
  write_text(cfg.output, convergence_csv(tables));
  RunSummary sum;
  if (!tables.empty() && !tables.back().rows.empty())
    sum.report = tables.back().rows.back().report;
  return sum;
}

RunSummary run_sweep_alpha(const RunConfig& cfg) {
  std::vector<AlphaSweepRow> rows;
  for (int k : cfg.degrees) {
    const std::vector<AlphaSweepRow> part =
        sweep_alpha(cfg.family, cfg.n, k, cfg.alphas, cfg.assembly, cfg.solver);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  write_text(cfg.output, alpha_sweep_csv(rows));
  RunSummary sum;
  if (!rows.empty()) sum.report = rows.back().report;
  return sum;
}

RunSummary run_layer(const RunConfig& cfg) {
  const Mesh mesh = config_mesh(cfg);
  RunSummary sum;
  sum.layer = layer_problem_report(mesh, cfg.degrees.front(), cfg.assembly, cfg.solver,
                                   cfg.sample_grid);
  sum.has_layer = true;
  sum.report.h_max = sum.layer.h_max;
  sum.report.ndof = sum.layer.ndof;
  if (!cfg.samples_out.empty()) write_text(cfg.samples_out, layer_samples_csv(sum.layer));
  if (!cfg.output.empty()) {
    std::ostringstream out;
    out << "metric,value\n";
    out << "min_u," << sum.layer.min_u << "\n";
    out << "max_u," << sum.layer.max_u << "\n";
    out << "plateau_low_mean_err," << sum.layer.plateau_low_mean_err << "\n";
    out << "plateau_high_mean_err," << sum.layer.plateau_high_mean_err << "\n";
    out << "h_max," << sum.layer.h_max << "\n";
    out << "ndof," << sum.layer.ndof << "\n";
    write_text(cfg.output, out.str());
  }
  return sum;
}

}  // namespace vemsupg
