#include "lovelieb/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "lovelieb/asymptotics.hpp"
#include "lovelieb/infinite.hpp"

namespace lovelieb {

using std::numbers::pi;

RhsSpec parse_rhs(const std::string& text) {
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (head == "one" && arg.empty()) return RhsSpec::one();
  if (head == "x" && arg.empty()) return RhsSpec::x();
  if (head == "hulthen" && arg.empty()) return RhsSpec::hulthen();
  if (head == "poly" && !arg.empty()) return RhsSpec::polynomial(parse_values(arg));
  if (head == "qwell" && !arg.empty()) {
    const auto v = parse_values(arg);
    if (v.size() != 1) throw ParameterError("qwell takes one parameter");
    return RhsSpec::quadratic_well(v[0]);
  }
  throw ParameterError("unknown right-hand side '" + text + "'");
}

Sign parse_sign(const std::string& text) {
  if (text == "plus") return Sign::PlusKernel;
  if (text == "minus") return Sign::MinusKernel;
  throw ParameterError("sign must be plus or minus");
}

SolverConfig endpoint_sweep_config() {
  SolverConfig cfg;
  cfg.method = SolverMethod::Nystrom;
  cfg.quad = QuadratureKind::GaussLegendre;
  cfg.n = 512;
  cfg.regularize = true;
  cfg.use_parity = true;
  return cfg;
}

namespace {

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

void describe_config(OutputTable& t, const SolverConfig& cfg) {
  t.add_meta("method", to_string(cfg.method));
  t.add_meta("quad", to_string(cfg.quad));
  t.add_meta("n", std::to_string(cfg.n));
  t.add_meta("regularize", cfg.regularize ? "true" : "false");
  t.add_meta("parity", cfg.use_parity ? "true" : "false");
}

// Options shared by every subcommand that runs a solver.
struct SolverFlags {
  std::string method = "nystrom";
  std::string quad = "gauss";
  int n = 128;
  bool regularize = false;
  bool parity = false;
  double tol = 1e-10;

  void attach(CLI::App* app) {
    app->add_option("--method", method, "nystrom|elements|neumann|collocation|galerkin|maclaurin");
    app->add_option("--quad", quad, "trapezoid|simpson|gauss|cc");
    app->add_option("--n", n, "nodes, elements or basis size");
    app->add_flag("--regularize", regularize, "regularized Nystrom assembly");
    app->add_flag("--parity", parity, "fold by the right-hand side's parity");
    app->add_option("--tol", tol, "Neumann iteration tolerance");
  }
  SolverConfig config() const {
    SolverConfig cfg;
    cfg.method = solver_method_from_string(method);
    cfg.quad = quadrature_kind_from_string(quad);
    if (cfg.quad == QuadratureKind::Midpoint) throw ParameterError("midpoint is not a Nystrom rule option");
    cfg.n = n;
    cfg.regularize = regularize;
    cfg.use_parity = parity;
    cfg.neumann_tol = tol;
    return cfg;
  }
};

OutputTable cmd_solve(const std::string& sign, const std::string& rhs, double alpha, const SolverFlags& flags,
                      int probes) {
  if (probes < 2) throw ParameterError("--probes must be at least 2");
  const EquationSpec spec(parse_sign(sign), alpha, parse_rhs(rhs));
  const auto cfg = flags.config();
  const auto sol = solve(spec, cfg);
  OutputTable t;
  t.add_meta("sign", to_string(spec.sign()));
  t.add_meta("alpha", format_number(alpha));
  t.add_meta("rhs", spec.rhs().describe());
  describe_config(t, cfg);
  t.add_meta("residual_norm",
             format_number(residual_norm(spec, [&](double x) { return sol.eval(x); }, 64)));
  t.columns = {"x", "u"};
  for (int k = 0; k < probes; ++k) {
    const double x = k == probes - 1 ? 1.0 : -1.0 + 2.0 * k / (probes - 1);
    t.add_row({x, sol.eval(x)});
  }
  return t;
}

OutputTable cmd_sweep(const std::string& sign, const std::string& alphas, const SolverFlags& flags) {
  const auto grid = parse_values(alphas);
  const auto cfg = flags.config();
  OutputTable t;
  t.add_meta("sign", sign);
  t.add_meta("rhs", "one");
  describe_config(t, cfg);
  t.columns = {"alpha", "u_at_1", "capacitance"};
  const Sign s = parse_sign(sign);
  for (double a : grid) {
    if (!(a > 0.0)) throw ParameterError("alphas must be positive");
    const auto sol = solve(EquationSpec(s, a, RhsSpec::one()), cfg);
    t.add_row({a, sol.eval(1.0), sol.integrate([](double) { return 1.0; })});
  }
  return t;
}

OutputTable cmd_energy(const std::string& model, const std::string& alphas, const SolverFlags& flags) {
  EnergyModel m;
  if (model == "lieb-liniger") {
    m = EnergyModel::LiebLiniger;
  } else if (model == "gaudin") {
    m = EnergyModel::Gaudin;
  } else {
    throw ParameterError("model must be lieb-liniger or gaudin");
  }
  const auto cfg = flags.config();
  const auto curve = energy_curve(m, parse_values(alphas), cfg);
  OutputTable t;
  t.add_meta("model", model);
  describe_config(t, cfg);
  t.columns = {"gamma", "e", "alpha"};
  for (const auto& p : curve.points) {
    if (p.failed) throw NumericalError("alpha = " + format_number(p.alpha) + ": " + p.error);
    t.add_row({p.gamma, p.e, p.alpha});
  }
  return t;
}

OutputTable cmd_infinite(const std::string& sign, const std::string& rhs, double alpha, const std::string& xs) {
  const auto colon = rhs.find(':');
  if (colon == std::string::npos) throw ParameterError("rhs must be tophat:<L>, odd:<kappa> or even:<kappa>");
  const std::string head = rhs.substr(0, colon);
  const auto params = parse_values(rhs.substr(colon + 1));
  if (params.size() != 1) throw ParameterError("rhs takes one parameter");
  InfiniteProblem::Rhs kind;
  if (head == "tophat") {
    kind = InfiniteProblem::Rhs::TopHat;
  } else if (head == "odd") {
    kind = InfiniteProblem::Rhs::OddLorentzian;
  } else if (head == "even") {
    kind = InfiniteProblem::Rhs::EvenLorentzian;
  } else {
    throw ParameterError("rhs must be tophat:<L>, odd:<kappa> or even:<kappa>");
  }
  const auto p = make_infinite_problem(parse_sign(sign), alpha, kind, params[0]);
  if (p.sign == Sign::MinusKernel && kind == InfiniteProblem::Rhs::TopHat) {
    throw ParameterError("no catalogued solution for the minus equation with a top hat");
  }

  // Closed forms for the special parameter ratios.
  const double k = p.param;
  const double rel = 1e-14;
  std::function<double(double)> closed;
  if (p.sign == Sign::PlusKernel && kind == InfiniteProblem::Rhs::OddLorentzian && std::abs(alpha - k) <= rel * k) {
    closed = [a = alpha](double x) { return x == 0.0 ? 0.0 : 1.0 / (2.0 * x) - pi / (2.0 * a * std::sinh(pi * x / a)); };
  } else if (p.sign == Sign::PlusKernel && kind == InfiniteProblem::Rhs::EvenLorentzian &&
             std::abs(alpha - 2.0 * k) <= rel * k) {
    closed = [a = alpha](double x) { return pi / (2.0 * a) / std::cosh(pi * x / a); };
  } else if (p.sign == Sign::MinusKernel && kind == InfiniteProblem::Rhs::OddLorentzian &&
             std::abs(alpha - k) <= rel * k) {
    closed = [a = alpha](double x) { return x == 0.0 ? 0.0 : pi / (2.0 * a) / std::tanh(pi * x / a) - 1.0 / (2.0 * x); };
  }

  OutputTable t;
  t.add_meta("sign", sign);
  t.add_meta("rhs", rhs);
  t.add_meta("alpha", format_number(alpha));
  if (p.sign == Sign::MinusKernel && kind == InfiniteProblem::Rhs::EvenLorentzian) {
    t.add_meta("gauge", "finite part; defined up to an additive constant");
  }
  t.columns = {"x", "u", "g"};
  if (closed) t.columns.push_back("u_closed_form");
  for (double x : parse_values(xs)) {
    std::vector<double> row = {x, p.u(x), p.g(x)};
    if (closed) row.push_back(closed(x));
    t.add_row(std::move(row));
  }
  return t;
}

OutputTable fit_table(const std::vector<double>& t, const std::vector<double>& y) {
  const auto fit = power_fit(t, y);
  OutputTable out;
  out.columns = {"a", "b", "c", "rmse"};
  out.add_row({fit.a, fit.b, fit.c, fit.rmse});
  return out;
}

OutputTable cmd_fit(const std::string& path, const std::string& xcol, const std::string& ycol) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot read " + path);
  const auto table = read_table(in);
  const auto ix = xcol.empty() ? 0 : table.column(xcol);
  const auto iy = ycol.empty() ? 1 : table.column(ycol);
  if (table.columns.size() < 2) throw ParameterError("fit needs two columns");
  std::vector<double> t;
  std::vector<double> y;
  for (const auto& r : table.rows) {
    t.push_back(r[ix]);
    y.push_back(r[iy]);
  }
  auto out = fit_table(t, y);
  out.add_meta("input", path);
  out.add_meta("x_column", table.columns[ix]);
  out.add_meta("y_column", table.columns[iy]);
  return out;
}

OutputTable profile_figure(Sign sign, RhsSpec rhs, int nodes) {
  const double alpha = 0.1;
  const EquationSpec spec(sign, alpha, std::move(rhs));
  const auto rule = make_rule(QuadratureKind::Simpson, nodes);
  const auto sol = solve_nystrom(spec, rule);
  OutputTable t;
  t.add_meta("sign", to_string(sign));
  t.add_meta("alpha", format_number(alpha));
  t.add_meta("rhs", spec.rhs().describe());
  t.add_meta("method", "nystrom");
  t.add_meta("quad", "simpson");
  t.add_meta("n", std::to_string(nodes));
  t.add_meta("intervals", std::to_string(nodes - 1));
  t.add_meta("note", "rows at interior nodes; the outer approximations are singular at x = +-1");
  for (int i = 1; i + 1 < rule.n; ++i) t.rows.push_back({rule.nodes[i], sol.values[i]});
  return t;
}

}  // namespace

OutputTable figure_table(int id) {
  switch (id) {
    case 1: {
      auto t = profile_figure(Sign::MinusKernel, RhsSpec::one(), 129);
      t.columns = {"x", "u_numeric", "u_approx_H47"};
      for (auto& r : t.rows) r.push_back(small_alpha_outer(OuterKind::LiebOneTwoTerm, r[0], 0.1));
      return t;
    }
    case 2: {
      auto t = profile_figure(Sign::PlusKernel, RhsSpec::one(), 65);
      t.columns = {"x", "u_numeric", "u_approx_AL37"};
      for (auto& r : t.rows) r.push_back(small_alpha_outer(OuterKind::GaudinOneTwoTerm, r[0], 0.1));
      return t;
    }
    case 3: {
      const auto cfg = endpoint_sweep_config();
      const auto grid = log_space(0.05, 0.8, 33);
      const auto sweep = endpoint_sweep(Sign::MinusKernel, grid, cfg);
      std::vector<double> y;
      for (const auto& pt : sweep) y.push_back(pt.second);
      const auto fit = power_fit(grid, y);
      OutputTable t;
      t.add_meta("sign", "minus");
      t.add_meta("rhs", "one");
      describe_config(t, cfg);
      t.add_meta("fit_a", format_number(fit.a));
      t.add_meta("fit_b", format_number(fit.b));
      t.add_meta("fit_c", format_number(fit.c));
      t.add_meta("fit_rmse", format_number(fit.rmse));
      t.columns = {"alpha", "u_at_1", "u_fit"};
      for (const auto& [a, u] : sweep) t.add_row({a, u, fit.a * std::pow(a, fit.b) + fit.c});
      return t;
    }
    case 4: {
      auto t = profile_figure(Sign::MinusKernel, RhsSpec::x(), 129);
      t.columns = {"x", "u_numeric", "u_approx_hutson", "u_approx_reichert"};
      for (auto& r : t.rows) {
        r.push_back(small_alpha_outer(OuterKind::LiebXHutson, r[0], 0.1));
        r.push_back(small_alpha_outer(OuterKind::LiebXReichert, r[0], 0.1));
      }
      return t;
    }
    default:
      throw ParameterError("figure id must be 1, 2, 3 or 4");
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Love-Lieb integral equation solvers", "lovelieb"};
  app.set_version_flag("--version", std::string("lovelieb ") + kVersion);
  app.require_subcommand(1);

  std::string out_path;
  app.add_option("--out", out_path, "write the table to this file instead of stdout");

  std::string sign = "minus";
  std::string rhs = "one";
  double alpha = 1.0;
  int probes = 201;
  SolverFlags flags;
  auto* solve_cmd = app.add_subcommand("solve", "solve one equation and tabulate u at probe points");
  solve_cmd->add_option("--sign", sign, "plus|minus");
  solve_cmd->add_option("--rhs", rhs, "one|x|poly:<c0,c1,...>|hulthen|qwell:<beta>");
  solve_cmd->add_option("--alpha", alpha)->required();
  solve_cmd->add_option("--probes", probes, "equispaced output points");
  flags.attach(solve_cmd);

  std::string alphas;
  auto* sweep_cmd = app.add_subcommand("sweep", "u(1) and capacitance over an alpha grid (g = 1)");
  sweep_cmd->add_option("--sign", sign, "plus|minus");
  sweep_cmd->add_option("--alphas", alphas, "list a,b,c or range start:stop:count")->required();
  flags.attach(sweep_cmd);

  std::string model = "lieb-liniger";
  auto* energy_cmd = app.add_subcommand("energy", "ground-state energy curve (gamma, e)");
  energy_cmd->add_option("--model", model, "lieb-liniger|gaudin");
  energy_cmd->add_option("--alphas", alphas, "list or range")->required();
  flags.attach(energy_cmd);

  std::string xs = "-3:3:61";
  std::string line_rhs;
  auto* inf_cmd = app.add_subcommand("infinite", "whole-line closed-form solutions");
  inf_cmd->add_option("--sign", sign, "plus|minus");
  inf_cmd->add_option("--rhs", line_rhs, "tophat:<L>|odd:<kappa>|even:<kappa>")->required();
  inf_cmd->add_option("--alpha", alpha)->required();
  inf_cmd->add_option("--xs", xs, "list or range");

  std::string in_path;
  std::string xcol;
  std::string ycol;
  auto* fit_cmd = app.add_subcommand("fit", "fit a t^b + c to two columns of a CSV file");
  fit_cmd->add_option("--in", in_path)->required();
  fit_cmd->add_option("--x-col", xcol, "abscissa column (default: first)");
  fit_cmd->add_option("--y-col", ycol, "ordinate column (default: second)");

  int fig_id = 0;
  auto* fig_cmd = app.add_subcommand("fig", "figure data as CSV");
  fig_cmd->add_option("--id", fig_id, "1..4")->required();

  for (auto* sub : {solve_cmd, sweep_cmd, energy_cmd, inf_cmd, fit_cmd, fig_cmd}) {
    sub->add_option("--out", out_path, "write the table to this file instead of stdout");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    OutputTable table;
    if (*solve_cmd) {
      table = cmd_solve(sign, rhs, alpha, flags, probes);
    } else if (*sweep_cmd) {
      table = cmd_sweep(sign, alphas, flags);
    } else if (*energy_cmd) {
      table = cmd_energy(model, alphas, flags);
    } else if (*inf_cmd) {
      table = cmd_infinite(sign, line_rhs, alpha, xs);
    } else if (*fit_cmd) {
      table = cmd_fit(in_path, xcol, ycol);
    } else {
      table = figure_table(fig_id);
    }
    table.metadata.insert(table.metadata.begin(), {"version", kVersion});
    table.metadata.insert(table.metadata.begin(), {"command", "lovelieb " + join(args, " ")});

    std::ostringstream buf;
    table.write(buf);
    if (out_path.empty()) {
      out << buf.str();
    } else {
      std::ofstream f(out_path);
      if (!(f << buf.str()) || !f.flush()) throw std::ios_base::failure("cannot write " + out_path);
    }
    return kExitOk;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace lovelieb
