#include "lovelieb/observables.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Dense>
// pchip.hpp calls isnan unqualified.
#include <math.h>
#include <boost/math/interpolators/pchip.hpp>

#include "lovelieb/neumann.hpp"

namespace lovelieb {

using std::numbers::pi;

std::string to_string(SolverMethod m) {
  switch (m) {
    case SolverMethod::Nystrom:
      return "nystrom";
    case SolverMethod::Elements:
      return "elements";
    case SolverMethod::Neumann:
      return "neumann";
    case SolverMethod::Collocation:
      return "collocation";
    case SolverMethod::Galerkin:
      return "galerkin";
    case SolverMethod::Maclaurin:
      return "maclaurin";
  }
  return "?";
}

SolverMethod solver_method_from_string(const std::string& s) {
  for (auto m : {SolverMethod::Nystrom, SolverMethod::Elements, SolverMethod::Neumann, SolverMethod::Collocation,
                 SolverMethod::Galerkin, SolverMethod::Maclaurin}) {
    if (to_string(m) == s) return m;
  }
  throw ParameterError("unknown method '" + s + "'");
}

const EquationSpec& Solution::spec() const {
  return std::visit([](const auto& s) -> const EquationSpec& { return s.spec; }, impl_);
}

double Solution::eval(double x) const {
  if (const auto* g = grid()) return eval_solution(*g, x);
  return eval_expansion(*expansion(), x);
}

double Solution::integrate(const RealFn& w) const {
  if (const auto* g = grid()) {
    double s = 0.0;
    for (int i = 0; i < g->rule.n; ++i) s += g->rule.weights[i] * w(g->rule.nodes[i]) * g->values[i];
    return s;
  }
  const auto& e = *expansion();
  const auto rule = make_rule(QuadratureKind::GaussLegendre, 4 * static_cast<int>(e.coeffs.size()) + 64);
  double s = 0.0;
  for (int i = 0; i < rule.n; ++i) s += rule.weights[i] * w(rule.nodes[i]) * eval_expansion(e, rule.nodes[i]);
  return s;
}

Solution solve(const EquationSpec& spec, const SolverConfig& cfg) {
  switch (cfg.method) {
    case SolverMethod::Nystrom:
      return Solution(solve_nystrom(spec, make_rule(cfg.quad, cfg.n), {cfg.regularize, cfg.use_parity}));
    case SolverMethod::Elements:
      return Solution(solve_elements(spec, cfg.n));
    case SolverMethod::Neumann: {
      NeumannOptions opts;
      opts.tol = cfg.neumann_tol;
      return Solution(solve_neumann(spec, make_rule(cfg.quad, cfg.n), opts).solution);
    }
    case SolverMethod::Collocation:
    case SolverMethod::Galerkin: {
      const auto parity = spec.rhs().parity();
      if (!parity) throw ParameterError("expansion methods need an even or odd right-hand side");
      const Basis basis = *parity == Parity::Even ? Basis::ChebyshevEven : Basis::ChebyshevOdd;
      if (cfg.method == SolverMethod::Galerkin) return Solution(solve_galerkin(spec, basis, cfg.n));
      return Solution(solve_collocation(spec, basis, cfg.n, cfg.m_points > 0 ? cfg.m_points : cfg.n + 1));
    }
    case SolverMethod::Maclaurin:
      return Solution(solve_maclaurin(spec, cfg.n));
  }
  throw ParameterError("unknown solver method");
}

namespace {

void require_rhs(const EquationSpec& spec, RhsSpec::Kind kind, const char* what) {
  if (spec.rhs().kind() != kind) throw ParameterError(what);
}

}  // namespace

double capacitance(const GridSolution& sol) {
  require_rhs(sol.spec, RhsSpec::Kind::One, "capacitance needs the g = 1 problem");
  return sol.rule.integrate(sol.values);
}

double capacitance(const ExpansionSolution& sol) {
  require_rhs(sol.spec, RhsSpec::Kind::One, "capacitance needs the g = 1 problem");
  return Solution(sol).integrate([](double) { return 1.0; });
}

double added_mass(const GridSolution& sol) {
  require_rhs(sol.spec, RhsSpec::Kind::X, "added mass needs the g = x problem");
  double s = 0.0;
  for (int i = 0; i < sol.rule.n; ++i) {
    const double x = sol.rule.nodes[i];
    if (x > 0.0) s += sol.rule.weights[i] * x * sol.values[i];
  }
  return 8.0 * s;
}

EnergyPoint energy_point(EnergyModel model, double alpha, const SolverConfig& cfg) {
  EnergyPoint p;
  p.alpha = alpha;
  const Sign sign = model == EnergyModel::LiebLiniger ? Sign::MinusKernel : Sign::PlusKernel;
  try {
    const auto sol = solve(EquationSpec(sign, alpha, RhsSpec::one()), cfg);
    const double m0 = sol.integrate([](double) { return 1.0; });
    const double m2 = sol.integrate([](double x) { return x * x; });
    const double a3 = alpha * alpha * alpha;
    if (model == EnergyModel::LiebLiniger) {
      p.gamma = 2.0 * pi * alpha / m0;
      p.e = std::pow(p.gamma, 3) / (2.0 * pi * a3) * m2;
    } else {
      p.gamma = pi * alpha / (2.0 * m0);
      p.e = -p.gamma * p.gamma / 4.0 + 2.0 * std::pow(p.gamma, 3) / (pi * a3) * m2;
    }
    if (!(p.gamma > 0.0) || !std::isfinite(p.e)) throw NumericalError("non-physical energy point");
  } catch (const std::exception& ex) {
    p.failed = true;
    p.error = ex.what();
    p.gamma = p.e = std::numeric_limits<double>::quiet_NaN();
  }
  return p;
}

EnergyCurve energy_curve(EnergyModel model, const std::vector<double>& alpha_grid, const SolverConfig& cfg) {
  for (double a : alpha_grid) {
    if (!(a > 0.0)) throw ParameterError("alpha grid must be strictly positive");
  }
  EnergyCurve curve{model, {}, alpha_grid};
  for (double a : alpha_grid) curve.points.push_back(energy_point(model, a, cfg));
  std::stable_sort(curve.points.begin(), curve.points.end(), [](const EnergyPoint& l, const EnergyPoint& r) {
    if (l.failed != r.failed) return !l.failed;
    return !l.failed && l.gamma < r.gamma;
  });
  return curve;
}

double energy_at_gamma(const EnergyCurve& curve, double gamma) {
  std::vector<double> g;
  std::vector<double> e;
  for (const auto& p : curve.points) {
    if (p.failed) continue;
    if (!g.empty() && !(p.gamma > g.back())) continue;
    g.push_back(p.gamma);
    e.push_back(p.e);
  }
  if (g.size() < 4) throw ParameterError("interpolation needs at least four successful points");
  if (!(gamma >= g.front() && gamma <= g.back())) throw DomainError("gamma outside the computed curve");
  boost::math::interpolators::pchip<std::vector<double>> interp(std::move(g), std::move(e));
  return interp(gamma);
}

bool BoundReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return !c.applicable || c.passed; });
}

BoundReport bound_report(const EquationSpec& spec, const Solution& sol) {
  std::vector<double> xs;
  if (const auto* g = sol.grid()) xs = g->rule.nodes;
  constexpr int kSamples = 401;
  for (int k = 0; k < kSamples; ++k) xs.push_back(-1.0 + 2.0 * k / (kSamples - 1));

  double umin = std::numeric_limits<double>::infinity();
  double usup = 0.0;
  for (double x : xs) {
    const double u = sol.eval(x);
    umin = std::min(umin, u);
    usup = std::max(usup, std::abs(u));
  }
  double h26 = 0.0;
  double h27 = 0.0;
  constexpr int kFine = 2001;
  for (int k = 0; k < kFine; ++k) {
    const double x = -1.0 + 2.0 * k / (kFine - 1);
    const double g = std::abs(spec.g(x));
    h26 = std::max(h26, g / (1.0 - kernel_cdf_integral(x, spec.alpha())));
    h27 = std::max(h27, pi * g * (1.0 - std::abs(x) + spec.alpha()) / spec.alpha());
  }
  const bool unit = spec.rhs().kind() == RhsSpec::Kind::One;

  auto upper = [&](std::string name, double threshold, bool applicable) {
    return BoundCheck{std::move(name), applicable, !applicable || usup <= threshold, usup, threshold, threshold - usup};
  };
  BoundReport r;
  const bool lower_applies = unit && spec.sign() == Sign::MinusKernel;
  r.checks.push_back({"lower", lower_applies, !lower_applies || umin > 1.0, umin, 1.0, umin - 1.0});
  r.checks.push_back(upper("sup-kernel", h26, true));
  r.checks.push_back(upper("sup-linear", h27, true));
  r.checks.push_back(upper("reich", pi / (2.0 * std::atan(spec.alpha())), unit));
  return r;
}

std::vector<std::pair<double, double>> endpoint_sweep(Sign sign, const std::vector<double>& alpha_grid,
                                                      const SolverConfig& cfg) {
  std::vector<std::pair<double, double>> out;
  for (double a : alpha_grid) {
    if (!(a > 0.0)) throw ParameterError("alpha grid must be strictly positive");
    out.emplace_back(a, solve(EquationSpec(sign, a, RhsSpec::one()), cfg).eval(1.0));
  }
  return out;
}

std::vector<double> log_space(double lo, double hi, int n) {
  if (!(lo > 0.0 && hi > 0.0) || n < 2) throw ParameterError("log_space needs positive bounds and n >= 2");
  std::vector<double> v(n);
  for (int k = 0; k < n; ++k) v[k] = lo * std::pow(hi / lo, double(k) / (n - 1));
  v.back() = hi;
  return v;
}

PowerFit power_fit(const std::vector<double>& t_in, const std::vector<double>& y_in) {
  if (t_in.size() != y_in.size() || t_in.size() < 4) throw ParameterError("power fit needs at least four points");
  for (double t : t_in) {
    if (!(t > 0.0)) throw ParameterError("power fit needs positive abscissae");
  }
  const int n = static_cast<int>(t_in.size());
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int l, int r) { return t_in[l] < t_in[r]; });
  Eigen::VectorXd t(n);
  Eigen::VectorXd y(n);
  for (int i = 0; i < n; ++i) {
    t(i) = t_in[order[i]];
    y(i) = y_in[order[i]];
  }

  auto rmse_of = [&](double a, double b, double c) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += std::pow(a * std::pow(t(i), b) + c - y(i), 2);
    return std::sqrt(s / n);
  };

  const double spread = y.maxCoeff() - y.minCoeff();
  if (spread <= 1e-14 * std::max(1.0, y.cwiseAbs().maxCoeff())) {
    const double mean = y.mean();
    return PowerFit{0.0, 0.0, mean, rmse_of(0.0, 0.0, mean), 0};
  }

  PowerFit p;
  p.c = y(n - 1) - 0.5 * std::abs(y(n - 2) - y(n - 1));
  {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int m = 0;
    for (int i = 0; i < n; ++i) {
      const double d = y(i) - p.c;
      if (!(d > 0.0)) continue;
      const double lx = std::log(t(i));
      const double ly = std::log(d);
      sx += lx, sy += ly, sxx += lx * lx, sxy += lx * ly, ++m;
    }
    const double den = m * sxx - sx * sx;
    p.b = (m >= 2 && den > 0.0) ? (m * sxy - sx * sy) / den : -1.0;
  }
  p.a = (y(0) - p.c) / std::pow(t(0), p.b);
  p.rmse = rmse_of(p.a, p.b, p.c);

  for (int it = 1; it <= 200; ++it) {
    Eigen::MatrixXd jac(n, 3);
    Eigen::VectorXd r(n);
    for (int i = 0; i < n; ++i) {
      const double tb = std::pow(t(i), p.b);
      jac(i, 0) = tb;
      jac(i, 1) = p.a * tb * std::log(t(i));
      jac(i, 2) = 1.0;
      r(i) = p.a * tb + p.c - y(i);
    }
    const Eigen::Vector3d step = jac.colPivHouseholderQr().solve(-r);
    // Step halving keeps Gauss-Newton descending far from the minimum.
    double scale = 1.0;
    PowerFit next = p;
    for (int h = 0; h < 40; ++h, scale *= 0.5) {
      next.a = p.a + scale * step(0);
      next.b = p.b + scale * step(1);
      next.c = p.c + scale * step(2);
      next.rmse = rmse_of(next.a, next.b, next.c);
      if (std::isfinite(next.rmse) && next.rmse <= p.rmse) break;
    }
    next.iterations = it;
    const bool improved = std::isfinite(next.rmse) && next.rmse <= p.rmse;
    const double rel = scale * step.norm() / (1.0 + std::abs(p.a) + std::abs(p.b) + std::abs(p.c));
    if (improved) p = next;
    if (!improved || rel < 1e-12) {
      p.iterations = it;
      return p;
    }
  }
  throw FitError("power fit did not converge in 200 iterations", p);
}

}  // namespace lovelieb
