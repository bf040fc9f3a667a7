#include "lovelieb/nystrom.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "lovelieb/errors.hpp"
#include "lovelieb/integrate.hpp"

namespace lovelieb {

namespace {

constexpr double kMinRcond = 1e-13;

Eigen::VectorXd dense_solve(const Eigen::MatrixXd& a, const Eigen::VectorXd& b) {
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
  const double rcond = lu.rcond();
  Eigen::VectorXd x = lu.solve(b);
  if (!(rcond > kMinRcond) || !x.allFinite()) {
    throw SingularSystemError("collocation system is singular to working precision", rcond);
  }
  return x;
}

// Coefficients a_ij of the full (unfolded) row i.
void assemble_row(const EquationSpec& spec, const QuadratureRule& rule, bool regularize, int i,
                  std::vector<double>& row) {
  const double lambda = spec.lambda();
  const double alpha = spec.alpha();
  const double xi = rule.nodes[i];
  row.assign(rule.n, 0.0);
  double off_sum = 0.0;
  for (int j = 0; j < rule.n; ++j) {
    const double wk = rule.weights[j] * kernel_eval(xi - rule.nodes[j], alpha);
    if (j != i) off_sum += wk;
    row[j] = -lambda * wk;
  }
  if (regularize) {
    row[i] = 1.0 - lambda * kernel_cdf_integral(xi, alpha) + lambda * off_sum;
  } else {
    row[i] += 1.0;
  }
}

void check_symmetric(const QuadratureRule& rule) {
  for (int i = 0; i < rule.n; ++i) {
    if (std::abs(rule.nodes[i] + rule.nodes[rule.mirror(i)]) > 1e-13 ||
        std::abs(rule.weights[i] - rule.weights[rule.mirror(i)]) > 1e-13) {
      throw ParameterError("parity reduction needs a rule symmetric about the origin");
    }
  }
}

std::vector<double> solve_full(const EquationSpec& spec, const QuadratureRule& rule, bool regularize) {
  const int n = rule.n;
  Eigen::MatrixXd a(n, n);
  Eigen::VectorXd b(n);
  std::vector<double> row;
  for (int i = 0; i < n; ++i) {
    assemble_row(spec, rule, regularize, i, row);
    for (int j = 0; j < n; ++j) a(i, j) = row[j];
    b(i) = spec.g(rule.nodes[i]);
  }
  const Eigen::VectorXd u = dense_solve(a, b);
  return {u.data(), u.data() + n};
}

std::vector<double> solve_folded(const EquationSpec& spec, const QuadratureRule& rule,
                                 bool regularize, Parity parity) {
  check_symmetric(rule);
  const int n = rule.n;
  const double s = parity == Parity::Even ? 1.0 : -1.0;
  const bool has_center = n % 2 == 1;

  // Unknowns: nodes in (0,1], plus the centre node for even solutions.
  std::vector<int> unknowns;
  if (has_center && parity == Parity::Even) unknowns.push_back(n / 2);
  for (int i = (n + 1) / 2; i < n; ++i) unknowns.push_back(i);

  const int m = static_cast<int>(unknowns.size());
  Eigen::MatrixXd a(m, m);
  Eigen::VectorXd b(m);
  std::vector<double> row;
  for (int r = 0; r < m; ++r) {
    const int i = unknowns[r];
    assemble_row(spec, rule, regularize, i, row);
    for (int c = 0; c < m; ++c) {
      const int j = unknowns[c];
      const int jm = rule.mirror(j);
      a(r, c) = (jm == j) ? row[j] : row[j] + s * row[jm];
    }
    b(r) = spec.g(rule.nodes[i]);
  }
  const Eigen::VectorXd half = dense_solve(a, b);

  std::vector<double> u(n, 0.0);
  for (int c = 0; c < m; ++c) {
    const int j = unknowns[c];
    u[j] = half(c);
    u[rule.mirror(j)] = s * half(c);
  }
  if (has_center && parity == Parity::Odd) u[n / 2] = 0.0;
  return u;
}

void require_in_interval(double x) {
  if (!(std::abs(x) <= 1.0 + 1e-12)) throw DomainError("x must lie in [-1, 1]");
}

}  // namespace

GridSolution solve_nystrom(const EquationSpec& spec, const QuadratureRule& rule,
                           const NystromOptions& opts) {
  GridSolution sol{spec, rule, {}, opts.regularize,
                   opts.regularize ? Closure::RegularizedNystrom : Closure::Nystrom};
  if (opts.use_parity) {
    const auto parity = spec.rhs().parity();
    if (!parity) throw ParameterError("parity reduction requested for a right-hand side without parity");
    sol.values = solve_folded(spec, rule, opts.regularize, *parity);
  } else {
    sol.values = solve_full(spec, rule, opts.regularize);
  }
  return sol;
}

double eval_solution(const GridSolution& sol, double x) {
  require_in_interval(x);
  const double lambda = sol.spec.lambda();
  const double alpha = sol.spec.alpha();
  const auto& r = sol.rule;

  switch (sol.closure) {
    case Closure::Nystrom: {
      double s = 0.0;
      for (int j = 0; j < r.n; ++j) s += r.weights[j] * kernel_eval(x - r.nodes[j], alpha) * sol.values[j];
      return sol.spec.g(x) + lambda * s;
    }
    case Closure::RegularizedNystrom: {
      double s = 0.0;
      double wsum = 0.0;
      for (int j = 0; j < r.n; ++j) {
        const double wk = r.weights[j] * kernel_eval(x - r.nodes[j], alpha);
        s += wk * sol.values[j];
        wsum += wk;
      }
      return (sol.spec.g(x) + lambda * s) /
             (1.0 - lambda * kernel_cdf_integral(x, alpha) + lambda * wsum);
    }
    case Closure::Elements: {
      const double h = 2.0 / r.n;
      double s = 0.0;
      for (int j = 0; j < r.n; ++j) {
        s += sol.values[j] * kernel_segment_integral(x, -1.0 + j * h, -1.0 + (j + 1) * h, alpha);
      }
      return sol.spec.g(x) + lambda * s;
    }
  }
  return 0.0;
}

GridSolution solve_elements(const EquationSpec& spec, int n_elements) {
  if (n_elements < 1) throw ParameterError("element method needs at least one element");
  const auto rule = make_rule(QuadratureKind::Midpoint, n_elements);
  const double h = 2.0 / n_elements;
  const double lambda = spec.lambda();

  Eigen::MatrixXd a(n_elements, n_elements);
  Eigen::VectorXd b(n_elements);
  for (int i = 0; i < n_elements; ++i) {
    const double xi = rule.nodes[i];
    for (int j = 0; j < n_elements; ++j) {
      a(i, j) = (i == j ? 1.0 : 0.0) -
                lambda * kernel_segment_integral(xi, -1.0 + j * h, -1.0 + (j + 1) * h, spec.alpha());
    }
    b(i) = spec.g(xi);
  }
  const Eigen::VectorXd u = dense_solve(a, b);
  return GridSolution{spec, rule, {u.data(), u.data() + n_elements}, false, Closure::Elements};
}

GridSolution solve_grid(const EquationSpec& spec, const GridMethod& method, int n) {
  if (method.kind == GridMethod::Kind::Elements) return solve_elements(spec, n);
  return solve_nystrom(spec, make_rule(method.rule, n), method.nystrom);
}

RichardsonResult richardson_from_levels(const std::vector<double>& mesh,
                                        const std::vector<double>& values) {
  if (mesh.size() != values.size() || mesh.size() < 3) {
    throw ParameterError("Richardson extrapolation needs at least three levels");
  }
  RichardsonResult res;
  res.levels = values;
  const std::size_t k = values.size();
  const double h1 = 1.0 / mesh[k - 3];
  const double h2 = 1.0 / mesh[k - 2];
  const double h3 = 1.0 / mesh[k - 1];
  const double d1 = values[k - 2] - values[k - 3];
  const double d2 = values[k - 1] - values[k - 2];
  res.value = values[k - 1];

  if (d1 == 0.0 && d2 == 0.0) return res;
  if (d1 * d2 <= 0.0 || std::abs(d2) >= std::abs(d1)) {
    res.monotone = false;
    return res;
  }

  // Solve (h1^p - h2^p) / (h2^p - h3^p) = d1 / d2 for p by bisection; the
  // left side increases monotonically in p for h1 > h2 > h3.
  const double target = d1 / d2;
  auto ratio = [&](double p) {
    return (std::pow(h1, p) - std::pow(h2, p)) / (std::pow(h2, p) - std::pow(h3, p));
  };
  double lo = 1e-3;
  double hi = 40.0;
  if (ratio(lo) > target || ratio(hi) < target) {
    res.monotone = false;
    return res;
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (ratio(mid) < target ? lo : hi) = mid;
  }
  const double p = 0.5 * (lo + hi);
  const double c = d2 / (std::pow(h3, p) - std::pow(h2, p));
  res.order = p;
  res.value = values[k - 1] - c * std::pow(h3, p);
  return res;
}

RichardsonResult richardson_extrapolate(const EquationSpec& spec, const GridMethod& method,
                                        const std::vector<int>& n_list, double x_probe) {
  if (n_list.size() < 3) throw ParameterError("Richardson extrapolation needs at least three grids");
  if (!std::is_sorted(n_list.begin(), n_list.end()) ||
      std::adjacent_find(n_list.begin(), n_list.end()) != n_list.end()) {
    throw ParameterError("grid sizes must be strictly ascending");
  }
  std::vector<double> mesh;
  std::vector<double> values;
  for (int n : n_list) {
    const auto sol = solve_grid(spec, method, n);
    values.push_back(eval_solution(sol, x_probe));
    mesh.push_back(method.kind == GridMethod::Kind::Elements ? n : mesh_count(method.rule, n));
  }
  return richardson_from_levels(mesh, values);
}

RichardsonResult richardson_extrapolate(const EquationSpec& spec, QuadratureKind rule_kind,
                                        const std::vector<int>& n_list, double x_probe) {
  return richardson_extrapolate(spec, GridMethod::nystrom_with(rule_kind), n_list, x_probe);
}

double residual_norm(const EquationSpec& spec, const std::function<double(double)>& u,
                     int m_samples) {
  if (m_samples < 1) throw ParameterError("residual needs at least one sample point");
  // Golden-ratio offset keeps samples away from the nodes of the usual rules.
  constexpr double offset = 0.3819660112501051;
  double worst = 0.0;
  for (int k = 0; k < m_samples; ++k) {
    const double x = -1.0 + 2.0 * (k + offset) / m_samples;
    const double ku = integrate_against_kernel(u, x, spec.alpha(), 1e-12);
    worst = std::max(worst, std::abs(u(x) - spec.lambda() * ku - spec.g(x)));
  }
  return worst;
}

double residual_norm(const EquationSpec& spec, const GridSolution& sol, int m_samples) {
  return residual_norm(spec, [&](double x) { return eval_solution(sol, x); }, m_samples);
}

double nodal_residual(const GridSolution& sol) {
  const auto& r = sol.rule;
  double worst = 0.0;
  if (sol.closure == Closure::Elements) {
    const double h = 2.0 / r.n;
    for (int i = 0; i < r.n; ++i) {
      double s = 0.0;
      for (int j = 0; j < r.n; ++j) {
        s += sol.values[j] * kernel_segment_integral(r.nodes[i], -1.0 + j * h, -1.0 + (j + 1) * h,
                                                     sol.spec.alpha());
      }
      worst = std::max(worst, std::abs(sol.values[i] - sol.spec.lambda() * s - sol.spec.g(r.nodes[i])));
    }
    return worst;
  }
  std::vector<double> row;
  for (int i = 0; i < r.n; ++i) {
    assemble_row(sol.spec, r, sol.regularized, i, row);
    double s = -sol.spec.g(r.nodes[i]);
    for (int j = 0; j < r.n; ++j) s += row[j] * sol.values[j];
    worst = std::max(worst, std::abs(s));
  }
  return worst;
}

}  // namespace lovelieb
