#include "lovelieb/neumann.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>

namespace lovelieb {

double convergence_margin(const EquationSpec& spec) {
  return 2.0 * std::abs(spec.lambda()) / std::numbers::pi * std::atan(1.0 / spec.alpha());
}

NeumannResult solve_neumann(const EquationSpec& spec, const QuadratureRule& rule,
                            const NeumannOptions& opts) {
  if (!(opts.tol > 0.0)) throw ParameterError("tolerance must be positive");
  if (opts.max_iter < 1) throw ParameterError("max_iter must be at least 1");

  const int n = rule.n;
  Eigen::MatrixXd wk(n, n);
  Eigen::VectorXd g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) wk(i, j) = rule.weights[j] * kernel_eval(rule.nodes[i] - rule.nodes[j], spec.alpha());
    g(i) = spec.g(rule.nodes[i]);
  }
  wk *= spec.lambda();

  Eigen::VectorXd u = g;
  if (opts.warm_start) {
    if (static_cast<int>(opts.warm_start->size()) != n) throw ParameterError("warm start has the wrong length");
    u = Eigen::Map<const Eigen::VectorXd>(opts.warm_start->data(), n);
  }

  NeumannResult res{GridSolution{spec, rule, {}, false, Closure::Nystrom}, 0, 0.0, {}};
  for (int it = 1; it <= opts.max_iter; ++it) {
    Eigen::VectorXd next = g + wk * u;
    const double diff = (next - u).lpNorm<Eigen::Infinity>();
    u = std::move(next);
    res.iterations = it;
    res.last_difference = diff;
    res.history.push_back(diff);
    if (diff < opts.tol) {
      res.solution.values.assign(u.data(), u.data() + n);
      return res;
    }
  }
  res.solution.values.assign(u.data(), u.data() + n);
  throw NonConvergenceError("successive approximation did not reach the tolerance", std::move(res));
}

}  // namespace lovelieb
