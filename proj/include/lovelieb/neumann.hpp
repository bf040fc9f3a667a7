#pragma once

#include <optional>
#include <vector>

#include "lovelieb/errors.hpp"
#include "lovelieb/nystrom.hpp"

namespace lovelieb {

/// (2|lambda|/pi) atan(1/alpha): the contraction factor of successive
/// approximation, < 1 for lambda = +-1 and every alpha > 0.
double convergence_margin(const EquationSpec& spec);

struct NeumannOptions {
  double tol = 1e-10;
  int max_iter = 1000;
  /// Initial iterate at the rule's nodes; defaults to u_0 = g.
  std::optional<std::vector<double>> warm_start;
};

struct NeumannResult {
  GridSolution solution;
  int iterations = 0;
  /// sup-norm of the last update.
  double last_difference = 0.0;
  /// sup-norm of every update, first iteration first.
  std::vector<double> history;
};

/// Raised when max_iter is reached; carries the last iterate.
class NonConvergenceError : public NumericalError {
 public:
  NonConvergenceError(const std::string& what, NeumannResult last)
      : NumericalError(what), last_(std::move(last)) {}
  const NeumannResult& last() const noexcept { return last_; }

 private:
  NeumannResult last_;
};

/// Successive approximation u_n = g + lambda K u_{n-1} on the rule's nodes,
/// stopping once max_i |u_n(x_i) - u_{n-1}(x_i)| < tol.
NeumannResult solve_neumann(const EquationSpec& spec, const QuadratureRule& rule,
                            const NeumannOptions& opts = {});

}  // namespace lovelieb
