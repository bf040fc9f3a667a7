#pragma once

#include <functional>
#include <vector>

#include "lovelieb/core.hpp"
#include "lovelieb/quadrature.hpp"

namespace lovelieb {

/// How node values extend to all of [-1,1].
enum class Closure {
  Nystrom,             // u(x) = g(x) + lambda sum_j w_j K(x - x_j) u_j
  RegularizedNystrom,  // same sums, with the diagonal carried by the exact K-integral
  Elements,            // u(x) = g(x) + lambda sum_j u_j int_{E_j} K(x - y) dy
};

/// Node values u_i ~ u(x_i) from a grid-based solver.
struct GridSolution {
  EquationSpec spec;
  QuadratureRule rule;
  std::vector<double> values;
  bool regularized = false;
  Closure closure = Closure::Nystrom;
};

struct NystromOptions {
  bool regularize = false;
  bool use_parity = false;
};

/// Nystrom collocation u_i - lambda sum_j w_j K(x_i - x_j) u_j = g(x_i).
///
/// With `regularize` the system is assembled from
///   u(x) (1 - lambda Kint(x)) - lambda int K(x-y) (u(y) - u(x)) dy = g(x),
/// which moves the near-singular part of the kernel into the exact integral.
/// With `use_parity` (requires an even or odd right-hand side) only the nodes
/// in [0,1] are unknowns and the kernel is folded as K(x-y) +- K(x+y).
GridSolution solve_nystrom(const EquationSpec& spec, const QuadratureRule& rule,
                           const NystromOptions& opts = {});

/// Evaluates the solution's natural interpolant at x in [-1,1].
double eval_solution(const GridSolution& sol, double x);

/// Piecewise-constant elements with midpoint collocation and exact
/// element integrals. Returned on the element midpoints.
GridSolution solve_elements(const EquationSpec& spec, int n_elements);

/// Which grid solver a Richardson sequence refines.
struct GridMethod {
  enum class Kind { Nystrom, Elements };
  Kind kind = Kind::Nystrom;
  QuadratureKind rule = QuadratureKind::Simpson;
  NystromOptions nystrom{};

  static GridMethod nystrom_with(QuadratureKind rule, NystromOptions opts = {}) {
    return {Kind::Nystrom, rule, opts};
  }
  static GridMethod elements() { return {Kind::Elements, QuadratureKind::Midpoint, {}}; }
};

GridSolution solve_grid(const EquationSpec& spec, const GridMethod& method, int n);

struct RichardsonResult {
  double value = 0.0;           // extrapolated u_inf (finest value if not monotone)
  double order = 0.0;           // estimated p in u_n = u_inf + C n^-p; 0 when not estimated
  bool monotone = true;         // false: differences alternate in sign, value = finest
  std::vector<double> levels;   // u_n at each requested n
};

/// Extrapolates a sequence of values u(h_k), h_k = 1/mesh_k, to mesh -> inf
/// using the last three levels: the order p is solved from the ratio of
/// successive differences.
RichardsonResult richardson_from_levels(const std::vector<double>& mesh,
                                        const std::vector<double>& values);

/// Solves at every n in `n_list` (ascending, at least three entries), evaluates
/// at `x_probe` and extrapolates.
RichardsonResult richardson_extrapolate(const EquationSpec& spec, const GridMethod& method,
                                        const std::vector<int>& n_list, double x_probe);
RichardsonResult richardson_extrapolate(const EquationSpec& spec, QuadratureKind rule_kind,
                                        const std::vector<int>& n_list, double x_probe);

/// Max over m off-node sample points of |u(x) - lambda int K(x-y) u(y) dy - g(x)|,
/// the integral taken by adaptive quadrature (independent of any solver grid).
double residual_norm(const EquationSpec& spec, const std::function<double(double)>& u,
                     int m_samples);
double residual_norm(const EquationSpec& spec, const GridSolution& sol, int m_samples);

/// Same residual evaluated exactly at the solution's nodes (collocation check).
double nodal_residual(const GridSolution& sol);

}  // namespace lovelieb
