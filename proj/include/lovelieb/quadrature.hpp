#pragma once

#include <string>
#include <vector>

namespace lovelieb {

enum class QuadratureKind { Trapezoid, Simpson, GaussLegendre, ClenshawCurtis, Midpoint };

std::string to_string(QuadratureKind k);
QuadratureKind quadrature_kind_from_string(const std::string& s);

/// Nodes (strictly ascending, in [-1,1]) and positive weights summing to 2.
struct QuadratureRule {
  QuadratureKind kind;
  int n;
  std::vector<double> nodes;
  std::vector<double> weights;

  double integrate(const std::vector<double>& values) const;
  /// Index of the node mirrored through the origin.
  int mirror(int i) const noexcept { return n - 1 - i; }
};

/// Rule with n nodes on [-1,1]. Simpson needs odd n >= 3; all others n >= 2
/// (Midpoint accepts n >= 1).
///
/// Gauss-Legendre nodes come from Newton iteration on P_n started at the
/// Chebyshev angles; Clenshaw-Curtis weights from the explicit cosine sum.
QuadratureRule make_rule(QuadratureKind kind, int n);

/// Legendre polynomial P_n(x) and its derivative by the three-term recurrence.
struct LegendreValue {
  double p;
  double dp;
};
LegendreValue legendre_p(int n, double x);

/// Effective number of panels used as the mesh parameter in error models:
/// n - 1 for closed composite rules, n otherwise.
double mesh_count(QuadratureKind kind, int n);

}  // namespace lovelieb
