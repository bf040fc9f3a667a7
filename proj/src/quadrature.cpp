#include "lovelieb/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "lovelieb/errors.hpp"

namespace lovelieb {

using std::numbers::pi;

std::string to_string(QuadratureKind k) {
  switch (k) {
    case QuadratureKind::Trapezoid:
      return "trapezoid";
    case QuadratureKind::Simpson:
      return "simpson";
    case QuadratureKind::GaussLegendre:
      return "gauss";
    case QuadratureKind::ClenshawCurtis:
      return "cc";
    case QuadratureKind::Midpoint:
      return "midpoint";
  }
  return "?";
}

QuadratureKind quadrature_kind_from_string(const std::string& s) {
  if (s == "trapezoid") return QuadratureKind::Trapezoid;
  if (s == "simpson") return QuadratureKind::Simpson;
  if (s == "gauss") return QuadratureKind::GaussLegendre;
  if (s == "cc") return QuadratureKind::ClenshawCurtis;
  if (s == "midpoint") return QuadratureKind::Midpoint;
  throw ParameterError("unknown quadrature rule '" + s + "'");
}

double QuadratureRule::integrate(const std::vector<double>& values) const {
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += weights[i] * values[i];
  return s;
}

LegendreValue legendre_p(int n, double x) {
  if (n == 0) return {1.0, 0.0};
  double p0 = 1.0;
  double p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  // P_n' from (1-x^2) P_n' = n (P_{n-1} - x P_n), with P_n'(+-1) = (+-1)^{n+1} n(n+1)/2.
  if (std::abs(x) == 1.0) return {p1, (n % 2 || x > 0 ? 1.0 : -1.0) * 0.5 * n * (n + 1.0)};
  const double dp = n * (p0 - x * p1) / (1.0 - x * x);
  return {p1, dp};
}

double mesh_count(QuadratureKind kind, int n) {
  switch (kind) {
    case QuadratureKind::Trapezoid:
    case QuadratureKind::Simpson:
      return n - 1.0;
    default:
      return static_cast<double>(n);
  }
}

namespace {

void gauss_legendre(QuadratureRule& r) {
  const int n = r.n;
  for (int k = 0; k < n; ++k) {
    double x = std::cos(pi * (k + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      const auto [p, dp] = legendre_p(n, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double dp = legendre_p(n, x).dp;
    r.nodes[k] = x;
    r.weights[k] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

void clenshaw_curtis(QuadratureRule& r) {
  const int big_n = r.n - 1;
  for (int k = 0; k <= big_n; ++k) {
    const double theta = k * pi / big_n;
    double s = 0.0;
    for (int j = 1; j <= big_n / 2; ++j) {
      const double b = (2 * j == big_n) ? 1.0 : 2.0;
      s += b / (4.0 * j * j - 1.0) * std::cos(2.0 * j * theta);
    }
    const double c = (k == 0 || k == big_n) ? 1.0 : 2.0;
    r.nodes[k] = std::cos(theta);
    r.weights[k] = c / big_n * (1.0 - s);
  }
  // Symmetrize exactly: cos(k pi / N) is not bitwise odd around the middle.
  for (int k = 0; k < r.n / 2; ++k) {
    const double xv = 0.5 * (r.nodes[k] - r.nodes[r.n - 1 - k]);
    r.nodes[k] = xv;
    r.nodes[r.n - 1 - k] = -xv;
  }
  if (r.n % 2 == 1) r.nodes[r.n / 2] = 0.0;
}

}  // namespace

QuadratureRule make_rule(QuadratureKind kind, int n) {
  const int min_n = kind == QuadratureKind::Midpoint ? 1 : 2;
  if (n < min_n) throw ParameterError("quadrature rule needs at least " + std::to_string(min_n) + " nodes");
  if (kind == QuadratureKind::Simpson && (n < 3 || n % 2 == 0)) {
    throw ParameterError("Simpson's rule needs an odd node count >= 3");
  }

  QuadratureRule r{kind, n, std::vector<double>(n), std::vector<double>(n)};
  switch (kind) {
    case QuadratureKind::Trapezoid: {
      const double h = 2.0 / (n - 1);
      for (int i = 0; i < n; ++i) {
        r.nodes[i] = -1.0 + i * h;
        r.weights[i] = (i == 0 || i == n - 1) ? 0.5 * h : h;
      }
      break;
    }
    case QuadratureKind::Simpson: {
      const double h = 2.0 / (n - 1);
      for (int i = 0; i < n; ++i) {
        r.nodes[i] = -1.0 + i * h;
        const double c = (i == 0 || i == n - 1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        r.weights[i] = c * h / 3.0;
      }
      break;
    }
    case QuadratureKind::Midpoint: {
      const double h = 2.0 / n;
      for (int i = 0; i < n; ++i) {
        r.nodes[i] = -1.0 + (i + 0.5) * h;
        r.weights[i] = h;
      }
      break;
    }
    case QuadratureKind::GaussLegendre:
      gauss_legendre(r);
      break;
    case QuadratureKind::ClenshawCurtis:
      clenshaw_curtis(r);
      break;
  }

  // Ascending order; Gauss and Clenshaw-Curtis are generated descending.
  if (r.nodes.front() > r.nodes.back()) {
    std::reverse(r.nodes.begin(), r.nodes.end());
    std::reverse(r.weights.begin(), r.weights.end());
  }
  // Grid rules: pin the midpoint and make the node set exactly odd.
  if (kind != QuadratureKind::GaussLegendre && kind != QuadratureKind::ClenshawCurtis) {
    for (int i = 0; i < n / 2; ++i) r.nodes[n - 1 - i] = -r.nodes[i];
    if (n % 2 == 1) r.nodes[n / 2] = 0.0;
  }
  return r;
}

}  // namespace lovelieb
