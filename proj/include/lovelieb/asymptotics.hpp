#pragma once

#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lovelieb/core.hpp"

namespace lovelieb {

using Rational = boost::multiprecision::cpp_rational;

/// Exact number sum_p c_p / pi^p, keyed by the power p >= 0.
using PiPoly = std::map<int, Rational>;

double to_double(const PiPoly& v);
/// Drops zero entries so that equal values compare equal.
PiPoly normalized(PiPoly v);

/// Polynomial in x whose coefficients (ascending powers) are PiPoly numbers.
using SeriesTerm = std::vector<PiPoly>;

/// u(x; alpha) ~ sum_n u_n(x) / alpha^n for alpha-independent polynomial g.
struct AsymptoticSeries {
  double lambda = 1.0;
  std::vector<SeriesTerm> terms;
  /// g_n = int_{-1}^{1} y^n g(y) dy.
  std::vector<Rational> moments;

  int order() const { return static_cast<int>(terms.size()) - 1; }
  /// u_n(x) in floating point.
  double term_value(int n, double x) const;
};

/// Expanding K in powers of 1/alpha and matching gives, with chi = lambda/pi,
///   u_0 = g,
///   u_{2m+1} = chi sum_{q=0}^{m} (-1)^{m+q} int (x-y)^{2m-2q} u_{2q}(y) dy,
///   u_{2m+2} = chi sum_{q=0}^{m} (-1)^{m+q} int (x-y)^{2m-2q} u_{2q+1}(y) dy.
/// Polynomial, One and X right-hand sides only; the coefficients of g are
/// converted to rationals exactly.
AsymptoticSeries large_alpha_series(const RhsSpec& rhs, Sign sign, int max_order);

/// Partial sum up to the series order. No regime check (alpha > 2 is the
/// expansion regime).
double eval_series(const AsymptoticSeries& series, double x, double alpha);

enum class OuterKind {
  LiebOneLeading,    // sqrt(1-x^2)/alpha
  LiebOneTwoTerm,    // with the log correction
  GaudinOneTwoTerm,  // 1/2 + alpha/(2 pi (1-x^2))
  GaudinXLeading,    // x/2
  LiebXHutson,
  LiebXReichert,
};

/// Small-alpha outer approximations, valid away from x = +-1. Throws
/// DomainError for |x| >= 1 or alpha <= 0.
double small_alpha_outer(OuterKind kind, double x, double alpha);

}  // namespace lovelieb
