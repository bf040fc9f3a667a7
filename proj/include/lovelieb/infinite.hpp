#pragma once

// Whole-line equations u(x) - lambda int_R K(x-y) u(y) dy = g(x), solved by
// Fourier transform: u~(k) = g~(k) / (1 - lambda e^{-alpha|k|}).

#include <complex>

#include "lovelieb/core.hpp"

namespace lovelieb {

using Complex = std::complex<double>;

/// psi(z) = Gamma'(z)/Gamma(z). Recurrence up to Re z >= 16, then the
/// asymptotic series through B_16. DomainError at z = 0, -1, -2, ...
Complex digamma(Complex z);

/// beta(z) = (psi((z+1)/2) - psi(z/2)) / 2 = int_0^inf e^{-z y} / (1 + e^{-y}) dy.
Complex beta_fn(Complex z);

/// 1 - lambda e^{-alpha|k|}. The minus equation's denominator vanishes at
/// k = 0; that case throws DomainError rather than returning zero.
double transfer_denominator(Sign sign, double k, double alpha);

/// S(X) = (1/pi) int_0^inf sin(kX) / (k (1 + e^{-alpha k})) dk
///      = (1/pi) [pi/2 sgn X + sum_{n>=1} (-1)^n atan(X / (n alpha))],
/// the alternating tail summed by Euler's transformation.
double tophat_s(double X, double alpha);

/// Plus equation with g = 1 on |x| < L, 0 outside: S(L+x) + S(L-x).
double u_plus_tophat(double x, double L, double alpha);

/// Plus equation with g = x/(x^2+kappa^2) (Odd) or kappa/(x^2+kappa^2) (Even):
/// Im beta(Z)/alpha or Re beta(Z)/alpha, Z = (kappa - i x)/alpha.
double u_plus_lorentzian(double x, double kappa, double alpha, Parity parity);

/// M(x) = Re beta(1 + i x/alpha) / (pi alpha), with u = g - M * g on the line.
double resolvent_plus(double x, double alpha);

/// Odd solution of the minus equation with g = x/(x^2+kappa^2): -Im psi(Z)/alpha.
double u_minus_odd_lorentzian(double x, double kappa, double alpha);

/// Even particular solution of the minus equation with g = kappa/(x^2+kappa^2):
/// the finite part of int_0^inf e^{-kappa k} cos(kx) / (1 - e^{-alpha k}) dk,
/// computed as (1/alpha) log eps0 + int_0^eps0 [f - 1/(alpha k)] + int_eps0^inf f.
/// Determined up to an additive constant (u = 1 solves the homogeneous equation).
double u_minus_even_finite_part(double x, double kappa, double alpha, double eps0 = 1e-3);

/// One of the catalogued whole-line problems.
struct InfiniteProblem {
  enum class Rhs { TopHat, OddLorentzian, EvenLorentzian };
  Sign sign;
  double alpha;
  Rhs rhs;
  /// L for TopHat, kappa for the Lorentzians.
  double param;

  double g(double x) const;
  /// Closed-form (or finite-part) solution. ParameterError for the minus
  /// equation with a top hat, which has no catalogued solution.
  double u(double x) const;
};

InfiniteProblem make_infinite_problem(Sign sign, double alpha, InfiniteProblem::Rhs rhs, double param);

/// |u(x) - lambda int_R K(x-y) u(y) dy - g(x)| with adaptive quadrature over R.
double infinite_residual(const InfiniteProblem& p, double x, double tol = 1e-10);

}  // namespace lovelieb
