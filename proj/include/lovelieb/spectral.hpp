#pragma once

#include <string>
#include <vector>

#include "lovelieb/core.hpp"

namespace lovelieb {

/// Function families phi_n indexed by degree (or frequency for Cosine).
enum class BasisFamily { Monomial, Chebyshev, Legendre, Cosine };

/// Parity-restricted bases used by the expansion solvers.
enum class Basis { MonomialEven, MonomialOdd, ChebyshevEven, ChebyshevOdd, LegendreEven, Cosine };

std::string to_string(Basis b);
BasisFamily family_of(Basis b);
/// Family index of the k-th basis function (2k, 2k+1 or k).
int family_index(Basis b, int k);
Parity parity_of(Basis b);

/// phi_n(x) of a family: x^n, T_n(x), P_n(x) or cos(n pi x).
double family_function(BasisFamily f, int n, double x);

/// I_n(x) = int_{-1}^{1} K(x-y) phi_n(y) dy for n = 0..n_max.
///
/// Monomials and Chebyshev polynomials use recurrences in n; Legendre and
/// Cosine use adaptive quadrature. For Chebyshev, multiplying the kernel
/// denominator (x-y)^2 + alpha^2 into T_n and using the product rules for
/// y T_n and y^2 T_n gives
///   (I_{n+2} + 2 I_n + I_{|n-2|})/4 - x (I_{n+1} + I_{|n-1|}) + (x^2+alpha^2) I_n
///     = (alpha/pi) int T_n,
/// whose homogeneous solutions grow like rho^n, rho the Bernstein parameter of
/// x + i alpha. Past a growth of 1e4 it is solved as a boundary-value problem
/// with I_0, I_1 exact and two far-end values from quadrature.
KernelIntegrals basis_kernel_integrals(BasisFamily f, int n_max, double x, double alpha);

/// u(x) ~ sum_k c_k phi_k(x) in one of the parity bases.
struct ExpansionSolution {
  EquationSpec spec;
  Basis basis;
  std::vector<double> coeffs;
  /// Reciprocal condition estimate of the solved system.
  double rcond = 1.0;
};

/// Collocation at m Chebyshev-Gauss points of [0,1], or the midpoints (k+1/2)/m
/// for Cosine; parity bases need only the half interval. Least squares when
/// m > n_basis + 1.
ExpansionSolution solve_collocation(const EquationSpec& spec, Basis basis, int n_basis,
                                    int m_points);

/// Galerkin projection with inner products from (4 n_basis + 16)-point Gauss-Legendre.
ExpansionSolution solve_galerkin(const EquationSpec& spec, Basis basis, int n_basis);

/// Truncated Maclaurin system for g = 1, alpha > 1, from the expansion of the
/// kernel in Chebyshev polynomials of the second kind. Coefficients are for
/// the MonomialEven basis.
ExpansionSolution solve_maclaurin(const EquationSpec& spec, int n_basis);

/// Matrix entry int_{-1}^{1} y^{2n} (y^2+alpha^2)^{-m-1} U_{2m}(y / sqrt(y^2+alpha^2)) dy.
double maclaurin_moment(int m, int n, double alpha);

double eval_expansion(const ExpansionSolution& sol, double x);

/// Chebyshev polynomial of the second kind.
double chebyshev_u(int n, double t);

}  // namespace lovelieb
