#pragma once

// Problem definition for the generalized Love-Lieb equation
//
//     u(x) - lambda * int_{-1}^{1} K(x - y) u(y) dy = g(x),   -1 <= x <= 1,
//     K(x) = alpha / (pi (alpha^2 + x^2)),
//
// where lambda = -1 for the "+" equation (Gaudin, equally charged discs) and
// lambda = +1 for the "-" equation (Lieb, oppositely charged discs).

#include <optional>
#include <string>
#include <vector>

namespace lovelieb {

enum class Sign { PlusKernel, MinusKernel };

/// lambda in u - lambda*Ku = g: -1 for PlusKernel, +1 for MinusKernel.
constexpr double lambda_of(Sign s) noexcept { return s == Sign::PlusKernel ? -1.0 : 1.0; }

std::string to_string(Sign s);

enum class Parity { Even, Odd };

/// Catalogue of right-hand sides g(x).
class RhsSpec {
 public:
  enum class Kind {
    One,            // g = 1
    X,              // g = x
    Polynomial,     // g = sum c_k x^k
    Hulthen,        // g = 1 / (alpha^2 + 4 x^2), bound to the equation's alpha
    QuadraticWell,  // g = 1 - beta x^2
    Manufactured,   // g built so that the polynomial sum c_k x^k is the exact solution
  };

  static RhsSpec one();
  static RhsSpec x();
  static RhsSpec polynomial(std::vector<double> ascending_coeffs);
  static RhsSpec hulthen();
  static RhsSpec quadratic_well(double beta);
  /// g = p - lambda * K p for the polynomial p with the given coefficients.
  static RhsSpec manufactured(std::vector<double> solution_coeffs, Sign sign);

  Kind kind() const noexcept { return kind_; }
  /// Polynomial / Manufactured coefficients (ascending powers).
  const std::vector<double>& coeffs() const noexcept { return coeffs_; }
  double beta() const noexcept { return beta_; }
  /// Sign the manufactured right-hand side was built for.
  Sign manufactured_sign() const noexcept { return sign_; }

  std::optional<Parity> parity() const;
  bool depends_on_alpha() const noexcept;
  /// Coefficients of g as a polynomial in x, when g is one.
  std::optional<std::vector<double>> as_polynomial() const;
  bool is_zero() const;

  std::string describe() const;

 private:
  RhsSpec() = default;

  Kind kind_ = Kind::One;
  std::vector<double> coeffs_;
  double beta_ = 0.0;
  Sign sign_ = Sign::MinusKernel;
};

/// One instance of the equation: sign, alpha > 0 and right-hand side.
class EquationSpec {
 public:
  EquationSpec(Sign sign, double alpha, RhsSpec rhs);

  Sign sign() const noexcept { return sign_; }
  double alpha() const noexcept { return alpha_; }
  const RhsSpec& rhs() const noexcept { return rhs_; }
  double lambda() const noexcept { return lambda_of(sign_); }

  double g(double x) const;

 private:
  Sign sign_;
  double alpha_;
  RhsSpec rhs_;
};

/// K(x) = alpha / (pi (alpha^2 + x^2)).
double kernel_eval(double x, double alpha);

/// int_{-1}^{1} K(x - y) dy = (atan((1-x)/alpha) + atan((1+x)/alpha)) / pi.
double kernel_cdf_integral(double x, double alpha);

/// int_{a}^{b} K(x - y) dy.
double kernel_segment_integral(double x, double a, double b, double alpha);

double rhs_eval(const RhsSpec& rhs, double x, double alpha);

/// Values of I_n(x) = int_{-1}^{1} K(x-y) phi_n(y) dy for n = 0..n_max.
struct KernelIntegrals {
  std::vector<double> values;
  /// Set when forward recursion was abandoned for a quadrature-anchored route.
  bool used_fallback = false;
};

/// Monomial moments int K(x-y) y^n dy.
///
/// Uses y^2 = [(x-y)^2 + alpha^2] + 2xy - (x^2 + alpha^2), which gives
/// M_n = (alpha/pi) m_{n-2} + 2x M_{n-1} - (x^2 + alpha^2) M_{n-2},
/// with m_k the plain moments of [-1,1]. The homogeneous solutions grow like
/// (x^2+alpha^2)^{n/2}; when that growth exceeds 1e4 over the requested range
/// the recurrence is run backwards from two quadrature-computed values.
KernelIntegrals monomial_kernel_integrals(int n_max, double x, double alpha);

void require_positive_alpha(double alpha);

}  // namespace lovelieb
