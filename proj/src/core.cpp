#include "lovelieb/core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "lovelieb/errors.hpp"
#include "lovelieb/integrate.hpp"

namespace lovelieb {

using std::numbers::pi;

std::string to_string(Sign s) { return s == Sign::PlusKernel ? "plus" : "minus"; }

void require_positive_alpha(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw DomainError("alpha must be a finite positive number");
  }
}

// ---------------------------------------------------------------------------
// RhsSpec

RhsSpec RhsSpec::one() {
  RhsSpec r;
  r.kind_ = Kind::One;
  return r;
}

RhsSpec RhsSpec::x() {
  RhsSpec r;
  r.kind_ = Kind::X;
  return r;
}

RhsSpec RhsSpec::polynomial(std::vector<double> ascending_coeffs) {
  if (ascending_coeffs.empty()) throw ParameterError("polynomial right-hand side needs coefficients");
  RhsSpec r;
  r.kind_ = Kind::Polynomial;
  r.coeffs_ = std::move(ascending_coeffs);
  return r;
}

RhsSpec RhsSpec::hulthen() {
  RhsSpec r;
  r.kind_ = Kind::Hulthen;
  return r;
}

RhsSpec RhsSpec::quadratic_well(double beta) {
  RhsSpec r;
  r.kind_ = Kind::QuadraticWell;
  r.beta_ = beta;
  return r;
}

RhsSpec RhsSpec::manufactured(std::vector<double> solution_coeffs, Sign sign) {
  if (solution_coeffs.empty()) throw ParameterError("manufactured solution needs coefficients");
  RhsSpec r;
  r.kind_ = Kind::Manufactured;
  r.coeffs_ = std::move(solution_coeffs);
  r.sign_ = sign;
  return r;
}

namespace {

std::optional<Parity> coefficient_parity(const std::vector<double>& c) {
  bool has_even = false;
  bool has_odd = false;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0.0) continue;
    (k % 2 == 0 ? has_even : has_odd) = true;
  }
  if (has_even && has_odd) return std::nullopt;
  if (has_odd) return Parity::Odd;
  return Parity::Even;  // includes the zero polynomial
}

double horner(const std::vector<double>& c, double x) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

std::optional<Parity> RhsSpec::parity() const {
  switch (kind_) {
    case Kind::One:
    case Kind::Hulthen:
    case Kind::QuadraticWell:
      return Parity::Even;
    case Kind::X:
      return Parity::Odd;
    case Kind::Polynomial:
    case Kind::Manufactured:
      return coefficient_parity(coeffs_);
  }
  return std::nullopt;
}

bool RhsSpec::depends_on_alpha() const noexcept {
  return kind_ == Kind::Hulthen || kind_ == Kind::Manufactured;
}

std::optional<std::vector<double>> RhsSpec::as_polynomial() const {
  switch (kind_) {
    case Kind::One:
      return std::vector<double>{1.0};
    case Kind::X:
      return std::vector<double>{0.0, 1.0};
    case Kind::Polynomial:
      return coeffs_;
    case Kind::QuadraticWell:
      return std::vector<double>{1.0, 0.0, -beta_};
    default:
      return std::nullopt;
  }
}

bool RhsSpec::is_zero() const {
  if (kind_ != Kind::Polynomial && kind_ != Kind::Manufactured) return false;
  for (double c : coeffs_) {
    if (c != 0.0) return false;
  }
  return true;
}

std::string RhsSpec::describe() const {
  std::ostringstream os;
  os.precision(12);
  auto list = [&](const std::vector<double>& c) {
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  };
  switch (kind_) {
    case Kind::One:
      return "one";
    case Kind::X:
      return "x";
    case Kind::Hulthen:
      return "hulthen";
    case Kind::QuadraticWell:
      os << "qwell:" << beta_;
      return os.str();
    case Kind::Polynomial:
      os << "poly:";
      list(coeffs_);
      return os.str();
    case Kind::Manufactured:
      os << "manufactured(" << to_string(sign_) << "):";
      list(coeffs_);
      return os.str();
  }
  return "?";
}

// ---------------------------------------------------------------------------
// EquationSpec

EquationSpec::EquationSpec(Sign sign, double alpha, RhsSpec rhs)
    : sign_(sign), alpha_(alpha), rhs_(std::move(rhs)) {
  require_positive_alpha(alpha);
}

double EquationSpec::g(double x) const { return rhs_eval(rhs_, x, alpha_); }

// ---------------------------------------------------------------------------
// Kernel

double kernel_eval(double x, double alpha) {
  require_positive_alpha(alpha);
  return alpha / (pi * (alpha * alpha + x * x));
}

double kernel_cdf_integral(double x, double alpha) {
  require_positive_alpha(alpha);
  return (std::atan((1.0 - x) / alpha) + std::atan((1.0 + x) / alpha)) / pi;
}

double kernel_segment_integral(double x, double a, double b, double alpha) {
  return (std::atan((b - x) / alpha) - std::atan((a - x) / alpha)) / pi;
}

double rhs_eval(const RhsSpec& rhs, double x, double alpha) {
  switch (rhs.kind()) {
    case RhsSpec::Kind::One:
      return 1.0;
    case RhsSpec::Kind::X:
      return x;
    case RhsSpec::Kind::Polynomial:
      return horner(rhs.coeffs(), x);
    case RhsSpec::Kind::Hulthen:
      return 1.0 / (alpha * alpha + 4.0 * x * x);
    case RhsSpec::Kind::QuadraticWell:
      return 1.0 - rhs.beta() * x * x;
    case RhsSpec::Kind::Manufactured: {
      const auto& c = rhs.coeffs();
      const auto m = monomial_kernel_integrals(static_cast<int>(c.size()) - 1, x, alpha);
      double ku = 0.0;
      for (std::size_t k = 0; k < c.size(); ++k) ku += c[k] * m.values[k];
      return horner(c, x) - lambda_of(rhs.manufactured_sign()) * ku;
    }
  }
  return 0.0;
}

// ---------------------------------------------------------------------------
// Monomial moments

namespace {

double plain_moment(int k) { return (k % 2 == 0) ? 2.0 / (k + 1) : 0.0; }

}  // namespace

KernelIntegrals monomial_kernel_integrals(int n_max, double x, double alpha) {
  require_positive_alpha(alpha);
  if (n_max < 0) throw ParameterError("n_max must be non-negative");

  KernelIntegrals out;
  out.values.resize(static_cast<std::size_t>(n_max) + 1);
  auto& m = out.values;

  const double a2 = alpha * alpha;
  const double rho2 = x * x + a2;
  const double c = alpha / pi;
  const double m0 = kernel_cdf_integral(x, alpha);
  const double m1 = x * m0 + alpha / (2.0 * pi) *
                                 std::log((a2 + (1.0 - x) * (1.0 - x)) / (a2 + (1.0 + x) * (1.0 + x)));

  const double growth = 0.5 * n_max * std::log(rho2);
  if (growth <= std::log(1e4)) {
    m[0] = m0;
    if (n_max >= 1) m[1] = m1;
    for (int n = 2; n <= n_max; ++n) {
      m[n] = c * plain_moment(n - 2) + 2.0 * x * m[n - 1] - rho2 * m[n - 2];
    }
    return out;
  }

  // Backward sweep: the homogeneous solutions decay by 1/sqrt(rho2) per step.
  out.used_fallback = true;
  const double log_rho = 0.5 * std::log(rho2);
  const int lead = std::min(2000, static_cast<int>(std::ceil(std::log(1e16) / log_rho)) + 2);
  const int top = n_max + lead;
  auto quad_moment = [&](int k) {
    return integrate_against_kernel([k](double y) { return std::pow(y, k); }, x, alpha, 1e-14);
  };
  std::vector<double> w(static_cast<std::size_t>(top) + 2);
  w[top + 1] = quad_moment(top + 1);
  w[top] = quad_moment(top);
  for (int n = top + 1; n >= 2; --n) {
    w[n - 2] = (c * plain_moment(n - 2) + 2.0 * x * w[n - 1] - w[n]) / rho2;
  }
  for (int n = 0; n <= n_max; ++n) m[n] = w[n];
  return out;
}

}  // namespace lovelieb
