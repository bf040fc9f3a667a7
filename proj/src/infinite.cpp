#include "lovelieb/infinite.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "lovelieb/errors.hpp"
#include "lovelieb/integrate.hpp"

namespace lovelieb {

using std::numbers::pi;

Complex digamma(Complex z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real())) {
    throw DomainError("digamma has a pole at non-positive integers");
  }
  Complex shift = 0.0;
  while (z.real() < 16.0) {
    shift -= 1.0 / z;
    z += 1.0;
  }
  // B_{2n} / (2n) for n = 1..8.
  static constexpr std::array<double, 8> c = {
      1.0 / 12.0, -1.0 / 120.0, 1.0 / 252.0, -1.0 / 240.0, 1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0, -3617.0 / 8160.0};
  const Complex w = 1.0 / (z * z);
  Complex series = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) series = (series + *it) * w;
  return shift + std::log(z) - 0.5 / z - series;
}

Complex beta_fn(Complex z) { return 0.5 * (digamma(0.5 * (z + 1.0)) - digamma(0.5 * z)); }

double transfer_denominator(Sign sign, double k, double alpha) {
  require_positive_alpha(alpha);
  if (sign == Sign::MinusKernel && k == 0.0) {
    throw DomainError("the minus-equation transfer function vanishes at k = 0");
  }
  return 1.0 - lambda_of(sign) * std::exp(-alpha * std::abs(k));
}

double tophat_s(double X, double alpha) {
  require_positive_alpha(alpha);
  if (X == 0.0) return 0.0;
  const double c = std::abs(X) / alpha;
  auto a = [c](int n) { return std::atan(c / n); };

  // Sum the first terms directly, until a_n is smooth on the scale of n, then
  // Euler-transform sum_{k>=0} (-1)^k a_{n0+k} = sum_j (-1)^j Delta^j a_{n0} / 2^{j+1}.
  const int n0 = 16 + static_cast<int>(std::min(2.0 * c, 1e6));
  double head = 0.0;
  for (int n = 1; n < n0; ++n) head += (n % 2 ? -1.0 : 1.0) * a(n);

  constexpr int kMaxDiff = 60;
  std::vector<double> diff(kMaxDiff + 1);
  for (int k = 0; k <= kMaxDiff; ++k) diff[k] = a(n0 + k);
  double tail = 0.0;
  double scale = 0.5;
  for (int j = 0; j <= kMaxDiff; ++j) {
    const double term = (j % 2 ? -1.0 : 1.0) * diff[0] * scale;
    tail += term;
    if (std::abs(term) < 1e-13 * (std::abs(head) + std::abs(tail) + 1e-300)) break;
    for (int k = 0; k < kMaxDiff - j; ++k) diff[k] = diff[k + 1] - diff[k];
    scale *= 0.5;
  }
  const double sum = head + (n0 % 2 ? -1.0 : 1.0) * tail;
  return std::copysign(0.5 + sum / pi, X);
}

double u_plus_tophat(double x, double L, double alpha) {
  if (!(L > 0.0)) throw ParameterError("top-hat half width must be positive");
  return tophat_s(L + x, alpha) + tophat_s(L - x, alpha);
}

namespace {

void require_positive_kappa(double kappa) {
  if (!(kappa > 0.0)) throw ParameterError("kappa must be positive");
}

}  // namespace

double u_plus_lorentzian(double x, double kappa, double alpha, Parity parity) {
  require_positive_alpha(alpha);
  require_positive_kappa(kappa);
  const Complex b = beta_fn(Complex(kappa, -x) / alpha);
  return (parity == Parity::Odd ? b.imag() : b.real()) / alpha;
}

double resolvent_plus(double x, double alpha) {
  require_positive_alpha(alpha);
  return beta_fn(Complex(1.0, x / alpha)).real() / (pi * alpha);
}

double u_minus_odd_lorentzian(double x, double kappa, double alpha) {
  require_positive_alpha(alpha);
  require_positive_kappa(kappa);
  return -digamma(Complex(kappa, -x) / alpha).imag() / alpha;
}

double u_minus_even_finite_part(double x, double kappa, double alpha, double eps0) {
  require_positive_alpha(alpha);
  require_positive_kappa(kappa);
  if (!(eps0 > 0.0)) throw ParameterError("eps0 must be positive");

  // (phi(t) - 1)/t with phi(t) = t / (1 - e^{-t}).
  auto phi_m1_over_t = [](double t) {
    if (t < 1e-2) {
      const double t2 = t * t;
      return 0.5 + t / 12.0 - t * t2 / 720.0 + t * t2 * t2 / 30240.0;
    }
    return -1.0 / std::expm1(-t) - 1.0 / t;
  };
  // f(k) - 1/(alpha k) = [(E - 1) phi(alpha k) + phi(alpha k) - 1] / (alpha k),
  // E = e^{-kappa k} cos(kx), with E - 1 formed without cancellation.
  auto regular = [&](double k) {
    const double t = alpha * k;
    const double s = std::sin(0.5 * k * x);
    const double e_m1 = std::expm1(-kappa * k) * std::cos(k * x) - 2.0 * s * s;
    const double phi = t < 1e-2 ? 1.0 + t * phi_m1_over_t(t) : t / -std::expm1(-t);
    if (k == 0.0) return -kappa / alpha + 0.5;
    return e_m1 / k * phi / alpha + phi_m1_over_t(t);
  };
  auto f = [&](double k) { return std::exp(-kappa * k) * std::cos(k * x) / -std::expm1(-alpha * k); };

  return std::log(eps0) / alpha + integrate_adaptive(regular, 0.0, eps0, 1e-13) + integrate_to_infinity(f, eps0, 1e-12);
}

double InfiniteProblem::g(double x) const {
  switch (rhs) {
    case Rhs::TopHat:
      return std::abs(x) < param ? 1.0 : 0.0;
    case Rhs::OddLorentzian:
      return x / (x * x + param * param);
    case Rhs::EvenLorentzian:
      return param / (x * x + param * param);
  }
  return 0.0;
}

double InfiniteProblem::u(double x) const {
  if (sign == Sign::PlusKernel) {
    switch (rhs) {
      case Rhs::TopHat:
        return u_plus_tophat(x, param, alpha);
      case Rhs::OddLorentzian:
        return u_plus_lorentzian(x, param, alpha, Parity::Odd);
      case Rhs::EvenLorentzian:
        return u_plus_lorentzian(x, param, alpha, Parity::Even);
    }
  }
  switch (rhs) {
    case Rhs::TopHat:
      throw ParameterError("no catalogued solution for the minus equation with a top hat");
    case Rhs::OddLorentzian:
      return u_minus_odd_lorentzian(x, param, alpha);
    case Rhs::EvenLorentzian:
      return u_minus_even_finite_part(x, param, alpha);
  }
  return 0.0;
}

InfiniteProblem make_infinite_problem(Sign sign, double alpha, InfiniteProblem::Rhs rhs, double param) {
  require_positive_alpha(alpha);
  if (!(param > 0.0)) throw ParameterError("problem parameter must be positive");
  return InfiniteProblem{sign, alpha, rhs, param};
}

double infinite_residual(const InfiniteProblem& p, double x, double tol) {
  std::vector<double> breaks = {x - p.alpha, x, x + p.alpha};
  if (p.rhs == InfiniteProblem::Rhs::TopHat) {
    breaks.push_back(-p.param);
    breaks.push_back(p.param);
  } else {
    breaks.push_back(0.0);
  }
  std::sort(breaks.begin(), breaks.end());
  const double ku = integrate_real_line([&](double y) { return kernel_eval(x - y, p.alpha) * p.u(y); }, tol, breaks);
  return std::abs(p.u(x) - lambda_of(p.sign) * ku - p.g(x));
}

}  // namespace lovelieb
