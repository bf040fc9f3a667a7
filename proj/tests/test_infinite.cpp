#include <cmath>
#include <numbers>
#include <random>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/digamma.hpp>

#include "doctest.h"
#include "lovelieb/errors.hpp"
#include "lovelieb/infinite.hpp"
#include "lovelieb/integrate.hpp"

using namespace lovelieb;
using std::numbers::pi;

namespace {

constexpr double kEulerGamma = 0.57721566490153286061;

// Independent Fourier-side oracle: int_0^inf e^{-kappa k} trig(kx) / (1 - lambda e^{-alpha k}) dk.
double fourier_oracle(double x, double kappa, double alpha, double lambda, bool odd) {
  auto f = [&](double k) {
    const double trig = odd ? std::sin(k * x) : std::cos(k * x);
    return std::exp(-kappa * k) * trig / (1.0 - lambda * std::exp(-alpha * k));
  };
  using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
  double total = 0.0, a = 0.0;
  // Panels one decay length wide keep the oscillation resolved.
  const double step = std::min(1.0 / kappa, 2.0 / (std::abs(x) + 1e-3));
  while (a < 60.0 / kappa) {
    total += GK::integrate(f, a, a + step, 15, 1e-14);
    a += step;
  }
  return total;
}

double residual_of(const std::function<double(double)>& u, const std::function<double(double)>& g, double lambda,
                   double alpha, double x) {
  const double ku = integrate_real_line([&](double y) { return kernel_eval(x - y, alpha) * u(y); }, 1e-12,
                                        {x - alpha, x, x + alpha});
  return std::abs(u(x) - lambda * ku - g(x));
}

}  // namespace

TEST_CASE("digamma special values") {
  CHECK(digamma(1.0).real() == doctest::Approx(-kEulerGamma).epsilon(1e-15));
  CHECK(std::abs(digamma(1.0).imag()) < 1e-300);
  CHECK(digamma(0.5).real() == doctest::Approx(-kEulerGamma - 2 * std::log(2.0)).epsilon(1e-14));
  for (double y : {0.1, 1.0, 7.5, 300.0}) {
    CHECK(digamma(Complex(0.5, y)).imag() == doctest::Approx(pi / 2 * std::tanh(pi * y)).epsilon(1e-13));
    CHECK(digamma(Complex(0.0, y)).imag() == doctest::Approx(0.5 / y + pi / 2 / std::tanh(pi * y)).epsilon(1e-13));
  }
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> ur(-40.0, 60.0);
  for (int k = 0; k < 50; ++k) {
    double r = ur(rng);
    if (std::abs(r - std::round(r)) < 1e-3) r += 0.01;
    CHECK(digamma(r).real() == doctest::Approx(boost::math::digamma(r)).epsilon(1e-12));
  }
}

TEST_CASE("digamma functional equations") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> ur(-50.0, 50.0), ui(-1000.0, 1000.0);
  for (int k = 0; k < 100; ++k) {
    const Complex z(ur(rng), ui(rng));
    CHECK(std::abs(digamma(z + 1.0) - digamma(z) - 1.0 / z) < 1e-12);
    const Complex c = digamma(std::conj(z)), d = std::conj(digamma(z));
    CHECK(std::abs(c - d) < 1e-14 * std::abs(d));
  }
  for (double r : {0.0, -1.0, -7.0}) CHECK_THROWS_AS(digamma(r), DomainError);
}

TEST_CASE("digamma is continuous across the asymptotic threshold") {
  for (double im : {0.0, 0.5, 3.0, 40.0}) {
    const Complex hi(16.0, im);
    const Complex lo(std::nextafter(16.0, 0.0), im);
    const Complex a = digamma(hi), b = digamma(lo);
    CHECK(std::abs(a - b) / std::abs(a) <= 1e-13);
  }
}

TEST_CASE("beta function") {
  CHECK(beta_fn(1.0).real() == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  for (double z : {0.5, 1.7, 3.0}) {
    const double ref = integrate_to_infinity([&](double y) { return std::exp(-z * y) / (1.0 + std::exp(-y)); }, 0.0, 1e-14);
    CHECK(std::abs(beta_fn(z).real() - ref) < 1e-9);
  }
  const double z = 1e3;
  const double b = beta_fn(z).real();
  CHECK(std::abs(b - 0.5 / z) <= 1.0 / (z * z));
  CHECK(std::abs(b - 0.5 / z - 0.25 / (z * z)) <= 1.0 / (z * z * z));
}

TEST_CASE("transfer denominators") {
  for (double k : {0.0, 0.3, -2.0, 50.0}) CHECK(transfer_denominator(Sign::PlusKernel, k, 0.7) >= 1.0);
  CHECK_THROWS_AS(transfer_denominator(Sign::MinusKernel, 0.0, 1.0), DomainError);
  CHECK(transfer_denominator(Sign::MinusKernel, 1.0, 1.0) == doctest::Approx(1 - std::exp(-1.0)).epsilon(1e-15));
}

TEST_CASE("top-hat solution") {
  CHECK(tophat_s(0.0, 1.0) == 0.0);
  for (double L : {0.5, 3.0}) CHECK(u_plus_tophat(-L, L, 1.0) == doctest::Approx(tophat_s(2 * L, 1.0)).epsilon(1e-14));
  for (double X : {1e2, 1e3}) {
    const double d = std::abs(tophat_s(X, 1.0) - 0.25 - 1.0 / (4 * pi * X));
    CHECK(d <= 10.0 / (X * X));
    CHECK(d * X < 1e-4);
  }
  CHECK(tophat_s(-5.0, 0.5) == doctest::Approx(-tophat_s(5.0, 0.5)).epsilon(1e-15));
  CHECK(std::abs(u_plus_tophat(0.0, 1e3, 1.0) - (0.5 + 1.0 / (2 * pi * 1e3))) < 1e-3);
  CHECK_THROWS_AS(u_plus_tophat(0.0, 0.0, 1.0), ParameterError);

  const auto p = make_infinite_problem(Sign::PlusKernel, 1.0, InfiniteProblem::Rhs::TopHat, 2.0);
  for (double x : {0.0, 1.3, 2.5}) CHECK(infinite_residual(p, x) < 1e-6);
}

TEST_CASE("plus equation with Lorentzian data") {
  for (int k = -10; k <= 10; ++k) {
    const double x = 0.3 * k + 0.05;
    const double a = 1.3;
    CHECK(std::abs(u_plus_lorentzian(x, a, a, Parity::Odd) - (0.5 / x - pi / (2 * a * std::sinh(pi * x / a)))) < 1e-10);
    CHECK(std::abs(u_plus_lorentzian(x, a / 2, a, Parity::Even) - pi / (2 * a) / std::cosh(pi * x / a)) < 1e-10);
  }
  for (double x : {-2.0, 0.0, 0.4, 1.1, 5.0}) {
    CHECK(std::abs(u_plus_lorentzian(x, 0.8, 1.5, Parity::Odd) - fourier_oracle(x, 0.8, 1.5, -1.0, true)) < 1e-8);
    CHECK(std::abs(u_plus_lorentzian(x, 0.8, 1.5, Parity::Even) - fourier_oracle(x, 0.8, 1.5, -1.0, false)) < 1e-8);
  }
  const auto odd = make_infinite_problem(Sign::PlusKernel, 1.0, InfiniteProblem::Rhs::OddLorentzian, 1.0);
  const auto even = make_infinite_problem(Sign::PlusKernel, 2.0, InfiniteProblem::Rhs::EvenLorentzian, 0.7);
  CHECK(infinite_residual(odd, 0.7) < 1e-6);
  CHECK(infinite_residual(even, 0.7) < 1e-6);
  CHECK(infinite_residual(even, -3.0) < 1e-6);
}

TEST_CASE("resolvent") {
  for (double a : {0.5, 1.0, 2.0}) {
    CHECK(resolvent_plus(0.0, a) == doctest::Approx(std::log(2.0) / (pi * a)).epsilon(1e-14));
    for (double x : {0.3, 2.0, 9.0}) CHECK(resolvent_plus(-x, a) == doctest::Approx(resolvent_plus(x, a)).epsilon(1e-14));
    for (double x : {0.0, 0.6, 3.0})
      CHECK(std::abs(resolvent_plus(x, a) - fourier_oracle(x, a, a, -1.0, false) / pi) < 1e-8);
  }
  // u = g - M * g reproduces the even Lorentzian solution.
  for (double x : {0.0, 0.5}) {
    auto conv = [&](double y) { return resolvent_plus(x - y, 1.0) / (y * y + 1.0); };
    const double mg = integrate_real_line(conv, 1e-12, {x - 1, x, x + 1});
    CHECK(std::abs(1.0 / (x * x + 1.0) - mg - u_plus_lorentzian(x, 1.0, 1.0, Parity::Even)) < 1e-6);
  }
}

TEST_CASE("minus equation, odd data") {
  for (int k = -10; k <= 10; ++k) {
    const double x = 0.37 * k + 0.01;
    const double a = 0.9;
    CHECK(std::abs(u_minus_odd_lorentzian(x, a, a) - (pi / (2 * a) / std::tanh(pi * x / a) - 0.5 / x)) < 1e-10);
    CHECK(u_minus_odd_lorentzian(-x, 0.4, a) == doctest::Approx(-u_minus_odd_lorentzian(x, 0.4, a)).epsilon(1e-14));
  }
  CHECK(std::abs(u_minus_odd_lorentzian(1e-6, 1.0, 1.0)) < 1.0);
  for (double x : {-2.0, 0.1, 0.4, 1.1, 5.0})
    CHECK(std::abs(u_minus_odd_lorentzian(x, 0.8, 1.5) - fourier_oracle(x, 0.8, 1.5, 1.0, true)) < 1e-8);
  const auto p = make_infinite_problem(Sign::MinusKernel, 1.0, InfiniteProblem::Rhs::OddLorentzian, 1.0);
  CHECK(infinite_residual(p, 0.7) < 1e-6);
  CHECK_THROWS_AS(make_infinite_problem(Sign::MinusKernel, 1.0, InfiniteProblem::Rhs::TopHat, 1.0).u(0.0),
                  ParameterError);
}

TEST_CASE("minus equation, even data, finite part") {
  const double kappa = 0.8, alpha = 1.5;
  auto fp = [&](double x, double eps0) { return u_minus_even_finite_part(x, kappa, alpha, eps0); };
  auto closed = [&](double x) { return -digamma(Complex(kappa, -x) / alpha).real() / alpha; };
  const std::vector<double> xs{-3.0, -0.5, 0.0, 0.7, 2.0};
  for (double x1 : xs) {
    for (double x2 : xs) {
      const double d1 = fp(x1, 1e-3) - fp(x2, 1e-3);
      CHECK(std::abs(d1 - (fp(x1, 2e-2) - fp(x2, 2e-2))) < 1e-8);
      CHECK(std::abs(d1 - (closed(x1) - closed(x2))) < 1e-9);
    }
  }
  for (double x : {0.3, 1.7}) CHECK(std::abs((fp(x, 1e-3) - fp(0, 1e-3)) - (fp(-x, 1e-3) - fp(0, 1e-3))) < 1e-10);

  // Gauge: shifting by any constant leaves the equation satisfied.
  auto g = [&](double x) { return kappa / (x * x + kappa * kappa); };
  const double c0 = fp(0.0, 1e-3) - closed(0.0);
  for (double c : {0.0, c0, 3.7}) {
    auto u = [&](double x) { return closed(x) + c; };
    for (double x : {0.0, 0.9}) CHECK(residual_of(u, g, 1.0, alpha, x) < 1e-6);
  }
}

TEST_CASE("problem construction") {
  CHECK_THROWS_AS(make_infinite_problem(Sign::PlusKernel, 0.0, InfiniteProblem::Rhs::TopHat, 1.0), DomainError);
  CHECK_THROWS_AS(make_infinite_problem(Sign::PlusKernel, 1.0, InfiniteProblem::Rhs::OddLorentzian, -1.0),
                  ParameterError);
  const auto p = make_infinite_problem(Sign::PlusKernel, 1.0, InfiniteProblem::Rhs::TopHat, 2.0);
  CHECK(p.g(1.0) == 1.0);
  CHECK(p.g(3.0) == 0.0);
  CHECK(p.u(0.3) == doctest::Approx(u_plus_tophat(0.3, 2.0, 1.0)).epsilon(1e-15));
}
