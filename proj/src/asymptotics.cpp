#include "lovelieb/asymptotics.hpp"

#include <cmath>
#include <numbers>


#include "lovelieb/errors.hpp"

namespace lovelieb {

using std::numbers::pi;

double to_double(const PiPoly& v) {
  double s = 0.0;
  for (const auto& [p, c] : v) s += static_cast<double>(c) * std::pow(pi, -p);
  return s;
}

PiPoly normalized(PiPoly v) {
  std::erase_if(v, [](const auto& kv) { return kv.second == 0; });
  return v;
}

namespace {

void add_scaled(PiPoly& acc, const PiPoly& v, const Rational& scale, int pi_shift) {
  if (scale == 0) return;
  for (const auto& [p, c] : v) acc[p + pi_shift] += c * scale;
}

// int_{-1}^{1} y^k dy.
Rational plain_moment(int k) { return k % 2 ? Rational(0) : Rational(2, k + 1); }

Rational binomial(int n, int k) {
  Rational r(1);
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// chi * int (x-y)^p u(y) dy as a polynomial in x.
SeriesTerm apply_moment(const SeriesTerm& u, int p, const Rational& sign) {
  // int y^k u(y) dy for k = 0..p.
  std::vector<PiPoly> ym(p + 1);
  for (int k = 0; k <= p; ++k) {
    for (std::size_t j = 0; j < u.size(); ++j) add_scaled(ym[k], u[j], plain_moment(k + static_cast<int>(j)), 0);
  }
  SeriesTerm out(p + 1);
  for (int k = 0; k <= p; ++k) {
    const Rational c = binomial(p, k) * (k % 2 ? -1 : 1) * sign;
    add_scaled(out[p - k], ym[k], c, 1);
  }
  return out;
}

void accumulate(SeriesTerm& acc, const SeriesTerm& t) {
  if (acc.size() < t.size()) acc.resize(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) add_scaled(acc[i], t[i], Rational(1), 0);
}

}  // namespace

double AsymptoticSeries::term_value(int n, double x) const {
  const auto& t = terms.at(static_cast<std::size_t>(n));
  double acc = 0.0;
  for (auto it = t.rbegin(); it != t.rend(); ++it) acc = acc * x + to_double(*it);
  return acc;
}

AsymptoticSeries large_alpha_series(const RhsSpec& rhs, Sign sign, int max_order) {
  if (max_order < 0) throw ParameterError("series order must be non-negative");
  using K = RhsSpec::Kind;
  if (rhs.kind() != K::One && rhs.kind() != K::X && rhs.kind() != K::Polynomial) {
    throw ParameterError("large-alpha series needs an alpha-independent polynomial right-hand side");
  }
  const auto g = *rhs.as_polynomial();

  AsymptoticSeries s;
  s.lambda = lambda_of(sign);
  SeriesTerm u0;
  for (double c : g) u0.push_back(c == 0.0 ? PiPoly{} : PiPoly{{0, Rational(c)}});
  for (std::size_t n = 0; n < g.size() + 4; ++n) {
    Rational m(0);
    for (std::size_t j = 0; j < g.size(); ++j) m += Rational(g[j]) * plain_moment(static_cast<int>(n + j));
    s.moments.push_back(m);
  }
  s.terms.push_back(std::move(u0));

  const Rational lam(static_cast<int>(s.lambda));
  for (int n = 1; n <= max_order; ++n) {
    // n = 2m+1 draws on u_{2q}, n = 2m+2 on u_{2q+1}.
    const int m = (n - 1) / 2;
    const int offset = (n % 2 == 1) ? 0 : 1;
    SeriesTerm next;
    for (int q = 0; q <= m; ++q) {
      const Rational sgn = lam * ((m + q) % 2 ? -1 : 1);
      accumulate(next, apply_moment(s.terms[2 * q + offset], 2 * m - 2 * q, sgn));
    }
    for (auto& c : next) c = normalized(std::move(c));
    while (!next.empty() && next.back().empty()) next.pop_back();
    s.terms.push_back(std::move(next));
  }
  return s;
}

double eval_series(const AsymptoticSeries& series, double x, double alpha) {
  double acc = 0.0;
  for (int n = series.order(); n >= 0; --n) acc = acc / alpha + series.term_value(n, x);
  return acc;
}

double small_alpha_outer(OuterKind kind, double x, double alpha) {
  require_positive_alpha(alpha);
  if (!(std::abs(x) < 1.0)) throw DomainError("outer approximations need |x| < 1");
  const double s = std::sqrt(1.0 - x * x);
  const double big_log = std::log(16.0 * pi / alpha);

  auto lieb_x = [&](double a, double b_plus, double b_minus) {
    return x / (2.0 * alpha) * s + a / (4.0 * pi * s) * (1.0 + big_log) -
           b_plus / (4.0 * pi) * std::log((1.0 + x) / 2.0) + b_minus / (4.0 * pi) * std::log((1.0 - x) / 2.0);
  };

  switch (kind) {
    case OuterKind::LiebOneLeading:
      return s / alpha;
    case OuterKind::LiebOneTwoTerm:
      return s / alpha + (x * std::log((1.0 - x) / (1.0 + x)) + big_log + 1.0) / (2.0 * pi * s);
    case OuterKind::GaudinOneTwoTerm:
      return 0.5 + alpha / (2.0 * pi * (1.0 - x * x));
    case OuterKind::GaudinXLeading:
      return 0.5 * x;
    case OuterKind::LiebXHutson: {
      const double a = std::sqrt((1.0 + x) / 2.0) - std::sqrt((1.0 - x) / 2.0);
      return lieb_x(a, 1.0 / std::sqrt(2.0 * (1.0 + x)), 1.0 / std::sqrt(2.0 * (1.0 - x)));
    }
    case OuterKind::LiebXReichert: {
      const double b = (2.0 * x * x - 1.0) / s;  // even in x
      return lieb_x(x, b, b);
    }
  }
  return 0.0;
}

}  // namespace lovelieb
