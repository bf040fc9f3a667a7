#include "lovelieb/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "lovelieb/core.hpp"

namespace lovelieb {

namespace {

using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
constexpr unsigned kMaxDepth = 18;

struct Panel {
  double value;
  double error;
  double l1;
};

Panel panel(const RealFn& f, double a, double b) {
  Panel p{};
  p.value = GK::integrate(f, a, b, 0, 0.0, &p.error, &p.l1);
  return p;
}

// Bisection until each panel's error estimate is below its share of abs_tol.
// Boost's own recursion measures tol against the signed result, which never
// terminates early for integrals that cancel; here the scale is the L1 norm.
double adapt(const RealFn& f, double a, double b, const Panel& p, double abs_tol, unsigned depth) {
  const double floor = 64.0 * std::numeric_limits<double>::epsilon() * p.l1;
  if (depth == 0 || p.error <= abs_tol || p.error <= floor) return p.value;
  const double mid = 0.5 * (a + b);
  if (!(mid > a && mid < b)) return p.value;
  const Panel left = panel(f, a, mid);
  const Panel right = panel(f, mid, b);
  // Once the panel is resolved to ~1e-6 of its L1 norm, bisection that makes
  // no progress means the estimate is rounding noise.
  if (p.error <= 1e-6 * p.l1 && left.error + right.error >= p.error) return left.value + right.value;
  return adapt(f, a, mid, left, 0.5 * abs_tol, depth - 1) + adapt(f, mid, b, right, 0.5 * abs_tol, depth - 1);
}

// Adapts over consecutive finite segments with a shared absolute tolerance.
double adapt_segments(const RealFn& f, const std::vector<double>& pts, double tol) {
  std::vector<Panel> first;
  double l1 = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    first.push_back(panel(f, pts[i], pts[i + 1]));
    l1 += first.back().l1;
  }
  const double abs_tol = std::max(tol * l1, std::numeric_limits<double>::min());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) total += adapt(f, pts[i], pts[i + 1], first[i], abs_tol, kMaxDepth);
  return total;
}

// y = a + t/(1-t) maps [0,1) onto [a, inf).
RealFn to_right(const RealFn& f, double a) {
  return [&f, a](double t) {
    const double s = 1.0 - t;
    if (s <= 0.0) return 0.0;
    return f(a + t / s) / (s * s);
  };
}

RealFn to_left(const RealFn& f, double b) {
  return [&f, b](double t) {
    const double s = 1.0 - t;
    if (s <= 0.0) return 0.0;
    return f(b - t / s) / (s * s);
  };
}

}  // namespace

double integrate_adaptive(const RealFn& f, double a, double b, double tol,
                          const std::vector<double>& breaks) {
  if (a == b) return 0.0;
  double sign = 1.0;
  if (a > b) {
    std::swap(a, b);
    sign = -1.0;
  }
  std::vector<double> pts{a};
  for (double p : breaks) {
    if (p > a && p < b) pts.push_back(p);
  }
  pts.push_back(b);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return sign * adapt_segments(f, pts, tol);
}

double integrate_to_infinity(const RealFn& f, double a, double tol) {
  return adapt_segments(to_right(f, a), {0.0, 0.5, 0.9, 1.0}, tol);
}

double integrate_real_line(const RealFn& f, double tol, const std::vector<double>& breaks) {
  std::vector<double> pts = breaks;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.empty()) pts.push_back(0.0);

  double total = adapt_segments(to_left(f, pts.front()), {0.0, 0.5, 0.9, 1.0}, tol);
  if (pts.size() > 1) total += adapt_segments(f, pts, tol);
  total += adapt_segments(to_right(f, pts.back()), {0.0, 0.5, 0.9, 1.0}, tol);
  return total;
}

double integrate_against_kernel(const RealFn& f, double x, double alpha, double tol) {
  // Peak of width alpha around y = x; extra breaks at x +- alpha keep the
  // bisection from wasting depth on the shoulders when alpha is small.
  std::vector<double> breaks{x};
  if (alpha < 0.5) {
    breaks.push_back(x - alpha);
    breaks.push_back(x + alpha);
    breaks.push_back(x - 8 * alpha);
    breaks.push_back(x + 8 * alpha);
  }
  return integrate_adaptive([&](double y) { return kernel_eval(x - y, alpha) * f(y); }, -1.0,
                            1.0, tol, breaks);
}

}  // namespace lovelieb
