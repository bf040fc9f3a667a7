#pragma once

#include <functional>
#include <initializer_list>
#include <vector>

namespace lovelieb {

using RealFn = std::function<double(double)>;

/// Adaptive Gauss-Kronrod (7/15) bisection on [a, b].
///
/// `breaks` are interior points where the integrand is sharply peaked or
/// non-smooth; the interval is split there before adapting. `tol` is
/// relative to the L1 norm of the integrand, with an absolute floor.
double integrate_adaptive(const RealFn& f, double a, double b, double tol = 1e-12,
                          const std::vector<double>& breaks = {});

/// Integral over [a, +inf).
double integrate_to_infinity(const RealFn& f, double a, double tol = 1e-12);

/// Integral over the whole real line; `breaks` as in integrate_adaptive.
double integrate_real_line(const RealFn& f, double tol = 1e-12,
                           const std::vector<double>& breaks = {});

/// int_{-1}^{1} K(x - y) f(y) dy split at the kernel peak.
double integrate_against_kernel(const RealFn& f, double x, double alpha, double tol = 1e-12);

}  // namespace lovelieb
