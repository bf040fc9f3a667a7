#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lovelieb/errors.hpp"
#include "lovelieb/integrate.hpp"
#include "lovelieb/nystrom.hpp"
#include "lovelieb/spectral.hpp"

namespace lovelieb {

enum class SolverMethod { Nystrom, Elements, Neumann, Collocation, Galerkin, Maclaurin };

std::string to_string(SolverMethod m);
SolverMethod solver_method_from_string(const std::string& s);

/// Everything needed to solve one EquationSpec with a chosen method.
struct SolverConfig {
  SolverMethod method = SolverMethod::Nystrom;
  QuadratureKind quad = QuadratureKind::GaussLegendre;
  /// Nodes (grid methods), elements, or basis size (expansion methods).
  int n = 64;
  bool regularize = false;
  bool use_parity = false;
  double neumann_tol = 1e-10;
  /// Collocation points; 0 means n + 1 (square system).
  int m_points = 0;
};

/// A solved instance from any solver family.
class Solution {
 public:
  explicit Solution(GridSolution s) : impl_(std::move(s)) {}
  explicit Solution(ExpansionSolution s) : impl_(std::move(s)) {}

  const EquationSpec& spec() const;
  double eval(double x) const;
  /// int_{-1}^{1} w(x) u(x) dx: the solver's own rule for grid solutions,
  /// Gauss-Legendre for expansions.
  double integrate(const RealFn& w) const;

  const GridSolution* grid() const { return std::get_if<GridSolution>(&impl_); }
  const ExpansionSolution* expansion() const { return std::get_if<ExpansionSolution>(&impl_); }

 private:
  std::variant<GridSolution, ExpansionSolution> impl_;
};

/// Dispatches to the configured solver. Collocation and Galerkin use the
/// Chebyshev basis matching the right-hand side's parity.
Solution solve(const EquationSpec& spec, const SolverConfig& cfg);

/// C(alpha) = int u for the g = 1 problem (rule sum for grid solutions).
double capacitance(const GridSolution& sol);
double capacitance(const ExpansionSolution& sol);

/// 8 int_0^1 x u dx for the g = x problem, as 8 sum_{x_i > 0} w_i x_i u_i.
double added_mass(const GridSolution& sol);

enum class EnergyModel { LiebLiniger, Gaudin };

struct EnergyPoint {
  double alpha = 0.0;
  double gamma = 0.0;
  double e = 0.0;
  bool failed = false;
  std::string error;
};

/// (gamma(alpha), e(alpha)) pairs: successful points sorted by gamma,
/// failed points (flagged, NaN values) after them in grid order.
struct EnergyCurve {
  EnergyModel model;
  std::vector<EnergyPoint> points;
  std::vector<double> alpha_grid;
};

/// Lieb-Liniger (minus kernel, g = 1): gamma = 2 pi alpha / int u,
///   e = gamma^3 / (2 pi alpha^3) int x^2 u.
/// Gaudin (plus kernel, g = 1): gamma = pi alpha / (2 int u),
///   e = -gamma^2/4 + 2 gamma^3 / (pi alpha^3) int x^2 u.
EnergyPoint energy_point(EnergyModel model, double alpha, const SolverConfig& cfg);
EnergyCurve energy_curve(EnergyModel model, const std::vector<double>& alpha_grid,
                         const SolverConfig& cfg);

/// e at a requested gamma by monotone cubic (PCHIP) interpolation through the
/// curve's successful points. DomainError outside their gamma range.
double energy_at_gamma(const EnergyCurve& curve, double gamma);

struct BoundCheck {
  std::string name;
  bool applicable = true;
  bool passed = true;
  /// The solution-side quantity (min u for the lower bound, sup|u| otherwise).
  double value = 0.0;
  double threshold = 0.0;
  /// Signed distance to failure: positive when the check passes.
  double margin = 0.0;
};

struct BoundReport {
  std::vector<BoundCheck> checks;
  bool all_passed() const;
};

/// Checks u > 1 (minus kernel, g = 1), the two sup-norm bounds in terms of
/// g and K, and pi/(2 atan alpha) for g = 1, over the nodes and 401 samples.
BoundReport bound_report(const EquationSpec& spec, const Solution& sol);

/// u(1; alpha) for g = 1 at every alpha.
std::vector<std::pair<double, double>> endpoint_sweep(Sign sign, const std::vector<double>& alpha_grid,
                                                      const SolverConfig& cfg);

struct PowerFit {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double rmse = 0.0;
  int iterations = 0;
};

class FitError : public NumericalError {
 public:
  FitError(const std::string& what, PowerFit best) : NumericalError(what), best_(best) {}
  const PowerFit& best() const noexcept { return best_; }

 private:
  PowerFit best_;
};

/// Least-squares a t^b + c by Gauss-Newton. Initial guess: c just below the
/// largest-t value, b from the log-log slope of (y - c), a from the
/// smallest-t point. Flat data returns a = 0, c = mean.
PowerFit power_fit(const std::vector<double>& t, const std::vector<double>& y);

/// n log-spaced values from lo to hi inclusive.
std::vector<double> log_space(double lo, double hi, int n);

}  // namespace lovelieb
