#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "lovelieb/observables.hpp"

using namespace lovelieb;
using std::numbers::pi;

namespace {

SolverConfig gauss(int n) {
  SolverConfig c;
  c.n = n;
  return c;
}

SolverConfig config_for(SolverMethod m) {
  SolverConfig c;
  c.method = m;
  switch (m) {
    case SolverMethod::Nystrom: c.n = 129; c.quad = QuadratureKind::Simpson; break;
    case SolverMethod::Elements: c.n = 256; break;
    case SolverMethod::Neumann: c.n = 64; break;
    case SolverMethod::Collocation: c.n = 24; break;
    case SolverMethod::Galerkin: c.n = 24; break;
    case SolverMethod::Maclaurin: c.n = 10; break;
  }
  return c;
}

}  // namespace

TEST_CASE("method names round-trip") {
  for (auto m : {SolverMethod::Nystrom, SolverMethod::Elements, SolverMethod::Neumann, SolverMethod::Collocation,
                 SolverMethod::Galerkin, SolverMethod::Maclaurin})
    CHECK(solver_method_from_string(to_string(m)) == m);
  CHECK_THROWS_AS(solver_method_from_string("magic"), ParameterError);
}

TEST_CASE("capacitance") {
  for (double a : {0.05, 0.3, 1.0, 7.0}) {
    const auto sol = solve_nystrom({Sign::MinusKernel, a, RhsSpec::one()}, make_rule(QuadratureKind::Simpson, 129));
    CHECK(capacitance(sol) > 2.0);
  }
  const auto s20 = solve_nystrom({Sign::MinusKernel, 20.0, RhsSpec::one()}, make_rule(QuadratureKind::GaussLegendre, 32));
  // u = 1 + 2/(pi alpha) + O(alpha^-2), integrated over [-1, 1].
  CHECK(std::abs(capacitance(s20) - (2.0 + 4.0 / (pi * 20.0))) < 1e-2);

  auto zero = s20;
  std::fill(zero.values.begin(), zero.values.end(), 0.0);
  CHECK(capacitance(zero) == 0.0);

  const auto odd = solve_nystrom({Sign::MinusKernel, 1.0, RhsSpec::x()}, make_rule(QuadratureKind::GaussLegendre, 32));
  CHECK_THROWS_AS(capacitance(odd), ParameterError);
}

TEST_CASE("capacitance from grid and expansion agree") {
  for (Sign s : {Sign::PlusKernel, Sign::MinusKernel}) {
    for (double a : {0.5, 1.0, 3.0}) {
      const EquationSpec spec(s, a, RhsSpec::one());
      const double cg = capacitance(solve_nystrom(spec, make_rule(QuadratureKind::GaussLegendre, 96)));
      const double ce = capacitance(solve_collocation(spec, Basis::ChebyshevEven, 20, 21));
      CHECK(std::abs(cg - ce) < 1e-6);
    }
  }
}

TEST_CASE("added mass") {
  const auto rule = make_rule(QuadratureKind::GaussLegendre, 64);
  const auto sol = solve_nystrom({Sign::MinusKernel, 10.0, RhsSpec::x()}, rule);
  // 8 int_0^1 x (x + 4x / (3 pi alpha^3)) dx
  const double series = 8.0 * (1.0 / 3.0 + 4.0 / (3.0 * pi * 1000.0) / 3.0);
  CHECK(std::abs(added_mass(sol) - series) < 1e-4);

  double full = 0.0;
  for (int i = 0; i < rule.n; ++i) full += rule.weights[i] * rule.nodes[i] * sol.values[i];
  CHECK(std::abs(4.0 * full - added_mass(sol)) < 1e-10);

  auto zero = sol;
  std::fill(zero.values.begin(), zero.values.end(), 0.0);
  CHECK(added_mass(zero) == 0.0);
  CHECK_THROWS_AS(added_mass(solve_nystrom({Sign::MinusKernel, 1.0, RhsSpec::one()}, rule)), ParameterError);
}

TEST_CASE("Tonks-Girardeau limit") {
  const auto p = energy_point(EnergyModel::LiebLiniger, 1e3, gauss(64));
  REQUIRE_FALSE(p.failed);
  CHECK(std::abs(p.e - pi * pi / 3) / (pi * pi / 3) < 0.01);
  CHECK(p.gamma == doctest::Approx(pi * 1e3).epsilon(0.01));
}

TEST_CASE("Gaudin energy lies above -gamma^2/4") {
  const auto c = energy_curve(EnergyModel::Gaudin, {0.05, 0.2, 1.0, 4.0, 16.0}, gauss(128));
  for (const auto& p : c.points) {
    REQUIRE_FALSE(p.failed);
    CHECK(p.gamma > 0.0);
    CHECK(p.e + p.gamma * p.gamma / 4 > 0.0);
  }
}

TEST_CASE("Lieb-Liniger curve") {
  const std::vector<double> grid{2, 4, 8, 16, 32};
  const auto c = energy_curve(EnergyModel::LiebLiniger, grid, gauss(64));
  REQUIRE(c.points.size() == 5);
  CHECK(c.alpha_grid == grid);
  for (std::size_t k = 0; k + 1 < c.points.size(); ++k) {
    CHECK(c.points[k].alpha < c.points[k + 1].alpha);
    CHECK(c.points[k].gamma < c.points[k + 1].gamma);
    CHECK(c.points[k].e < c.points[k + 1].e);
  }

  const auto fine = energy_curve(EnergyModel::LiebLiniger, grid, gauss(128));
  for (std::size_t k = 0; k < grid.size(); ++k) CHECK(std::abs(c.points[k].e - fine.points[k].e) < 1e-6);

  const double gm = 0.5 * (c.points[1].gamma + c.points[2].gamma);
  const double em = energy_at_gamma(c, gm);
  CHECK(em > c.points[1].e);
  CHECK(em < c.points[2].e);
  CHECK(energy_at_gamma(c, c.points[3].gamma) == doctest::Approx(c.points[3].e).epsilon(1e-14));
  CHECK_THROWS_AS(energy_at_gamma(c, c.points.back().gamma * 2), DomainError);
  CHECK_THROWS_AS(energy_curve(EnergyModel::LiebLiniger, {1.0, -1.0}, gauss(16)), ParameterError);
}

TEST_CASE("energy curves are invariant under grid refinement for the Gaudin model") {
  const std::vector<double> grid{0.5, 1, 2, 4};
  const auto a = energy_curve(EnergyModel::Gaudin, grid, gauss(64));
  const auto b = energy_curve(EnergyModel::Gaudin, grid, gauss(128));
  for (std::size_t k = 0; k < grid.size(); ++k) CHECK(std::abs(a.points[k].e - b.points[k].e) < 1e-6);
}

TEST_CASE("failed energy points are flagged") {
  SolverConfig bad;
  bad.method = SolverMethod::Maclaurin;
  bad.n = 6;
  const auto c = energy_curve(EnergyModel::LiebLiniger, {0.5, 2.0, 4.0}, bad);
  REQUIRE(c.points.size() == 3);
  CHECK_FALSE(c.points[0].failed);
  CHECK_FALSE(c.points[1].failed);
  CHECK(c.points[2].failed);
  CHECK(c.points[2].alpha == 0.5);
  CHECK_FALSE(c.points[2].error.empty());
}

TEST_CASE("bounds for a Lieb solution") {
  const EquationSpec spec(Sign::MinusKernel, 1.0, RhsSpec::one());
  const Solution sol(solve_nystrom(spec, make_rule(QuadratureKind::Simpson, 129)));
  const auto r = bound_report(spec, sol);
  REQUIRE(r.checks.size() == 4);
  for (const auto& c : r.checks) {
    CHECK(c.applicable);
    CHECK(c.passed);
    CHECK(c.margin >= 0.0);
  }
  CHECK(r.checks[3].name == "reich");
  CHECK(r.checks[3].threshold == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(r.all_passed());
}

TEST_CASE("bounds for a Gaudin solution") {
  const EquationSpec spec(Sign::PlusKernel, 1.0, RhsSpec::one());
  const auto r = bound_report(spec, Solution(solve_nystrom(spec, make_rule(QuadratureKind::Simpson, 129))));
  CHECK(r.checks[0].name == "lower");
  CHECK_FALSE(r.checks[0].applicable);
  for (std::size_t k = 1; k < 4; ++k) {
    CHECK(r.checks[k].applicable);
    CHECK(r.checks[k].passed);
  }
  CHECK(r.all_passed());
}

TEST_CASE("bounds hold for every solver family") {
  for (SolverMethod m : {SolverMethod::Nystrom, SolverMethod::Elements, SolverMethod::Neumann,
                         SolverMethod::Collocation, SolverMethod::Galerkin, SolverMethod::Maclaurin}) {
    for (Sign s : {Sign::PlusKernel, Sign::MinusKernel}) {
      for (double a : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
        if (m == SolverMethod::Maclaurin && a <= 1.0) continue;  // needs alpha > 1
        const EquationSpec spec(s, a, RhsSpec::one());
        const auto r = bound_report(spec, solve(spec, config_for(m)));
        INFO(to_string(m), " alpha=", a);
        CHECK(r.all_passed());
      }
    }
  }
}

TEST_CASE("a violated bound is reported") {
  const EquationSpec spec(Sign::MinusKernel, 1.0, RhsSpec::one());
  // A constant 0.5 sits below the lower bound u > 1.
  const ExpansionSolution fake{spec, Basis::ChebyshevEven, {0.5}, 1.0};
  const auto r = bound_report(spec, Solution(fake));
  CHECK_FALSE(r.checks[0].passed);
  CHECK(r.checks[0].margin < 0.0);
  CHECK_FALSE(r.all_passed());
}

TEST_CASE("endpoint sweep") {
  const auto cfg = gauss(256);
  const auto sweep = endpoint_sweep(Sign::MinusKernel, log_space(0.05, 0.8, 12), [] {
    SolverConfig c;
    c.n = 256;
    c.regularize = true;
    c.use_parity = true;
    return c;
  }());
  REQUIRE(sweep.size() == 12);
  for (std::size_t k = 0; k < sweep.size(); ++k) {
    CHECK(sweep[k].second > 1.0);
    if (k > 0) CHECK(sweep[k].second < sweep[k - 1].second);
  }
  for (const auto& [a, u] : endpoint_sweep(Sign::MinusKernel, {0.01, 3.0, 50.0}, cfg)) CHECK(u > 1.0);
}

TEST_CASE("Gaudin endpoint value at alpha=0.01") {
  // Expected to fail: the converged value tends to 1/sqrt(2).
  SolverConfig c;
  c.n = 1024;
  c.regularize = true;
  c.use_parity = true;
  const auto sweep = endpoint_sweep(Sign::PlusKernel, {0.01}, c);
  CHECK(sweep[0].second == doctest::Approx(0.707665).epsilon(1e-5));
  CHECK(std::abs(sweep[0].second - 0.75) < 0.02);
}

TEST_CASE("power fit recovers noiseless data") {
  const auto t = log_space(0.05, 0.8, 20);
  std::vector<double> y;
  for (double x : t) y.push_back(2.0 * std::pow(x, -0.5) + 1.0);
  const auto f = power_fit(t, y);
  CHECK(std::abs(f.a - 2.0) < 1e-6);
  CHECK(std::abs(f.b + 0.5) < 1e-6);
  CHECK(std::abs(f.c - 1.0) < 1e-6);
  CHECK(f.rmse < 1e-8);
  CHECK(f.rmse >= 0.0);
}

TEST_CASE("power fit on random models") {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> ua(0.5, 3.0), ub(-1.5, -0.2), uc(-1.0, 1.0);
  for (int k = 0; k < 20; ++k) {
    const double a = ua(rng), b = ub(rng), c = uc(rng);
    const auto t = log_space(0.1, 2.0, 15);
    std::vector<double> y;
    for (double x : t) y.push_back(a * std::pow(x, b) + c);
    const auto f = power_fit(t, y);
    CHECK(std::abs(f.a - a) < 1e-6);
    CHECK(std::abs(f.b - b) < 1e-6);
    CHECK(std::abs(f.c - c) < 1e-6);
  }
}

TEST_CASE("power fit edge cases") {
  const std::vector<double> t{0.1, 0.2, 0.4, 0.8, 1.6};
  const std::vector<double> flat(5, 0.7);
  try {
    const auto f = power_fit(t, flat);
    CHECK(std::abs(f.a) < 1e-6);
    CHECK(f.c == doctest::Approx(0.7).epsilon(1e-12));
  } catch (const FitError&) {
  }
  CHECK_THROWS_AS(power_fit({0.1, 0.2, 0.3}, {1, 2, 3}), ParameterError);
  CHECK_THROWS_AS(power_fit({0.0, 0.2, 0.3, 0.4}, {1, 2, 3, 4}), ParameterError);
  CHECK_THROWS_AS(power_fit({0.1, 0.2, 0.3, 0.4}, {1, 2, 3}), ParameterError);
}

TEST_CASE("endpoint curve fit") {
  // 33 log-spaced points on [0.05, 0.8]. The offset c is expected to miss the
  // 5% window: this data gives c close to 0.599.
  const auto sweep = endpoint_sweep(Sign::MinusKernel, log_space(0.05, 0.8, 33), [] {
    SolverConfig c;
    c.n = 512;
    c.regularize = true;
    c.use_parity = true;
    return c;
  }());
  std::vector<double> t, y;
  for (const auto& [a, u] : sweep) {
    t.push_back(a);
    y.push_back(u);
  }
  const auto f = power_fit(t, y);
  CHECK(std::abs(f.a / 1.063 - 1) < 0.05);
  CHECK(std::abs(f.b / -0.5289 - 1) < 0.05);
  CHECK(f.rmse <= 0.01);
  CHECK(std::abs(f.c / 0.5602 - 1) < 0.05);
}

TEST_CASE("log spacing") {
  const auto v = log_space(0.05, 0.8, 33);
  REQUIRE(v.size() == 33);
  CHECK(v.front() == 0.05);
  CHECK(v.back() == 0.8);
  for (std::size_t k = 1; k < v.size(); ++k) CHECK(v[k] / v[k - 1] == doctest::Approx(std::pow(16.0, 1.0 / 32)));
  CHECK_THROWS_AS(log_space(0.0, 1.0, 5), ParameterError);
}
