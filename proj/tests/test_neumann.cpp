#include <cmath>
#include <numbers>

#include "doctest.h"
#include "lovelieb/neumann.hpp"

using namespace lovelieb;

namespace {
EquationSpec spec_of(Sign s, double a) { return {s, a, RhsSpec::one()}; }
}  // namespace

TEST_CASE("convergence margin") {
  CHECK(convergence_margin(spec_of(Sign::PlusKernel, 1.0)) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(convergence_margin(spec_of(Sign::MinusKernel, 1.0)) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(convergence_margin(spec_of(Sign::MinusKernel, 1e9)) < 1e-9);
  const double tiny = convergence_margin(spec_of(Sign::MinusKernel, 1e-6));
  CHECK(tiny < 1.0);
  CHECK(tiny > 0.999);
  for (double a : {0.01, 0.3, 2.0, 40.0})
    CHECK(convergence_margin(spec_of(Sign::PlusKernel, a)) ==
          doctest::Approx(2.0 / std::numbers::pi * std::atan(1.0 / a)).epsilon(1e-15));
}

TEST_CASE("one iteration adds lambda times the kernel integral") {
  for (Sign s : {Sign::PlusKernel, Sign::MinusKernel}) {
    const auto rule = make_rule(QuadratureKind::GaussLegendre, 64);
    NeumannOptions opts;
    opts.max_iter = 1;
    opts.tol = 1e-300;
    try {
      solve_neumann(spec_of(s, 1.0), rule, opts);
      FAIL("expected non-convergence after one step");
    } catch (const NonConvergenceError& e) {
      const auto& last = e.last();
      CHECK(last.iterations == 1);
      CHECK(last.last_difference > 0.0);
      for (int i = 0; i < rule.n; ++i) {
        const double expect = 1.0 + lambda_of(s) * kernel_cdf_integral(rule.nodes[i], 1.0);
        CHECK(std::abs(last.solution.values[i] - expect) < 1e-9);
      }
    }
  }
}

TEST_CASE("agrees with the direct solve") {
  const auto rule = make_rule(QuadratureKind::GaussLegendre, 64);
  for (Sign s : {Sign::PlusKernel, Sign::MinusKernel}) {
    for (double a : {0.3, 1.0, 4.0}) {
      const auto it = solve_neumann(spec_of(s, a), rule);
      const auto direct = solve_nystrom(spec_of(s, a), rule);
      for (int i = 0; i < rule.n; ++i) CHECK(std::abs(it.solution.values[i] - direct.values[i]) < 1e-8);
      for (double x : {-1.0, -0.2, 0.55, 1.0})
        CHECK(std::abs(eval_solution(it.solution, x) - eval_solution(direct, x)) < 1e-8);
    }
  }
}

TEST_CASE("smaller alpha needs more iterations") {
  const auto rule = make_rule(QuadratureKind::GaussLegendre, 64);
  const int n01 = solve_neumann(spec_of(Sign::MinusKernel, 0.1), rule).iterations;
  const int n1 = solve_neumann(spec_of(Sign::MinusKernel, 1.0), rule).iterations;
  CHECK(n01 > n1);
}

TEST_CASE("geometric decay at the margin rate") {
  const auto rule = make_rule(QuadratureKind::Simpson, 65);
  for (Sign s : {Sign::PlusKernel, Sign::MinusKernel}) {
    for (double a : {0.2, 0.5, 1.0, 3.0, 10.0}) {
      const auto spec = spec_of(s, a);
      const auto r = solve_neumann(spec, rule);
      const double m = convergence_margin(spec);
      for (std::size_t k = 3; k + 1 < r.history.size(); ++k) {
        if (r.history[k] < 1e-13) break;  // rounding floor
        CHECK(r.history[k + 1] / r.history[k] <= m + 0.05);
      }
      if (a >= 0.5) {
        const int bound = static_cast<int>(std::ceil(std::log(NeumannOptions{}.tol) / std::log(m))) + 5;
        CHECK(r.iterations <= bound);
      }
    }
  }
}

TEST_CASE("other right-hand sides") {
  const auto rule = make_rule(QuadratureKind::GaussLegendre, 48);
  for (const auto& g : {RhsSpec::x(), RhsSpec::hulthen(), RhsSpec::quadratic_well(1.0)}) {
    const EquationSpec spec(Sign::MinusKernel, 0.8, g);
    const auto it = solve_neumann(spec, rule);
    const auto direct = solve_nystrom(spec, rule);
    for (int i = 0; i < rule.n; ++i) CHECK(std::abs(it.solution.values[i] - direct.values[i]) < 1e-8);
  }
}

TEST_CASE("warm start") {
  const auto rule = make_rule(QuadratureKind::GaussLegendre, 32);
  const auto spec = spec_of(Sign::MinusKernel, 0.5);
  const auto direct = solve_nystrom(spec, rule);
  NeumannOptions opts;
  opts.warm_start = direct.values;
  const auto r = solve_neumann(spec, rule, opts);
  CHECK(r.iterations == 1);
  CHECK(r.last_difference < 1e-12);

  opts.warm_start = std::vector<double>(5, 1.0);
  CHECK_THROWS_AS(solve_neumann(spec, rule, opts), ParameterError);
}

TEST_CASE("invalid options") {
  const auto rule = make_rule(QuadratureKind::GaussLegendre, 16);
  NeumannOptions bad_tol;
  bad_tol.tol = 0.0;
  CHECK_THROWS_AS(solve_neumann(spec_of(Sign::PlusKernel, 1.0), rule, bad_tol), ParameterError);
  NeumannOptions bad_iter;
  bad_iter.max_iter = 0;
  CHECK_THROWS_AS(solve_neumann(spec_of(Sign::PlusKernel, 1.0), rule, bad_iter), ParameterError);
}
