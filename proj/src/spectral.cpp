#include "lovelieb/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include <Eigen/Dense>

#include "lovelieb/errors.hpp"
#include "lovelieb/integrate.hpp"
#include "lovelieb/quadrature.hpp"

namespace lovelieb {

using std::numbers::pi;

std::string to_string(Basis b) {
  switch (b) {
    case Basis::MonomialEven:
      return "monomial-even";
    case Basis::MonomialOdd:
      return "monomial-odd";
    case Basis::ChebyshevEven:
      return "chebyshev-even";
    case Basis::ChebyshevOdd:
      return "chebyshev-odd";
    case Basis::LegendreEven:
      return "legendre-even";
    case Basis::Cosine:
      return "cosine";
  }
  return "?";
}

BasisFamily family_of(Basis b) {
  switch (b) {
    case Basis::MonomialEven:
    case Basis::MonomialOdd:
      return BasisFamily::Monomial;
    case Basis::ChebyshevEven:
    case Basis::ChebyshevOdd:
      return BasisFamily::Chebyshev;
    case Basis::LegendreEven:
      return BasisFamily::Legendre;
    case Basis::Cosine:
      return BasisFamily::Cosine;
  }
  return BasisFamily::Monomial;
}

int family_index(Basis b, int k) {
  switch (b) {
    case Basis::MonomialOdd:
    case Basis::ChebyshevOdd:
      return 2 * k + 1;
    case Basis::Cosine:
      return k;
    default:
      return 2 * k;
  }
}

Parity parity_of(Basis b) {
  return (b == Basis::MonomialOdd || b == Basis::ChebyshevOdd) ? Parity::Odd : Parity::Even;
}

double chebyshev_u(int n, double t) {
  if (n == 0) return 1.0;
  double u0 = 1.0;
  double u1 = 2.0 * t;
  for (int k = 2; k <= n; ++k) {
    const double u2 = 2.0 * t * u1 - u0;
    u0 = u1;
    u1 = u2;
  }
  return u1;
}

double family_function(BasisFamily f, int n, double x) {
  switch (f) {
    case BasisFamily::Monomial:
      return std::pow(x, n);
    case BasisFamily::Chebyshev:
      return std::cos(n * std::acos(std::clamp(x, -1.0, 1.0)));
    case BasisFamily::Legendre:
      return legendre_p(n, x).p;
    case BasisFamily::Cosine:
      return std::cos(n * pi * x);
  }
  return 0.0;
}

namespace {

// Gaussian elimination with partial pivoting restricted to a band of half
// width `kl` below / `ku` above the diagonal (fill-in grows ku by kl).
std::vector<double> banded_solve(std::vector<double> a, std::vector<double> b, int n, int kl, int ku) {
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
  const int upper = ku + kl;
  for (int k = 0; k < n; ++k) {
    const int last_row = std::min(n - 1, k + kl);
    int piv = k;
    for (int i = k + 1; i <= last_row; ++i) {
      if (std::abs(at(i, k)) > std::abs(at(piv, k))) piv = i;
    }
    if (at(piv, k) == 0.0) throw NumericalError("banded recurrence system is singular");
    const int last_col = std::min(n - 1, k + upper);
    if (piv != k) {
      for (int j = k; j <= last_col; ++j) std::swap(at(k, j), at(piv, j));
      std::swap(b[k], b[piv]);
    }
    for (int i = k + 1; i <= last_row; ++i) {
      const double f = at(i, k) / at(k, k);
      if (f == 0.0) continue;
      for (int j = k; j <= last_col; ++j) at(i, j) -= f * at(k, j);
      b[i] -= f * b[k];
    }
  }
  std::vector<double> x(n);
  for (int i = n - 1; i >= 0; --i) {
    double s = b[i];
    const int last_col = std::min(n - 1, i + upper);
    for (int j = i + 1; j <= last_col; ++j) s -= at(i, j) * x[j];
    x[i] = s / at(i, i);
  }
  return x;
}

double chebyshev_plain_moment(int n) { return (n % 2 == 1) ? 0.0 : 2.0 / (1.0 - double(n) * n); }

double bernstein_rho(double x, double alpha) {
  const std::complex<double> w(x, alpha);
  const std::complex<double> r = w + std::sqrt(w * w - 1.0);
  const double m = std::abs(r);
  return std::max(m, 1.0 / m);
}

// int K(x - y) T_k(y) dy with y = cos(theta), which avoids evaluating acos
// near y = +-1 where it amplifies rounding.
double chebyshev_moment_by_angle(int k, double x, double alpha) {
  const double peak = std::acos(std::clamp(x, -1.0, 1.0));
  std::vector<double> breaks{peak};
  if (alpha < 0.5) {
    for (double d : {alpha, 8.0 * alpha}) {
      breaks.push_back(std::acos(std::clamp(x + d, -1.0, 1.0)));
      breaks.push_back(std::acos(std::clamp(x - d, -1.0, 1.0)));
    }
  }
  auto f = [&](double th) { return kernel_eval(x - std::cos(th), alpha) * std::cos(k * th) * std::sin(th); };
  return integrate_adaptive(f, 0.0, pi, 1e-13, breaks);
}

KernelIntegrals quadrature_integrals(BasisFamily f, int n_max, double x, double alpha) {
  KernelIntegrals out;
  out.values.resize(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    if (f == BasisFamily::Chebyshev) {
      out.values[n] = chebyshev_moment_by_angle(n, x, alpha);
      continue;
    }
    out.values[n] = integrate_against_kernel([&](double y) { return family_function(f, n, y); }, x,
                                             alpha, 1e-13);
  }
  return out;
}

KernelIntegrals chebyshev_integrals(int n_max, double x, double alpha) {
  KernelIntegrals out;
  auto& v = out.values;
  v.resize(static_cast<std::size_t>(n_max) + 1);
  const double c = alpha / pi;
  const double rho2 = x * x + alpha * alpha;
  const auto mono = monomial_kernel_integrals(1, x, alpha);
  v[0] = mono.values[0];
  if (n_max >= 1) v[1] = mono.values[1];
  if (n_max < 2) return out;

  const double rho = bernstein_rho(x, alpha);
  if (n_max * std::log(rho) <= std::log(1e4)) {
    // Forward: solve the n-th relation for I_{n+2}.
    v[2] = 4.0 * c - v[0] + 4.0 * x * v[1] - 2.0 * rho2 * v[0];
    for (int n = 1; n + 2 <= n_max; ++n) {
      v[n + 2] = 4.0 * c * chebyshev_plain_moment(n) - 2.0 * v[n] - v[std::abs(n - 2)] +
                 4.0 * x * (v[n + 1] + v[std::abs(n - 1)]) - 4.0 * rho2 * v[n];
    }
    return out;
  }

  // Forward recurrence loses ~log(rho) digits per step; pin the tail with two
  // quadratures and solve the recurrence as a boundary-value problem.
  const int lead = std::min(2000, static_cast<int>(std::ceil(std::log(1e16) / std::log(rho))) + 2);
  const int top = n_max + lead;  // unknowns I_2..I_{top-2}
  auto quad_t = [&](int k) { return chebyshev_moment_by_angle(k, x, alpha); };
  const double i_top_m1 = quad_t(top - 1);
  const double i_top = quad_t(top);

  const int dim = top - 3;
  std::vector<double> a(static_cast<std::size_t>(dim) * dim, 0.0);
  std::vector<double> b(dim, 0.0);
  auto known = [&](int k) -> std::optional<double> {
    if (k == 0) return v[0];
    if (k == 1) return v[1];
    if (k == top - 1) return i_top_m1;
    if (k == top) return i_top;
    return std::nullopt;
  };
  const double coef[5] = {0.25, -x, 0.5 + rho2, -x, 0.25};  // I_{n-2} .. I_{n+2}
  for (int n = 2; n <= top - 2; ++n) {
    const int row = n - 2;
    b[row] = c * chebyshev_plain_moment(n);
    for (int d = -2; d <= 2; ++d) {
      const int k = n + d;
      if (auto kv = known(k)) {
        b[row] -= coef[d + 2] * *kv;
      } else {
        a[static_cast<std::size_t>(row) * dim + (k - 2)] = coef[d + 2];
      }
    }
  }
  const auto sol = banded_solve(std::move(a), std::move(b), dim, 2, 2);
  for (int n = 2; n <= n_max; ++n) v[n] = sol[n - 2];
  return out;
}

void require_matching_parity(const EquationSpec& spec, Basis basis) {
  const auto p = spec.rhs().parity();
  if (!p) throw ParameterError("expansion bases need an even or odd right-hand side");
  if (*p != parity_of(basis)) throw ParameterError("basis parity does not match the right-hand side");
}

struct SolvedSystem {
  std::vector<double> x;
  double rcond;
};

SolvedSystem svd_solve(const Eigen::MatrixXd& a, const Eigen::VectorXd& b) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  const double rcond = s.size() ? s(s.size() - 1) / s(0) : 0.0;
  if (!(rcond > 1e-15)) throw SingularSystemError("expansion system is rank deficient", rcond);
  const Eigen::VectorXd x = svd.solve(b);
  return {{x.data(), x.data() + x.size()}, rcond};
}

}  // namespace

KernelIntegrals basis_kernel_integrals(BasisFamily f, int n_max, double x, double alpha) {
  require_positive_alpha(alpha);
  if (n_max < 0) throw ParameterError("n_max must be non-negative");
  if (!(std::abs(x) <= 1.0 + 1e-12)) throw DomainError("x must lie in [-1, 1]");

  KernelIntegrals out;
  switch (f) {
    case BasisFamily::Monomial:
      out = monomial_kernel_integrals(n_max, x, alpha);
      break;
    case BasisFamily::Chebyshev:
      out = chebyshev_integrals(n_max, x, alpha);
      break;
    case BasisFamily::Legendre:
    case BasisFamily::Cosine:
      return quadrature_integrals(f, n_max, x, alpha);
  }
  // |phi_n| <= 1 on [-1,1] for monomials and T_n, so |I_n| <= I_0.
  const double bound = 1e6 * std::abs(out.values[0]);
  const bool blown = std::any_of(out.values.begin(), out.values.end(),
                                 [&](double v) { return !std::isfinite(v) || std::abs(v) > bound; });
  if (blown) {
    out = quadrature_integrals(f, n_max, x, alpha);
    out.used_fallback = true;
  }
  return out;
}

ExpansionSolution solve_collocation(const EquationSpec& spec, Basis basis, int n_basis, int m_points) {
  if (n_basis < 0) throw ParameterError("n_basis must be non-negative");
  if (m_points < n_basis + 1) throw ParameterError("collocation needs m_points >= n_basis + 1");
  require_matching_parity(spec, basis);

  const auto fam = family_of(basis);
  const int cols = n_basis + 1;
  const int top = family_index(basis, n_basis);
  Eigen::MatrixXd a(m_points, cols);
  Eigen::VectorXd b(m_points);
  for (int k = 0; k < m_points; ++k) {
    // cos(j pi x) at Chebyshev points clustered near 1 is nearly singular;
    // midpoints make the cosine system a discrete cosine transform.
    const double x = basis == Basis::Cosine ? (k + 0.5) / m_points
                                            : std::cos((2.0 * k + 1.0) * pi / (4.0 * m_points));
    const auto ints = basis_kernel_integrals(fam, top, x, spec.alpha());
    for (int j = 0; j < cols; ++j) {
      const int idx = family_index(basis, j);
      a(k, j) = family_function(fam, idx, x) - spec.lambda() * ints.values[idx];
    }
    b(k) = spec.g(x);
  }
  auto solved = svd_solve(a, b);
  return ExpansionSolution{spec, basis, std::move(solved.x), solved.rcond};
}

ExpansionSolution solve_galerkin(const EquationSpec& spec, Basis basis, int n_basis) {
  if (n_basis < 0) throw ParameterError("n_basis must be non-negative");
  require_matching_parity(spec, basis);

  const auto fam = family_of(basis);
  const int cols = n_basis + 1;
  const int top = family_index(basis, n_basis);
  const auto rule = make_rule(QuadratureKind::GaussLegendre, 4 * n_basis + 16);

  Eigen::MatrixXd phi(rule.n, cols);
  Eigen::MatrixXd op(rule.n, cols);
  Eigen::VectorXd g(rule.n);
  for (int q = 0; q < rule.n; ++q) {
    const double x = rule.nodes[q];
    const auto ints = basis_kernel_integrals(fam, top, x, spec.alpha());
    for (int j = 0; j < cols; ++j) {
      const int idx = family_index(basis, j);
      phi(q, j) = family_function(fam, idx, x);
      op(q, j) = phi(q, j) - spec.lambda() * ints.values[idx];
    }
    g(q) = spec.g(x);
  }
  const Eigen::VectorXd w = Eigen::Map<const Eigen::VectorXd>(rule.weights.data(), rule.n);
  const Eigen::MatrixXd a = phi.transpose() * w.asDiagonal() * op;
  const Eigen::VectorXd b = phi.transpose() * w.asDiagonal() * g;
  auto solved = svd_solve(a, b);
  return ExpansionSolution{spec, basis, std::move(solved.x), solved.rcond};
}

double maclaurin_moment(int m, int n, double alpha) {
  const double a2 = alpha * alpha;
  auto f = [=](double y) {
    const double y2 = y * y + a2;
    return std::pow(y, 2 * n) * std::pow(y2, -m - 1) * chebyshev_u(2 * m, y / std::sqrt(y2));
  };
  return 2.0 * integrate_adaptive(f, 0.0, 1.0, 1e-14);
}

ExpansionSolution solve_maclaurin(const EquationSpec& spec, int n_basis) {
  if (!(spec.alpha() > 1.0)) throw DomainError("the Maclaurin system needs alpha > 1");
  if (spec.rhs().kind() != RhsSpec::Kind::One) {
    throw ParameterError("the Maclaurin system is only available for g = 1");
  }
  if (n_basis < 0) throw ParameterError("n_basis must be non-negative");

  const int dim = n_basis + 1;
  const double scale = spec.lambda() * spec.alpha() / pi;
  Eigen::MatrixXd a(dim, dim);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(dim);
  b(0) = 1.0;
  for (int m = 0; m < dim; ++m) {
    for (int n = 0; n < dim; ++n) a(m, n) = (m == n ? 1.0 : 0.0) - scale * maclaurin_moment(m, n, spec.alpha());
  }
  auto solved = svd_solve(a, b);
  return ExpansionSolution{spec, Basis::MonomialEven, std::move(solved.x), solved.rcond};
}

double eval_expansion(const ExpansionSolution& sol, double x) {
  const auto& c = sol.coeffs;
  if (c.empty()) return 0.0;
  switch (sol.basis) {
    case Basis::MonomialEven:
    case Basis::MonomialOdd: {
      const double x2 = x * x;
      double acc = 0.0;
      for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x2 + *it;
      return sol.basis == Basis::MonomialOdd ? x * acc : acc;
    }
    case Basis::ChebyshevEven:
    case Basis::ChebyshevOdd:
    case Basis::LegendreEven: {
      // Walk the family recurrence once, picking out every other member.
      const bool legendre = sol.basis == Basis::LegendreEven;
      const int top = family_index(sol.basis, static_cast<int>(c.size()) - 1);
      double p0 = 1.0;
      double p1 = x;
      double acc = 0.0;
      for (int n = 0; n <= top; ++n) {
        double pn;
        if (n == 0) {
          pn = 1.0;
        } else if (n == 1) {
          pn = x;
        } else {
          pn = legendre ? ((2.0 * n - 1.0) * x * p1 - (n - 1.0) * p0) / n : 2.0 * x * p1 - p0;
          p0 = p1;
          p1 = pn;
        }
        const bool odd_basis = sol.basis == Basis::ChebyshevOdd;
        if ((n % 2 == 1) == odd_basis) acc += c[static_cast<std::size_t>(n / 2)] * pn;
      }
      return acc;
    }
    case Basis::Cosine: {
      double acc = 0.0;
      for (std::size_t k = 0; k < c.size(); ++k) acc += c[k] * std::cos(k * pi * x);
      return acc;
    }
  }
  return 0.0;
}

}  // namespace lovelieb
