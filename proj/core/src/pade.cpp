#include "mlf/pade.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mlf/errors.hpp"
#include "mlf/roots.hpp"
#include "mlf/scalar.hpp"

namespace mlf {

namespace {

constexpr int kMaxPadeDegree = 16;

double sign_power(int k) { return k % 2 == 0 ? 1.0 : -1.0; }

PadeApproximant from_unknowns(const PadeSystem& s, std::span<const double> x, PadeSolver solver) {
  PadeApproximant out;
  out.alpha = s.alpha;
  out.beta = s.beta;
  out.m = s.m;
  out.n = s.n;
  out.r = s.r;
  out.solver = solver;
  out.p.assign(x.begin(), x.begin() + s.r);
  out.p.push_back(0.0);
  out.q.assign(x.begin() + s.r, x.end());
  return out;
}

void rescale_to_unit_q0(PadeApproximant& approx) {
  const double q0 = approx.q[0];
  if (!(std::abs(q0) > 1e-13)) return;
  for (double& v : approx.p) v /= q0;
  for (double& v : approx.q) v /= q0;
  approx.q[0] = 1.0;
  approx.rescaled = true;
}

double pivot_tolerance(const Matrix& c) {
  return static_cast<double>(c.rows()) * std::numeric_limits<double>::epsilon() * c.max_abs();
}

}  // namespace

const char* to_string(PadeSolver solver) noexcept {
  switch (solver) {
    case PadeSolver::FixedQ0: return "fixed";
    case PadeSolver::SvdNull: return "svd";
    case PadeSolver::LuHomogeneous: return "lu";
  }
  return "unknown";
}

double series_coeff_a(int k, double alpha, double beta) {
  if (k < 0) throw InvalidParameter("series_coeff_a: k must be nonnegative");
  return sign_power(k) * reciprocal_gamma(beta + k * alpha);
}

double series_coeff_b(int k, double alpha, double beta) {
  if (k < 1) throw InvalidParameter("series_coeff_b: k must be positive");
  const double arg = beta - k * alpha;
  if (arg <= 0.5) return sign_power(k) / kPi * sin_pi(k * alpha - beta) * gamma_real(1.0 - arg);
  return sign_power(k - 1) * reciprocal_gamma(arg);
}

PadeSystem assemble_pade_matrix(double alpha, double beta, int m, int n) {
  if (m < 1 || n < 1) throw InvalidParameter("assemble_pade_matrix: m and n must be positive");
  if ((m + n) % 2 == 0) throw InvalidParameter("assemble_pade_matrix: m + n must be odd");
  if (m + n < 3) throw InvalidParameter("assemble_pade_matrix: m + n must be at least 3");
  const int r = (m + n - 1) / 2;
  if (r > kMaxPadeDegree) throw InvalidParameter("assemble_pade_matrix: r exceeds 16");

  PadeSystem s;
  s.alpha = alpha;
  s.beta = beta;
  s.m = m;
  s.n = n;
  s.r = r;
  s.c = Matrix(2 * r, 2 * r + 1);
  std::vector<double> a(m), b(std::max(n, 1));
  for (int k = 0; k < m; ++k) a[k] = series_coeff_a(k, alpha, beta);
  for (int k = 1; k < n; ++k) b[k] = series_coeff_b(k, alpha, beta);

  auto q_col = [r](int j) { return static_cast<std::size_t>(r + j); };
  std::size_t row = 0;
  // p_k - sum_{j<=k} a_{k-j} q_j = 0
  auto maclaurin_row = [&](int k) {
    s.c(row, k) = 1.0;
    for (int j = 0; j <= k; ++j) s.c(row, q_col(j)) -= a[k - j];
    ++row;
  };
  // p_k - sum_{j>k} b_{j-k} q_j = 0
  auto infinity_row = [&](int k) {
    s.c(row, k) = 1.0;
    for (int j = k + 1; j <= r; ++j) s.c(row, q_col(j)) -= b[j - k];
    ++row;
  };

  if (m >= r + 1) {
    for (int k = 0; k <= r - 1; ++k) maclaurin_row(k);
    for (int k = r; k <= m - 1; ++k) {
      for (int j = 0; j <= r; ++j) s.c(row, q_col(j)) = -a[k - j];
      ++row;
    }
    for (int k = r - n + 1; k <= r - 1; ++k) infinity_row(k);
  } else {
    for (int k = 0; k <= m - 1; ++k) maclaurin_row(k);
    for (int k = -(r - m); k <= -1; ++k) {
      for (int j = 0; j <= r; ++j) s.c(row, q_col(j)) = -b[j - k];
      ++row;
    }
    for (int k = 0; k <= r - 1; ++k) infinity_row(k);
  }
  return s;
}

PadeApproximant solve_fixed_q0(const PadeSystem& system) {
  const Matrix reduced = system.reduced();
  std::vector<double> rhs = system.c.column(static_cast<std::size_t>(system.r));
  for (double& v : rhs) v = -v;
  const std::vector<double> sol = lu_solve(reduced, rhs);

  std::vector<double> x(sol.begin(), sol.begin() + system.r);
  x.push_back(1.0);
  x.insert(x.end(), sol.begin() + system.r, sol.end());
  PadeApproximant out = from_unknowns(system, x, PadeSolver::FixedQ0);
  out.rescaled = true;
  return out;
}

PadeApproximant solve_svd_null(const PadeSystem& system, bool rescale) {
  const SvdResult svd = jacobi_svd(system.c);
  const std::size_t dim = system.c.cols();
  const double sigma1 = svd.singular_values.front();
  const double smallest_nonzero = svd.singular_values[dim - 2];
  if (!(smallest_nonzero > static_cast<double>(dim - 1) * sigma1 * std::numeric_limits<double>::epsilon()))
    throw SingularSystemError("solve_svd_null: null space is not one-dimensional");
  std::vector<double> x = svd.v.column(dim - 1);
  PadeApproximant out = from_unknowns(system, x, PadeSolver::SvdNull);
  if (rescale) rescale_to_unit_q0(out);
  return out;
}

PadeApproximant solve_lu_homogeneous(const PadeSystem& system, bool rescale) {
  const LuFactor f = lu_factor(system.c);
  const double tiny = pivot_tolerance(system.c);
  for (double p : f.pivots)
    if (!(p > tiny)) throw SingularSystemError("solve_lu_homogeneous: zero pivot before the last column");
  const std::size_t rows = system.c.rows();
  std::vector<double> x(rows + 1);
  x[rows] = 1.0;
  for (std::size_t i = rows; i-- > 0;) {
    double s = 0.0;
    for (std::size_t j = i + 1; j <= rows; ++j) s -= f.u(i, j) * x[j];
    x[i] = s / f.u(i, i);
  }
  PadeApproximant out = from_unknowns(system, x, PadeSolver::LuHomogeneous);
  if (rescale) rescale_to_unit_q0(out);
  return out;
}

PadeApproximant build_pade(double alpha, double beta, int m, int n, PadeSolver solver, bool rescale) {
  const PadeSystem system = assemble_pade_matrix(alpha, beta, m, n);
  switch (solver) {
    case PadeSolver::FixedQ0: return solve_fixed_q0(system);
    case PadeSolver::SvdNull: return solve_svd_null(system, rescale);
    case PadeSolver::LuHomogeneous: return solve_lu_homogeneous(system, rescale);
  }
  throw InvalidParameter("build_pade: unknown solver");
}

double pade_eval(const PadeApproximant& approx, double x) {
  if (!(x >= 0.0)) throw DomainError("pade_eval: x must be nonnegative");
  double num = 0.0, den = 0.0;
  for (std::size_t j = approx.q.size(); j-- > 0;) {
    num = num * x + approx.p[j];
    den = den * x + approx.q[j];
  }
  if (den == 0.0) throw PoleError("pade_eval: denominator vanishes");
  return num / den;
}

PartialFractionForm partial_fractions(const PadeApproximant& approx) {
  const auto& q = approx.q;
  double scale = 0.0;
  for (double v : q) scale = std::max(scale, std::abs(v));
  if (!(std::abs(q.back()) > 1e-14 * scale))
    throw InvalidParameter("partial_fractions: denominator has degree below r");

  const std::vector<Complex> raw = polynomial_roots(q);
  for (std::size_t i = 0; i < raw.size(); ++i)
    for (std::size_t j = i + 1; j < raw.size(); ++j)
      if (std::abs(raw[i] - raw[j]) < 1e-8 * (1.0 + std::abs(raw[i])))
        throw ConvergenceError("partial_fractions: clustered roots");

  // pair each complex root with its conjugate partner so that the expansion
  // is exactly real on the real axis
  std::vector<Complex> roots;
  std::vector<bool> used(raw.size(), false);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    const Complex c = raw[i];
    if (std::abs(c.imag()) <= 1e-8 * (1.0 + std::abs(c))) {
      roots.emplace_back(c.real(), 0.0);
      continue;
    }
    std::size_t best = raw.size();
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < raw.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(raw[j] - std::conj(c));
      if (d < best_dist) {
        best_dist = d;
        best = j;
      }
    }
    if (best == raw.size() || best_dist > 1e-6 * (1.0 + std::abs(c))) {
      roots.push_back(c);
      continue;
    }
    used[best] = true;
    Complex mean = 0.5 * (c + std::conj(raw[best]));
    if (mean.imag() < 0.0) mean = std::conj(mean);
    roots.push_back(mean);
    roots.push_back(std::conj(mean));
  }

  PartialFractionForm form;
  form.poles = roots;
  form.residues.reserve(roots.size());
  for (const Complex& chi : roots) form.residues.push_back(rational_residue(approx.p, q, chi));
  return form;
}

}  // namespace mlf
