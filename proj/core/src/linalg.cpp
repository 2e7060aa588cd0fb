#include "mlf/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

#include "mlf/errors.hpp"

namespace mlf {

std::vector<double> Matrix::column(std::size_t j) const {
  std::vector<double> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

Matrix Matrix::without_column(std::size_t j) const {
  Matrix out(rows_, cols_ - 1);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0, c = 0; k < cols_; ++k)
      if (k != j) out(i, c++) = (*this)(i, k);
  return out;
}

std::vector<double> Matrix::multiply(std::span<const double> x) const {
  std::vector<double> y(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
  return y;
}

double Matrix::max_abs() const noexcept {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

SvdResult jacobi_svd(const Matrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  Matrix w = a;
  Matrix v(n, n);
  for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;

  const double eps = std::numeric_limits<double>::epsilon();
  constexpr int kMaxSweeps = 80;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        double alpha = 0.0, beta = 0.0, gamma = 0.0;
        for (std::size_t k = 0; k < m; ++k) {
          alpha += w(k, i) * w(k, i);
          beta += w(k, j) * w(k, j);
          gamma += w(k, i) * w(k, j);
        }
        if (gamma == 0.0 || std::abs(gamma) <= eps * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t k = 0; k < m; ++k) {
          const double wi = w(k, i), wj = w(k, j);
          w(k, i) = c * wi - s * wj;
          w(k, j) = s * wi + c * wj;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vi = v(k, i), vj = v(k, j);
          v(k, i) = c * vi - s * vj;
          v(k, j) = s * vi + c * vj;
        }
      }
    }
    if (!rotated) break;
  }

  std::vector<double> sigma(n);
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t k = 0; k < m; ++k) s += w(k, j) * w(k, j);
    sigma[j] = std::sqrt(s);
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });

  SvdResult out;
  out.singular_values.resize(n);
  out.v = Matrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.singular_values[j] = sigma[order[j]];
    for (std::size_t k = 0; k < n; ++k) out.v(k, j) = v(k, order[j]);
  }
  return out;
}

double condition_number(const Matrix& a) {
  const SvdResult svd = jacobi_svd(a);
  const std::size_t rank_dim = std::min(a.rows(), a.cols());
  if (rank_dim == 0) return 0.0;
  return svd.singular_values.front() / svd.singular_values[rank_dim - 1];
}

LuFactor lu_factor(const Matrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  LuFactor f;
  f.u = a;
  f.perm.resize(m);
  std::iota(f.perm.begin(), f.perm.end(), 0);
  const std::size_t steps = std::min(m, n);
  f.pivots.reserve(steps);
  for (std::size_t k = 0; k < steps; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < m; ++i)
      if (std::abs(f.u(i, k)) > std::abs(f.u(p, k))) p = i;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(f.u(k, j), f.u(p, j));
      std::swap(f.perm[k], f.perm[p]);
    }
    const double pivot = f.u(k, k);
    f.pivots.push_back(std::abs(pivot));
    if (pivot == 0.0) continue;
    for (std::size_t i = k + 1; i < m; ++i) {
      const double l = f.u(i, k) / pivot;
      f.u(i, k) = 0.0;
      if (l == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) f.u(i, j) -= l * f.u(k, j);
    }
  }
  return f;
}

std::vector<double> lu_solve(const Matrix& a, std::span<const double> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw InvalidParameter("lu_solve: dimension mismatch");
  Matrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  const double tiny = static_cast<double>(n) * std::numeric_limits<double>::epsilon() * a.max_abs();
  const LuFactor f = lu_factor(aug);
  for (double p : f.pivots)
    if (!(p > tiny)) throw SingularSystemError("lu_solve: matrix is singular to working precision");
  std::vector<double> x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    double s = f.u(ii, n);
    for (std::size_t j = ii + 1; j < n; ++j) s -= f.u(ii, j) * x[j];
    x[ii] = s / f.u(ii, ii);
  }
  return x;
}

}  // namespace mlf
