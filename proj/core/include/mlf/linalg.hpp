#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace mlf {

/// Small dense row-major matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

  std::vector<double> column(std::size_t j) const;
  Matrix without_column(std::size_t j) const;
  std::vector<double> multiply(std::span<const double> x) const;
  double max_abs() const noexcept;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

struct SvdResult {
  std::vector<double> singular_values;  // length cols, descending
  Matrix v;                             // cols x cols, column j pairs with singular_values[j]
};

/// One-sided (Hestenes) Jacobi SVD. Works for any shape; when rows < cols the
/// trailing cols - rows singular values are (numerically) zero and the
/// matching columns of V span the null space.
SvdResult jacobi_svd(const Matrix& a);

/// 2-norm condition number sigma_max / sigma_min over the min(rows, cols)
/// leading singular values.
double condition_number(const Matrix& a);

/// Row-permuted upper trapezoidal factor of A = P L U with partial pivoting.
struct LuFactor {
  Matrix u;
  std::vector<std::size_t> perm;  // row i of PA is row perm[i] of A
  std::vector<double> pivots;     // |u_kk|
};

LuFactor lu_factor(const Matrix& a);

/// Square solve with partial pivoting. Throws SingularSystemError when a pivot
/// falls below dim * eps * max|A|.
std::vector<double> lu_solve(const Matrix& a, std::span<const double> b);

}  // namespace mlf
