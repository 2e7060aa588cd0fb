#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "mlf/errors.hpp"
#include "mlf/linalg.hpp"
#include "mlf/roots.hpp"

using mlf::Complex;
using mlf::Matrix;

namespace {

Matrix random_matrix(std::size_t rows, std::size_t cols, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> g;
  Matrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = g(rng);
  return a;
}

// A V = U S, so |A v_j| = s_j and V is orthogonal
void check_svd(const Matrix& a) {
  const auto svd = mlf::jacobi_svd(a);
  const std::size_t n = a.cols();
  REQUIRE(svd.singular_values.size() == n);
  CHECK(std::is_sorted(svd.singular_values.rbegin(), svd.singular_values.rend()));
  const double s1 = svd.singular_values[0];
  for (std::size_t j = 0; j < n; ++j) {
    const auto v = svd.v.column(j);
    const auto av = a.multiply(v);
    double norm = 0;
    for (double x : av) norm += x * x;
    CHECK(std::abs(std::sqrt(norm) - svd.singular_values[j]) <= 1e-13 * s1);
    for (std::size_t k = 0; k < n; ++k) {
      const auto w = svd.v.column(k);
      double dot = 0;
      for (std::size_t i = 0; i < n; ++i) dot += v[i] * w[i];
      CHECK(std::abs(dot - (j == k ? 1.0 : 0.0)) <= 1e-13);
    }
  }
}

}  // namespace

TEST_CASE("jacobi svd of small known matrices") {
  Matrix d(3, 3);
  d(0, 0) = 2;
  d(1, 1) = -5;
  d(2, 2) = 0.5;
  const auto s = mlf::jacobi_svd(d);
  CHECK(s.singular_values[0] == doctest::Approx(5));
  CHECK(s.singular_values[1] == doctest::Approx(2));
  CHECK(s.singular_values[2] == doctest::Approx(0.5));

  Matrix r(1, 2);  // [3 4]: sigma = 5, null vector (4, -3)/5
  r(0, 0) = 3;
  r(0, 1) = 4;
  const auto t = mlf::jacobi_svd(r);
  CHECK(t.singular_values[0] == doctest::Approx(5));
  CHECK(std::abs(t.singular_values[1]) < 1e-15);
  const auto nv = t.v.column(1);
  CHECK(std::abs(3 * nv[0] + 4 * nv[1]) < 1e-15);
}

TEST_CASE("jacobi svd properties on random matrices") {
  check_svd(random_matrix(6, 6, 1));
  check_svd(random_matrix(8, 9, 2));
  check_svd(random_matrix(12, 5, 3));
  check_svd(random_matrix(32, 33, 4));
}

TEST_CASE("condition number") {
  Matrix d(2, 2);
  d(0, 0) = 1e-3;
  d(1, 1) = 10;
  CHECK(mlf::condition_number(d) == doctest::Approx(1e4));
}

TEST_CASE("lu solve") {
  const Matrix a = random_matrix(7, 7, 5);
  std::vector<double> x0{1, -2, 3, 0.5, -1, 4, 2};
  const auto b = a.multiply(x0);
  const auto x = mlf::lu_solve(a, b);
  for (std::size_t i = 0; i < x0.size(); ++i) CHECK(std::abs(x[i] - x0[i]) < 1e-12);

  Matrix s(2, 2);
  s(0, 0) = 1;
  s(0, 1) = 2;
  s(1, 0) = 2;
  s(1, 1) = 4;
  CHECK_THROWS_AS(mlf::lu_solve(s, std::vector<double>{1, 2}), mlf::SingularSystemError);
}

TEST_CASE("rectangular lu factor") {
  const Matrix a = random_matrix(4, 5, 6);
  const auto f = mlf::lu_factor(a);
  CHECK(f.u.rows() == 4);
  CHECK(f.u.cols() == 5);
  for (std::size_t i = 1; i < 4; ++i)
    for (std::size_t j = 0; j < i; ++j) CHECK(f.u(i, j) == 0.0);
  std::vector<std::size_t> sorted = f.perm;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < 4; ++i) CHECK(sorted[i] == i);
  // the null vector of U is a null vector of A
  std::vector<double> x(5);
  x[4] = 1;
  for (std::size_t i = 4; i-- > 0;) {
    double s = 0;
    for (std::size_t j = i + 1; j < 5; ++j) s -= f.u(i, j) * x[j];
    x[i] = s / f.u(i, i);
  }
  for (double v : a.multiply(x)) CHECK(std::abs(v) < 1e-12);
}

TEST_CASE("matrix helpers") {
  Matrix a(2, 3);
  a(0, 0) = 1;
  a(0, 1) = 2;
  a(0, 2) = 3;
  a(1, 2) = -7;
  CHECK(a.max_abs() == 7);
  const Matrix b = a.without_column(1);
  CHECK(b.cols() == 2);
  CHECK(b(0, 1) == 3);
  CHECK(a.column(2) == std::vector<double>{3, -7});
}

TEST_CASE("polynomial roots") {
  // (x - 1)(x + 2)(x^2 + 1) = x^4 + x^3 - x^2 + x - 2
  const std::vector<double> c{-2, 1, -1, 1, 1};
  auto roots = mlf::polynomial_roots(c);
  REQUIRE(roots.size() == 4);
  for (Complex expected : {Complex(1, 0), Complex(-2, 0), Complex(0, 1), Complex(0, -1)}) {
    double best = INFINITY;
    for (Complex r : roots) best = std::min(best, std::abs(r - expected));
    CHECK(best < 1e-13);
  }
  for (Complex r : roots) CHECK(std::abs(mlf::poly_eval(c, r)) < 1e-12);
  CHECK(mlf::poly_derivative(c, 1.0) == Complex(4 + 3 - 2 + 1, 0));

  const std::vector<double> lin{3, -6};
  CHECK(std::abs(mlf::polynomial_roots(lin)[0] - 0.5) < 1e-15);
  CHECK_THROWS_AS(mlf::polynomial_roots(std::vector<double>{1, 2, 0}), mlf::InvalidParameter);

  // deterministic
  CHECK(mlf::polynomial_roots(c) == roots);
}

TEST_CASE("polynomial roots of higher degree") {
  // roots 1..10 scaled: Wilkinson-like but mild
  std::vector<double> c{1};
  for (int k = 1; k <= 8; ++k) {
    std::vector<double> next(c.size() + 1, 0.0);
    for (std::size_t j = 0; j < c.size(); ++j) {
      next[j + 1] += c[j];
      next[j] -= c[j] * (0.25 * k);
    }
    c = next;
  }
  const auto roots = mlf::polynomial_roots(c);
  for (int k = 1; k <= 8; ++k) {
    double best = INFINITY;
    for (Complex r : roots) best = std::min(best, std::abs(r - 0.25 * k));
    CHECK(best < 1e-9);
  }
}
