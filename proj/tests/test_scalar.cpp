#include <cmath>
#include <random>

#include "doctest.h"
#include "mlf/errors.hpp"
#include "mlf/scalar.hpp"

using mlf::Complex;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

// binomial series sum_{k>=first} binom(a, k) eps^(k-first), first few terms
Complex binomial_tail(Complex eps, double a, int first, int terms) {
  double coeff = 1.0;
  for (int k = 1; k <= first; ++k) coeff *= (a - k + 1) / k;
  Complex sum = 0.0, power = 1.0;
  for (int k = first; k < first + terms; ++k) {
    sum += coeff * power;
    coeff *= (a - k) / (k + 1);
    power *= eps;
  }
  return sum;
}

}  // namespace

TEST_CASE("gamma_real values") {
  CHECK(mlf::gamma_real(1.0) == 1.0);
  CHECK(mlf::gamma_real(2.0) == 1.0);
  CHECK(mlf::gamma_real(5.0) == 24.0);
  CHECK(rel(mlf::gamma_real(0.5), 1.7724538509055160) < 1e-15);
  CHECK(rel(mlf::gamma_real(-0.5), -3.5449077018110320) < 1e-15);
  CHECK_THROWS_AS(mlf::gamma_real(0.0), mlf::DomainError);
  CHECK_THROWS_AS(mlf::gamma_real(-3.0), mlf::DomainError);
}

TEST_CASE("gamma_real agrees with the C library") {
  for (double x = -9.75; x < 40.0; x += 0.37) {
    if (std::floor(x) == x && x <= 0) continue;
    INFO("x = " << x);
    CHECK(rel(mlf::gamma_real(x), std::tgamma(x)) < 2e-14);
  }
  CHECK(rel(mlf::log_gamma_real(75.3), std::lgamma(75.3)) < 1e-14);
  CHECK(rel(mlf::log_gamma_real(0.2), std::lgamma(0.2)) < 1e-14);
}

TEST_CASE("gamma recurrence and reciprocal") {
  for (double x = 0.5; x <= 20.0; x += 0.1) {
    INFO("x = " << x);
    CHECK(rel(mlf::gamma_real(x + 1.0), x * mlf::gamma_real(x)) <= 1e-13);
    CHECK(std::abs(mlf::reciprocal_gamma(x) * mlf::gamma_real(x) - 1.0) <= 1e-13);
  }
  for (double x = -6.3; x < 0.5; x += 0.29) {
    CHECK(std::abs(mlf::reciprocal_gamma(x) * mlf::gamma_real(x) - 1.0) <= 1e-13);
  }
}

TEST_CASE("reciprocal_gamma at the poles") {
  CHECK(mlf::reciprocal_gamma(0.0) == 0.0);
  CHECK(mlf::reciprocal_gamma(-3.0) == 0.0);
  CHECK(mlf::reciprocal_gamma(-40.0) == 0.0);
  CHECK(mlf::reciprocal_gamma(2.0) == 1.0);
  CHECK(mlf::reciprocal_gamma(200.0) == 0.0);  // Gamma overflows
}

TEST_CASE("sin_pi has exact zeros") {
  for (int k = -7; k <= 7; ++k) CHECK(mlf::sin_pi(k) == 0.0);
  CHECK(mlf::sin_pi(0.5) == 1.0);
  CHECK(mlf::sin_pi(-0.5) == -1.0);
  CHECK(std::abs(mlf::sin_pi(2.25) - std::sin(mlf::kPi * 0.25)) < 1e-16);
}

TEST_CASE("cpow_principal branch") {
  CHECK(rel(mlf::cpow_principal({4, 0}, 0.5), Complex(2, 0)) < 1e-16);
  const Complex i_half = mlf::cpow_principal({-1, 0}, 0.5);
  CHECK(std::abs(i_half - Complex(0, 1)) < 1e-16);
  // a signed zero imaginary part does not move the negative axis off Arg = pi
  CHECK(std::abs(mlf::cpow_principal({-1, -0.0}, 0.5) - Complex(0, 1)) < 1e-16);
  CHECK(std::abs(mlf::cpow_principal({0, 1}, 2.0) - Complex(-1, 0)) < 1e-15);
  CHECK(mlf::principal_arg({-2.0, -0.0}) == mlf::kPi);
  CHECK(mlf::cpow_principal({0, 0}, 0.7) == Complex(0, 0));
  CHECK(mlf::cpow_principal({0, 0}, 0.0) == Complex(1, 0));
  CHECK_THROWS_AS(mlf::cpow_principal({0, 0}, -0.5), mlf::DomainError);
}

TEST_CASE("cpow_principal is conjugate symmetric off the real axis") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-5, 5);
  for (int i = 0; i < 500; ++i) {
    const Complex w(u(rng), u(rng));
    const double a = u(rng);
    CHECK(mlf::cpow_principal(std::conj(w), a) == std::conj(mlf::cpow_principal(w, a)));
  }
}

TEST_CASE("psi kernels at the origin") {
  for (double a : {-1.3, 0.0, 0.5, 0.7, 1.0, 2.5}) {
    CHECK(mlf::psi1(0.0, a) == Complex(a, 0));
    CHECK(mlf::psi2(0.0, a) == Complex(a * (a - 1) / 2, 0));
  }
  CHECK(std::abs(mlf::psi1(0.5, 1.0) - 1.0) < 1e-16);
  // terminating series for a = 2 is a polynomial identity for every eps
  CHECK(std::abs(mlf::psi2(1.0, 2.0) - 1.0) < 1e-16);
  CHECK_THROWS_AS(mlf::psi1(Complex(0.6, 0.9), 0.5), mlf::DomainError);
  CHECK_THROWS_AS(mlf::psi2(1.0, 0.7), mlf::DomainError);
}

TEST_CASE("psi kernels against truncated binomial series") {
  const Complex e1 = 1e-8;
  CHECK(rel(mlf::psi1(e1, 0.5), binomial_tail(e1, 0.5, 1, 3)) <= 1e-16);
  const Complex e2 = 1e-6;
  CHECK(rel(mlf::psi2(e2, 0.7), binomial_tail(e2, 0.7, 2, 3)) <= 1e-14);
  const Complex e3(-3e-5, 2e-5);
  CHECK(rel(mlf::psi2(e3, -0.4), binomial_tail(e3, -0.4, 2, 4)) <= 1e-14);
}

TEST_CASE("psi kernels match the closed forms away from the origin") {
  for (Complex eps : {Complex(0.3, 0.1), Complex(-0.45, 0.2), Complex(0.7, -0.3), Complex(-0.2, -0.85)}) {
    for (double a : {0.3, 0.7, -0.6, 1.4}) {
      const Complex direct1 = (std::pow(1.0 + eps, a) - 1.0) / eps;
      const Complex direct2 = (std::pow(1.0 + eps, a) - 1.0 - a * eps) / (eps * eps);
      CHECK(rel(mlf::psi1(eps, a), direct1) < 1e-13);
      CHECK(rel(mlf::psi2(eps, a), direct2) < 1e-12);
    }
  }
}

TEST_CASE("psi1 = a + eps psi2 (property)") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> rad(0.0, 0.99), ang(-mlf::kPi, mlf::kPi), ua(-2.0, 2.0);
  for (int i = 0; i < 2000; ++i) {
    const Complex eps = std::polar(rad(rng), ang(rng));
    const double a = ua(rng);
    const Complex lhs = mlf::psi1(eps, a);
    const Complex rhs = a + eps * mlf::psi2(eps, a);
    CHECK(std::abs(lhs - rhs) <= 4e-16 * std::max(1.0, std::abs(lhs)));
  }
}
