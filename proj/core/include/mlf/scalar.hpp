#pragma once

#include <complex>

namespace mlf {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Principal argument in (-pi, pi]. A point on the negative real axis maps to
/// +pi regardless of the sign of its zero imaginary part.
double principal_arg(Complex w) noexcept;

/// sin(pi x) with exact zeros at the integers.
double sin_pi(double x) noexcept;

/// Gamma function of a real argument. Lanczos approximation for x >= 0.5 and
/// the reflection formula below that. Throws DomainError at nonpositive
/// integers.
double gamma_real(double x);

/// log|Gamma(x)| for x > 0.
double log_gamma_real(double x);

/// 1/Gamma(x), exactly zero at the poles of Gamma.
double reciprocal_gamma(double x) noexcept;

/// exp(a (ln|w| + i Arg w)) on the plane cut along the negative real axis.
/// cpow_principal(0, a) is 0 for a > 0 and a DomainError for a <= 0, except
/// that a == 0 always yields 1.
Complex cpow_principal(Complex w, double a);

/// ((1+eps)^a - 1)/eps, cancellation free; psi1(0, a) == a.
/// Requires |eps| < 1 unless a is a nonnegative integer (terminating series).
Complex psi1(Complex eps, double a);

/// ((1+eps)^a - (1 + a eps))/eps^2; psi2(0, a) == a(a-1)/2.
Complex psi2(Complex eps, double a);

}  // namespace mlf
