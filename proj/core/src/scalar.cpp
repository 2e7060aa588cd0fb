#include "mlf/scalar.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "mlf/errors.hpp"

namespace mlf {

namespace {

// Lanczos approximation with g = 607/128 and 15 terms (Godfrey); relative
// accuracy near 1e-15 for x >= 0.5.
constexpr double kLanczosShift = 671.0 / 128.0;  // g + 1/2
constexpr double kLanczosC0 = 0.999999999999997092;
constexpr std::array<double, 14> kLanczos = {
    57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
    -0.491913816097620199,   .339946499848118887e-4,  .465236289270485756e-4,
    -.983744753048795646e-4, .158088703224912494e-3,  -.210264441724104883e-3,
    .217439618115212643e-3,  -.164318106536763890e-3, .844182239838527433e-4,
    -.261908384015814087e-4, .368991826595316234e-5};
constexpr double kSqrtTwoPi = 2.5066282746310005024157652848110452530;

double lanczos_series(double x) noexcept {
  double ser = kLanczosC0;
  double y = x;
  for (double c : kLanczos) ser += c / ++y;
  return ser;
}

bool is_nonpositive_integer(double x) noexcept {
  return x <= 0.0 && std::floor(x) == x;
}

bool is_nonnegative_integer(double x) noexcept {
  return x >= 0.0 && std::floor(x) == x;
}

// Gamma for x >= 0.5.
double gamma_positive(double x) noexcept {
  if (std::floor(x) == x && x <= 30.0) {
    double f = 1.0;
    for (double k = 2.0; k < x; k += 1.0) f *= k;
    return f;
  }
  const double t = x + kLanczosShift;
  // split the power so that t^(x+1/2) e^-t does not overflow before the
  // exponential damps it
  const double half_pow = std::pow(t, 0.5 * (x + 0.5));
  return half_pow * (half_pow * std::exp(-t)) * (kSqrtTwoPi * lanczos_series(x) / x);
}

constexpr double kPsiSeriesRadius = 0.5;
constexpr int kMaxSeriesTerms = 200;

// Sum_{k>=2} binom(a, k) eps^(k-2).
Complex psi2_series(Complex eps, double a) noexcept {
  double coeff = a * (a - 1.0) / 2.0;
  Complex sum = coeff;
  Complex power = 1.0;
  for (int k = 3; k < kMaxSeriesTerms && coeff != 0.0; ++k) {
    coeff *= (a - k + 1.0) / k;
    power *= eps;
    const Complex term = coeff * power;
    sum += term;
    if (std::abs(term) <= 0.5 * std::numeric_limits<double>::epsilon() * std::abs(sum)) break;
  }
  return sum;
}

void check_psi_domain(Complex eps, double a) {
  if (std::abs(eps) >= 1.0 && !is_nonnegative_integer(a))
    throw DomainError("psi kernels require |eps| < 1");
}

}  // namespace

double principal_arg(Complex w) noexcept {
  if (w.imag() == 0.0 && w.real() < 0.0) return kPi;
  return std::atan2(w.imag(), w.real());
}

double sin_pi(double x) noexcept {
  double r = std::fmod(x, 2.0);
  if (r > 1.0) r -= 2.0;
  if (r < -1.0) r += 2.0;
  if (r > 0.5) return std::sin(kPi * (1.0 - r));
  if (r < -0.5) return -std::sin(kPi * (1.0 + r));
  return std::sin(kPi * r);
}

double gamma_real(double x) {
  if (std::isnan(x)) return x;
  if (is_nonpositive_integer(x)) throw DomainError("gamma_real: pole at nonpositive integer");
  if (x >= 0.5) return gamma_positive(x);
  return kPi / (sin_pi(x) * gamma_positive(1.0 - x));
}

double log_gamma_real(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma_real requires x > 0");
  if (x < 0.5) return std::log(kPi / (sin_pi(x) * gamma_positive(1.0 - x)));
  const double t = x + kLanczosShift;
  return (x + 0.5) * std::log(t) - t + std::log(kSqrtTwoPi * lanczos_series(x) / x);
}

double reciprocal_gamma(double x) noexcept {
  if (std::isnan(x)) return x;
  if (is_nonpositive_integer(x)) return 0.0;
  if (x >= 0.5) return 1.0 / gamma_positive(x);
  return sin_pi(x) * gamma_positive(1.0 - x) / kPi;
}

Complex cpow_principal(Complex w, double a) {
  if (a == 0.0) return 1.0;
  if (w == 0.0) {
    if (a > 0.0) return 0.0;
    throw DomainError("cpow_principal: zero base with nonpositive exponent");
  }
  if (a == 1.0) return w;
  return std::polar(std::pow(std::abs(w), a), a * principal_arg(w));
}

Complex psi1(Complex eps, double a) {
  check_psi_domain(eps, a);
  if (std::abs(eps) <= kPsiSeriesRadius) return a + eps * psi2_series(eps, a);
  return (cpow_principal(1.0 + eps, a) - 1.0) / eps;
}

Complex psi2(Complex eps, double a) {
  check_psi_domain(eps, a);
  if (std::abs(eps) <= kPsiSeriesRadius) return psi2_series(eps, a);
  return (cpow_principal(1.0 + eps, a) - (1.0 + a * eps)) / (eps * eps);
}

}  // namespace mlf
