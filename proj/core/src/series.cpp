#include "mlf/series.hpp"

#include <algorithm>
#include <cmath>

#include "mlf/dispatch.hpp"
#include "mlf/errors.hpp"

namespace mlf {

namespace {

// 1/Gamma is decreasing beyond its maximum at x ~ 1.4616, so from there on a
// term below the tolerance is not followed by larger terms when |z| <= 1.
// Before it, a tiny term may just be a near-pole of Gamma.
constexpr double kReciprocalGammaPeak = 1.4616321449683623;

}  // namespace

SeriesResult ml_series(Complex z, double alpha, double beta, double tol, int max_terms) {
  if (!(alpha > 0.0)) throw InvalidParameter("ml_series: alpha must be positive");
  if (!(tol > 0.0)) throw InvalidParameter("ml_series: tol must be positive");
  if (max_terms < 1) throw InvalidParameter("ml_series: max_terms must be >= 1");

  SeriesResult out;
  Complex sum = reciprocal_gamma(beta);
  if (z == 0.0) return {sum, 1, 0.0, true};
  Complex power = 1.0;
  int used = 1;
  for (int n = 1; n <= max_terms; ++n) {
    power *= z;
    const double rg = reciprocal_gamma(beta + n * alpha);
    const Complex term = power * rg;
    const double mag = std::abs(term);
    if (n == max_terms) {
      out.err_estimate = mag;
      out.converged = mag < tol * std::max(1.0, std::abs(sum));
      break;
    }
    if (beta + n * alpha > kReciprocalGammaPeak && mag < tol * std::max(1.0, std::abs(sum))) {
      out.err_estimate = mag;
      out.converged = true;
      break;
    }
    sum += term;
    used = n + 1;
  }
  out.value = sum;
  out.terms_used = used;
  return out;
}

Complex ml_derivative(Complex z, double alpha, double beta, double tol) {
  if (z == 0.0) return reciprocal_gamma(alpha + beta);
  const Complex lowered = ml_auto(z, alpha, beta - 1.0, tol).value;
  const Complex plain = ml_auto(z, alpha, beta, tol).value;
  return (lowered - (beta - 1.0) * plain) / (alpha * z);
}

Complex shift_beta_up(Complex z, double alpha, double beta, int m, Complex raised_value) {
  if (m < 0) throw InvalidParameter("shift_beta_up: m must be nonnegative");
  Complex sum = 0.0;
  Complex power = 1.0;
  for (int n = 0; n < m; ++n) {
    sum += power * reciprocal_gamma(beta + n * alpha);
    power *= z;
  }
  return power * raised_value + sum;
}

Complex shift_beta_down(Complex z, double alpha, double beta, int m, Complex lowered_value) {
  if (m < 0) throw InvalidParameter("shift_beta_down: m must be nonnegative");
  if (z == 0.0) throw DomainError("shift_beta_down: z must be nonzero");
  const Complex inv = 1.0 / z;
  Complex sum = 0.0;
  Complex power = 1.0;
  for (int n = 1; n <= m; ++n) {
    power *= inv;
    sum += power * reciprocal_gamma(beta - n * alpha);
  }
  return power * lowered_value - sum;
}

}  // namespace mlf
