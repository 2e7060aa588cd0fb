#include "mlf/asymptotic.hpp"

#include <cmath>
#include <limits>

#include "mlf/errors.hpp"

namespace mlf {

double asymptotic_sigma(int n, double alpha, double beta) {
  if (n * alpha < beta) return 1.0;
  return -sin_pi(n * alpha - beta);
}

double asymptotic_tau(int n, double alpha, double beta) {
  if (n * alpha < beta) return reciprocal_gamma(beta - n * alpha);
  return gamma_real(1.0 + n * alpha - beta) / kPi;
}

AsymptoticResult ml_asymptotic(Complex z, double alpha, double beta, double tol) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidParameter("ml_asymptotic: alpha must lie in (0, 1)");
  if (z == 0.0) throw DomainError("ml_asymptotic: z must be nonzero");
  if (!(tol > 0.0)) throw InvalidParameter("ml_asymptotic: tol must be positive");

  const double abs_z = std::abs(z);
  const double bound = std::pow(abs_z, 1.0 / alpha) / alpha;
  const Complex inv_z = 1.0 / z;

  AsymptoticResult out;
  Complex sum = 0.0;
  Complex power = 1.0;
  double inv_abs_power = 1.0;
  double last_bound = 0.0;
  int n = 1;
  for (;; ++n) {
    if (n > bound) {
      out.m = n;
      break;
    }
    power *= inv_z;
    inv_abs_power /= abs_z;
    const double tau = asymptotic_tau(n, alpha, beta);
    const double magnitude = std::abs(tau) * inv_abs_power;
    if (!std::isfinite(magnitude)) {
      out.m = n;
      break;
    }
    sum -= asymptotic_sigma(n, alpha, beta) * tau * power;
    last_bound = magnitude;
    if (magnitude < tol) {
      out.m = n + 1;
      out.converged = true;
      break;
    }
  }
  out.err_estimate = out.m > 1 ? last_bound : std::numeric_limits<double>::infinity();
  out.next_term = std::abs(asymptotic_tau(out.m, alpha, beta)) * std::pow(abs_z, -out.m);

  if (std::abs(principal_arg(z)) <= alpha * kPi) {
    const Complex gamma = cpow_principal(z, 1.0 / alpha);
    sum += cpow_principal(gamma, 1.0 - beta) * std::exp(gamma) / alpha;
    out.exponential_term = true;
  }
  out.value = sum;
  return out;
}

}  // namespace mlf
