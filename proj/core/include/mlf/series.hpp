#pragma once

#include "mlf/scalar.hpp"

namespace mlf {

inline constexpr int kDefaultSeriesTerms = 250;

struct SeriesResult {
  Complex value;
  int terms_used = 0;
  double err_estimate = 0.0;  // magnitude of the first omitted term
  bool converged = false;
};

/// Truncated power series sum_n z^n / Gamma(beta + n alpha). Stops at the
/// first term smaller than tol * max(1, |partial sum|); that term is not
/// added and its magnitude is reported as err_estimate.
SeriesResult ml_series(Complex z, double alpha, double beta, double tol,
                       int max_terms = kDefaultSeriesTerms);

/// d/dz E_{alpha,beta}(z) via the beta-lowering identity
///   E' = (E_{alpha,beta-1}(z) - (beta-1) E_{alpha,beta}(z)) / (alpha z),
/// with the n = 1 series coefficient at z = 0.
Complex ml_derivative(Complex z, double alpha, double beta, double tol);

// Beta-shift identities. Each recovers E_{alpha,beta}(z) from a value computed
// at a shifted beta, so a contour rule can be applied where its integrand is
// better behaved.

/// E_{alpha,beta}(z) = z^-m E_{alpha,beta-m alpha}(z) - sum_{n=1}^m z^-n/Gamma(beta-n alpha).
/// `lowered_value` is E_{alpha,beta-m alpha}(z). Requires z != 0.
Complex shift_beta_down(Complex z, double alpha, double beta, int m, Complex lowered_value);

/// E_{alpha,beta}(z) = z^m E_{alpha,beta+m alpha}(z) + sum_{n=0}^{m-1} z^n/Gamma(beta+n alpha).
/// `raised_value` is E_{alpha,beta+m alpha}(z).
Complex shift_beta_up(Complex z, double alpha, double beta, int m, Complex raised_value);

}  // namespace mlf
