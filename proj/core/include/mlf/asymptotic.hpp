#pragma once

#include "mlf/scalar.hpp"

namespace mlf {

struct AsymptoticResult {
  Complex value;
  int m = 1;                    // the sum runs over n = 1 .. m-1
  double err_estimate = 0.0;    // tau_{m-1} |z|^-(m-1)
  double next_term = 0.0;       // tau_m |z|^-m
  bool converged = false;       // stopped by the tolerance test
  bool exponential_term = false;
};

/// Large-|z| expansion for 0 < alpha < 1:
///   E ~ -sum_{n=1}^{m-1} z^-n / Gamma(beta - n alpha)
///       [+ alpha^-1 z^((1-beta)/alpha) exp(z^(1/alpha)) when |Arg z| <= alpha pi].
/// Terms are added until tau_n |z|^-n < tol (that term is kept) or until
/// n > |z|^(1/alpha)/alpha (that term is not added).
AsymptoticResult ml_asymptotic(Complex z, double alpha, double beta, double tol);

/// |1/Gamma(beta - n alpha)| written as tau_n in the sign/magnitude split
/// 1/Gamma(beta - n alpha) = sigma_n tau_n, using the reflection form when
/// n alpha >= beta.
double asymptotic_tau(int n, double alpha, double beta);
double asymptotic_sigma(int n, double alpha, double beta);

}  // namespace mlf
