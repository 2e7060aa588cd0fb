#pragma once

#include "mlf/contour.hpp"
#include "mlf/rational.hpp"
#include "mlf/result.hpp"

namespace mlf {

/// Relative distance |w - gamma|/|gamma| below which the removable-singularity
/// forms of f1 and f+- are used.
inline constexpr double kNearPoleThreshold = 0.1;

/// A sum_{n=-N}^{N} C_n f(w_n). With conj_symmetric the caller asserts
/// f(conj w) = conj f(w), and only n >= 0 is evaluated:
///   A (C_0 f(w_0) + 2 sum_{n>=1} Re[C_n f(w_n)]).
template <class Integrand>
Complex q_sum(const QuadratureRule& rule, Integrand&& f, bool conj_symmetric) {
  const auto& w = rule.nodes();
  const auto& c = rule.weights();
  if (conj_symmetric) {
    double acc = (c[0] * f(w[0])).real();
    for (std::size_t n = 1; n < w.size(); ++n) acc += 2.0 * (c[n] * f(w[n])).real();
    return rule.prefactor() * acc;
  }
  Complex acc = c[0] * f(w[0]);
  for (std::size_t n = 1; n < w.size(); ++n) {
    // pair first so that conjugate z gives exactly the conjugate sum
    acc += c[n] * f(w[n]) + std::conj(c[n]) * f(std::conj(w[n]));
  }
  return rule.prefactor() * acc;
}

/// f(w; z) = w^(alpha-beta) / (w^alpha - z).
Complex f_plain(Complex w, Complex z, double alpha, double beta);

/// f1(w; z) = f(w; z) - alpha^-1 gamma^(1-beta) / (w - gamma), gamma = z^(1/alpha),
/// analytic at w = gamma.
Complex f_one(Complex w, Complex z, double alpha, double beta, Complex gamma);

/// Pole pair gamma_+- = x^(1/alpha) exp(+-i pi/alpha) of w^alpha + x for 1 < alpha < 2.
struct PolePair {
  double x = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  Complex plus;
  Complex minus;

  static PolePair make(double x, double alpha, double beta);
};

/// f_+ (sign > 0) or f_- (sign < 0): the part of w^(alpha-beta)/(w^alpha + x)
/// attached to one pole, with that pole's simple-pole term removed.
Complex f_pm(Complex w, const PolePair& poles, int sign);

/// f2 = f_+ + f_-, analytic in the cut plane.
Complex f_two(Complex w, const PolePair& poles);

/// Closed form of f_+-(gamma_+-; x).
Complex f_pm_at_own_pole(const PolePair& poles, int sign);

/// Closed form of f_-+(gamma_+-; x) = x^(-beta/alpha) sin(pi(1-beta)/alpha) / (alpha sin(pi/alpha)).
double f_pm_at_other_pole(const PolePair& poles);

/// |A sum C_n w_n^-beta - 1/Gamma(beta)|: the quadrature error of f(w; 0),
/// which is independent of alpha.
double origin_accuracy_proxy(const QuadratureRule& rule, double beta);

/// E_{alpha,beta}(z) for 0 < alpha <= 1 from one quadrature rule:
///   Q(f; z)                                              alpha pi < |Arg z| <= pi
///   alpha^-1 gamma^(1-beta) exp(gamma) + Q(f1; z)       |Arg z| <= alpha pi
/// At z = 0 the value is NaN. Real z uses the halved sum.
EvalResult ml_quad(Complex z, double alpha, double beta, const QuadratureRule& rule);

/// E_{alpha,beta}(-x) for x > 0 and 1 < alpha < 2 by removing both poles
/// gamma_+- from the integrand.
EvalResult ml_quad_neg_axis_wide_alpha(double x, double alpha, double beta,
                                       const QuadratureRule& rule);

/// The quadrature sum Q(f; z) written as a rational function of z:
/// sum_n R_n / (z - P_n) with P_n = w_n^alpha and R_n = -A C_n w_n^(alpha-beta),
/// n = -N..N. Returned in PartialFractionForm convention (poles = -P_n).
PartialFractionForm quadrature_rational_form(const QuadratureRule& rule, double alpha, double beta);

}  // namespace mlf
