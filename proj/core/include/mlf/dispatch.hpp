#pragma once

#include "mlf/contour.hpp"
#include "mlf/result.hpp"

namespace mlf {

/// Radius of the disk where the Taylor series is used.
inline constexpr double kSeriesRadius = 1.0;
/// The asymptotic expansion is tried only when |z|^(1/alpha)/alpha exceeds this.
inline constexpr double kAsymptoticGate = 40.0;
inline constexpr int kDefaultRuleNodes = 14;

/// Node count used by ml_auto for the hyperbolic rule:
/// min(14, ceil(log(1/tol)/log(10.13)) + 1).
int auto_rule_nodes(double tol);

/// Shared immutable hyperbolic/parabolic rules for N = 1..kMaxRuleNodes,
/// built on first use.
const QuadratureRule& cached_rule(ContourKind kind, int N);

/// E_{alpha,beta}(z) for any alpha > 0: series near the origin, the
/// asymptotic expansion for large |z| when it converges, hyperbolic
/// quadrature otherwise, and the m-fold root reduction
///   E_{alpha,beta}(z) = (1/m) sum_k E_{alpha/m,beta}(z^(1/m) e^(2 pi i k/m))
/// for alpha > 1, with m the integer satisfying m - 1 < alpha <= m.
/// tol must lie in [1e-15, 1e-2].
EvalResult ml_auto(Complex z, double alpha, double beta, double tol = 1e-14);

/// The root reduction alone, for alpha > 1 and any z (the series shortcut near
/// the origin is skipped at this level; the rotated arguments still dispatch).
EvalResult ml_reduce(Complex z, double alpha, double beta, double tol = 1e-14);

/// Number of rotated arguments the reduction uses for a given alpha
/// (the integer m with m - 1 < alpha <= m).
int reduction_order(double alpha);

}  // namespace mlf
