#pragma once

#include <vector>

#include "mlf/scalar.hpp"

namespace mlf {

enum class ContourKind { Parabolic, Hyperbolic };

const char* to_string(ContourKind kind) noexcept;

inline constexpr int kMaxRuleNodes = 300;

/// Optimised Hankel-contour quadrature rule. The sum approximating
/// (1/2 pi i) int e^w f(w) dw is A sum_{n=-N}^{N} C_n f(w_n); only n >= 0 is
/// stored since w_{-n} = conj(w_n) and C_{-n} = conj(C_n).
class QuadratureRule {
 public:
  ContourKind kind() const noexcept { return kind_; }
  int N() const noexcept { return n_; }
  const std::vector<Complex>& nodes() const noexcept { return nodes_; }
  const std::vector<Complex>& weights() const noexcept { return weights_; }
  double prefactor() const noexcept { return prefactor_; }
  double h() const noexcept { return h_; }
  double mu() const noexcept { return mu_; }
  double phi() const noexcept { return phi_; }  // zero for the parabola
  /// Predicted geometric convergence: error ~ predicted_rate^-N.
  double predicted_rate() const noexcept { return predicted_rate_; }

 private:
  friend QuadratureRule build_parabolic_rule(int N);
  friend QuadratureRule build_hyperbolic_rule(int N);

  ContourKind kind_ = ContourKind::Hyperbolic;
  int n_ = 0;
  std::vector<Complex> nodes_;
  std::vector<Complex> weights_;
  double prefactor_ = 0.0;
  double h_ = 0.0;
  double mu_ = 0.0;
  double phi_ = 0.0;
  double predicted_rate_ = 0.0;
};

/// Parabola w(u) = mu (1 + iu)^2 with h = 3/N, mu = pi N / 12, A = 1/4 and
/// C_n = e^{w(nh)} (1 + i n h). Throws std::range_error for N > kMaxRuleNodes.
QuadratureRule build_parabolic_rule(int N);

/// Hyperbola w(u) = mu (1 + sin(iu - phi)) at the rate-optimal phi, with
/// mu = pi (4 phi - pi) N / a(phi), h = a(phi)/N, A = 2 phi - pi/2 and
/// C_n = e^{w(nh)} cos(i n h - phi).
QuadratureRule build_hyperbolic_rule(int N);

QuadratureRule build_rule(ContourKind kind, int N);

/// a(phi) = arcosh(2 phi / ((4 phi - pi) sin phi)) on (pi/4, pi/2).
double hyperbolic_a(double phi);
/// b(phi) = pi (pi - 2 phi) / a(phi); the hyperbolic rule converges like exp(-b N).
double hyperbolic_b(double phi);

/// argmax of hyperbolic_b on (pi/4, pi/2) by golden-section search. The
/// result is computed once and cached.
double optimize_phi();

}  // namespace mlf
