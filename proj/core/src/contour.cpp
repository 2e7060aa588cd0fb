#include "mlf/contour.hpp"

#include <cmath>
#include <stdexcept>

#include "mlf/errors.hpp"

namespace mlf {

namespace {

void check_node_count(int N) {
  if (N < 1) throw InvalidParameter("quadrature rule needs N >= 1");
  if (N > kMaxRuleNodes) throw std::range_error("quadrature rule: N exceeds 300, weights overflow");
}

double golden_section_max(double lo, double hi, double (*f)(double)) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > 1e-13) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

const char* to_string(ContourKind kind) noexcept {
  return kind == ContourKind::Parabolic ? "parabolic" : "hyperbolic";
}

double hyperbolic_a(double phi) {
  if (!(phi > kPi / 4 && phi < kPi / 2)) throw DomainError("hyperbolic_a: phi must lie in (pi/4, pi/2)");
  return std::acosh(2.0 * phi / ((4.0 * phi - kPi) * std::sin(phi)));
}

double hyperbolic_b(double phi) { return kPi * (kPi - 2.0 * phi) / hyperbolic_a(phi); }

double optimize_phi() {
  // b is unimodal on the open interval; stay clear of the endpoints where a(phi)
  // diverges (pi/4) or vanishes (pi/2).
  static const double phi_star = golden_section_max(kPi / 4 + 1e-6, kPi / 2 - 1e-6,
                                                    [](double p) { return hyperbolic_b(p); });
  return phi_star;
}

QuadratureRule build_parabolic_rule(int N) {
  check_node_count(N);
  QuadratureRule rule;
  rule.kind_ = ContourKind::Parabolic;
  rule.n_ = N;
  rule.h_ = 3.0 / N;
  rule.mu_ = kPi / 12.0 * N;
  rule.prefactor_ = 0.25;
  rule.predicted_rate_ = std::exp(2.0 * kPi / 3.0);
  rule.nodes_.reserve(N + 1);
  rule.weights_.reserve(N + 1);
  for (int n = 0; n <= N; ++n) {
    const double u = n * rule.h_;
    const Complex w(rule.mu_ * (1.0 - u * u), 2.0 * rule.mu_ * u);
    rule.nodes_.push_back(w);
    rule.weights_.push_back(std::exp(w) * Complex(1.0, u));
  }
  return rule;
}

QuadratureRule build_hyperbolic_rule(int N) {
  check_node_count(N);
  const double phi = optimize_phi();
  const double a = hyperbolic_a(phi);
  const double sin_phi = std::sin(phi);
  const double cos_phi = std::cos(phi);

  QuadratureRule rule;
  rule.kind_ = ContourKind::Hyperbolic;
  rule.n_ = N;
  rule.phi_ = phi;
  rule.h_ = a / N;
  rule.mu_ = kPi * (4.0 * phi - kPi) * N / a;
  rule.prefactor_ = 2.0 * phi - kPi / 2.0;
  rule.predicted_rate_ = std::exp(hyperbolic_b(phi));
  rule.nodes_.reserve(N + 1);
  rule.weights_.reserve(N + 1);
  for (int n = 0; n <= N; ++n) {
    const double u = n * rule.h_;
    const double ch = std::cosh(u);
    const double sh = std::sinh(u);
    // 1 + sin(iu - phi) = 1 - cosh u sin phi + i sinh u cos phi
    const Complex w(rule.mu_ * (1.0 - ch * sin_phi), rule.mu_ * sh * cos_phi);
    // cos(iu - phi) = cosh u cos phi + i sinh u sin phi
    rule.nodes_.push_back(w);
    rule.weights_.push_back(std::exp(w) * Complex(ch * cos_phi, sh * sin_phi));
  }
  return rule;
}

QuadratureRule build_rule(ContourKind kind, int N) {
  return kind == ContourKind::Parabolic ? build_parabolic_rule(N) : build_hyperbolic_rule(N);
}

}  // namespace mlf
