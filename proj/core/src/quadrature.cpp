#include "mlf/quadrature.hpp"

#include <cmath>
#include <complex>
#include <limits>

#include "mlf/errors.hpp"

namespace mlf {

namespace {

using Wide = std::complex<long double>;

Wide widen(Complex w) { return {w.real(), w.imag()}; }

Complex narrow(Wide w) { return {static_cast<double>(w.real()), static_cast<double>(w.imag())}; }

// principal w^a with the argument taken in (-pi, pi]
Wide wide_pow(Wide w, long double a) {
  long double arg = std::atan2(w.imag(), w.real());
  if (w.imag() == 0.0L && w.real() < 0.0L) arg = std::acos(-1.0L);
  return std::polar(std::pow(std::abs(w), a), a * arg);
}

// Relative distance from the pole below which the direct differences of f1
// and f+- are evaluated in long double.
constexpr double kWideDifferenceRadius = 1.0;

// w = gamma (1 + eps) with eps small and w on the same sheet as gamma, so
// that w^a = gamma^a (1 + eps)^a holds for the principal branches.
bool near_on_sheet(Complex w, Complex gamma, Complex& eps) {
  eps = (w - gamma) / gamma;
  if (!(std::abs(eps) < kNearPoleThreshold)) return false;
  return std::abs(principal_arg(gamma) + principal_arg(1.0 + eps)) < kPi;
}

double quadrature_error_estimate(const QuadratureRule& rule, double beta) {
  return std::max(origin_accuracy_proxy(rule, beta), std::pow(rule.predicted_rate(), -rule.N()));
}

Method method_for(const QuadratureRule& rule) {
  return rule.kind() == ContourKind::Parabolic ? Method::QuadParabolic : Method::QuadHyperbolic;
}

}  // namespace

std::string_view to_string(Method method) noexcept {
  switch (method) {
    case Method::Series: return "series";
    case Method::Asymptotic: return "asymp";
    case Method::QuadParabolic: return "quad-par";
    case Method::QuadHyperbolic: return "quad-hyp";
    case Method::Reduction: return "reduction";
  }
  return "unknown";
}

Complex PartialFractionForm::operator()(Complex z) const {
  Complex sum = 0.0;
  for (std::size_t j = 0; j < poles.size(); ++j) sum += residues[j] / (z + poles[j]);
  return sum;
}

Complex f_plain(Complex w, Complex z, double alpha, double beta) {
  return cpow_principal(w, alpha - beta) / (cpow_principal(w, alpha) - z);
}

Complex f_one(Complex w, Complex z, double alpha, double beta, Complex gamma) {
  Complex eps;
  if (near_on_sheet(w, gamma, eps)) {
    return (psi1(eps, alpha - beta) - psi2(eps, alpha) / alpha) /
           (cpow_principal(gamma, beta) * psi1(eps, alpha));
  }
  if (!(std::abs(w - gamma) < kWideDifferenceRadius * std::abs(gamma)))
    return f_plain(w, z, alpha, beta) - cpow_principal(gamma, 1.0 - beta) / (alpha * (w - gamma));
  // The two terms can exceed f1 by orders of magnitude just outside the switch
  // radius, so the difference is formed in long double. The pole is gamma^alpha
  // rather than z, matching the psi branch, which treats the rounded gamma as exact.
  const Wide W = widen(w), G = widen(gamma);
  const long double a = alpha, b = beta;
  const Wide pole = wide_pow(G, a);
  return narrow(wide_pow(W, a - b) / (wide_pow(W, a) - pole) - wide_pow(G, 1.0L - b) / (a * (W - G)));
}

PolePair PolePair::make(double x, double alpha, double beta) {
  if (!(x > 0.0)) throw DomainError("PolePair: x must be positive");
  if (!(alpha > 1.0 && alpha < 2.0)) throw InvalidParameter("PolePair: alpha must lie in (1, 2)");
  PolePair p;
  p.x = x;
  p.alpha = alpha;
  p.beta = beta;
  const double r = std::pow(x, 1.0 / alpha);
  p.plus = std::polar(r, kPi / alpha);
  p.minus = std::conj(p.plus);
  return p;
}

Complex f_pm(Complex w, const PolePair& poles, int sign) {
  const double alpha = poles.alpha;
  const double beta = poles.beta;
  const Complex own = sign > 0 ? poles.plus : poles.minus;
  const Complex other = sign > 0 ? poles.minus : poles.plus;

  Complex eps;
  if (near_on_sheet(w, own, eps)) {
    const Complex p1 = psi1(eps, alpha);
    const Complex num = (w - other) * (psi1(eps, alpha - beta) - psi2(eps, alpha) / alpha) -
                        own * p1 / alpha;
    return num / (cpow_principal(own, beta) * p1 * (w - other + eps * own));
  }
  if (near_on_sheet(w, other, eps)) {
    // the factor (w - other)/(w^alpha + x) is removable here
    return cpow_principal(other, 1.0 - beta) * cpow_principal(1.0 + eps, alpha - beta) /
               (psi1(eps, alpha) * (w - own + eps * other)) -
           cpow_principal(own, 1.0 - beta) / (alpha * (w - own));
  }
  if (!(std::abs(w - own) < kWideDifferenceRadius * std::abs(own)))
    return cpow_principal(w, alpha - beta) * (w - other) /
               ((cpow_principal(w, alpha) + poles.x) * (2.0 * w - own - other)) -
           cpow_principal(own, 1.0 - beta) / (alpha * (w - own));
  // long double and own^alpha for -x, as in f_one
  const Wide W = widen(w), Own = widen(own), Other = widen(other);
  const long double a = alpha, b = beta;
  return narrow(wide_pow(W, a - b) * (W - Other) /
                    ((wide_pow(W, a) - wide_pow(Own, a)) * (2.0L * W - Own - Other)) -
                wide_pow(Own, 1.0L - b) / (a * (W - Own)));
}

Complex f_two(Complex w, const PolePair& poles) { return f_pm(w, poles, +1) + f_pm(w, poles, -1); }

Complex f_pm_at_own_pole(const PolePair& poles, int sign) {
  const Complex own = sign > 0 ? poles.plus : poles.minus;
  const Complex other = sign > 0 ? poles.minus : poles.plus;
  const double alpha = poles.alpha;
  const double beta = poles.beta;
  return ((1.0 + alpha - 2.0 * beta) * (own - other) - 2.0 * own) /
         (2.0 * alpha * cpow_principal(own, beta) * (own - other));
}

double f_pm_at_other_pole(const PolePair& poles) {
  const double alpha = poles.alpha;
  return std::pow(poles.x, -poles.beta / alpha) * std::sin(kPi * (1.0 - poles.beta) / alpha) /
         (alpha * std::sin(kPi / alpha));
}

double origin_accuracy_proxy(const QuadratureRule& rule, double beta) {
  const Complex q = q_sum(rule, [beta](Complex w) { return cpow_principal(w, -beta); }, true);
  return std::abs(q - reciprocal_gamma(beta));
}

EvalResult ml_quad(Complex z, double alpha, double beta, const QuadratureRule& rule) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw InvalidParameter("ml_quad: alpha must lie in (0, 1]");
  EvalResult out;
  out.method = method_for(rule);
  out.nodes_or_terms = rule.N();
  if (z == 0.0) {
    out.value = Complex(std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN());
    out.err_estimate = std::numeric_limits<double>::infinity();
    return out;
  }

  const bool real_axis = z.imag() == 0.0;
  const double theta = std::abs(principal_arg(z));
  // At theta = pi (only reachable here with alpha = 1) the pole w = z^(1/alpha)
  // sits on the cut itself, outside the open cut plane, so no residue is collected.
  if (theta <= alpha * kPi && theta < kPi) {
    const Complex gamma = cpow_principal(z, 1.0 / alpha);
    const Complex residue = cpow_principal(gamma, 1.0 - beta) * std::exp(gamma) / alpha;
    const Complex integral =
        q_sum(rule, [&](Complex w) { return f_one(w, z, alpha, beta, gamma); }, real_axis);
    out.value = residue + integral;
  } else {
    out.value = q_sum(rule, [&](Complex w) { return f_plain(w, z, alpha, beta); }, real_axis);
  }
  out.err_estimate = quadrature_error_estimate(rule, beta);
  return out;
}

EvalResult ml_quad_neg_axis_wide_alpha(double x, double alpha, double beta,
                                       const QuadratureRule& rule) {
  const PolePair poles = PolePair::make(x, alpha, beta);
  const double r = std::pow(x, 1.0 / alpha);
  // gamma_+^(1-beta) e^gamma_+ + gamma_-^(1-beta) e^gamma_- in real form
  const double pair = 2.0 * std::pow(x, (1.0 - beta) / alpha) * std::exp(r * std::cos(kPi / alpha)) *
                      std::cos((1.0 - beta) * kPi / alpha + r * std::sin(kPi / alpha));
  const Complex integral = q_sum(rule, [&](Complex w) { return f_two(w, poles); }, true);

  EvalResult out;
  out.value = pair / alpha + integral;
  out.method = method_for(rule);
  out.nodes_or_terms = rule.N();
  out.err_estimate = quadrature_error_estimate(rule, beta);
  return out;
}

PartialFractionForm quadrature_rational_form(const QuadratureRule& rule, double alpha, double beta) {
  PartialFractionForm form;
  const auto& w = rule.nodes();
  const auto& c = rule.weights();
  const std::size_t count = 2 * w.size() - 1;
  form.poles.reserve(count);
  form.residues.reserve(count);
  auto add = [&](Complex node, Complex weight) {
    form.poles.push_back(-cpow_principal(node, alpha));
    form.residues.push_back(-rule.prefactor() * weight * cpow_principal(node, alpha - beta));
  };
  add(w[0], c[0]);
  for (std::size_t n = 1; n < w.size(); ++n) {
    add(w[n], c[n]);
    add(std::conj(w[n]), std::conj(c[n]));
  }
  return form;
}

}  // namespace mlf
