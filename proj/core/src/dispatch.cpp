#include "mlf/dispatch.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <mutex>

#include "mlf/asymptotic.hpp"
#include "mlf/errors.hpp"
#include "mlf/quadrature.hpp"
#include "mlf/series.hpp"

namespace mlf {

namespace {

struct RuleCache {
  std::once_flag once[2][kMaxRuleNodes + 1];
  std::unique_ptr<QuadratureRule> rules[2][kMaxRuleNodes + 1];
};

RuleCache& rule_cache() {
  static RuleCache cache;
  return cache;
}

// 0 < alpha <= 1.
EvalResult evaluate_unit_alpha(Complex z, double alpha, double beta, double tol) {
  const double abs_z = std::abs(z);
  if (abs_z <= kSeriesRadius) {
    const SeriesResult s = ml_series(z, alpha, beta, tol);
    if (s.converged) return {s.value, Method::Series, s.terms_used, s.err_estimate};
  }
  if (alpha < 1.0 && std::pow(abs_z, 1.0 / alpha) / alpha > kAsymptoticGate) {
    const AsymptoticResult a = ml_asymptotic(z, alpha, beta, tol);
    if (a.converged) return {a.value, Method::Asymptotic, a.m, a.err_estimate};
  }
  return ml_quad(z, alpha, beta, cached_rule(ContourKind::Hyperbolic, auto_rule_nodes(tol)));
}

EvalResult reduce(Complex z, double alpha, double beta, double tol, int m) {
  const double sub_alpha = alpha / m;
  const double root_mod = std::pow(std::abs(z), 1.0 / m);
  const double theta = principal_arg(z);
  Complex sum = 0.0;
  EvalResult out;
  out.method = Method::Reduction;
  for (int k = 0; k < m; ++k) {
    Complex arg;
    if (k == 0)
      arg = cpow_principal(z, 1.0 / m);
    else if (2 * k == m)
      arg = -cpow_principal(z, 1.0 / m);
    else
      arg = std::polar(root_mod, (theta + 2.0 * kPi * k) / m);
    const EvalResult part = evaluate_unit_alpha(arg, sub_alpha, beta, tol);
    sum += part.value;
    out.nodes_or_terms = std::max(out.nodes_or_terms, part.nodes_or_terms);
    out.err_estimate = std::max(out.err_estimate, part.err_estimate);
  }
  out.value = sum / static_cast<double>(m);
  if (z.imag() == 0.0) out.value.imag(0.0);
  return out;
}

}  // namespace

int auto_rule_nodes(double tol) {
  const int n = static_cast<int>(std::ceil(std::log(1.0 / tol) / std::log(10.13))) + 1;
  return std::clamp(n, 1, kDefaultRuleNodes);
}

const QuadratureRule& cached_rule(ContourKind kind, int N) {
  if (N < 1 || N > kMaxRuleNodes) throw std::range_error("cached_rule: N out of range");
  auto& cache = rule_cache();
  const int k = kind == ContourKind::Parabolic ? 0 : 1;
  std::call_once(cache.once[k][N], [&] {
    cache.rules[k][N] = std::make_unique<QuadratureRule>(build_rule(kind, N));
  });
  return *cache.rules[k][N];
}

int reduction_order(double alpha) {
  if (!(alpha > 0.0)) throw InvalidParameter("reduction_order: alpha must be positive");
  return std::max(1, static_cast<int>(std::ceil(alpha)));
}

EvalResult ml_reduce(Complex z, double alpha, double beta, double tol) {
  if (!(alpha > 1.0)) throw InvalidParameter("ml_reduce: alpha must exceed 1");
  if (!(tol >= 1e-15 && tol <= 1e-2)) throw InvalidParameter("ml_reduce: tol must lie in [1e-15, 1e-2]");
  return reduce(z, alpha, beta, tol, reduction_order(alpha));
}

EvalResult ml_auto(Complex z, double alpha, double beta, double tol) {
  if (!(alpha > 0.0)) throw InvalidParameter("ml_auto: alpha must be positive");
  if (!(tol >= 1e-15 && tol <= 1e-2)) throw InvalidParameter("ml_auto: tol must lie in [1e-15, 1e-2]");
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw InvalidParameter("ml_auto: z must be finite");

  if (alpha <= 1.0) return evaluate_unit_alpha(z, alpha, beta, tol);

  if (std::abs(z) <= kSeriesRadius) {
    const SeriesResult s = ml_series(z, alpha, beta, tol);
    if (s.converged) return {s.value, Method::Series, s.terms_used, s.err_estimate};
  }
  return reduce(z, alpha, beta, tol, reduction_order(alpha));
}

}  // namespace mlf
