#include "mlf/roots.hpp"

#include <algorithm>
#include <cmath>

#include "mlf/errors.hpp"

namespace mlf {

Complex poly_eval(std::span<const double> coeffs, Complex x) {
  Complex acc = 0.0;
  for (std::size_t j = coeffs.size(); j-- > 0;) acc = acc * x + coeffs[j];
  return acc;
}

Complex poly_derivative(std::span<const double> coeffs, Complex x) {
  Complex acc = 0.0;
  for (std::size_t j = coeffs.size(); j-- > 1;) acc = acc * x + static_cast<double>(j) * coeffs[j];
  return acc;
}

namespace {

// The iteration runs in extended precision: for the clustered zeros of Pade
// denominators, double-precision Horner evaluation near a root loses more
// digits than the result can afford.
using Wide = std::complex<long double>;

Wide eval_wide(std::span<const double> coeffs, Wide x) {
  Wide acc = 0.0L;
  for (std::size_t j = coeffs.size(); j-- > 0;) acc = acc * x + static_cast<long double>(coeffs[j]);
  return acc;
}

Wide derivative_wide(std::span<const double> coeffs, Wide x) {
  Wide acc = 0.0L;
  for (std::size_t j = coeffs.size(); j-- > 1;)
    acc = acc * x + static_cast<long double>(j) * static_cast<long double>(coeffs[j]);
  return acc;
}

}  // namespace

Complex rational_residue(std::span<const double> p, std::span<const double> q, Complex x) {
  const Wide xw(x.real(), x.imag());
  const Wide r = -eval_wide(p, xw) / derivative_wide(q, xw);
  return {static_cast<double>(r.real()), static_cast<double>(r.imag())};
}

std::vector<Complex> polynomial_roots(std::span<const double> coeffs, RootOptions options) {
  if (coeffs.empty() || coeffs.back() == 0.0)
    throw InvalidParameter("polynomial_roots: leading coefficient must be nonzero");
  const std::size_t degree = coeffs.size() - 1;
  if (degree == 0) return {};
  if (degree == 1) return {Complex(-coeffs[0] / coeffs[1], 0.0)};

  double radius = 0.0;
  for (std::size_t j = 0; j < degree; ++j) radius = std::max(radius, std::abs(coeffs[j] / coeffs[degree]));
  radius += 1.0;

  std::vector<Wide> z(degree);
  // offset keeps the starting points off the real axis
  for (std::size_t k = 0; k < degree; ++k) {
    const Complex start = std::polar(radius, 2.0 * kPi * static_cast<double>(k) / degree + 0.4);
    z[k] = Wide(start.real(), start.imag());
  }

  auto finish = [&] {
    std::vector<Complex> out;
    out.reserve(degree);
    for (const Wide& w : z) out.emplace_back(static_cast<double>(w.real()), static_cast<double>(w.imag()));
    return out;
  };

  long double movement = 0.0L;
  for (int it = 0; it < options.max_iterations; ++it) {
    movement = 0.0L;
    for (std::size_t k = 0; k < degree; ++k) {
      const Wide value = eval_wide(coeffs, z[k]);
      if (value == 0.0L) continue;
      const Wide ratio = value / derivative_wide(coeffs, z[k]);
      Wide repulsion = 0.0L;
      for (std::size_t j = 0; j < degree; ++j)
        if (j != k) repulsion += 1.0L / (z[k] - z[j]);
      const Wide step = ratio / (1.0L - ratio * repulsion);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      z[k] -= step;
      const long double scale = std::abs(z[k]);
      movement = std::max(movement, scale > 0.0L ? std::abs(step) / scale : std::abs(step));
    }
    if (movement < options.tolerance) {
      // two more sweeps reach the extended-precision limit cheaply
      for (int polish = 0; polish < 2; ++polish)
        for (auto& w : z) {
          const Wide d = derivative_wide(coeffs, w);
          if (d != 0.0L) w -= eval_wide(coeffs, w) / d;
        }
      return finish();
    }
  }
  if (movement > 1e-8L) throw ConvergenceError("polynomial_roots: Aberth iteration did not converge");
  return finish();
}

}  // namespace mlf
