#pragma once

#include <span>
#include <vector>

#include "mlf/scalar.hpp"

namespace mlf {

struct RootOptions {
  int max_iterations = 200;
  double tolerance = 1e-13;  // relative root movement
};

/// All complex roots of sum_j coeffs[j] x^j by Aberth-Ehrlich simultaneous
/// iteration from equally spaced starting points on the circle of radius
/// 1 + max_j |coeffs[j]/coeffs[deg]|, carried out in long double and rounded
/// at the end. Deterministic. Throws InvalidParameter
/// if the leading coefficient is zero and ConvergenceError if the iteration
/// stalls well above the tolerance.
std::vector<Complex> polynomial_roots(std::span<const double> coeffs, RootOptions options = {});

/// -p(x)/q'(x) in extended precision: the residue of p/q at a simple zero x of q.
Complex rational_residue(std::span<const double> p, std::span<const double> q, Complex x);

/// Horner evaluation of a real polynomial and its derivative at a complex point.
Complex poly_eval(std::span<const double> coeffs, Complex x);
Complex poly_derivative(std::span<const double> coeffs, Complex x);

}  // namespace mlf
