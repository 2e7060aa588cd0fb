#pragma once

#include <string_view>

#include "mlf/scalar.hpp"

namespace mlf {

enum class Method { Series, Asymptotic, QuadParabolic, QuadHyperbolic, Reduction };

std::string_view to_string(Method method) noexcept;

struct EvalResult {
  Complex value;
  Method method = Method::Series;
  int nodes_or_terms = 0;
  double err_estimate = 0.0;
};

}  // namespace mlf
