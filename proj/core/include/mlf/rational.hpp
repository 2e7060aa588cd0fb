#pragma once

#include <vector>

#include "mlf/scalar.hpp"

namespace mlf {

/// sum_j residues[j] / (z + poles[j]).
///
/// With this sign convention the j-th singularity sits at z = -poles[j]; for a
/// Pade approximant p(x)/q(x) of E(-x) the poles are the zeros of q.
struct PartialFractionForm {
  std::vector<Complex> poles;
  std::vector<Complex> residues;

  Complex operator()(Complex z) const;
  std::size_t size() const noexcept { return poles.size(); }
};

}  // namespace mlf
