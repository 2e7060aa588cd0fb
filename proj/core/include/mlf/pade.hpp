#pragma once

#include <vector>

#include "mlf/linalg.hpp"
#include "mlf/rational.hpp"

namespace mlf {

enum class PadeSolver { FixedQ0, SvdNull, LuHomogeneous };

const char* to_string(PadeSolver solver) noexcept;

/// Two-point Pade approximant p(x)/q(x) of E_{alpha,beta}(-x) on [0, inf):
/// matches the Maclaurin series to O(x^m) and the asymptotic series to
/// O(x^-n), with m + n = 2r + 1 and deg p, deg q <= r.
struct PadeApproximant {
  double alpha = 0.0;
  double beta = 0.0;
  int m = 0;
  int n = 0;
  int r = 0;
  std::vector<double> p;  // length r + 1, p[r] == 0
  std::vector<double> q;  // length r + 1
  PadeSolver solver = PadeSolver::FixedQ0;
  bool rescaled = false;  // q[0] == 1 after rescaling
};

/// Homogeneous system C x = 0 with x = [p_0 .. p_{r-1}, q_0 .. q_r].
struct PadeSystem {
  double alpha = 0.0;
  double beta = 0.0;
  int m = 0;
  int n = 0;
  int r = 0;
  Matrix c;  // 2r x (2r + 1)

  /// C with the q_0 column removed (the fixed-q_0 system matrix).
  Matrix reduced() const { return c.without_column(static_cast<std::size_t>(r)); }
};

/// Maclaurin coefficient of E_{alpha,beta}(-x): (-1)^k / Gamma(beta + k alpha).
double series_coeff_a(int k, double alpha, double beta);
/// Coefficient of x^-k in the expansion at infinity: (-1)^(k-1) / Gamma(beta - k alpha),
/// via the reflection form when beta - k alpha <= 1/2.
double series_coeff_b(int k, double alpha, double beta);

/// Throws InvalidParameter unless m, n >= 1, m + n odd and >= 3, r <= 16.
PadeSystem assemble_pade_matrix(double alpha, double beta, int m, int n);

PadeApproximant solve_fixed_q0(const PadeSystem& system);
PadeApproximant solve_svd_null(const PadeSystem& system, bool rescale = true);
PadeApproximant solve_lu_homogeneous(const PadeSystem& system, bool rescale = true);

PadeApproximant build_pade(double alpha, double beta, int m, int n,
                           PadeSolver solver = PadeSolver::FixedQ0, bool rescale = true);

/// p(x)/q(x) for x >= 0; PoleError if q(x) == 0.
double pade_eval(const PadeApproximant& approx, double x);

/// Zeros chi_j of q and residues rho_j = -p(chi_j)/q'(chi_j), so that
/// p(-z)/q(-z) = sum_j rho_j / (z + chi_j). Complex poles come in exact
/// conjugate pairs. Throws ConvergenceError for (near-)repeated roots.
PartialFractionForm partial_fractions(const PadeApproximant& approx);

}  // namespace mlf
