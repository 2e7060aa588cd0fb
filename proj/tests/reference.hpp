#pragma once

// Test-only oracle: the defining power series of E_{alpha,beta} summed in
// multiple precision. Independent of every double-precision code path in the
// library (no Lanczos gamma, no contours, no asymptotics).

#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace mlf_test {

namespace detail {

template <unsigned Digits>
using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<Digits>>;

template <unsigned Digits>
class SeriesOracle {
 public:
  using R = Real<Digits>;

  std::complex<double> operator()(std::complex<double> z, double alpha, double beta) {
    const double abs_z = std::abs(z);
    const R zr = R(z.real());
    const R zi = R(z.imag());
    R sr = 0, si = 0;  // sum
    R pr = 1, pi = 0;  // z^n
    const R eps = R(10) / boost::multiprecision::pow(R(10), Digits - 5);
    const auto& coeffs = coefficients(alpha, beta, needed_terms(abs_z, alpha));
    R largest = 0;
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
      const R tr = pr * coeffs[n];
      const R ti = pi * coeffs[n];
      sr += tr;
      si += ti;
      const R mag = abs(tr) + abs(ti);
      if (mag > largest) largest = mag;
      if (n > 10 && mag < eps * (1 + abs(sr) + abs(si)) && coeffs[n] != 0 &&
          static_cast<double>(n) * alpha > 2 * std::pow(abs_z, 1.0 / alpha) + 10)
        break;
      const R nr = pr * zr - pi * zi;
      pi = pr * zi + pi * zr;
      pr = nr;
    }
    return {static_cast<double>(sr), static_cast<double>(si)};
  }

 private:
  // the terms peak near n alpha ~ |z|^(1/alpha) and then decay factorially
  static std::size_t needed_terms(double abs_z, double alpha) {
    const double peak = std::pow(std::max(abs_z, 1.0), 1.0 / alpha) / alpha;
    return static_cast<std::size_t>(3.0 * peak + (Digits * 2.5) / alpha + 60);
  }

  const std::vector<R>& coefficients(double alpha, double beta, std::size_t count) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto& c = cache_[{alpha, beta}];
    const R a = R(alpha);
    const R b = R(beta);
    while (c.size() < count) {
      const R arg = b + a * R(static_cast<double>(c.size()));
      const bool pole = arg <= 0 && floor(arg) == arg;
      c.push_back(pole ? R(0) : R(1) / boost::math::tgamma(arg));
    }
    return c;
  }

  std::mutex mutex_;
  std::map<std::pair<double, double>, std::vector<R>> cache_;
};

}  // namespace detail

/// E_{alpha,beta}(z) to double precision from the power series in extended
/// precision. The working precision is picked from the size of the largest
/// term, exp(|z|^(1/alpha)), so that cancellation cannot reach the result.
inline std::complex<double> reference_ml(std::complex<double> z, double alpha, double beta) {
  static detail::SeriesOracle<60> p60;
  static detail::SeriesOracle<120> p120;
  static detail::SeriesOracle<250> p250;
  static detail::SeriesOracle<500> p500;
  const double log10_peak = std::pow(std::abs(z), 1.0 / alpha) / std::log(10.0);
  if (log10_peak < 35) return p60(z, alpha, beta);
  if (log10_peak < 95) return p120(z, alpha, beta);
  if (log10_peak < 220) return p250(z, alpha, beta);
  return p500(z, alpha, beta);
}

}  // namespace mlf_test
