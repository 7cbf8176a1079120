#pragma once

#include <cmath>
#include <concepts>
#include <cstdint>
#include <limits>
#include <utility>

#include "ellip/core.hpp"

namespace ellip {

/// Ratio (n-1)!! / n!! as a running product, so no double factorial is ever
/// formed. (-1)!! = 0!! = 1.
template <std::floating_point Real = real>
Real double_factorial_ratio(std::uint64_t n) {
  Real r = 1;
  for (std::uint64_t k = n; k >= 2; k -= 2) r *= Real(k - 1) / Real(k);
  return r;
}

/// int_0^{pi/2} sin^n x dx by the Wallis sine formula.
template <std::floating_point Real = real>
Real wallis_integral(std::uint64_t n) {
  const Real r = double_factorial_ratio<Real>(n);
  return n % 2 == 0 ? half_pi<Real> * r : r;
}

/// log C(2i, i).
template <std::floating_point Real = real>
Real log_central_binom(std::uint64_t i) {
  return std::lgamma(Real(2 * i + 1)) - 2 * std::lgamma(Real(i + 1));
}

/// Bounds 4^i / sqrt(pi (i + 1/2)) < C(2i, i) < 4^i / sqrt(pi (i + 1/4)).
///
/// 4^i overflows binary64 near i = 512, so beyond i = 500 callers should use
/// central_binom_log_bounds; here that case is a domain error rather than inf.
template <std::floating_point Real = real>
Interval<Real> central_binom_bounds(std::uint64_t i) {
  if (i < 1) throw domain_error("central binomial bounds need i >= 1");
  if (i > 500) throw domain_error("central binomial bounds beyond i = 500 must use log space");
  constexpr Real pi = std::numbers::pi_v<Real>;
  const Real four_i = std::ldexp(Real(1), static_cast<int>(2 * i));
  return {four_i / std::sqrt(pi * (Real(i) + Real(0.5))),
          four_i / std::sqrt(pi * (Real(i) + Real(0.25)))};
}

/// Natural-log image of central_binom_bounds, valid for every i >= 1.
template <std::floating_point Real = real>
Interval<Real> central_binom_log_bounds(std::uint64_t i) {
  if (i < 1) throw domain_error("central binomial bounds need i >= 1");
  constexpr Real pi = std::numbers::pi_v<Real>;
  const Real log_four_i = Real(2 * i) * std::numbers::ln2_v<Real>;
  return {log_four_i - std::log(pi * (Real(i) + Real(0.5))) / 2,
          log_four_i - std::log(pi * (Real(i) + Real(0.25))) / 2};
}

/// Both sides of sum_{i>=0} s^{2i} / (i + 1/2) = (1/s) ln((1+s)/(1-s)), |s| < 1.
/// The value at s = 0 is 2 (the i = 0 term).
template <std::floating_point Real = real>
std::pair<Real, Real> series_identity_lhs_rhs(Real s) {
  if (!(std::abs(s) < 1)) throw domain_error("series identity requires |s| < 1");
  const Real s2 = s * s;
  Real sum = 0;
  Real power = 1;
  for (std::uint64_t i = 0;; ++i) {
    const Real term = power / (Real(i) + Real(0.5));
    sum += term;
    // Remaining tail is below term * s^2 / (1 - s^2).
    if (term * s2 <= std::numeric_limits<Real>::epsilon() * sum * (1 - s2) / 4 || power == 0)
      break;
    power *= s2;
  }
  const Real closed = s == 0 ? Real(2) : 2 * std::atanh(s) / s;
  return {sum, closed};
}

}  // namespace ellip
