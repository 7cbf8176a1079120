#pragma once

// Closed-form bounds on the complete elliptic integrals and the auxiliary
// pointwise inequalities they are built from. Every enclosure is returned with
// closed (<=) semantics; strictness is a property checked by the sweeps.

#include <cmath>
#include <concepts>
#include <numbers>
#include <optional>

#include "ellip/core.hpp"

namespace ellip {

namespace detail {
template <std::floating_point Real>
constexpr Real pi = std::numbers::pi_v<Real>;
template <std::floating_point Real>
constexpr Real sqrt2 = std::numbers::sqrt2_v<Real>;

// 1 - sqrt(1 - t^2) without cancellation.
template <std::floating_point Real>
Real one_minus_complement(Real t) {
  const Real s = std::sqrt((1 - t) * (1 + t));
  return t * t / (1 + s);
}
}  // namespace detail

// ---------------------------------------------------------------------------
// E(t) between logarithmic bounds
// ---------------------------------------------------------------------------

/// pi/2 - (1/2) ln[(1+t)^{1-t} / (1-t)^{1+t}]  <=  E(t)  <=
///     (pi-1)/2 + ((1-t^2)/(4t)) ln[(1+t)/(1-t)].
///
/// Below t = 1e-8 both endpoints equal their common limit pi/2.
template <std::floating_point Real>
Interval<Real> E_log_bounds(const Modulus<Real>& m) {
  const Real t = m.value();
  if (t < Real(1e-8)) return {half_pi<Real>, half_pi<Real>};
  const Real lo =
      half_pi<Real> - ((1 - t) * std::log1p(t) - (1 + t) * std::log1p(-t)) / 2;
  const Real hi = (detail::pi<Real> - 1) / 2 + (1 - t) * (1 + t) * std::atanh(t) / (2 * t);
  return {lo, hi};
}

/// Same upper bound; the lower bound pi/2 - (1/2) ln[(1+t)^{1+t} (1-t)^{1-t}]
/// is what the series comparison behind E_log_bounds actually yields. It is
/// second order in t near 0, where the E_log_bounds lower bound is first order.
template <std::floating_point Real>
Interval<Real> E_log_bounds_refined(const Modulus<Real>& m) {
  const Real t = m.value();
  if (t < Real(1e-8)) return {half_pi<Real>, half_pi<Real>};
  const Real lo =
      half_pi<Real> - ((1 + t) * std::log1p(t) + (1 - t) * std::log1p(-t)) / 2;
  return {lo, E_log_bounds(m).hi};
}

// ---------------------------------------------------------------------------
// F(a, b) for b > a
// ---------------------------------------------------------------------------

/// (pi/2) ln(sqrt(b/a) + sqrt(b/a - 1)) / sqrt(b(b-a))  <=  F(a,b)  <=
///     (pi/2) arctan(sqrt(b/a - 1)) / sqrt(a(b-a)).
///
/// Only b > a is accepted; swap the axes first for a > b (F is symmetric).
template <std::floating_point Real>
Interval<Real> F_ab_log_arctan_bounds(const Axes<Real>& ax) {
  const Real a = ax.a();
  const Real b = ax.b();
  if (!(b > a)) throw domain_error("log/arctan bounds on F(a,b) require b > a");
  // With x = sqrt(b/a - 1): ln(sqrt(b/a) + x) = asinh(x), sqrt(b(b-a)) = x sqrt(ab),
  // sqrt(a(b-a)) = x a. The ratios asinh(x)/x, atan(x)/x stay finite as b -> a.
  const Real x = std::sqrt((b - a) / a);
  const Real lo = half_pi<Real> * (std::asinh(x) / x) / std::sqrt(a * b);
  const Real hi = half_pi<Real> * (std::atan(x) / x) / a;
  return {lo, hi};
}

// ---------------------------------------------------------------------------
// Trapezoid deviation bound from the derivative range
// ---------------------------------------------------------------------------

template <std::floating_point Real = real>
struct AcdqInput {
  Real f_a;
  Real f_b;
  Real a;
  Real b;
  Real m;  // lower bound on f' over (a, b)
  Real M;  // upper bound on f' over (a, b)

  Real secant_slope() const { return (f_b - f_a) / (b - a); }
};

template <std::floating_point Real = real>
struct AcdqRadius {
  Real radius;
  bool degenerate;  // M == m: f is affine, the trapezoid rule is exact
};

/// For m <= f' <= M on (a, b) and S0 = (f(b) - f(a)) / (b - a):
///
///   | (1/(b-a)) int_a^b f - (f(a) + f(b))/2 |  <=  (b-a) (M - S0)(S0 - m) / (2 (M - m)).
///
/// The (b - a) factor makes the bound scale correctly; on a unit interval this
/// is the classical form -(M - S0)(m - S0) / (2 (M - m)).
template <std::floating_point Real>
AcdqRadius<Real> acdq_bound(const AcdqInput<Real>& in) {
  if (!(in.a < in.b)) throw domain_error("trapezoid bound requires a < b");
  if (!(in.m <= in.M)) throw domain_error("trapezoid bound requires m <= M");
  const Real s0 = in.secant_slope();
  if (!(in.m <= s0 && s0 <= in.M))
    throw domain_error("secant slope lies outside the derivative range [m, M]");
  if (in.M == in.m) return {Real(0), true};
  const Real radius = (in.b - in.a) * (in.M - s0) * (s0 - in.m) / (2 * (in.M - in.m));
  return {radius, false};
}

// ---------------------------------------------------------------------------
// Trapezoid-type bounds on (2/pi) E(t) and (2/pi) F(t)
// ---------------------------------------------------------------------------

template <std::floating_point Real = real>
struct IyengarBound {
  Real center;            // trapezoid estimate of (2/pi) E or (2/pi) F
  Real radius;            // displayed closed form
  Real certified_radius;  // acdq_bound composed on [0, pi/2]; equals (pi/2) * radius
};

template <std::floating_point Real = real>
struct CriticalPoint {
  Real theta;
  Real slope;
};

/// f(x) = sqrt(1 - t^2 sin^2 x): f' has its unique minimum on (0, pi/2) at
/// x = arctan((1 - t^2)^{-1/4}).
template <std::floating_point Real>
CriticalPoint<Real> E_integrand_slope_min(const Modulus<Real>& m) {
  const Real t = m.value();
  const Real kc2 = (1 - t) * (1 + t);
  const Real s = std::sqrt(kc2);
  const Real root4 = std::sqrt(s);  // (1 - t^2)^{1/4}
  const Real slope = -t * t * root4 / std::sqrt((kc2 + s) * (1 + s));
  return {std::atan(1 / root4), slope};
}

/// h(x) = (1 - t^2 sin^2 x)^{-1/2}: h' has its unique maximum on (0, pi/2) at
/// x = arcsin(sqrt(q + t^2 - 1) / t), q = sqrt(t^4 - t^2 + 1).
template <std::floating_point Real>
CriticalPoint<Real> F_integrand_slope_max(const Modulus<Real>& m) {
  const Real t = m.value();
  const Real t2 = t * t;
  const Real kc2 = (1 - t) * (1 + t);
  const Real q = std::sqrt(1 - t2 * kc2);
  // Cancellation-free forms of q + t^2 - 1, 1 - q and 2 - t^2 - q.
  const Real one_minus_q = t2 * kc2 / (1 + q);
  const Real q_plus = t2 * (q + t2) / (1 + q);
  const Real two_minus = kc2 * (1 + q + t2) / (1 + q);
  const Real slope = std::sqrt(q_plus * one_minus_q) / std::pow(two_minus, Real(1.5));
  return {std::asin(std::sqrt(q_plus) / t), slope};
}

template <std::floating_point Real>
IyengarBound<Real> iyengar_bound_E(const Modulus<Real>& m) {
  constexpr Real pi = detail::pi<Real>;
  const Real t = m.value();
  const Real kc2 = (1 - t) * (1 + t);
  const Real s = std::sqrt(kc2);
  const Real gap = detail::one_minus_complement(t);  // 1 - s

  const Real closed =
      gap / pi *
      (1 - 2 / pi * std::sqrt((kc2 + s) * (1 + s)) / ((s + 1) * std::sqrt(s)));

  const auto crit = E_integrand_slope_min(m);
  // f shifted by -f(0) = -1: the bound only sees f(pi/2) - f(0).
  const AcdqInput<Real> in{Real(0), -gap, Real(0), half_pi<Real>, crit.slope, Real(0)};
  const auto composed = acdq_bound(in);
  return {(1 + s) / 2, closed, composed.radius};
}

template <std::floating_point Real>
IyengarBound<Real> iyengar_bound_F(const Modulus<Real>& m) {
  constexpr Real pi = detail::pi<Real>;
  const Real t = m.value();
  const Real t2 = t * t;
  const Real kc2 = (1 - t) * (1 + t);
  const Real s = std::sqrt(kc2);
  const Real gap = detail::one_minus_complement(t);
  const Real q = std::sqrt(1 - t2 * kc2);
  const Real one_minus_q = t2 * kc2 / (1 + q);
  const Real q_plus = t2 * (q + t2) / (1 + q);
  const Real two_minus = kc2 * (1 + q + t2) / (1 + q);

  const Real closed = gap / (pi * s) *
                      (1 - 2 / pi * gap * std::pow(two_minus, Real(1.5)) /
                               std::sqrt(kc2 * q_plus * one_minus_q));

  const auto crit = F_integrand_slope_max(m);
  const AcdqInput<Real> in{Real(0), gap / s, Real(0), half_pi<Real>, Real(0), crit.slope};
  const auto composed = acdq_bound(in);
  return {(s + 1) / (2 * s), closed, composed.radius};
}

// ---------------------------------------------------------------------------
// Quarter perimeter int_0^{pi/2} sqrt(a^2 sin^2 x + b^2 cos^2 x) dx
// ---------------------------------------------------------------------------

template <std::floating_point Real = real>
struct PerimeterBounds {
  /// (pi/6)(2a + b) <= . <= (pi/6)(a + 2b); only defined for b >= a, where it
  /// follows from the cosine chain below with t^2 = b^2/a^2 - 1.
  std::optional<Interval<Real>> linear;
  /// (pi/4)(a + b) <= . <= (pi/4) sqrt(2 (a^2 + b^2)), any a, b.
  Interval<Real> classical;
};

template <std::floating_point Real>
PerimeterBounds<Real> perimeter_bounds(const Axes<Real>& ax) {
  constexpr Real pi = detail::pi<Real>;
  const Real a = ax.a();
  const Real b = ax.b();
  std::optional<Interval<Real>> linear;
  if (b >= a) linear.emplace(pi / 6 * (2 * a + b), pi / 6 * (a + 2 * b));
  // sqrt(2(a^2 + b^2)) >= a + b with equality at a == b, where rounding can
  // otherwise invert the interval.
  const Real lo = pi / 4 * (a + b);
  return {linear, Interval<Real>(lo, std::max(lo, pi / 4 * std::sqrt(2 * (a * a + b * b))))};
}

// ---------------------------------------------------------------------------
// Pointwise chains
// ---------------------------------------------------------------------------

template <std::floating_point Real = real>
struct CosineChain {
  Real lhs;
  Real mid;
};

/// With r = sqrt(1 + t^2), for x in [0, pi/2]:
///   -(8/pi^2)(r-1) x (pi/2 - x)  <=  sqrt(1 + t^2 cos^2 x) - [r - (4/pi^2)(r-1) x^2]  <=  0.
template <std::floating_point Real>
CosineChain<Real> cosine_chain(Real t, Real theta) {
  constexpr Real pi = detail::pi<Real>;
  if (!(t > 0)) throw domain_error("cosine chain requires t > 0");
  if (!(theta >= 0 && theta <= half_pi<Real>)) throw domain_error("cosine chain requires theta in [0, pi/2]");
  const Real r = std::sqrt(1 + t * t);
  const Real r1 = t * t / (r + 1);  // r - 1
  const Real c = std::cos(theta);
  const Real lhs = -8 / (pi * pi) * r1 * theta * (half_pi<Real> - theta);
  const Real mid = std::sqrt(1 + t * t * c * c) - (r - 4 / (pi * pi) * r1 * theta * theta);
  return {lhs, mid};
}

template <std::floating_point Real = real>
struct AmmChain {
  Real lower;      // quartic/cubic polynomial minorant
  Real integrand;  // (4 - x^2 - x^3)^{-1/2}
  Real upper;      // quadratic/cubic polynomial majorant
};

template <std::floating_point Real>
Real amm_integrand(Real x) {
  return 1 / std::sqrt(4 - x * x - x * x * x);
}

/// Polynomial envelope of (4 - x^2 - x^3)^{-1/2} on [0, 1].
template <std::floating_point Real>
AmmChain<Real> amm_integrand_chain(Real x) {
  constexpr Real r2 = detail::sqrt2<Real>;
  if (!(x >= 0 && x <= 1)) throw domain_error("polynomial envelope requires x in [0, 1]");
  const Real x2 = x * x;
  const Real x3 = x2 * x;
  const Real lower = Real(0.5) + (r2 - 1) / 2 * x2 * x2 + (11 * r2 / 8 - 2) * (1 - x) * x3;
  const Real shift = (8 * r2 - 9) / (8 * r2 - 10);
  const Real upper = Real(0.5) + (r2 - 1) / 2 * x2 + (5 - 4 * r2) / 8 * x2 * (1 - x) * (shift + x);
  return {lower, amm_integrand(x), upper};
}

/// Closed-form constants bracketing int_0^1 (4 - x^2 - x^3)^{-1/2} dx.
namespace amm {
template <std::floating_point Real = real>
constexpr Real coarse_lower() { return detail::pi<Real> / 6; }
template <std::floating_point Real = real>
constexpr Real coarse_upper() { return detail::pi<Real> * detail::sqrt2<Real> / 8; }
template <std::floating_point Real = real>
constexpr Real quartic_lower() { return Real(3) / 10 + 27 * detail::sqrt2<Real> / 160; }
template <std::floating_point Real = real>
constexpr Real quadratic_lower() { return Real(1) / 4 + 19 * detail::sqrt2<Real> / 96; }
template <std::floating_point Real = real>
constexpr Real mixed_lower() { return Real(1) / 5 + 19 * detail::sqrt2<Real> / 80; }
template <std::floating_point Real = real>
constexpr Real improved_upper() { return Real(79) / 192 + detail::sqrt2<Real> / 10; }
}  // namespace amm

// ---------------------------------------------------------------------------
// Chebyshev-type bounds (first, second and third kinds)
// ---------------------------------------------------------------------------

namespace chebyshev {

/// pi arcsin(t) / (2t) < F(t).
template <std::floating_point Real>
Real F_arcsin_lower(Real t) { return detail::pi<Real> * std::asin(t) / (2 * t); }

/// F(t) < (pi / (4t)) ln((1+t)/(1-t)).
template <std::floating_point Real>
Real F_atanh_upper(Real t) { return detail::pi<Real> * std::atanh(t) / (2 * t); }

/// E(t) < c(t) F(t), c = (16 - 4t^2 - 3t^4) / (4 (4 + t^2)).
template <std::floating_point Real>
Real E_over_F_upper(Real t) {
  const Real t2 = t * t;
  return (16 - 4 * t2 - 3 * t2 * t2) / (4 * (4 + t2));
}

/// E(t) >= c(t) F(t), c = (16 - 28t^2 + 9t^4) / (4 (4 - 5t^2)), for t^2 <= 2/3.
template <std::floating_point Real>
Real E_over_F_lower(Real t) {
  const Real t2 = t * t;
  return (16 - 28 * t2 + 9 * t2 * t2) / (4 * (4 - 5 * t2));
}
template <std::floating_point Real>
bool E_over_F_lower_applies(Real t) { return t * t <= Real(2) / 3; }

/// F(t) < (1 + h/2) Pi(t, h) for -1 < h < 0 or h > t^2 / (2 - 3t^2) > 0.
template <std::floating_point Real>
Real third_kind_factor(Real h) { return 1 + h / 2; }
template <std::floating_point Real>
bool third_kind_factor_applies(Real t, Real h) {
  const Real t2 = t * t;
  const Real denom = 2 - 3 * t2;
  return (h > -1 && h < 0) || (denom > 0 && h > t2 / denom);
}
/// The comparison above reverses for 0 < 2h < t^2.
template <std::floating_point Real>
bool third_kind_factor_reversed(Real t, Real h) { return 0 < 2 * h && 2 * h < t * t; }

/// Pi(t, h) E(t) > pi^2 / (4 sqrt(1 + h)) for -2 < 2h < t^2.
template <std::floating_point Real>
Real third_kind_product(Real h) {
  return detail::pi<Real> * detail::pi<Real> / (4 * std::sqrt(1 + h));
}
template <std::floating_point Real>
bool third_kind_product_applies(Real t, Real h) { return -2 < 2 * h && 2 * h < t * t; }
/// The product comparison reverses for h > t^2 / (2 - 3t^2) > 0.
template <std::floating_point Real>
bool third_kind_product_reversed(Real t, Real h) {
  const Real t2 = t * t;
  const Real denom = 2 - 3 * t2;
  return denom > 0 && h > t2 / denom;
}

/// Fixed instances.
template <std::floating_point Real = real>
Interval<Real> F_at_inverse_sqrt2() {
  constexpr Real pi = detail::pi<Real>;
  constexpr Real r2 = detail::sqrt2<Real>;
  return {pi * pi / (4 * r2), pi * std::log(1 + r2) / r2};
}
/// Stated upper bound on int_0^{pi/2} (1 + cos(x)/2)^{-1} dx.
template <std::floating_point Real = real>
Real half_cosine_upper() {
  return detail::pi<Real> * (std::log(Real(3)) - std::log(Real(2))) / 2;
}
/// Lower bound on int_0^{pi/2} (1 - sin(x)/2)^{-1} dx.
template <std::floating_point Real = real>
Real half_sine_lower() { return detail::pi<Real> * std::numbers::ln2_v<Real> / 2; }

}  // namespace chebyshev

}  // namespace ellip
