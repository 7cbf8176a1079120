#pragma once

// Reference values of the complete elliptic integrals
//
//   E(t) = int_0^{pi/2} sqrt(1 - t^2 sin^2 x) dx
//   F(t) = int_0^{pi/2} (1 - t^2 sin^2 x)^{-1/2} dx
//   Pi(t, h) = int_0^{pi/2} [(1 + h sin^2 x) sqrt(1 - t^2 sin^2 x)]^{-1} dx
//
// by two independent routes: the arithmetic-geometric mean and adaptive
// quadrature of the defining integrals. A truncated power series for E is
// provided as a third route.

#include <cmath>
#include <concepts>
#include <limits>
#include <sstream>

#include "ellip/core.hpp"
#include "ellip/quadrature.hpp"

namespace ellip {

namespace detail {

template <std::floating_point Real>
struct AgmState {
  Real first_kind;  // F(t)
  Real second_kind;  // E(t)
  int iterations;
};

// Gauss' AGM with the Legendre companion sum for E:
//   F = pi / (2 AGM(1, t')),  E = F (1 - sum_{n>=0} 2^{n-1} c_n^2),  c_0 = t.
template <std::floating_point Real>
AgmState<Real> agm(const Modulus<Real>& m) {
  constexpr Real eps = std::numeric_limits<Real>::epsilon();
  constexpr int max_iterations = 64;

  Real a = 1;
  Real b = m.complement();
  if (!(b > 0))
    throw convergence_error("AGM: t is numerically indistinguishable from 1",
                            std::numeric_limits<Real>::infinity(),
                            std::numeric_limits<Real>::infinity());

  const Real t = m.value();
  Real sum = t * t / 2;  // n = 0 term: 2^{-1} c_0^2
  Real weight = Real(0.5);
  for (int n = 1; n <= max_iterations; ++n) {
    const Real c = (a - b) / 2;
    const Real next_a = (a + b) / 2;
    b = std::sqrt(a * b);
    a = next_a;
    weight *= 2;
    sum += weight * c * c;
    if (std::abs(a - b) <= 4 * eps * a) {
      const Real first = half_pi<Real> / a;
      return {first, first * (1 - sum), n};
    }
  }
  throw convergence_error("AGM did not converge within 64 iterations",
                          half_pi<Real> / a, std::abs(a - b));
}

template <std::floating_point Real>
Real agm_error(Real value, int iterations) {
  return std::abs(value) * std::numeric_limits<Real>::epsilon() * Real(4 * (iterations + 2));
}

}  // namespace detail

template <std::floating_point Real>
EvalResult<Real> eval_F_agm(const Modulus<Real>& t) {
  const auto s = detail::agm(t);
  return {s.first_kind, detail::agm_error(s.first_kind, s.iterations), Method::AGM};
}

template <std::floating_point Real>
EvalResult<Real> eval_E_agm(const Modulus<Real>& t) {
  const auto s = detail::agm(t);
  // The companion sum loses about log10(F) digits to cancellation near t = 1.
  const Real err = detail::agm_error(s.second_kind, s.iterations) +
                   detail::agm_error(s.first_kind, s.iterations);
  return {s.second_kind, err, Method::AGM};
}

template <std::floating_point Real>
EvalResult<Real> eval_E_quad(const Modulus<Real>& t,
                             const QuadratureConfig<Real>& cfg = QuadratureConfig<Real>::defaults()) {
  const Real k2 = t.value() * t.value();
  const Real kc2 = (1 - t.value()) * (1 + t.value());
  // Reflected x -> pi/2 - x; see eval_F_quad.
  return adaptive_integrate<Real>(
      [k2, kc2](Real x) {
        const Real s = std::sin(x);
        return std::sqrt(kc2 + k2 * s * s);
      },
      Real(0), half_pi<Real>, cfg);
}

template <std::floating_point Real>
EvalResult<Real> eval_F_quad(const Modulus<Real>& t,
                             const QuadratureConfig<Real>& cfg = QuadratureConfig<Real>::defaults()) {
  const Real k2 = t.value() * t.value();
  // Substituting x -> pi/2 - x puts the near-singular peak at the origin,
  // where 1 - k2 cos^2 x = (1 - k2) + k2 sin^2 x is free of cancellation.
  const Real kc2 = (1 - t.value()) * (1 + t.value());
  return adaptive_integrate<Real>(
      [k2, kc2](Real x) {
        const Real s = std::sin(x);
        return 1 / std::sqrt(kc2 + k2 * s * s);
      },
      Real(0), half_pi<Real>, cfg);
}

/// E(a, b) = int_0^{pi/2} sqrt(a^2 cos^2 x + b^2 sin^2 x) dx.
template <std::floating_point Real>
EvalResult<Real> eval_E_ab(const Axes<Real>& ax) {
  const Real a = ax.a();
  const Real b = ax.b();
  if (a == b) return {half_pi<Real> * a, Real(0), Method::Exact};
  // The integral is symmetric in (a, b): substitute x -> pi/2 - x.
  const Real big = std::max(a, b);
  const Real small = std::min(a, b);
  const Real ratio = small / big;
  const Modulus<Real> t(std::sqrt((1 - ratio) * (1 + ratio)));
  auto r = eval_E_agm(t);
  r.value *= big;
  r.est_error *= big;
  return r;
}

/// F(a, b) = int_0^{pi/2} (a^2 cos^2 x + b^2 sin^2 x)^{-1/2} dx.
template <std::floating_point Real>
EvalResult<Real> eval_F_ab(const Axes<Real>& ax) {
  const Real a = ax.a();
  const Real b = ax.b();
  if (a == b) return {half_pi<Real> / a, Real(0), Method::Exact};
  const Real big = std::max(a, b);
  const Real small = std::min(a, b);
  const Real ratio = small / big;
  const Modulus<Real> t(std::sqrt((1 - ratio) * (1 + ratio)));
  auto r = eval_F_agm(t);
  r.value /= big;
  r.est_error /= big;
  return r;
}

/// Complete elliptic integral of the third kind, by quadrature. Requires h > -1.
template <std::floating_point Real>
EvalResult<Real> eval_Pi_quad(const Modulus<Real>& t, Real h,
                              const QuadratureConfig<Real>& cfg = QuadratureConfig<Real>::defaults()) {
  if (!(h > -1) || !std::isfinite(h)) {
    std::ostringstream os;
    os << "third-kind characteristic h = " << h << " must satisfy h > -1";
    throw domain_error(os.str());
  }
  const Real k2 = t.value() * t.value();
  const Real kc2 = (1 - t.value()) * (1 + t.value());
  // Same reflection as eval_F_quad: sin^2 -> cos^2 = 1 - sin^2.
  return adaptive_integrate<Real>(
      [k2, kc2, h](Real x) {
        const Real s = std::sin(x);
        const Real c2 = 1 - s * s;
        return 1 / ((1 + h * c2) * std::sqrt(kc2 + k2 * s * s));
      },
      Real(0), half_pi<Real>, cfg);
}

template <std::floating_point Real, typename F>
EvalResult<Real> eval_generic_quad(F&& f, Real lo, Real hi,
                                   const QuadratureConfig<Real>& cfg = QuadratureConfig<Real>::defaults()) {
  return adaptive_integrate<Real>(std::forward<F>(f), lo, hi, cfg);
}

/// Partial sum of E(t) = (pi/2) [1 - sum_{i>=1} C(2i,i)^2 t^{2i} / (16^i (2i-1))].
///
/// Consecutive terms have ratio below t^2, so the tail after n terms is at most
/// (next term) / (1 - t^2); est_error reports that majorant.
template <std::floating_point Real>
EvalResult<Real> eval_E_series(const Modulus<Real>& t, int n_terms) {
  if (n_terms < 1) throw domain_error("series needs at least one term");
  const Real t2 = t.value() * t.value();
  Real central = 1;  // C(2i,i) / 4^i
  Real power = 1;    // t^{2i}
  Real sum = 0;
  Real next = 0;
  for (int i = 1; i <= n_terms + 1; ++i) {
    central *= Real(2 * i - 1) / Real(2 * i);
    power *= t2;
    const Real term = central * central * power / Real(2 * i - 1);
    if (i <= n_terms)
      sum += term;
    else
      next = term;
  }
  const Real tail = next / ((1 - t.value()) * (1 + t.value()));
  return {half_pi<Real> * (1 - sum), half_pi<Real> * tail, Method::Series};
}

}  // namespace ellip
