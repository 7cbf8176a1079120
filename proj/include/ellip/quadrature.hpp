#pragma once

// Globally adaptive Gauss-Kronrod (7/15) integration with bisection.
//
// The embedded error estimate is the raw |K15 - G7| difference, which is
// pessimistic for smooth integrands: the reported est_error is an upper
// estimate, never a tuned one.

#include <algorithm>
#include <array>
#include <cmath>
#include <concepts>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

#include "ellip/core.hpp"

namespace ellip {

template <std::floating_point Real = real>
struct QuadratureConfig {
  Real abs_tol;
  Real rel_tol;
  int max_depth;

  static Real min_tol() { return 16 * std::numeric_limits<Real>::epsilon(); }

  static QuadratureConfig defaults() {
    const Real tol = std::max(Real(1e-16L), 64 * std::numeric_limits<Real>::epsilon());
    return {tol, tol, 48};
  }

  void validate() const {
    if (!(abs_tol >= min_tol()) || !(rel_tol >= min_tol()))
      throw domain_error("quadrature tolerances must be at least 16 machine epsilons");
    if (max_depth < 1 || max_depth > 64)
      throw domain_error("quadrature max_depth must lie in [1, 64]");
  }
};

namespace detail {

template <std::floating_point Real>
struct KronrodRule {
  // Abscissae of the 15-point Kronrod rule on [-1, 1]; odd indices are the
  // 7-point Gauss nodes.
  static constexpr std::array<Real, 8> nodes{
      0.991455371120812639206854697526329L, 0.949107912342758524526189684047851L,
      0.864864423359769072789712788640926L, 0.741531185599394439863864773280788L,
      0.586087235467691130294144845693013L, 0.405845151377397166906606412076961L,
      0.207784955007898467600689403773245L, 0.0L};
  static constexpr std::array<Real, 8> kronrod_weights{
      0.022935322010529224963732008058970L, 0.063092092629978553290700663189204L,
      0.104790010322250183839876322541518L, 0.140653259715525918745189590510238L,
      0.169004726639267902826583426598550L, 0.190350578064785409913256402421014L,
      0.204432940075298892414161999234649L, 0.209482141084727828012999174891714L};
  static constexpr std::array<Real, 4> gauss_weights{
      0.129484966168869693270611432679082L, 0.279705391489276667901467771423780L,
      0.381830050505118944950369775488975L, 0.417959183673469387755102040816327L};
};

template <std::floating_point Real>
struct Segment {
  Real lo;
  Real hi;
  Real value;
  Real error;
  int depth;

  bool operator<(const Segment& other) const { return error < other.error; }
};

template <std::floating_point Real, typename F>
Segment<Real> gauss_kronrod_15(F& f, Real lo, Real hi, int depth) {
  using Rule = KronrodRule<Real>;
  const Real center = (lo + hi) / 2;
  const Real half = (hi - lo) / 2;

  auto sample = [&](Real x) {
    const Real y = static_cast<Real>(f(x));
    if (!std::isfinite(y)) {
      std::ostringstream os;
      os << "integrand is not finite at x = " << x;
      throw convergence_error(os.str(), std::numeric_limits<Real>::quiet_NaN(),
                              std::numeric_limits<Real>::infinity());
    }
    return y;
  };

  const Real fc = sample(center);
  Real kronrod = fc * Rule::kronrod_weights[7];
  Real gauss = fc * Rule::gauss_weights[3];
  for (int i = 0; i < 7; ++i) {
    const Real dx = half * Rule::nodes[i];
    const Real pair = sample(center - dx) + sample(center + dx);
    kronrod += Rule::kronrod_weights[i] * pair;
    if (i % 2 == 1) gauss += Rule::gauss_weights[i / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;
  return {lo, hi, kronrod, std::abs(kronrod - gauss), depth};
}

}  // namespace detail

/// Integrates f over [lo, hi]. Integrable endpoint singularities are handled by
/// bisection since the rule never samples the endpoints.
///
/// Throws convergence_error when the tolerance cannot be met before a segment
/// needing refinement reaches cfg.max_depth, or when f is not finite at a node.
template <std::floating_point Real, typename F>
EvalResult<Real> adaptive_integrate(F&& f, Real lo, Real hi,
                                    const QuadratureConfig<Real>& cfg) {
  cfg.validate();
  if (!std::isfinite(lo) || !std::isfinite(hi))
    throw domain_error("integration limits must be finite");
  if (lo == hi) return {Real(0), Real(0), Method::Quadrature};
  if (lo > hi) {
    auto r = adaptive_integrate<Real>(f, hi, lo, cfg);
    r.value = -r.value;
    return r;
  }

  std::priority_queue<detail::Segment<Real>> heap;
  auto first = detail::gauss_kronrod_15<Real>(f, lo, hi, 0);
  Real total = first.value;
  Real error = first.error;
  heap.push(first);

  // Refinement stalls once every segment is at roundoff level; this many
  // segments is far beyond what any smooth integrand on the modulus grid needs.
  constexpr std::size_t max_segments = 1u << 16;

  auto target = [&] { return std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total)); };

  while (error > target()) {
    const auto worst = heap.top();
    if (worst.depth >= cfg.max_depth || heap.size() >= max_segments) {
      std::ostringstream os;
      os << "quadrature tolerance " << target() << " not met on [" << lo << ", " << hi
         << "]: error estimate " << error << " after " << heap.size() << " segments";
      throw convergence_error(os.str(), total, error);
    }
    heap.pop();
    const Real mid = (worst.lo + worst.hi) / 2;
    auto left = detail::gauss_kronrod_15<Real>(f, worst.lo, mid, worst.depth + 1);
    auto right = detail::gauss_kronrod_15<Real>(f, mid, worst.hi, worst.depth + 1);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }

  // Re-sum to shed the drift accumulated by the running updates.
  Real value = 0;
  Real err = 0;
  while (!heap.empty()) {
    value += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  return {value, err, Method::Quadrature};
}

}  // namespace ellip
