#pragma once

#include <cmath>
#include <concepts>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ellip {

/// Widest native binary float; used by the registry, the sweeps and the CLI.
using real = long double;

/// Raised when an argument lies outside the domain of a formula.
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an iterative or adaptive method fails to meet its tolerance.
class convergence_error : public std::runtime_error {
 public:
  convergence_error(const std::string& what, long double estimate, long double error)
      : std::runtime_error(what), estimate_(estimate), error_(error) {}

  long double estimate() const noexcept { return estimate_; }
  long double error() const noexcept { return error_; }

 private:
  long double estimate_;
  long double error_;
};

template <std::floating_point Real>
constexpr Real half_pi = std::numbers::pi_v<Real> / 2;

/// Limit values at the excluded endpoints of the modulus range.
namespace limits {
template <std::floating_point Real = real>
constexpr Real E_at_zero() { return half_pi<Real>; }
template <std::floating_point Real = real>
constexpr Real F_at_zero() { return half_pi<Real>; }
template <std::floating_point Real = real>
constexpr Real E_at_one() { return Real(1); }
/// F diverges logarithmically as t -> 1-.
template <std::floating_point Real = real>
constexpr Real F_at_one() { return std::numeric_limits<Real>::infinity(); }
}  // namespace limits

/// Elliptic modulus t, strictly inside (0, 1).
template <std::floating_point Real = real>
class Modulus {
 public:
  explicit Modulus(Real t) : t_(t) {
    if (!(t > 0 && t < 1)) {
      std::ostringstream os;
      os << "modulus t = " << t << " must lie in the open interval (0,1); "
         << "limits: E(0+) = F(0+) = pi/2, E(1-) = 1, F(1-) = +inf";
      throw domain_error(os.str());
    }
  }

  Real value() const noexcept { return t_; }
  /// sqrt(1 - t^2), computed without cancellation.
  Real complement() const { return std::sqrt((1 - t_) * (1 + t_)); }

 private:
  Real t_;
};

/// Pair of strictly positive semi-axis lengths.
template <std::floating_point Real = real>
class Axes {
 public:
  Axes(Real a, Real b) : a_(a), b_(b) {
    if (!(a > 0 && b > 0) || !std::isfinite(a) || !std::isfinite(b)) {
      std::ostringstream os;
      os << "axes (a, b) = (" << a << ", " << b << ") must both be positive and finite";
      throw domain_error(os.str());
    }
  }

  Real a() const noexcept { return a_; }
  Real b() const noexcept { return b_; }
  Axes swapped() const { return Axes(b_, a_); }

 private:
  Real a_;
  Real b_;
};

/// Closed enclosure [lo, hi].
template <std::floating_point Real = real>
struct Interval {
  Real lo;
  Real hi;

  Interval(Real lo_, Real hi_) : lo(lo_), hi(hi_) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi)
      throw domain_error("interval requires finite lo <= hi");
  }

  Real width() const noexcept { return hi - lo; }
  bool contains(Real x) const noexcept { return lo <= x && x <= hi; }
  bool strictly_contains(Real x) const noexcept { return lo < x && x < hi; }
};

enum class Method { AGM, Quadrature, Series, Exact };

inline const char* to_string(Method m) {
  switch (m) {
    case Method::AGM: return "agm";
    case Method::Quadrature: return "quadrature";
    case Method::Series: return "series";
    case Method::Exact: return "exact";
  }
  return "?";
}

template <std::floating_point Real = real>
struct EvalResult {
  Real value;
  Real est_error;
  Method method;
};

}  // namespace ellip
