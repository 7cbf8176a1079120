#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "ellip/core.hpp"

namespace ellip::verify {

using Point = std::vector<real>;

enum class Spacing {
  Uniform,
  /// Points crowd toward 1: 1 - x is geometric between 1 - from and 1 - to.
  LogNearOne,
};

/// One parameter axis. steps == 1 pins the parameter to `from`.
struct GridAxis {
  real from = 0;
  real to = 0;
  std::size_t steps = 1;
  Spacing spacing = Spacing::Uniform;

  static GridAxis fixed(real v) { return {v, v, 1, Spacing::Uniform}; }
  static GridAxis uniform(real from, real to, std::size_t steps) {
    return {from, to, steps, Spacing::Uniform};
  }
  static GridAxis near_one(real from, real to, std::size_t steps) {
    return {from, to, steps, Spacing::LogNearOne};
  }

  void validate() const {
    if (steps == 0) throw domain_error("grid axis needs at least one step");
    if (!std::isfinite(from) || !std::isfinite(to)) throw domain_error("grid bounds must be finite");
    if (steps >= 2 && !(from < to)) throw domain_error("grid axis requires from < to");
    if (spacing == Spacing::LogNearOne && !(to < 1))
      throw domain_error("log spacing near one requires to < 1");
  }

  real at(std::size_t i) const {
    if (steps == 1) return from;
    const real frac = real(i) / real(steps - 1);
    if (spacing == Spacing::Uniform) {
      if (i + 1 == steps) return to;
      return from + (to - from) * frac;
    }
    const real lo = std::log(1 - from);
    const real hi = std::log(1 - to);
    if (i + 1 == steps) return to;
    return 1 - std::exp(lo + (hi - lo) * frac);
  }
};

/// Cartesian product of axes; the last axis varies fastest.
struct Grid {
  std::vector<GridAxis> axes;

  std::size_t size() const {
    std::size_t n = 1;
    for (const auto& a : axes) n *= a.steps;
    return n;
  }

  Point at(std::size_t index) const {
    Point p(axes.size());
    for (std::size_t k = axes.size(); k-- > 0;) {
      p[k] = axes[k].at(index % axes[k].steps);
      index /= axes[k].steps;
    }
    return p;
  }

  void validate() const {
    for (const auto& a : axes) a.validate();
  }
};

}  // namespace ellip::verify
