#pragma once

// Registry of the inequalities the library knows how to check. Each record
// names its parameters, the domain guard under which the inequality is
// asserted, a reference evaluator for the bracketed quantity and one or both
// bounding evaluators.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ellip/bounds.hpp"
#include "ellip/core.hpp"
#include "ellip/grid.hpp"
#include "ellip/reference.hpp"

namespace ellip::verify {

using Args = std::span<const real>;
using Evaluator = std::function<real(Args)>;
using Guard = std::function<bool(Args)>;

enum class Mode {
  Enforce,
  /// Violations are findings: reported, never counted against a check.
  Observe,
};

inline const char* to_string(Mode m) { return m == Mode::Enforce ? "enforce" : "observe"; }

struct InequalityRecord {
  std::string id;
  std::vector<std::string> params;
  Guard guard;
  Evaluator middle;
  Evaluator lower;  // empty when the record is one-sided
  Evaluator upper;
  std::string statement;
  Mode mode = Mode::Enforce;
  Grid default_grid;

  bool has_lower() const { return static_cast<bool>(lower); }
  bool has_upper() const { return static_cast<bool>(upper); }
};

namespace oracle {

inline real E(real t) { return eval_E_agm(Modulus<real>(t)).value; }
inline real F(real t) { return eval_F_agm(Modulus<real>(t)).value; }
inline real Pi(real t, real h) { return eval_Pi_quad(Modulus<real>(t), h).value; }

template <typename Fn>
real integral(Fn&& f, real lo, real hi) {
  return eval_generic_quad<real>(std::forward<Fn>(f), lo, hi).value;
}

inline real amm_integral() {
  return integral([](real x) { return amm_integrand(x); }, real(0), real(1));
}

}  // namespace oracle

namespace detail {

inline bool always(Args) { return true; }
inline bool open_unit(real t) { return t > 0 && t < 1; }

inline Grid modulus_grid(std::size_t steps = 2000) {
  return {{GridAxis::uniform(real(1e-4L), 1 - real(1e-4L), steps)}};
}

inline Grid modulus_h_grid() {
  return {{GridAxis::uniform(real(0.01L), real(0.99L), 50),
           GridAxis::uniform(real(-0.98L), real(4), 50)}};
}

inline Grid fixture_grid() { return {}; }

}  // namespace detail

/// All built-in records, in a fixed order.
inline std::vector<InequalityRecord> register_builtin() {
  using namespace ellip::chebyshev;
  using detail::always;
  using detail::open_unit;
  constexpr real pi = std::numbers::pi_v<real>;
  const Guard t_guard = [](Args p) { return open_unit(p[0]); };

  std::vector<InequalityRecord> r;

  r.push_back({"thm1_E", {"t"}, t_guard,
               [](Args p) { return oracle::E(p[0]); },
               [](Args p) { return E_log_bounds(Modulus<real>(p[0])).lo; },
               [](Args p) { return E_log_bounds(Modulus<real>(p[0])).hi; },
               "pi/2 - (1/2)ln[(1+t)^(1-t)/(1-t)^(1+t)] < E(t) < (pi-1)/2 + ((1-t^2)/(4t))ln[(1+t)/(1-t)]",
               Mode::Enforce, detail::modulus_grid()});

  r.push_back({"thm1_E_refined", {"t"}, t_guard,
               [](Args p) { return oracle::E(p[0]); },
               [](Args p) { return E_log_bounds_refined(Modulus<real>(p[0])).lo; },
               [](Args p) { return E_log_bounds_refined(Modulus<real>(p[0])).hi; },
               "pi/2 - (1/2)ln[(1+t)^(1+t)(1-t)^(1-t)] < E(t) < (pi-1)/2 + ((1-t^2)/(4t))ln[(1+t)/(1-t)]",
               Mode::Enforce, detail::modulus_grid()});

  r.push_back({"thm2_F", {"a", "b"},
               [](Args p) { return p[0] > 0 && p[1] > p[0]; },
               [](Args p) { return eval_F_ab(Axes<real>(p[0], p[1])).value; },
               [](Args p) { return F_ab_log_arctan_bounds(Axes<real>(p[0], p[1])).lo; },
               [](Args p) { return F_ab_log_arctan_bounds(Axes<real>(p[0], p[1])).hi; },
               "(pi/2)ln(sqrt(b/a)+sqrt(b/a-1))/sqrt(b(b-a)) <= F(a,b) <= (pi/2)arctan(sqrt(b/a-1))/sqrt(a(b-a)), b > a",
               Mode::Enforce,
               {{GridAxis::uniform(real(0.1L), real(10), 100),
                 GridAxis::uniform(real(0.1L), real(1000), 1000)}}});

  // Trapezoid-type bounds as displayed; see the *_certified records for the
  // radius that carries the interval-length factor.
  r.push_back({"thm3_E", {"t"}, t_guard,
               [](Args p) { return 2 / pi * oracle::E(p[0]); },
               [](Args p) { auto b = iyengar_bound_E(Modulus<real>(p[0])); return b.center - b.radius; },
               [](Args p) { auto b = iyengar_bound_E(Modulus<real>(p[0])); return b.center + b.radius; },
               "|(2/pi)E(t) - (1+sqrt(1-t^2))/2| <= closed-form radius",
               Mode::Observe, detail::modulus_grid()});

  r.push_back({"thm3_E_certified", {"t"}, t_guard,
               [](Args p) { return 2 / pi * oracle::E(p[0]); },
               [](Args p) { auto b = iyengar_bound_E(Modulus<real>(p[0])); return b.center - b.certified_radius; },
               [](Args p) { auto b = iyengar_bound_E(Modulus<real>(p[0])); return b.center + b.certified_radius; },
               "|(2/pi)E(t) - (1+sqrt(1-t^2))/2| <= (pi/2) * closed-form radius",
               Mode::Enforce, detail::modulus_grid()});

  r.push_back({"thm4_F", {"t"}, t_guard,
               [](Args p) { return 2 / pi * oracle::F(p[0]); },
               [](Args p) { auto b = iyengar_bound_F(Modulus<real>(p[0])); return b.center - b.radius; },
               [](Args p) { auto b = iyengar_bound_F(Modulus<real>(p[0])); return b.center + b.radius; },
               "|(2/pi)F(t) - (1+sqrt(1-t^2))/(2sqrt(1-t^2))| <= closed-form radius",
               Mode::Observe, detail::modulus_grid()});

  r.push_back({"thm4_F_certified", {"t"}, t_guard,
               [](Args p) { return 2 / pi * oracle::F(p[0]); },
               [](Args p) { auto b = iyengar_bound_F(Modulus<real>(p[0])); return b.center - b.certified_radius; },
               [](Args p) { auto b = iyengar_bound_F(Modulus<real>(p[0])); return b.center + b.certified_radius; },
               "|(2/pi)F(t) - (1+sqrt(1-t^2))/(2sqrt(1-t^2))| <= (pi/2) * closed-form radius",
               Mode::Enforce, detail::modulus_grid()});

  r.push_back({"eq9_F", {"t"}, t_guard,
               [](Args p) { return oracle::F(p[0]); },
               [](Args p) { return F_arcsin_lower(p[0]); },
               [](Args p) { return F_atanh_upper(p[0]); },
               "pi*arcsin(t)/(2t) < F(t) < (pi/(4t))ln((1+t)/(1-t))",
               Mode::Enforce, detail::modulus_grid()});

  r.push_back({"eq10", {"t"}, t_guard,
               [](Args p) { return oracle::E(p[0]); },
               {},
               [](Args p) { return E_over_F_upper(p[0]) * oracle::F(p[0]); },
               "E(t) < ((16-4t^2-3t^4)/(4(4+t^2)))F(t)",
               Mode::Observe, detail::modulus_grid()});

  r.push_back({"eq11_F", {"t", "h"},
               [](Args p) { return open_unit(p[0]) && third_kind_factor_applies(p[0], p[1]); },
               [](Args p) { return oracle::F(p[0]); },
               {},
               [](Args p) { return third_kind_factor(p[1]) * oracle::Pi(p[0], p[1]); },
               "F(t) < (1+h/2)Pi(t,h) for -1<h<0 or h > t^2/(2-3t^2) > 0",
               Mode::Enforce, detail::modulus_h_grid()});

  r.push_back({"eq11_reversed", {"t", "h"},
               [](Args p) { return open_unit(p[0]) && third_kind_factor_reversed(p[0], p[1]); },
               [](Args p) { return oracle::F(p[0]); },
               [](Args p) { return third_kind_factor(p[1]) * oracle::Pi(p[0], p[1]); },
               {},
               "F(t) > (1+h/2)Pi(t,h) for 0 < 2h < t^2",
               Mode::Enforce, detail::modulus_h_grid()});

  r.push_back({"eq12_PiE", {"t", "h"},
               [](Args p) { return open_unit(p[0]) && third_kind_product_applies(p[0], p[1]); },
               [](Args p) { return oracle::Pi(p[0], p[1]) * oracle::E(p[0]); },
               [](Args p) { return third_kind_product(p[1]); },
               {},
               "Pi(t,h)E(t) > pi^2/(4sqrt(1+h)) for -2 < 2h < t^2",
               Mode::Enforce, detail::modulus_h_grid()});

  r.push_back({"eq12_reversed", {"t", "h"},
               [](Args p) { return open_unit(p[0]) && third_kind_product_reversed(p[0], p[1]); },
               [](Args p) { return oracle::Pi(p[0], p[1]) * oracle::E(p[0]); },
               {},
               [](Args p) { return third_kind_product(p[1]); },
               "Pi(t,h)E(t) < pi^2/(4sqrt(1+h)) for h > t^2/(2-3t^2) > 0",
               Mode::Enforce, detail::modulus_h_grid()});

  r.push_back({"eq13", {"t"},
               [](Args p) { return open_unit(p[0]) && E_over_F_lower_applies(p[0]); },
               [](Args p) { return oracle::E(p[0]); },
               [](Args p) { return E_over_F_lower(p[0]) * oracle::F(p[0]); },
               {},
               "E(t) >= ((16-28t^2+9t^4)/(4(4-5t^2)))F(t) for t^2 <= 2/3",
               Mode::Enforce, detail::modulus_grid()});

  r.push_back({"eq14", {}, always,
               [](Args) { return oracle::F(1 / std::numbers::sqrt2_v<real>); },
               [](Args) { return F_at_inverse_sqrt2().lo; },
               [](Args) { return F_at_inverse_sqrt2().hi; },
               "pi^2/(4sqrt2) < int_0^{pi/2} (1 - sin^2(x)/2)^(-1/2) dx < pi*ln(1+sqrt2)/sqrt2",
               Mode::Enforce, detail::fixture_grid()});

  // Observe: the stated bound sits below even the trivial minorant (2/3)(pi/2).
  r.push_back({"eq15", {}, always,
               [](Args) { return oracle::integral([](real x) { return 1 / (1 + std::cos(x) / 2); }, real(0), pi / 2); },
               {},
               [](Args) { return half_cosine_upper(); },
               "int_0^{pi/2} (1 + cos(x)/2)^(-1) dx < pi(ln3 - ln2)/2",
               Mode::Observe, detail::fixture_grid()});

  r.push_back({"eq16", {}, always,
               [](Args) { return oracle::integral([](real x) { return 1 / (1 - std::sin(x) / 2); }, real(0), pi / 2); },
               [](Args) { return half_sine_lower(); },
               {},
               "int_0^{pi/2} (1 - sin(x)/2)^(-1) dx > pi*ln2/2",
               Mode::Enforce, detail::fixture_grid()});

  r.push_back({"eq16_shifted", {}, always,
               [](Args) { return oracle::integral([](real x) { return 1 / (1 + std::cos(x) / 2); }, pi / 2, pi); },
               [](Args) { return half_sine_lower(); },
               {},
               "int_{pi/2}^{pi} (1 + cos(x)/2)^(-1) dx > pi*ln2/2",
               Mode::Enforce, detail::fixture_grid()});

  r.push_back({"amm", {}, always,
               [](Args) { return oracle::amm_integral(); },
               [](Args) { return amm::coarse_lower(); },
               [](Args) { return amm::coarse_upper(); },
               "pi/6 < int_0^1 (4 - x^2 - x^3)^(-1/2) dx < pi*sqrt2/8",
               Mode::Enforce, detail::fixture_grid()});

  r.push_back({"amm_b1", {}, always,
               [](Args) { return oracle::amm_integral(); },
               [](Args) { return amm::quartic_lower(); },
               {},
               "int_0^1 (4 - x^2 - x^3)^(-1/2) dx > 3/10 + 27sqrt2/160",
               Mode::Enforce, detail::fixture_grid()});

  r.push_back({"amm_b2", {}, always,
               [](Args) { return oracle::amm_integral(); },
               [](Args) { return amm::quadratic_lower(); },
               {},
               "int_0^1 (4 - x^2 - x^3)^(-1/2) dx > 1/4 + 19sqrt2/96",
               Mode::Enforce, detail::fixture_grid()});

  r.push_back({"amm_b3", {}, always,
               [](Args) { return oracle::amm_integral(); },
               [](Args) { return amm::mixed_lower(); },
               {},
               "int_0^1 (4 - x^2 - x^3)^(-1/2) dx > 1/5 + 19sqrt2/80",
               Mode::Enforce, detail::fixture_grid()});

  r.push_back({"amm_upper", {}, always,
               [](Args) { return oracle::amm_integral(); },
               {},
               [](Args) { return amm::improved_upper(); },
               "int_0^1 (4 - x^2 - x^3)^(-1/2) dx < 79/192 + sqrt2/10",
               Mode::Enforce, detail::fixture_grid()});

  const Grid axes_grid{{GridAxis::uniform(real(0.1L), real(10), 100),
                        GridAxis::uniform(real(0.1L), real(100), 1000)}};

  r.push_back({"ellip_ellipse", {"a", "b"},
               [](Args p) { return p[0] > 0 && p[1] >= p[0]; },
               [](Args p) { return eval_E_ab(Axes<real>(p[1], p[0])).value; },
               [](Args p) { return perimeter_bounds(Axes<real>(p[0], p[1])).linear->lo; },
               [](Args p) { return perimeter_bounds(Axes<real>(p[0], p[1])).linear->hi; },
               "(pi/6)(2a+b) < int_0^{pi/2} sqrt(a^2 sin^2 x + b^2 cos^2 x) dx <= (pi/6)(a+2b), b >= a",
               Mode::Enforce, axes_grid});

  r.push_back({"ellip_classical", {"a", "b"},
               [](Args p) { return p[0] > 0 && p[1] > 0; },
               [](Args p) { return eval_E_ab(Axes<real>(p[1], p[0])).value; },
               [](Args p) { return perimeter_bounds(Axes<real>(p[0], p[1])).classical.lo; },
               [](Args p) { return perimeter_bounds(Axes<real>(p[0], p[1])).classical.hi; },
               "(pi/4)(a+b) <= int_0^{pi/2} sqrt(a^2 sin^2 x + b^2 cos^2 x) dx <= (pi/4)sqrt(2(a^2+b^2))",
               Mode::Enforce, axes_grid});

  r.push_back({"pointwise_81", {"t", "theta"},
               [](Args p) { return p[0] > 0 && p[1] >= 0 && p[1] <= pi / 2; },
               [](Args p) { return cosine_chain(p[0], p[1]).mid; },
               [](Args p) { return cosine_chain(p[0], p[1]).lhs; },
               [](Args) { return real(0); },
               "-(8/pi^2)(r-1)x(pi/2-x) <= sqrt(1+t^2cos^2x) - [r - (4/pi^2)(r-1)x^2] <= 0, r = sqrt(1+t^2)",
               Mode::Enforce,
               {{GridAxis::uniform(real(0.005L), real(5), 1000),
                 GridAxis::uniform(real(0), pi / 2, 1000)}}});

  r.push_back({"pointwise_37_75", {"x"},
               [](Args p) { return p[0] >= 0 && p[0] <= 1; },
               [](Args p) { return amm_integrand_chain(p[0]).integrand; },
               [](Args p) { return amm_integrand_chain(p[0]).lower; },
               [](Args p) { return amm_integrand_chain(p[0]).upper; },
               "polynomial minorant <= (4-x^2-x^3)^(-1/2) <= polynomial majorant on [0,1]",
               Mode::Enforce, {{GridAxis::uniform(real(0), real(1), 10001)}}});

  return r;
}

/// Ids of `records`, in order.
inline std::vector<std::string> record_ids(const std::vector<InequalityRecord>& records) {
  std::vector<std::string> ids;
  ids.reserve(records.size());
  for (const auto& rec : records) ids.push_back(rec.id);
  return ids;
}

inline const InequalityRecord* find_record(const std::vector<InequalityRecord>& records,
                                           std::string_view id) {
  auto it = std::find_if(records.begin(), records.end(),
                         [&](const InequalityRecord& r) { return r.id == id; });
  return it == records.end() ? nullptr : &*it;
}

}  // namespace ellip::verify
