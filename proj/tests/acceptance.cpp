// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.
//
// Tolerances are pinned here rather than read from the environment so a run
// is reproducible.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../tools/cli.hpp"
#include "ellip/ellip.hpp"

namespace {

using ellip::real;
using namespace ellip::verify;

constexpr real kPi = std::numbers::pi_v<real>;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  // Records a sub-check; failing ones are marked in the detail line.
  void require(bool ok, const std::string& what) {
    pass = pass && ok;
    detail << (detail.tellp() > 0 ? "; " : "") << (ok ? "" : "NOT ") << what;
  }
};

std::string num(real x, int digits = 3) { return format_real(x, digits); }

const std::vector<InequalityRecord>& records() {
  static const auto r = register_builtin();
  return r;
}

const InequalityRecord& rec(std::string_view id) { return *find_record(records(), id); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------------------

void oracle_agreement(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto axis = GridAxis::uniform(real(1e-4L), 1 - real(1e-4L), 1000);
  real worst_abs = 0, worst_rel_edge = 0;
  bool ok = true;
  for (std::size_t i = 0; i < axis.steps; ++i) {
    const ellip::Modulus<real> m(axis.at(i));
    const real pairs[2][2] = {{ellip::eval_E_agm(m).value, ellip::eval_E_quad(m).value},
                              {ellip::eval_F_agm(m).value, ellip::eval_F_quad(m).value}};
    for (const auto& p : pairs) {
      const real d = std::abs(p[0] - p[1]);
      if (m.value() > real(0.999L)) {
        worst_rel_edge = std::max(worst_rel_edge, d / std::abs(p[0]));
        ok = ok && d <= real(1e-9L) * std::abs(p[0]);
      } else {
        worst_abs = std::max(worst_abs, d);
        ok = ok && d <= real(1e-11L);
      }
    }
  }
  const double secs = seconds_since(t0);
  o.require(ok, "max |agm - quad| " + num(worst_abs) + " (<= 1e-11), rel near t=1 " + num(worst_rel_edge) +
                    " (<= 1e-9) over 1000 points");
  o.require(secs < 1, "runtime " + num(real(secs)) + " s (< 1 s)");
}

void log_enclosure_E(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto rep = sweep(rec("thm1_E"), rec("thm1_E").default_grid, real(1e-12L));
  const double secs = seconds_since(t0);
  o.require(rep.summary.failures == 0 && rep.summary.oracle_errors == 0 && rep.summary.evaluated == 2000,
            std::to_string(rep.summary.failures) + " violations over " + std::to_string(rep.summary.evaluated) +
                " points");

  auto gaps = [](real t) {
    const auto b = ellip::E_log_bounds(ellip::Modulus<real>(t));
    const real ref = ellip::eval_E_agm(ellip::Modulus<real>(t)).value;
    return std::pair{ref - b.lo, b.hi - ref};
  };
  const auto [lo3, hi3] = gaps(real(1e-3L));
  const auto [lo2, hi2] = gaps(real(1e-2L));
  const auto [lo4, hi4] = gaps(real(1e-4L));
  o.require(lo4 < lo3 && lo3 < lo2 && hi4 < hi3 && hi3 < hi2, "both gaps shrink as t -> 0");
  o.require(hi3 < real(1e-5L), "upper gap at t=1e-3 " + num(hi3) + " (< 1e-5)");
  o.require(lo3 < real(1e-5L), "lower gap at t=1e-3 " + num(lo3) + " (< 1e-5)");
  const auto refined = ellip::E_log_bounds_refined(ellip::Modulus<real>(real(1e-3L)));
  o.detail << " [info: refined lower bound gap " << num(ellip::eval_E_agm(ellip::Modulus<real>(real(1e-3L))).value - refined.lo)
           << "]";
  o.require(secs < 1, "runtime " + num(real(secs)) + " s (< 1 s)");
}

void log_arctan_enclosure_F(Outcome& o) {
  const auto& r = rec("thm2_F");
  const auto a_axis = GridAxis::uniform(real(0.1L), real(10), 50);
  // b/a - 1 geometric from just above 1e-6 up to 99.
  const auto excess = GridAxis::near_one(1 - real(99), 1 - real(1.01e-6L), 50);
  std::size_t bad = 0, n = 0;
  for (std::size_t i = 0; i < a_axis.steps; ++i)
    for (std::size_t j = 0; j < excess.steps; ++j) {
      const real a = a_axis.at(i);
      const real ratio = 2 - excess.at(j);  // 1 + (1 - at(j))
      const Point p{a, a * ratio};
      if (!r.guard(Args(p))) continue;
      const auto row = detail::evaluate_row(r, p, real(1e-12L));
      ++n;
      bad += row.status != RowStatus::Pass;
    }
  o.require(bad == 0 && n == 2500, std::to_string(bad) + " violations over " + std::to_string(n) + " points");

  auto gaps = [&](real ratio) {
    const auto row = detail::evaluate_row(r, {real(1), ratio}, 0);
    return std::pair{*row.gap_lo, *row.gap_hi};
  };
  const auto [lo1, hi1] = gaps(real(1.001L));
  const auto [lo2, hi2] = gaps(real(1.01L));
  const auto [lo0, hi0] = gaps(real(1.00001L));
  o.require(lo0 < lo1 && lo1 < lo2 && hi0 < hi1 && hi1 < hi2, "both gaps shrink as b/a -> 1");
  o.require(lo1 < real(1e-4L) && hi1 < real(1e-4L),
            "gaps at b/a=1.001 (a=1): lower " + num(lo1) + ", upper " + num(hi1) + " (< 1e-4)");
}

void trapezoid_bounds(Outcome& o) {
  for (const char* id : {"thm3_E", "thm4_F"}) {
    const auto& r = rec(id);
    const auto rep = sweep(r, r.default_grid, real(1e-12L));
    std::string where;
    if (rep.summary.failures) {
      for (const auto& row : rep.rows)
        if (row.status == RowStatus::Fail) {
          where = ", first at t=" + num(row.params[0], 6);
          break;
        }
    }
    o.require(rep.summary.failures == 0 && rep.summary.evaluated == 2000,
              std::string(id) + " containment: " + std::to_string(rep.summary.failures) + "/" +
                  std::to_string(rep.summary.evaluated) + " outside" + where);
  }

  // The closed forms must equal the trapezoid-bound composition on [0, pi/2],
  // where the composed radius per unit length is acdq_bound / (pi/2).
  const auto grid = GridAxis::uniform(real(1e-4L), 1 - real(1e-4L), 2000);
  real worst = 0;
  for (std::size_t i = 0; i < grid.steps; ++i) {
    const ellip::Modulus<real> m(grid.at(i));
    for (const auto& b : {ellip::iyengar_bound_E(m), ellip::iyengar_bound_F(m)}) {
      const real composed = b.certified_radius / (kPi / 2);
      worst = std::max(worst, std::abs(b.radius - composed) / std::abs(composed));
    }
  }
  o.require(worst <= real(1e-14L), "closed-form vs composed radius: max rel diff " + num(worst) + " (<= 1e-14)");

  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> theta(0, std::numbers::pi / 2);
  bool beats = true;
  const auto t_axis = GridAxis::uniform(real(0.02L), real(0.98L), 49);
  for (std::size_t i = 0; i < t_axis.steps; ++i) {
    const real t = t_axis.at(i);
    const real t2 = t * t;
    const auto e_min = ellip::E_integrand_slope_min(ellip::Modulus<real>(t)).slope;
    const auto f_max = ellip::F_integrand_slope_max(ellip::Modulus<real>(t)).slope;
    for (int k = 0; k < 100000; ++k) {
      const real x = theta(rng);
      const real sc = std::sin(x) * std::cos(x);
      const real w = 1 - t2 * std::sin(x) * std::sin(x);
      const real df = -t2 * sc / std::sqrt(w);
      const real dh = t2 * sc / (w * std::sqrt(w));
      beats = beats && e_min <= df + 1e-15L * std::abs(df) && dh <= f_max * (1 + 1e-15L);
    }
  }
  o.require(beats, "critical-point slopes bound 1e5 random samples at 49 t-values");

  for (const char* id : {"thm3_E_certified", "thm4_F_certified"}) {
    const auto rep = sweep(rec(id), rec(id).default_grid, real(1e-12L));
    o.detail << " [info: " << id << " " << rep.summary.failures << " outside]";
  }
}

// p + q sqrt(2) > 0 for integers, exactly.
bool positive_surd(std::int64_t p, std::int64_t q) {
  if (p >= 0 && q >= 0) return p > 0 || q > 0;
  if (p <= 0 && q <= 0) return false;
  return p > 0 ? p * p > 2 * q * q : 2 * q * q > p * p;
}

void wallis_binomial(Outcome& o) {
  // Exact C(2i, i) as a vector of base-1e9 digits, updated by C(2i+2, i+1) = C(2i, i) (2i+1)(2i+2)/(i+1)^2.
  std::vector<std::uint64_t> big{1};
  auto mul = [&](std::uint64_t f) {
    std::uint64_t carry = 0;
    for (auto& d : big) {
      const unsigned __int128 v = static_cast<unsigned __int128>(d) * f + carry;
      d = static_cast<std::uint64_t>(v % 1000000000u);
      carry = static_cast<std::uint64_t>(v / 1000000000u);
    }
    while (carry) big.push_back(carry % 1000000000u), carry /= 1000000000u;
  };
  auto div = [&](std::uint64_t f) {
    unsigned __int128 rem = 0;
    for (std::size_t k = big.size(); k-- > 0;) {
      const unsigned __int128 v = rem * 1000000000u + big[k];
      big[k] = static_cast<std::uint64_t>(v / f);
      rem = v % f;
    }
    while (big.size() > 1 && big.back() == 0) big.pop_back();
    return rem;
  };
  auto to_real = [&] {
    real v = 0;
    for (std::size_t k = big.size(); k-- > 0;) v = v * real(1e9L) + real(big[k]);
    return v;
  };

  bool exact_ok = true, divisible = true;
  for (std::uint64_t i = 1; i <= 500; ++i) {
    mul(2 * i - 1);
    mul(2 * i);
    divisible = divisible && div(i) == 0 && div(i) == 0;
    const real c = to_real();
    const auto b = ellip::central_binom_bounds(i);
    exact_ok = exact_ok && b.lo < c && c < b.hi;
  }
  o.require(exact_ok && divisible, "strict containment of exact C(2i,i), i = 1..500");

  bool log_ok = true;
  real log_c = 0;  // running sum of log((i+k)/k) differences
  for (std::uint64_t i = 1; i <= 10000; ++i) {
    log_c += std::log(real(2 * i - 1) * real(2 * i) / (real(i) * real(i)));
    const auto b = ellip::central_binom_log_bounds(i);
    const real lib = ellip::log_central_binom(i);
    log_ok = log_ok && std::abs(lib - log_c) < real(1e-12L) * log_c && b.lo < log_c && log_c < b.hi;
  }
  o.require(log_ok, "log-space containment, i <= 1e4");

  real worst = 0;
  real w_prev = ellip::wallis_integral(0);
  for (std::uint64_t n = 0; n < 10000; ++n) {
    const real w_next = ellip::wallis_integral(n + 1);
    const real target = kPi / (2 * real(n + 1));
    worst = std::max(worst, std::abs(w_prev * w_next - target) / target);
    w_prev = w_next;
  }
  for (std::uint64_t n : {1u, 2u, 7u, 20u}) {
    const real q = ellip::eval_generic_quad<real>([n](real x) { return std::pow(std::sin(x), real(n)); }, real(0),
                                                  kPi / 2)
                       .value;
    worst = std::max(worst, std::abs(q - ellip::wallis_integral(n)) / q);
  }
  o.require(worst <= real(1e-14L), "Wallis product identity W(n)W(n+1) = pi/(2(n+1)), n < 1e4: max rel err " +
                                       num(worst));
}

void amm_chain(Outcome& o) {
  const real v = oracle::amm_integral();
  o.detail << "integral " << num(v, 15);
  o.require(ellip::amm::coarse_lower() < v && v < ellip::amm::coarse_upper(), "inside (pi/6, pi sqrt2/8)");
  o.require(v > ellip::amm::quartic_lower(), "above 3/10 + 27sqrt2/160");
  o.require(v < ellip::amm::improved_upper(), "below 79/192 + sqrt2/10");
  // Over the common denominator 480: b1 = (144 + 81 s)/480, b2 = (120 + 95 s)/480, b3 = (96 + 114 s)/480.
  o.require(positive_surd(144 - 120, 81 - 95) && positive_surd(144 - 96, 81 - 114),
            "b1 > b2 and b1 > b3 in exact arithmetic");
  const auto& r = rec("pointwise_37_75");
  // Both envelopes touch the integrand at x = 0 and x = 1, so allow roundoff.
  const auto rep = sweep(r, {{GridAxis::uniform(0, 1, 10000)}}, real(1e-15L));
  o.require(rep.summary.failures == 0 && rep.summary.evaluated == 10000,
            "pointwise minorant/majorant: " + std::to_string(rep.summary.failures) + " violations on 1e4 points");
}

void chebyshev_family(Outcome& o) {
  for (const char* id : {"eq9_F", "eq11_F", "eq11_reversed", "eq12_PiE", "eq12_reversed", "eq13", "eq14", "eq15",
                         "eq16", "eq16_shifted"}) {
    const auto& r = rec(id);
    const auto rep = sweep(r, r.default_grid, real(1e-12L));
    const auto& s = rep.summary;
    std::string extra;
    if (s.failures && s.evaluated == 1) extra = " (value " + num(*rep.rows[0].ref, 6) + ")";
    o.require(s.failures == 0 && s.oracle_errors == 0 && s.evaluated > 0,
              std::string(id) + " " + std::to_string(s.failures) + "/" + std::to_string(s.evaluated) + extra);
  }
  const real too_big[] = {real(0.82L)};  // t^2 > 2/3
  o.require(!rec("eq13").guard(Args(too_big)), "eq13 guard rejects t^2 > 2/3");
  const auto& r10 = rec("eq10");
  const auto rep10 = sweep(r10, r10.default_grid, real(1e-12L));
  o.require(r10.mode == Mode::Observe && rep10.summary.oracle_errors == 0,
            "eq10 observed: " + std::to_string(rep10.summary.failures) + " findings over " +
                std::to_string(rep10.summary.evaluated) + " points");
}

void pointwise81(Outcome& o) {
  const Grid g{{GridAxis::uniform(real(0.05L), real(5), 100), GridAxis::uniform(0, kPi / 2, 100)}};
  const auto rep = sweep(rec("pointwise_81"), g, real(1e-15L));
  o.require(rep.summary.failures == 0 && rep.summary.evaluated == 10000,
            std::to_string(rep.summary.failures) + " violations of lhs <= mid <= 0 on 100x100, t in [0.05, 5]");
}

void perimeter(Outcome& o) {
  const auto a_axis = GridAxis::uniform(real(0.1L), real(10), 50);
  const auto ratio_axis = GridAxis::uniform(real(1), real(20), 50);
  std::size_t bad = 0;
  real worst_agree = 0;
  for (std::size_t i = 0; i < a_axis.steps; ++i)
    for (std::size_t j = 0; j < ratio_axis.steps; ++j) {
      const real a = a_axis.at(i), b = a * ratio_axis.at(j);
      const real q =
          ellip::eval_generic_quad<real>(
              [a, b](real x) { return std::sqrt(a * a * std::sin(x) * std::sin(x) + b * b * std::cos(x) * std::cos(x)); },
              real(0), kPi / 2)
              .value;
      const auto lin = *ellip::perimeter_bounds(ellip::Axes<real>(a, b)).linear;
      const real tol = real(1e-14L) * q;
      bad += !(lin.lo <= q + tol && q <= lin.hi + tol);
      const Point p{a, b};
      worst_agree = std::max(worst_agree, std::abs(rec("ellip_ellipse").middle(Args(p)) - q) / q);
    }
  o.require(bad == 0, std::to_string(bad) + " of 2500 quadrature perimeters outside the bound (b = a..20a)");
  o.require(worst_agree < real(1e-14L), "quadrature vs AGM perimeter max rel diff " + num(worst_agree));
  const auto pb = ellip::perimeter_bounds(ellip::Axes<real>(1, 8));
  o.require(pb.linear->hi < pb.classical.hi,
            "at b = 8a: " + num(pb.linear->hi, 6) + " < classical " + num(pb.classical.hi, 6));
}

void check_all(Outcome& o) {
  std::ostringstream out, err;
  const auto t0 = std::chrono::steady_clock::now();
  const int code = ellip::cli::run({"check", "--all"}, out, err);
  const double secs = seconds_since(t0);
  o.require(code == 0, "exit code " + std::to_string(code));
  o.require(secs < 30, "runtime " + num(real(secs)) + " s (< 30 s)");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
      {"oracle cross-agreement", oracle_agreement},
      {"log enclosure of E", log_enclosure_E},
      {"log/arctan enclosure of F(a,b)", log_arctan_enclosure_F},
      {"trapezoid-type bounds", trapezoid_bounds},
      {"Wallis formula and central binomial bounds", wallis_binomial},
      {"lower/upper chain for int_0^1 (4-x^2-x^3)^(-1/2)", amm_chain},
      {"Chebyshev-type family", chebyshev_family},
      {"pointwise cosine chain", pointwise81},
      {"ellipse perimeter bound", perimeter},
      {"check --all", check_all},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      criteria[k].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << k + 1 << " (" << criteria[k].first
              << "): " << o.detail.str() << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
