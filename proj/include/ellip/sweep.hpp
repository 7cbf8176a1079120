#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "ellip/grid.hpp"
#include "ellip/registry.hpp"

namespace ellip::verify {

enum class RowStatus { Pass, Fail, OracleError };

inline const char* to_string(RowStatus s) {
  switch (s) {
    case RowStatus::Pass: return "true";
    case RowStatus::Fail: return "false";
    case RowStatus::OracleError: return "oracle_error";
  }
  return "?";
}

struct SweepRow {
  Point params;
  RowStatus status = RowStatus::Pass;
  std::optional<real> ref;
  std::optional<real> lo;
  std::optional<real> hi;
  std::optional<real> gap_lo;  // ref - lo
  std::optional<real> gap_hi;  // hi - ref
  std::string error;           // oracle diagnostic
};

struct GapStats {
  std::size_t count = 0;
  real max_rel = 0;
  real mean_rel = 0;
};

struct SweepSummary {
  std::size_t total_points = 0;
  std::size_t skipped = 0;  // guard rejected
  std::size_t evaluated = 0;
  std::size_t failures = 0;
  std::size_t oracle_errors = 0;
  /// Rows where a bound is met with equality (or within tol) instead of strictly.
  std::size_t strict_ties = 0;
  /// Largest raw amount by which ref crossed a bound; 0 when none did.
  real max_violation = 0;
  GapStats lower;
  GapStats upper;
};

struct SweepReport {
  std::string record_id;
  std::vector<std::string> params;
  Mode mode = Mode::Enforce;
  real tol = 0;
  std::vector<SweepRow> rows;
  SweepSummary summary;
};

namespace detail {

// Relative gaps use |ref| when it is nonzero, the absolute gap otherwise.
inline real relative(real gap, real ref) { return ref != 0 ? gap / std::abs(ref) : gap; }

inline SweepRow evaluate_row(const InequalityRecord& rec, Point p, real tol) {
  SweepRow row;
  row.params = std::move(p);
  const Args args(row.params);
  try {
    const real ref = rec.middle(args);
    row.ref = ref;
    bool ok = std::isfinite(ref);
    if (rec.has_lower()) {
      const real lo = rec.lower(args);
      row.lo = lo;
      row.gap_lo = ref - lo;
      ok = ok && std::isfinite(lo) && lo <= ref + tol;
    }
    if (rec.has_upper()) {
      const real hi = rec.upper(args);
      row.hi = hi;
      row.gap_hi = hi - ref;
      ok = ok && std::isfinite(hi) && ref <= hi + tol;
    }
    row.status = ok ? RowStatus::Pass : RowStatus::Fail;
  } catch (const std::exception& e) {
    row.status = RowStatus::OracleError;
    row.error = e.what();
  }
  return row;
}

inline void accumulate(GapStats& s, real rel) {
  s.max_rel = s.count == 0 ? rel : std::max(s.max_rel, rel);
  s.mean_rel += rel;
  ++s.count;
}

inline SweepSummary summarize(const std::vector<SweepRow>& rows, std::size_t total,
                              std::size_t skipped) {
  SweepSummary s;
  s.total_points = total;
  s.skipped = skipped;
  s.evaluated = rows.size();
  for (const auto& row : rows) {
    if (row.status == RowStatus::OracleError) {
      ++s.oracle_errors;
      continue;
    }
    if (row.status == RowStatus::Fail) ++s.failures;
    bool tie = false;
    if (row.gap_lo) {
      s.max_violation = std::max(s.max_violation, -*row.gap_lo);
      tie = tie || *row.gap_lo <= 0;
      accumulate(s.lower, detail::relative(*row.gap_lo, *row.ref));
    }
    if (row.gap_hi) {
      s.max_violation = std::max(s.max_violation, -*row.gap_hi);
      tie = tie || *row.gap_hi <= 0;
      accumulate(s.upper, detail::relative(*row.gap_hi, *row.ref));
    }
    if (tie && row.status == RowStatus::Pass) ++s.strict_ties;
  }
  if (s.lower.count) s.lower.mean_rel /= real(s.lower.count);
  if (s.upper.count) s.upper.mean_rel /= real(s.upper.count);
  return s;
}

}  // namespace detail

/// Evaluates `rec` at every guarded point of `grid`. A row passes iff
/// lo <= ref + tol and ref <= hi + tol for whichever sides the record has.
///
/// Points are split across `threads` workers; rows come back in grid order
/// regardless, so the report does not depend on the thread count.
inline SweepReport sweep(const InequalityRecord& rec, const Grid& grid, real tol,
                         unsigned threads = std::thread::hardware_concurrency()) {
  if (!(tol >= 0)) throw domain_error("sweep tolerance must be non-negative");
  if (grid.axes.size() != rec.params.size())
    throw domain_error("grid for '" + rec.id + "' must have " +
                       std::to_string(rec.params.size()) + " axes");
  grid.validate();

  const std::size_t total = grid.size();
  std::vector<std::optional<SweepRow>> slots(total);
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::size_t>(total, 64))));

  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      Point p = grid.at(i);
      if (!rec.guard(Args(p))) continue;
      slots[i] = detail::evaluate_row(rec, std::move(p), tol);
    }
  };

  if (threads == 1) {
    work(0, total);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (total + threads - 1) / threads;
    for (unsigned k = 0; k < threads; ++k) {
      const std::size_t begin = std::min(total, k * chunk);
      const std::size_t end = std::min(total, begin + chunk);
      pool.emplace_back(work, begin, end);
    }
  }

  SweepReport report{rec.id, rec.params, rec.mode, tol, {}, {}};
  std::size_t skipped = 0;
  for (auto& slot : slots) {
    if (slot)
      report.rows.push_back(std::move(*slot));
    else
      ++skipped;
  }
  report.summary = detail::summarize(report.rows, total, skipped);
  return report;
}

/// Tightness statistics alone: the relative gaps (hi - ref)/|ref| and
/// (ref - lo)/|ref| over the guarded grid.
inline SweepSummary tightness_report(const InequalityRecord& rec, const Grid& grid,
                                     real tol = 0) {
  return sweep(rec, grid, tol).summary;
}

}  // namespace ellip::verify
