#pragma once

// Serialization of sweep reports.
//
// CSV (version 1):
//   # ellip-sweep-csv v1 mode=<enforce|observe> tol=<real>
//   record_id,<param names...>,ref,lo,hi,pass,gap_lo,gap_hi
//   one row per evaluated grid point; absent values are empty fields and
//   `pass` is one of true, false, oracle_error.
//
// JSON (version 1): see README.md for the schema.
//
// Reals are written with 17 significant digits.

#include <charconv>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ellip/sweep.hpp"

namespace ellip::verify {

inline constexpr int report_format_version = 1;

inline std::string format_real(real x, int digits = 17) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, digits);
  if (ec != std::errc{}) throw std::runtime_error("cannot format real");
  return std::string(buf, end);
}

inline real parse_real(std::string_view s) {
  real x{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw std::runtime_error("malformed real '" + std::string(s) + "'");
  return x;
}

namespace detail {

inline std::string optional_field(const std::optional<real>& v) {
  return v ? format_real(*v) : std::string();
}

inline std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline std::optional<real> parse_optional(std::string_view s) {
  if (s.empty()) return std::nullopt;
  return parse_real(s);
}

inline nlohmann::ordered_json json_real(const std::optional<real>& v) {
  if (!v) return nullptr;
  return static_cast<double>(*v);
}

}  // namespace detail

inline std::string csv_header(const SweepReport& rep) {
  std::string h = "record_id";
  for (const auto& p : rep.params) h += "," + p;
  h += ",ref,lo,hi,pass,gap_lo,gap_hi";
  return h;
}

inline void write_csv(std::ostream& os, const SweepReport& rep) {
  os << "# ellip-sweep-csv v" << report_format_version << " mode=" << to_string(rep.mode)
     << " tol=" << format_real(rep.tol) << "\n";
  os << csv_header(rep) << "\n";
  for (const auto& row : rep.rows) {
    os << rep.record_id;
    for (real p : row.params) os << ',' << format_real(p);
    os << ',' << detail::optional_field(row.ref) << ',' << detail::optional_field(row.lo) << ','
       << detail::optional_field(row.hi) << ',' << to_string(row.status) << ','
       << detail::optional_field(row.gap_lo) << ',' << detail::optional_field(row.gap_hi) << "\n";
  }
}

inline std::string to_csv(const SweepReport& rep) {
  std::ostringstream os;
  write_csv(os, rep);
  return os.str();
}

/// Parses the output of write_csv. The summary is recomputed from the rows;
/// guard-skipped points are not part of the CSV and count as zero.
inline SweepReport parse_csv(std::string_view text) {
  SweepReport rep;
  std::vector<std::string_view> lines;
  for (auto line : detail::split(text, '\n'))
    if (!line.empty()) lines.push_back(line);
  if (lines.size() < 2) throw std::runtime_error("csv report needs a version line and a header");

  const std::string_view magic = "# ellip-sweep-csv v1 ";
  if (lines[0].substr(0, magic.size()) != magic)
    throw std::runtime_error("unsupported csv report version");
  for (auto kv : detail::split(lines[0].substr(magic.size()), ' ')) {
    const auto eq = kv.find('=');
    if (eq == std::string_view::npos) continue;
    const auto key = kv.substr(0, eq);
    const auto value = kv.substr(eq + 1);
    if (key == "mode") rep.mode = value == "observe" ? Mode::Observe : Mode::Enforce;
    if (key == "tol") rep.tol = parse_real(value);
  }

  const auto header = detail::split(lines[1], ',');
  if (header.size() < 7 || header.front() != "record_id")
    throw std::runtime_error("malformed csv header");
  const std::size_t n_params = header.size() - 7;
  for (std::size_t k = 0; k < n_params; ++k) rep.params.emplace_back(header[1 + k]);

  for (std::size_t li = 2; li < lines.size(); ++li) {
    const auto f = detail::split(lines[li], ',');
    if (f.size() != header.size()) throw std::runtime_error("csv row has wrong field count");
    if (rep.record_id.empty()) rep.record_id = std::string(f[0]);
    SweepRow row;
    for (std::size_t k = 0; k < n_params; ++k) row.params.push_back(parse_real(f[1 + k]));
    std::size_t c = 1 + n_params;
    row.ref = detail::parse_optional(f[c++]);
    row.lo = detail::parse_optional(f[c++]);
    row.hi = detail::parse_optional(f[c++]);
    const auto status = f[c++];
    if (status == "true")
      row.status = RowStatus::Pass;
    else if (status == "false")
      row.status = RowStatus::Fail;
    else if (status == "oracle_error")
      row.status = RowStatus::OracleError;
    else
      throw std::runtime_error("unknown pass value '" + std::string(status) + "'");
    row.gap_lo = detail::parse_optional(f[c++]);
    row.gap_hi = detail::parse_optional(f[c++]);
    rep.rows.push_back(std::move(row));
  }
  rep.summary = detail::summarize(rep.rows, rep.rows.size(), 0);
  return rep;
}

inline nlohmann::ordered_json summary_json(const SweepSummary& s) {
  auto gaps = [](const GapStats& g) {
    nlohmann::ordered_json j;
    j["count"] = g.count;
    j["max_rel_gap"] = static_cast<double>(g.max_rel);
    j["mean_rel_gap"] = static_cast<double>(g.mean_rel);
    return j;
  };
  nlohmann::ordered_json j;
  j["total_points"] = s.total_points;
  j["skipped"] = s.skipped;
  j["evaluated"] = s.evaluated;
  j["failures"] = s.failures;
  j["oracle_errors"] = s.oracle_errors;
  j["strict_ties"] = s.strict_ties;
  j["max_violation"] = static_cast<double>(s.max_violation);
  j["tightness"] = {{"lower", gaps(s.lower)}, {"upper", gaps(s.upper)}};
  return j;
}

inline nlohmann::ordered_json to_json(const SweepReport& rep, bool include_rows = true) {
  nlohmann::ordered_json j;
  j["format"] = "ellip-sweep-report";
  j["version"] = report_format_version;
  j["record_id"] = rep.record_id;
  j["mode"] = to_string(rep.mode);
  j["tol"] = static_cast<double>(rep.tol);
  j["params"] = rep.params;
  if (include_rows) {
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : rep.rows) {
      nlohmann::ordered_json r;
      auto params = nlohmann::ordered_json::array();
      for (real p : row.params) params.push_back(static_cast<double>(p));
      r["params"] = params;
      r["status"] = row.status == RowStatus::Pass   ? "pass"
                    : row.status == RowStatus::Fail ? "fail"
                                                    : "oracle_error";
      r["ref"] = detail::json_real(row.ref);
      r["lo"] = detail::json_real(row.lo);
      r["hi"] = detail::json_real(row.hi);
      r["gap_lo"] = detail::json_real(row.gap_lo);
      r["gap_hi"] = detail::json_real(row.gap_hi);
      if (!row.error.empty()) r["error"] = row.error;
      rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
  }
  j["summary"] = summary_json(rep.summary);
  return j;
}

}  // namespace ellip::verify
