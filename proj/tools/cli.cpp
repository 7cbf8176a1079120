#include "cli.hpp"

#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ellip/ellip.hpp"

namespace ellip::cli {

namespace {

using verify::Grid;
using verify::GridAxis;
using verify::InequalityRecord;

constexpr const char* kParamNames[] = {"t", "h", "a", "b", "x", "theta"};

struct ParamFlags {
  std::optional<std::string> value;
  std::optional<std::string> from;
  std::optional<std::string> to;
};

struct Options {
  std::string target;
  std::vector<std::string> ids;
  std::map<std::string, ParamFlags> params;
  std::string format = "text";
  std::optional<std::string> tol;
  std::optional<std::size_t> steps;
  bool near_one = false;
  bool all = false;
  std::string method = "agm";
  int n_terms = 20;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownRecord : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyGrid : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string text_real(real x) { return verify::format_real(x, 12); }

real default_tol() {
  if (const char* env = std::getenv("ELLIP_TOL")) {
    const real tol = verify::parse_real(env);
    if (!(tol > 0)) throw UsageError("ELLIP_TOL must be positive");
    return tol;
  }
  return real(1e-10L);
}

real resolve_tol(const Options& o) {
  if (!o.tol) return default_tol();
  const real tol = verify::parse_real(*o.tol);
  if (!(tol > 0)) throw UsageError("--tol must be positive");
  return tol;
}

real required(const Options& o, const std::string& name) {
  auto it = o.params.find(name);
  if (it == o.params.end() || !it->second.value)
    throw UsageError("missing required --" + name);
  return verify::parse_real(*it->second.value);
}

std::string resolve_alias(const std::string& id) {
  static const std::map<std::string, std::string> aliases{
      {"thm1", "thm1_E"}, {"thm2", "thm2_F"}, {"thm3", "thm3_E"}, {"thm4", "thm4_F"},
      {"eq9", "eq9_F"},   {"eq11", "eq11_F"}, {"eq12", "eq12_PiE"}};
  auto it = aliases.find(id);
  return it == aliases.end() ? id : it->second;
}

const InequalityRecord& lookup(const std::vector<InequalityRecord>& records, const std::string& id) {
  if (const auto* rec = verify::find_record(records, resolve_alias(id))) return *rec;
  std::string msg = "unknown record id '" + id + "'; valid ids:";
  for (const auto& r : records) msg += " " + r.id;
  throw UnknownRecord(msg);
}

// ----------------------------------------------------------------------------

void print_eval(std::ostream& out, const std::string& label, const EvalResult<real>& r,
                const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json j;
    j["quantity"] = label;
    j["value"] = static_cast<double>(r.value);
    j["est_error"] = static_cast<double>(r.est_error);
    j["method"] = to_string(r.method);
    out << j.dump() << "\n";
  } else if (format == "csv") {
    out << "quantity,value,est_error,method\n"
        << label << "," << verify::format_real(r.value) << "," << verify::format_real(r.est_error)
        << "," << to_string(r.method) << "\n";
  } else {
    out << label << " = " << text_real(r.value) << "  (method " << to_string(r.method)
        << ", est_error " << verify::format_real(r.est_error, 3) << ")\n";
  }
}

int cmd_eval(const Options& o, std::ostream& out) {
  const std::string& f = o.target;
  const bool quad = o.method == "quad";
  if (f == "E" || f == "F") {
    const real t = required(o, "t");
    const Modulus<real> m(t);
    const auto r = f == "E" ? (quad ? eval_E_quad(m) : eval_E_agm(m))
                            : (quad ? eval_F_quad(m) : eval_F_agm(m));
    print_eval(out, f + "(" + text_real(t) + ")", r, o.format);
  } else if (f == "Pi") {
    const real t = required(o, "t");
    const real h = required(o, "h");
    print_eval(out, "Pi(" + text_real(t) + ", " + text_real(h) + ")",
               eval_Pi_quad(Modulus<real>(t), h), o.format);
  } else if (f == "E_ab" || f == "F_ab") {
    const Axes<real> ax(required(o, "a"), required(o, "b"));
    const auto r = f == "E_ab" ? eval_E_ab(ax) : eval_F_ab(ax);
    print_eval(out, f.substr(0, 1) + "(" + text_real(ax.a()) + ", " + text_real(ax.b()) + ")", r,
               o.format);
  } else if (f == "E_series") {
    const real t = required(o, "t");
    print_eval(out, "E_series(" + text_real(t) + ", n=" + std::to_string(o.n_terms) + ")",
               eval_E_series(Modulus<real>(t), o.n_terms), o.format);
  } else {
    throw UsageError("unknown eval target '" + f + "'; expected one of E F Pi E_ab F_ab E_series");
  }
  return kOk;
}

// ----------------------------------------------------------------------------

int print_amm_chain(std::ostream& out, const std::string& format) {
  const real ref = verify::oracle::amm_integral();
  const std::vector<std::pair<std::string, real>> chain{
      {"pi/6", amm::coarse_lower()},
      {"1/4+19sqrt2/96", amm::quadratic_lower()},
      {"1/5+19sqrt2/80", amm::mixed_lower()},
      {"3/10+27sqrt2/160", amm::quartic_lower()},
      {"integral", ref},
      {"79/192+sqrt2/10", amm::improved_upper()},
      {"pi*sqrt2/8", amm::coarse_upper()}};
  if (format == "json") {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [name, v] : chain) arr.push_back({{"name", name}, {"value", static_cast<double>(v)}});
    out << nlohmann::ordered_json{{"record_id", "amm"}, {"chain", arr}}.dump() << "\n";
  } else if (format == "csv") {
    out << "name,value\n";
    for (const auto& [name, v] : chain) out << name << "," << verify::format_real(v) << "\n";
  } else {
    out << "int_0^1 (4 - x^2 - x^3)^(-1/2) dx, ascending chain:\n";
    for (std::size_t i = 0; i < chain.size(); ++i)
      out << (i == 0 ? "    " : "  < ") << chain[i].first << " = " << text_real(chain[i].second) << "\n";
  }
  return kOk;
}

int cmd_bounds(const Options& o, std::ostream& out) {
  if (o.target == "amm") return print_amm_chain(out, o.format);
  const auto records = verify::register_builtin();
  const auto& rec = lookup(records, o.target);
  verify::Point p;
  for (const auto& name : rec.params) p.push_back(required(o, name));
  if (!rec.guard(verify::Args(p)))
    throw domain_error("parameters lie outside the domain of '" + rec.id + "'");

  const verify::Args args(p);
  std::optional<real> lo, hi;
  if (rec.has_lower()) lo = rec.lower(args);
  if (rec.has_upper()) hi = rec.upper(args);
  const real ref = rec.middle(args);

  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["record_id"] = rec.id;
    nlohmann::ordered_json params;
    for (std::size_t k = 0; k < p.size(); ++k) params[rec.params[k]] = static_cast<double>(p[k]);
    j["params"] = params;
    j["lo"] = lo ? nlohmann::ordered_json(static_cast<double>(*lo)) : nlohmann::ordered_json();
    j["ref"] = static_cast<double>(ref);
    j["hi"] = hi ? nlohmann::ordered_json(static_cast<double>(*hi)) : nlohmann::ordered_json();
    out << j.dump() << "\n";
  } else if (o.format == "csv") {
    out << "record_id,lo,ref,hi\n"
        << rec.id << "," << (lo ? verify::format_real(*lo) : "") << "," << verify::format_real(ref)
        << "," << (hi ? verify::format_real(*hi) : "") << "\n";
  } else {
    out << rec.id << ": " << rec.statement << "\n";
    out << "  interval [" << (lo ? text_real(*lo) : "-inf") << ", " << (hi ? text_real(*hi) : "+inf")
        << "]\n";
    out << "  reference " << text_real(ref) << "\n";
  }
  return kOk;
}

// ----------------------------------------------------------------------------

Grid build_grid(const InequalityRecord& rec, const Options& o) {
  Grid grid = rec.default_grid;
  for (std::size_t k = 0; k < rec.params.size(); ++k) {
    const auto& name = rec.params[k];
    auto it = o.params.find(name);
    if (it == o.params.end()) continue;
    const auto& f = it->second;
    if (f.value) {
      if (f.from || f.to) throw UsageError("--" + name + " conflicts with --" + name + "-from/-to");
      grid.axes[k] = GridAxis::fixed(verify::parse_real(*f.value));
    } else if (f.from || f.to) {
      if (!f.from || !f.to) throw UsageError("--" + name + "-from and --" + name + "-to go together");
      const std::size_t steps = o.steps.value_or(grid.axes[k].steps > 1 ? grid.axes[k].steps : 100);
      if (steps < 2) throw UsageError("--steps must be at least 2");
      const real from = verify::parse_real(*f.from);
      const real to = verify::parse_real(*f.to);
      if (!(from < to)) throw UsageError("--" + name + "-from must be below --" + name + "-to");
      grid.axes[k] = o.near_one ? GridAxis::near_one(from, to, steps) : GridAxis::uniform(from, to, steps);
    }
  }
  for (const auto& [name, f] : o.params) {
    if ((f.value || f.from || f.to) &&
        std::find(rec.params.begin(), rec.params.end(), name) == rec.params.end())
      throw UsageError("record '" + rec.id + "' has no parameter '" + name + "'");
  }
  try {
    grid.validate();
  } catch (const domain_error& e) {
    throw UsageError(e.what());
  }
  return grid;
}

void print_summary_text(std::ostream& out, const verify::SweepReport& rep) {
  const auto& s = rep.summary;
  out << "record " << rep.record_id << " (" << verify::to_string(rep.mode) << ")"
      << "  points " << s.total_points << "  evaluated " << s.evaluated << "  skipped " << s.skipped
      << "\n  failures " << s.failures << "  oracle_errors " << s.oracle_errors << "  strict_ties "
      << s.strict_ties << "  max_violation " << verify::format_real(s.max_violation, 3) << "\n";
  if (s.lower.count)
    out << "  lower gap (rel): max " << verify::format_real(s.lower.max_rel, 3) << "  mean "
        << verify::format_real(s.lower.mean_rel, 3) << "\n";
  if (s.upper.count)
    out << "  upper gap (rel): max " << verify::format_real(s.upper.max_rel, 3) << "  mean "
        << verify::format_real(s.upper.mean_rel, 3) << "\n";
}

int cmd_sweep(const Options& o, std::ostream& out) {
  const auto records = verify::register_builtin();
  const auto& rec = lookup(records, o.target);
  const Grid grid = build_grid(rec, o);
  const auto rep = verify::sweep(rec, grid, resolve_tol(o));
  if (rep.rows.empty()) throw EmptyGrid("no grid point satisfies the guard of '" + rec.id + "'");

  if (o.format == "csv") {
    verify::write_csv(out, rep);
  } else if (o.format == "json") {
    out << verify::to_json(rep).dump() << "\n";
  } else {
    for (const auto& row : rep.rows) {
      out << " ";
      for (std::size_t k = 0; k < row.params.size(); ++k)
        out << " " << rep.params[k] << "=" << text_real(row.params[k]);
      out << "  lo=" << (row.lo ? text_real(*row.lo) : "-") << "  ref=" << (row.ref ? text_real(*row.ref) : "-")
          << "  hi=" << (row.hi ? text_real(*row.hi) : "-") << "  "
          << (row.status == verify::RowStatus::Pass   ? "pass"
              : row.status == verify::RowStatus::Fail ? "FAIL"
                                                      : "oracle-error: " + row.error)
          << "\n";
    }
    print_summary_text(out, rep);
  }
  return kOk;
}

// ----------------------------------------------------------------------------

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
  const auto records = verify::register_builtin();
  std::vector<const InequalityRecord*> selected;
  if (o.all) {
    if (!o.ids.empty()) throw UsageError("check takes either --all or record ids, not both");
    for (const auto& r : records) selected.push_back(&r);
  } else {
    if (o.ids.empty()) throw UsageError("check needs --all or at least one record id");
    for (const auto& id : o.ids) selected.push_back(&lookup(records, id));
  }
  const real tol = resolve_tol(o);

  std::size_t failures = 0;
  std::vector<std::string> findings;
  auto summaries = nlohmann::ordered_json::array();
  for (const auto* rec : selected) {
    const auto rep = verify::sweep(*rec, rec->default_grid, tol);
    const auto& s = rep.summary;
    const std::size_t bad = s.failures + s.oracle_errors;
    if (rec->mode == verify::Mode::Enforce)
      failures += bad;
    else if (bad > 0)
      findings.push_back(rec->id + " (" + std::to_string(s.failures) + " violations, max " +
                         verify::format_real(s.max_violation, 3) + ")");
    if (o.format == "json") {
      auto j = verify::to_json(rep, false);
      summaries.push_back(std::move(j));
    } else if (o.format == "csv") {
      if (summaries.empty()) {
        out << "record_id,mode,points,evaluated,skipped,failures,oracle_errors,strict_ties,max_violation\n";
        summaries.push_back(nullptr);
      }
      out << rep.record_id << "," << verify::to_string(rep.mode) << "," << s.total_points << ","
          << s.evaluated << "," << s.skipped << "," << s.failures << "," << s.oracle_errors << ","
          << s.strict_ties << "," << verify::format_real(s.max_violation) << "\n";
    } else {
      out << (bad == 0 ? "ok      " : rec->mode == verify::Mode::Enforce ? "FAIL    " : "observe ")
          << rep.record_id << "  evaluated " << s.evaluated << "  failures " << s.failures;
      if (s.oracle_errors) out << "  oracle_errors " << s.oracle_errors;
      out << "\n";
    }
  }
  if (o.format == "json") {
    out << nlohmann::ordered_json{{"failures", failures},
                                  {"observe_findings", findings},
                                  {"records", summaries}}
               .dump()
        << "\n";
  } else if (o.format == "text") {
    out << "failures: " << failures << "\n";
  }
  for (const auto& f : findings) err << "warning: observe-mode finding in " << f << "\n";
  return failures == 0 ? kOk : kCheckFailed;
}

int cmd_list(const Options& o, std::ostream& out) {
  const auto records = verify::register_builtin();
  if (o.format == "json") {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : records)
      arr.push_back({{"id", r.id}, {"params", r.params}, {"mode", verify::to_string(r.mode)},
                     {"statement", r.statement}});
    out << arr.dump() << "\n";
    return kOk;
  }
  if (o.format == "csv") out << "id,params,mode,statement\n";
  for (const auto& r : records) {
    std::string params;
    for (const auto& p : r.params) params += (params.empty() ? "" : " ") + p;
    if (o.format == "csv") {
      out << r.id << "," << params << "," << verify::to_string(r.mode) << ",\"" << r.statement << "\"\n";
    } else {
      out << r.id << "  [" << (params.empty() ? "fixed" : params) << "]  " << verify::to_string(r.mode)
          << "\n    " << r.statement << "\n";
    }
  }
  return kOk;
}

void add_param_flags(CLI::App* cmd, Options& o, bool ranges) {
  for (const char* name : kParamNames) {
    auto& slot = o.params[name];
    cmd->add_option(std::string("--") + name, slot.value, std::string("value of ") + name);
    if (ranges) {
      cmd->add_option(std::string("--") + name + "-from", slot.from, std::string("sweep start for ") + name);
      cmd->add_option(std::string("--") + name + "-to", slot.to, std::string("sweep end for ") + name);
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Complete elliptic integrals: reference values, closed-form bounds and sweeps", "ellip"};
  // --h is a parameter (Pi's characteristic), so help is long-form only.
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);
  const auto formats = CLI::IsMember({"text", "csv", "json"});

  auto* eval = app.add_subcommand("eval", "evaluate E, F, Pi, E_ab, F_ab or E_series");
  eval->add_option("target", o.target, "quantity to evaluate")->required();
  eval->add_option("--method", o.method, "agm or quad (E, F only)")->check(CLI::IsMember({"agm", "quad"}));
  eval->add_option("--n", o.n_terms, "series terms (E_series)")->check(CLI::PositiveNumber);
  add_param_flags(eval, o, false);

  auto* bounds = app.add_subcommand("bounds", "print a record's interval at one point (or the amm chain)");
  bounds->add_option("record", o.target, "record id")->required();
  add_param_flags(bounds, o, false);

  auto* sweep = app.add_subcommand("sweep", "sweep a record over a parameter grid");
  sweep->add_option("record", o.target, "record id")->required();
  sweep->add_option("--steps", o.steps, "grid points per swept parameter");
  sweep->add_flag("--log-near-one", o.near_one, "crowd swept points toward 1");
  sweep->add_option("--tol", o.tol, "pass tolerance (default $ELLIP_TOL or 1e-10)");
  add_param_flags(sweep, o, true);

  auto* check = app.add_subcommand("check", "sweep records over their default grids");
  check->add_flag("--all", o.all, "check every built-in record");
  check->add_option("ids", o.ids, "record ids");
  check->add_option("--tol", o.tol, "pass tolerance (default $ELLIP_TOL or 1e-10)");

  auto* list = app.add_subcommand("list", "list the registered inequalities");

  for (auto* sub : {eval, bounds, sweep, check, list})
    sub->add_option("--format", o.format, "text, csv or json")->check(formats);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(o, out);
    if (bounds->parsed()) return cmd_bounds(o, out);
    if (sweep->parsed()) return cmd_sweep(o, out);
    if (check->parsed()) return cmd_check(o, out, err);
    if (list->parsed()) return cmd_list(o, out);
  } catch (const UnknownRecord& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const EmptyGrid& e) {
    err << "error: " << e.what() << "\n";
    return kEmptyGrid;
  } catch (const domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const convergence_error& e) {
    err << "error: " << e.what() << "\n";
    return kNumerical;
  } catch (const std::runtime_error& e) {  // malformed numbers
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace ellip::cli
