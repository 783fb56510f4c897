#pragma once

// Command-line front end: compute, bounds, approx, verify, sweep, audit.
//
// Every numeric field is a natural logarithm (suffix _ln) because the raw
// counts overflow doubles from n ~ 30 on. Exit codes: 0 success, 1 invalid
// input or regime, 2 verification failure.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lllcount/analysis.hpp"
#include "lllcount/audit.hpp"
#include "lllcount/census.hpp"
#include "lllcount/errors.hpp"
#include "lllcount/report_table.hpp"
#include "lllcount/verification.hpp"

namespace lllcount::cli {

enum class Command { Compute, Bounds, Approx, Verify, Sweep, Audit };
enum class Format { Json, Csv, Plain };

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitVerifyFailed = 2;

inline std::string to_string(Command c) {
  switch (c) {
    case Command::Compute: return "compute";
    case Command::Bounds: return "bounds";
    case Command::Approx: return "approx";
    case Command::Verify: return "verify";
    case Command::Sweep: return "sweep";
    case Command::Audit: return "audit";
  }
  return "unknown";
}

inline std::string to_string(Format f) {
  switch (f) {
    case Format::Json: return "json";
    case Format::Csv: return "csv";
    case Format::Plain: return "plain";
  }
  return "unknown";
}

struct RunConfig {
  Command command = Command::Compute;
  int n_min = 2;
  int n_max = 2;
  double eta = 0.51;
  double delta = 0.99;
  double c = kTightDefaultC;
  double tol = 1e-6;
  Format format = Format::Json;
  std::optional<std::string> out;
  int jobs = 1;
  bool allow_relaxed_domain = false;

  void validate() const {
    detail::require(n_min >= 2, "n must be >= 2");
    detail::require(n_min <= n_max, "n range must be nonempty and ascending");
    detail::require(tol > 0.0, "tol must be positive");
    detail::require(jobs >= 1, "jobs must be >= 1");
    detail::require(c >= kTightMinC && c <= kTightMaxC, "c must lie in [0.5, 4]");
    if (command == Command::Audit) return;
    detail::require(std::isfinite(eta) && std::isfinite(delta) && eta > 0.0 && eta < delta,
                    "requires 0 < eta < delta");
    if (!allow_relaxed_domain) {
      detail::require(ReductionParams(n_min, eta, delta).in_definition_domain(),
                      "eta/delta outside 1/2 < eta < delta < 1 (pass --allow-relaxed-domain to override)");
    }
  }
};

struct RunResult {
  int exit_code = kExitOk;
  std::string output;
};

namespace detail {

using report::Cell;
using report::Table;

inline long long log10_exponent(double ln_value) {
  return static_cast<long long>(std::floor(ln_value / std::numbers::ln10));
}

inline Table count_table(const RunConfig& cfg) {
  Table t;
  t.columns = {"n", "regime", "direct_ln", "xi_form_ln", "form_difference_ln", "normalized_ln", "log10_exponent"};
  const int count = cfg.n_max - cfg.n_min + 1;
  std::vector<std::vector<Cell>> rows(static_cast<std::size_t>(count));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int k = next++; k < count; k = next++) {
      const ReductionParams p(cfg.n_min + k, cfg.eta, cfg.delta);
      const double integrals = product_integrals_log(p.n, p.eta, p.delta);
      const double direct = direct_prefactor_log(p.n, p.eta) + integrals;
      const double xi_form = xi_prefactor_log(p.n, p.eta) + integrals;
      rows[static_cast<std::size_t>(k)] = {static_cast<long long>(p.n), std::string(to_string(p.regime())),
                                           direct, xi_form, std::fabs(direct - xi_form),
                                           xi_form - p.n * std::numbers::ln2, log10_exponent(xi_form)};
    }
  };
  const int threads = std::min(cfg.jobs, count);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  for (auto& row : rows) t.add_row(std::move(row));
  return t;
}

inline std::vector<Cell> bounds_row(int n, const BoundsReport& r) {
  return {static_cast<long long>(n), r.name, r.lower.ln_abs(), r.exact->ln_abs(), r.upper.ln_abs(),
          r.lower_ok, r.upper_ok, r.sandwich_ok, std::string(to_string(r.regime)),
          std::string(to_string(r.cause))};
}

inline Table bounds_table(const RunConfig& cfg) {
  Table t;
  t.columns = {"n", "bound", "lower_ln", "exact_ln", "upper_ln", "lower_ok", "upper_ok", "sandwich_ok",
               "regime", "failure_cause"};
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    const ReductionParams p(n, cfg.eta, cfg.delta);
    t.add_row(bounds_row(n, xi_prefactor_bounds_log(n, cfg.eta)));
    t.add_row(bounds_row(n, int_product_bounds_log(p)));
    t.add_row(bounds_row(n, int_product_bounds_simplified_log(p)));
    t.add_row(bounds_row(n, combined_bounds_log(p)));
    if (p.regime() == Regime::Restricted) t.add_row(bounds_row(n, restricted_bounds_log(p)));
  }
  return t;
}

inline Table approx_table(const RunConfig& cfg) {
  Table t;
  t.columns = {"n", "rough_ln", "tight_ln", "c", "exact_ln", "ratio", "tight_fit_c"};
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    const ReductionParams p(n, cfg.eta, cfg.delta);
    const double rough = rough_approx_log(p);
    const double exact = exact_log_count_xi(p);
    t.add_row({static_cast<long long>(n), rough, tight_approx_log(p, cfg.c), cfg.c, exact, rough / exact,
               tight_fit_c(p)});
  }
  return t;
}

inline Table verify_table(const RunConfig& cfg, bool& all_passed) {
  VerifyConfig vc;
  vc.n_min = cfg.n_min;
  vc.n_max = cfg.n_max;
  vc.eta = cfg.eta;
  vc.delta = cfg.delta;
  vc.tol = cfg.tol;
  const VerifyReport r = run_verification(vc);
  all_passed = r.all_passed();
  Table t;
  t.columns = {"item", "passed", "checked", "failures", "max_error", "detail"};
  for (const auto& item : r.items)
    t.add_row({item.name, item.passed, static_cast<long long>(item.checked),
               static_cast<long long>(item.failures), item.max_error, item.detail});
  return t;
}

inline Table audit_table() {
  Table t;
  t.columns = {"name", "printed", "recomputed", "deviation", "flagged", "definition"};
  for (const auto& e : constant_audit().entries)
    t.add_row({e.name, e.printed_value, e.recomputed_value, e.deviation, e.flagged, e.definition});
  return t;
}

inline nlohmann::ordered_json params_json(const RunConfig& cfg) {
  nlohmann::ordered_json j;
  j["n_min"] = cfg.n_min;
  j["n_max"] = cfg.n_max;
  j["eta"] = cfg.eta;
  j["delta"] = cfg.delta;
  j["c"] = cfg.c;
  j["tol"] = cfg.tol;
  j["jobs"] = cfg.jobs;
  j["allow_relaxed_domain"] = cfg.allow_relaxed_domain;
  return j;
}

inline std::vector<std::string> run_warnings(const RunConfig& cfg) {
  std::vector<std::string> out;
  if (cfg.command == Command::Audit) return out;
  if (!ReductionParams(cfg.n_min, cfg.eta, cfg.delta).in_definition_domain())
    out.emplace_back("parameters outside the LLL definition domain 1/2 < eta < delta < 1");
  if (cfg.n_max < kBoundMinDimension)
    out.emplace_back("n < 22: analytic bounds do not apply");
  else if (cfg.n_min < kBoundMinDimension)
    out.emplace_back("n < 22 for part of the range: analytic bounds do not apply there");
  return out;
}

inline std::string serialize(const RunConfig& cfg, const Table& t, const std::vector<std::string>& warnings) {
  switch (cfg.format) {
    case Format::Csv: return report::to_csv(t);
    case Format::Plain: {
      std::string s = report::to_plain(t);
      for (const auto& w : warnings) s += "warning: " + w + "\n";
      return s;
    }
    case Format::Json: break;
  }
  nlohmann::ordered_json j;
  j["command"] = to_string(cfg.command);
  j["params"] = params_json(cfg);
  j["results"] = report::rows_json(t);
  j["warnings"] = warnings;
  return j.dump(2) + "\n";
}

}  // namespace detail

// Throws DomainError/RegimeError on invalid input; exit codes 0 or 2 otherwise.
inline RunResult run(const RunConfig& cfg) {
  cfg.validate();
  report::Table table;
  bool verified = true;
  switch (cfg.command) {
    case Command::Compute:
    case Command::Sweep: table = detail::count_table(cfg); break;
    case Command::Bounds: table = detail::bounds_table(cfg); break;
    case Command::Approx: table = detail::approx_table(cfg); break;
    case Command::Verify: table = detail::verify_table(cfg, verified); break;
    case Command::Audit: table = detail::audit_table(); break;
  }
  RunResult result;
  result.output = detail::serialize(cfg, table, detail::run_warnings(cfg));
  result.exit_code = verified ? kExitOk : kExitVerifyFailed;
  return result;
}

// Parses argv, runs, and writes the report to `out` (or --out). Diagnostics go
// to `err` as a single line.
inline int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Average number of (delta, eta)-LLL bases: exact values, analytic bounds, approximations"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::optional<int> n_single;
  std::optional<int> n_min;
  std::optional<int> n_max;
  std::string format = "json";
  std::string out_path;

  const std::vector<std::pair<Command, std::string>> commands = {
      {Command::Compute, "exact ln-count in both forms"},
      {Command::Bounds, "analytic bound reports (n >= 22)"},
      {Command::Approx, "rough and tight approximations (restricted regime)"},
      {Command::Verify, "run the verification suite"},
      {Command::Sweep, "exact ln-count over an n range"},
      {Command::Audit, "recompute the printed bound constants"}};

  std::vector<std::pair<Command, CLI::App*>> subs;
  for (const auto& [cmd, help] : commands) {
    CLI::App* sub = app.add_subcommand(to_string(cmd), help);
    subs.emplace_back(cmd, sub);
    if (cmd == Command::Audit) {
      sub->add_option("--format", format, "json, csv or plain")->check(CLI::IsMember({"json", "csv", "plain"}));
      sub->add_option("--out", out_path, "write the report to this file");
      continue;
    }
    sub->add_option("--n", n_single, "single dimension");
    sub->add_option("--n-min", n_min, "first dimension of a range");
    sub->add_option("--n-max", n_max, "last dimension of a range");
    sub->add_option("--eta", cfg.eta, "size-reduction parameter");
    sub->add_option("--delta", cfg.delta, "Lovasz parameter");
    sub->add_option("--c", cfg.c, "tight approximation constant in [0.5, 4]");
    sub->add_option("--tol", cfg.tol, "ln-domain tolerance for verification");
    sub->add_option("--format", format, "json, csv or plain")->check(CLI::IsMember({"json", "csv", "plain"}));
    sub->add_option("--out", out_path, "write the report to this file");
    sub->add_option("--jobs", cfg.jobs, "worker threads for sweeps");
    sub->add_flag("--allow-relaxed-domain", cfg.allow_relaxed_domain,
                  "accept 0 < eta < delta outside 1/2 < eta < delta < 1");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  try {
    for (const auto& [cmd, sub] : subs)
      if (sub->parsed()) cfg.command = cmd;
    cfg.format = format == "csv" ? Format::Csv : format == "plain" ? Format::Plain : Format::Json;
    if (!out_path.empty()) cfg.out = out_path;

    if (n_single && (n_min || n_max)) throw DomainError("--n cannot be combined with --n-min/--n-max");
    if (n_single) {
      cfg.n_min = cfg.n_max = *n_single;
    } else if (cfg.command == Command::Verify) {
      cfg.n_min = n_min.value_or(2);
      cfg.n_max = n_max.value_or(60);
    } else if (cfg.command != Command::Audit) {
      if (!n_max) throw DomainError("missing --n or --n-max");
      cfg.n_max = *n_max;
      cfg.n_min = n_min.value_or(cfg.command == Command::Sweep ? 2 : *n_max);
    }

    const RunResult r = run(cfg);
    if (cfg.out) {
      std::ofstream file(*cfg.out, std::ios::binary);
      if (!file) throw DomainError("cannot open output file " + *cfg.out);
      file << r.output;
    } else {
      out << r.output;
    }
    return r.exit_code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}

}  // namespace lllcount::cli
