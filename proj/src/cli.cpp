#include "commtuple/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <thread>

#include "commtuple/asymptotics.hpp"
#include "commtuple/delta.hpp"
#include "commtuple/homcount.hpp"
#include "commtuple/records.hpp"
#include "commtuple/subgroups.hpp"
#include "commtuple/tables.hpp"

namespace commtuple::cli {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string kind;
  std::string which;
  std::string mode;
  int ell = 0;
  int n = -1;
  int a = 0;
  int b = 0;
  std::string ell_range = "2..10";
  int a_max = 0;
  std::optional<int> ell_cap;
  std::string format = "markdown";
  int workers = 1;
  bool ascii = false;
};

std::pair<int, int> parse_range(const std::string& text) {
  try {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("bad range '" + text + "' (expected N or LO..HI)");
  }
}

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

Notation notation(const RunConfig& cfg) { return cfg.ascii ? Notation::kAscii : Notation::kUnicode; }

int cmd_compute(const RunConfig& cfg, std::ostream& out) {
  const std::string& k = cfg.kind;
  auto need_ell_n = [&](int min_ell, int min_n) {
    require(cfg.ell >= min_ell, k + " needs --ell >= " + std::to_string(min_ell));
    require(cfg.n >= min_n, k + " needs --n >= " + std::to_string(min_n));
  };
  std::string value;
  std::string decimal;
  if (k == "N") {
    need_ell_n(1, 0);
    value = to_string(n_ell(cfg.ell, cfg.n));
  } else if (k == "g") {
    need_ell_n(1, 1);
    value = to_string(g(cfg.ell, cfg.n));
  } else if (k == "delta") {
    require(cfg.a >= 2 && cfg.b >= 2 && cfg.ell >= 1, "delta needs --a, --b >= 2 and --ell >= 1");
    value = to_string(delta(cfg.a, cfg.b, cfg.ell));
  } else if (k == "B" || k == "D" || k == "A") {
    need_ell_n(2, 2);
    const BigRat q = k == "B" ? b_ell(cfg.ell, cfg.n)
                     : k == "D" ? d_ell(cfg.ell, cfg.n)
                                : a_ell(cfg.ell, cfg.n);
    value = to_string(q);
    decimal = render_scientific(q, 10, notation(cfg));
  } else if (k == "M1") {
    require(cfg.n >= 2, "M1 needs --n >= 2");
    value = to_string(m1(cfg.n));
  } else if (k == "M3") {
    require(cfg.n >= 3, "M3 needs --n >= 3");
    value = to_string(m3(cfg.n));
  } else {
    throw UsageError("unknown kind '" + k + "'");
  }

  if (parse_format(cfg.format) == OutputFormat::kJsonLines) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["record"] = "value";
    j["kind"] = k;
    if (k == "delta") {
      j["a"] = cfg.a;
      j["b"] = cfg.b;
      j["ell"] = cfg.ell;
    } else {
      if (k != "M1" && k != "M3") j["ell"] = cfg.ell;
      j["n"] = cfg.n;
    }
    j["value"] = value;
    if (!decimal.empty()) j["decimal"] = decimal;
    out << j.dump() << '\n';
  } else if (decimal.empty()) {
    out << value << '\n';
  } else {
    out << value << " (" << decimal << ")\n";
  }
  return kSuccess;
}

void print_verify(const tables::VerifyResult& r, std::ostream& out) {
  out << r.table << ": " << (r.passed() ? "PASS" : "FAIL") << ", " << r.cells << " cells";
  if (!r.note.empty()) out << " (" << r.note << ")";
  out << '\n';
  for (const auto& d : r.diffs) {
    out << "  " << d.cell << ": expected " << d.expected << ", got " << d.actual << '\n';
  }
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  std::vector<std::string> which;
  if (cfg.which == "all") {
    which = {"table1", "table2", "table3", "table4"};
  } else {
    which = {cfg.which};
  }
  bool ok = true;
  for (const auto& w : which) {
    tables::VerifyResult r;
    if (w == "table1") {
      r = tables::verify_table1();
    } else if (w == "table2") {
      const int a_max = cfg.a_max > 0 ? cfg.a_max : 100;
      require(a_max >= 2, "--a-max must be >= 2");
      r = tables::verify_table2(a_max, cfg.workers);
    } else if (w == "table3") {
      r = tables::verify_table3(cfg.workers);
    } else if (w == "table4") {
      r = tables::verify_table4(cfg.workers);
    } else {
      throw UsageError("unknown table '" + w + "'");
    }
    print_verify(r, out);
    ok = ok && r.passed();
  }
  return ok ? kSuccess : kMismatch;
}

int cmd_scan(const RunConfig& cfg, std::ostream& out) {
  const OutputFormat format = parse_format(cfg.format);
  if (cfg.mode == "exceptions" || cfg.mode == "positivity") {
    const auto [lo, hi] = parse_range(cfg.ell_range);
    const int a_max = cfg.a_max > 0 ? cfg.a_max : 100;
    require(lo >= 2 && hi >= lo, "--ell range must satisfy 2 <= LO <= HI");
    require(a_max >= 2, "--a-max must be >= 2");
    const auto reports = scan_exceptions(lo, hi, a_max, cfg.workers);
    out << (cfg.mode == "exceptions" ? render_exceptions(reports, format)
                                     : render_positivity_thresholds(reports, format));
    return kSuccess;
  }
  if (cfg.mode == "thresholds") {
    const int a_max = cfg.a_max > 0 ? cfg.a_max : 10;
    require(a_max >= 2, "--a-max must be >= 2");
    require(!cfg.ell_cap || *cfg.ell_cap >= 2, "--ell-cap must be >= 2");
    out << render_profiles(sign_profiles(a_max, cfg.workers, cfg.ell_cap), format);
    return kSuccess;
  }
  throw UsageError("unknown scan mode '" + cfg.mode + "'");
}

int cmd_brute_force(const RunConfig& cfg, std::ostream& out) {
  require(cfg.ell >= 1 && cfg.n >= 1, "brute-force needs --ell >= 1 and --n >= 1");
  const auto census = brute_force_census(cfg.ell, cfg.n);
  const BigInt recursion = n_ell(cfg.ell, cfg.n);
  const bool agree = recursion == census.scaled;
  if (parse_format(cfg.format) == OutputFormat::kJsonLines) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["record"] = "census";
    j["ell"] = cfg.ell;
    j["n"] = cfg.n;
    j["raw"] = to_string(census.raw_count);
    j["n_factorial"] = to_string(factorial(cfg.n));
    j["scaled"] = to_string(census.scaled);
    j["recursion"] = to_string(recursion);
    j["agree"] = agree;
    out << j.dump() << '\n';
  } else {
    out << "ell " << cfg.ell << ", n " << cfg.n << ": raw " << census.raw_count << ", n! "
        << factorial(cfg.n) << ", scaled " << census.scaled << ", recursion " << recursion
        << ", " << (agree ? "AGREE" : "DISAGREE") << '\n';
  }
  return agree ? kSuccess : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Commuting tuples in S_n: exact counts, sign analysis and table checks", "commtuple"};
  app.require_subcommand(1);
  RunConfig cfg;
  const int default_workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  cfg.workers = default_workers;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "markdown, csv or jsonl")
        ->check(CLI::IsMember({"markdown", "markdown-table", "csv", "jsonl", "json-lines"}));
    sub->add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
    sub->add_flag("--ascii", cfg.ascii, "use e-notation for scientific decimals");
  };

  auto* compute = app.add_subcommand("compute", "print one exact value");
  compute->add_option("kind", cfg.kind, "N, g, delta, B, D, A, M1 or M3")
      ->required()
      ->check(CLI::IsMember({"N", "g", "delta", "B", "D", "A", "M1", "M3"}));
  compute->add_option("--ell", cfg.ell);
  compute->add_option("--n", cfg.n);
  compute->add_option("--a", cfg.a);
  compute->add_option("--b", cfg.b);
  add_common(compute);

  auto* verify = app.add_subcommand("verify-tables", "recompute reference tables and diff");
  verify->add_option("which", cfg.which, "table1, table2, table3, table4 or all")
      ->required()
      ->check(CLI::IsMember({"table1", "table2", "table3", "table4", "all"}));
  verify->add_option("--a-max", cfg.a_max, "window for table2 (default 100)");
  add_common(verify);

  auto* scan = app.add_subcommand("scan", "range scans over pairs (a, b)");
  scan->add_option("mode", cfg.mode, "exceptions, thresholds or positivity")
      ->required()
      ->check(CLI::IsMember({"exceptions", "thresholds", "positivity"}));
  scan->add_option("--ell", cfg.ell_range, "ell or LO..HI (exceptions, positivity)");
  scan->add_option("--a-max", cfg.a_max, "pair window");
  scan->add_option("--ell-cap", cfg.ell_cap, "extend sign profiles at least to this ell");
  add_common(scan);

  auto* brute = app.add_subcommand("brute-force", "enumerate commuting tuples in S_n");
  brute->add_option("--ell", cfg.ell)->required();
  brute->add_option("--n", cfg.n)->required();
  add_common(brute);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (compute->parsed()) return cmd_compute(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (scan->parsed()) return cmd_scan(cfg, out);
    if (brute->parsed()) return cmd_brute_force(cfg, out);
  } catch (const GuardRefused& e) {
    err << "refused: " << e.what() << '\n';
    return kGuardRefusal;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace commtuple::cli
