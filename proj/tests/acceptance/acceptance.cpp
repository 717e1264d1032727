// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any criterion fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "commtuple/asymptotics.hpp"
#include "commtuple/delta.hpp"
#include "commtuple/homcount.hpp"
#include "commtuple/tables.hpp"

using namespace commtuple;

namespace {

// Exact comparisons throughout; only wall-clock limits carry a tolerance.
constexpr double kLimitTable1 = 1.0;
constexpr double kLimitTheorem = 5.0;
constexpr double kLimitTable2 = 120.0;
constexpr double kLimitTable3 = 30.0;
constexpr double kLimitTable4 = 300.0;
constexpr double kLimitOracles = 60.0;
constexpr double kLimitClosedForms = 60.0;
constexpr double kLimitBounds = 60.0;
constexpr double kLimitCertified = 600.0;
constexpr double kLimitWitness = 600.0;

struct Outcome {
  bool ok = true;
  std::string detail;
};

int workers() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

std::string describe(const tables::VerifyResult& r) {
  std::ostringstream s;
  s << r.cells << " cells, " << r.diffs.size() << " diffs";
  for (const auto& d : r.diffs) s << "; " << d.cell << " expected " << d.expected << " got " << d.actual;
  return s.str();
}

Outcome from_verify(const tables::VerifyResult& r) { return {r.passed(), describe(r)}; }

std::string pairs_text(const std::vector<Pair>& ps) {
  std::string out = "{";
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) out += ",";
    out += "(" + std::to_string(ps[i].first) + "," + std::to_string(ps[i].second) + ")";
  }
  return out + "}";
}

Outcome theorem_reproduction() {
  const auto report = scan_exceptions(2, 100);
  const std::vector<Pair> zero{{2, 6}, {2, 7}, {3, 4}};
  const std::vector<Pair> negative{{2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 3}, {3, 5}};
  const bool ok = report.zero_pairs == zero && report.negative_pairs == negative;
  return {ok, "zero " + pairs_text(report.zero_pairs) + ", negative " +
                  pairs_text(report.negative_pairs)};
}

Outcome oracle_equivalence() {
  Outcome o;
  int compared = 0;
  for (int ell = 1; ell <= 5; ++ell) {
    const CountTable table(ell, 20);
    const auto euler = ell >= 2 ? n_ell_euler_oracle(ell, 20) : std::vector<BigInt>(21, BigInt(1));
    for (int n = 0; n <= 20; ++n) {
      const bool same = table[n] == euler[static_cast<std::size_t>(n)] &&
                        (n == 0 || table[n] == n_ell_composition_oracle(ell, n));
      if (!same) {
        o.ok = false;
        o.detail += "series mismatch at ell " + std::to_string(ell) + " n " + std::to_string(n) + "; ";
      }
      ++compared;
    }
  }
  for (int ell = 1; ell <= kBruteForceMaxEll; ++ell) {
    for (int n = 1; n <= kBruteForceMaxN; ++n) {
      if (brute_force_census(ell, n).scaled != n_ell(ell, n)) {
        o.ok = false;
        o.detail += "census mismatch at ell " + std::to_string(ell) + " n " + std::to_string(n) + "; ";
      }
      ++compared;
    }
  }
  o.detail += std::to_string(compared) + " values compared";
  return o;
}

Outcome closed_forms() {
  Outcome o;
  for (int ell = 1; ell <= 12; ++ell) {
    for (int n : kClosedFormSizes) {
      if (closed_form(n, ell) != n_ell(ell, n)) {
        o.ok = false;
        o.detail += "closed form n " + std::to_string(n) + " ell " + std::to_string(ell) + "; ";
      }
    }
  }
  for (int ell = 2; ell <= 40; ++ell) {
    const BigRat expected = make_rat(7, 6) * pow(BigRat(4), static_cast<unsigned long>(ell - 1)) -
                            pow(BigRat(2), static_cast<unsigned long>(ell - 1)) + make_rat(1, 12);
    if (remainder(Remainder::kR5, ell) != expected) {
      o.ok = false;
      o.detail += "R5 at ell " + std::to_string(ell) + "; ";
    }
  }
  o.detail += "ell 1..12 x n {2,3,4,5,7}, R5 for ell 2..40";
  return o;
}

Outcome sandwich_and_envelope() {
  Outcome o;
  int checked = 0;
  for (int ell = 2; ell <= 10; ++ell) {
    const CountTable table(ell, 60);
    for (int n = 2; n <= 60; ++n) {
      if (!(a_ell(ell, n) <= BigRat(table[n]) && table[n] <= upper_bound(ell, n))) {
        o.ok = false;
        o.detail += "sandwich ell " + std::to_string(ell) + " n " + std::to_string(n) + "; ";
      }
      ++checked;
      if (n >= 14 && n <= 40) {
        const BigRat gap = abs(BigRat(table[n]) - b_ell(ell, n) - d_ell(ell, n));
        if (gap > BigRat(envelope(ell, n))) {
          o.ok = false;
          o.detail += "envelope ell " + std::to_string(ell) + " n " + std::to_string(n) + "; ";
        }
        ++checked;
      }
    }
  }
  o.detail += std::to_string(checked) + " inequalities";
  return o;
}

Outcome certified_bounds() {
  const std::vector<Pair> sample{{3, 3}, {6, 9}, {3, 7}, {4, 4}, {4, 7}, {5, 8},
                                 {4, 5}, {12, 2}, {12, 4}, {8, 2}, {3, 5}, {3, 2}};
  Outcome o;
  std::vector<std::string> tags;
  for (const auto& [a, b] : sample) {
    const auto bound = theorem_bound(a, b);
    const std::string where = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    if (!bound) {
      o.ok = false;
      o.detail += where + " has no bound; ";
      continue;
    }
    const std::string t = tag(bound->which);
    if (std::find(tags.begin(), tags.end(), t) == tags.end()) tags.push_back(t);
    for (int ell : {bound->ell_star, bound->ell_star + 25}) {
      if (sign_of(delta(a, b, ell)) != bound->predicted) {
        o.ok = false;
        o.detail += where + " wrong sign at ell " + std::to_string(ell) + "; ";
      }
    }
  }
  for (auto c : kAllBoundCases) {
    if (std::find(tags.begin(), tags.end(), tag(c)) == tags.end()) {
      o.ok = false;
      o.detail += "case " + tag(c) + " not sampled; ";
    }
  }
  o.detail += std::to_string(sample.size()) + " pairs, " + std::to_string(tags.size()) + " cases";
  return o;
}

Outcome witness_demo() {
  const std::vector<Pair> sample{{4, 4}, {4, 7}, {7, 7}, {7, 10}};
  Outcome o;
  int previous = 0;
  for (const auto& [a, b] : sample) {
    const int w = witness_L(a, b);
    const std::string where = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    if (w <= previous) {
      o.ok = false;
      o.detail += where + " witness not increasing; ";
    }
    previous = w;
    if (sign_of(delta(a, b, w)) != DeltaSign::kNegative) {
      o.ok = false;
      o.detail += where + " delta not negative at witness; ";
    }
    const auto profile = sign_profile(a, b);
    const bool has_positive = std::any_of(profile.runs.begin(), profile.runs.end(), [](const SignRun& r) {
      return r.sign == DeltaSign::kPositive;
    });
    const bool shape_ok = profile.final_sign() == DeltaSign::kNegative &&
                          (!has_positive || profile.runs.front().sign == DeltaSign::kPositive);
    if (!shape_ok) {
      o.ok = false;
      o.detail += where + " profile " + profile.runs_text() + "; ";
    }
    o.detail += where + " L=" + std::to_string(w) + " runs " + profile.runs_text() + "; ";
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const int w = workers();
  const Criterion criteria[] = {
      {1, "table 1 exact values", kLimitTable1, [] { return from_verify(tables::verify_table1()); }},
      {2, "exceptions for ell = 2, a_max = 100", kLimitTheorem, theorem_reproduction},
      {3, "table 2 at a_max = 100", kLimitTable2,
       [w] { return from_verify(tables::verify_table2(100, w)); }},
      {4, "table 3 rendered strings", kLimitTable3, [w] { return from_verify(tables::verify_table3(w)); }},
      {5, "table 4 sign profiles", kLimitTable4, [w] { return from_verify(tables::verify_table4(w)); }},
      {6, "oracle equivalence", kLimitOracles, oracle_equivalence},
      {7, "closed forms and R5 identity", kLimitClosedForms, closed_forms},
      {8, "sandwich and envelope", kLimitBounds, sandwich_and_envelope},
      {9, "certified-bound spot checks", kLimitCertified, certified_bounds},
      {10, "witness_L mechanism", kLimitWitness, witness_demo},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds <= c.limit_seconds;
    const bool ok = o.ok && in_time;
    if (!ok) ++failed;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs / %.0fs", seconds, c.limit_seconds);
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << " ["
              << timing << (in_time ? "" : ", over time") << "] " << o.detail << std::endl;
  }
  std::cout << (10 - failed) << "/10 criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
