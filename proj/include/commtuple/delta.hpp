#pragma once

// Sign analysis of Delta_{a,b}^ell = N_ell(a) N_ell(b) - N_ell(a+b): exception
// scans, sign profiles over ell, effective stabilization bounds, and the
// residue-class prediction of the eventual sign.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "commtuple/arith.hpp"
#include "commtuple/homcount.hpp"

namespace commtuple {

enum class DeltaSign { kNegative = -1, kZero = 0, kPositive = 1 };

DeltaSign sign_of(const BigInt& x);
char symbol(DeltaSign s);  // '-', '0', '+'
std::string name(DeltaSign s);  // "negative", "zero", "positive"
DeltaSign parse_sign(const std::string& text);

struct DeltaQuery {
  int a;
  int b;
  int ell;
};

BigInt delta(int a, int b, int ell);
inline BigInt delta(const DeltaQuery& q) { return delta(q.a, q.b, q.ell); }
/// Delta evaluated from a table with n_max >= a + b.
BigInt delta(const CountTable& table, int a, int b);

using Pair = std::pair<int, int>;  // (smaller, larger)

struct ExceptionReport {
  int ell = 0;
  int a_max = 0;
  std::vector<Pair> zero_pairs;
  std::vector<Pair> negative_pairs;

  friend bool operator==(const ExceptionReport&, const ExceptionReport&) = default;
};

/// Classifies every 2 <= a <= b <= a_max for one ell.
ExceptionReport scan_exceptions(int ell, int a_max);
/// One report per ell in [ell_lo, ell_hi], in ell order.
std::vector<ExceptionReport> scan_exceptions(int ell_lo, int ell_hi, int a_max, int workers);

/// Smallest L such that Delta > 0 for every L <= a <= b <= a_max. An
/// observation over a finite window, not a certified value.
int empirical_positivity_threshold(const ExceptionReport& report);

/// Which effective-bound argument covers a pair, keyed by residues mod 3
/// (a is the first argument after orientation).
enum class BoundCase {
  kBothZero,      // a = 0, b = 0 (mod 3)
  kZeroOne,       // a = 0, b = 1, b > 4
  kOneOne,        // a = 1, b = 1
  kZeroTwo,       // a = 0, b = 2, b > 2
  kOneTwo,        // a = 1, b = 2
  kTwoTwo,        // a = 2, b = 2, a, b > 2
  kZeroWithTwo,   // b = 2 exactly, a = 0 (mod 3), a > 9
  kTwoWithTwo,    // b = 2 exactly, a = 2 (mod 3), a > 5
  kZeroWithFour,  // b = 4 exactly, a = 0 (mod 3), a > 9
  kExplicitPair,  // small pairs settled individually with a literal threshold
};

inline constexpr BoundCase kAllBoundCases[] = {
    BoundCase::kBothZero,    BoundCase::kZeroOne,     BoundCase::kOneOne,
    BoundCase::kZeroTwo,     BoundCase::kOneTwo,      BoundCase::kTwoTwo,
    BoundCase::kZeroWithTwo, BoundCase::kTwoWithTwo,  BoundCase::kZeroWithFour,
    BoundCase::kExplicitPair};

std::string tag(BoundCase c);
BoundCase parse_bound_case(const std::string& text);

struct TheoremBound {
  int ell_star;          // sign is `predicted` for every ell >= ell_star
  BoundCase which;
  DeltaSign predicted;
  double bound;          // raw value of the bound expression

  friend bool operator==(const TheoremBound&, const TheoremBound&) = default;
};

/// std::nullopt when no effective bound applies, e.g. (2, 2).
std::optional<TheoremBound> theorem_bound(int a, int b);

struct SignRun {
  DeltaSign sign;
  int length;
  friend bool operator==(const SignRun&, const SignRun&) = default;
};

enum class Certificate { kTheoremBound, kEmpiricalOnly };

inline constexpr int kEmpiricalCap = 200;

struct SignProfile {
  int a = 0;
  int b = 0;
  std::vector<SignRun> runs;  // signs for ell = 2, 3, ..., ell_checked
  int stable_from = 2;
  int ell_checked = 1;
  Certificate certificate = Certificate::kEmpiricalOnly;
  std::optional<TheoremBound> bound;

  DeltaSign final_sign() const { return runs.back().sign; }
  DeltaSign sign_at(int ell) const;
  /// The final run is preceded by anything other than a single run of the
  /// opposite nonzero sign.
  bool irregular() const;
  /// Compact form "+18", "-19*", "+2".
  std::string label() const;
  /// Run-length text, e.g. "-:16,+:23".
  std::string runs_text() const;

  friend bool operator==(const SignProfile&, const SignProfile&) = default;
};

/// Signs from ell = 2 through the certified bound when one applies,
/// otherwise through max(kEmpiricalCap, override).
SignProfile sign_profile(int a, int b, std::optional<int> ell_cap_override = std::nullopt,
                         TableBank* bank = nullptr);

/// Profiles of every 2 <= a <= b <= a_max in lexicographic order.
std::vector<SignProfile> sign_profiles(int a_max, int workers,
                                       std::optional<int> ell_cap_override = std::nullopt);

/// Threshold past which Delta_{a,b} < 0 for a = b = 1 (mod 3); it grows
/// without bound in a + b.
int witness_L(int a, int b);

/// Eventual sign of Delta_{a,b}^ell for large ell from residues mod 3 alone.
DeltaSign almost_all_classification(int a, int b);

}  // namespace commtuple
