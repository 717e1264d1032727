#pragma once

// N_ell(n) = |Hom(Z^ell, S_n)| / n! through the subgroup-count recursion
//
//   N(n) = (1/n) sum_{k=1}^{n} g_ell(k) N(n-k),   N(0) = 1,
//
// together with three independent oracles (Euler product, composition sum,
// brute-force enumeration of commuting tuples) and the small-n closed forms.

#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "commtuple/arith.hpp"
#include "commtuple/term.hpp"

namespace commtuple {

/// N_ell(0..n_max) and g_ell(1..n_max) for one ell. Extending never touches
/// existing entries.
class CountTable {
 public:
  explicit CountTable(int ell, int n_max = 0);

  int ell() const { return ell_; }
  int n_max() const { return static_cast<int>(values_.size()) - 1; }

  /// Fills entries up to n_max (no-op when already present).
  void extend(int n_max);

  const BigInt& operator[](int n) const { return values_.at(static_cast<std::size_t>(n)); }
  /// g_ell(k) for 1 <= k <= n_max.
  const BigInt& g_at(int k) const { return g_values_.at(static_cast<std::size_t>(k)); }

  std::span<const BigInt> values() const { return values_; }

 private:
  int ell_;
  std::vector<BigInt> values_;
  std::vector<BigInt> g_values_;  // index 0 unused
};

/// Thread-safe memo of CountTables keyed by ell. Handed-out tables are
/// immutable snapshots; a request for a larger n_max replaces the snapshot.
class TableBank {
 public:
  std::shared_ptr<const CountTable> get(int ell, int n_max);

  /// Builds tables for every ell in [ell_lo, ell_hi] with `workers` threads.
  void prefetch(int ell_lo, int ell_hi, int n_max, int workers);

 private:
  std::mutex mu_;
  std::map<int, std::shared_ptr<const CountTable>> tables_;
};

BigInt n_ell(int ell, int n);

/// Coefficients 0..n_max of prod_{k>=1} (1 - t^k)^(-g_{ell-1}(k)).
std::vector<BigInt> n_ell_euler_oracle(int ell, int n_max);

inline constexpr int kCompositionGuard = 25;

/// Sum over ordered compositions m_1+...+m_k = n of
/// (1/k!) prod g_ell(m_i)/m_i, accumulated exactly.
BigInt n_ell_composition_oracle(int ell, int n);

struct CommutingTupleCensus {
  int ell;
  int n;
  BigInt raw_count;  // |Hom(Z^ell, S_n)|
  BigInt scaled;     // raw_count / n!
};

inline constexpr int kBruteForceMaxN = 5;
inline constexpr int kBruteForceMaxEll = 3;

/// Direct enumeration of pairwise commuting ell-tuples in S_n, extending a
/// partial tuple only by permutations in the common centralizer.
CommutingTupleCensus brute_force_census(int ell, int n);

/// n values with a closed form in ell.
inline constexpr int kClosedFormSizes[] = {2, 3, 4, 5, 7};

/// N_ell(n) = sum_i c_i b_i^(ell-1) for n in {2,3,4,5,7}.
std::vector<AsymptoticTerm> closed_form_terms(int n);
BigInt closed_form(int n, int ell);

enum class Remainder { kR4, kR5, kR7 };

/// N_ell(n) minus its two leading closed-form monomials (n = 4, 5, 7).
BigRat remainder(Remainder which, int ell);

}  // namespace commtuple
