#include "commtuple/homcount.hpp"

#include <array>
#include <numeric>
#include <string>

#include "commtuple/parallel.hpp"
#include "commtuple/subgroups.hpp"

namespace commtuple {

CountTable::CountTable(int ell, int n_max) : ell_(ell), values_{BigInt(1)}, g_values_{BigInt(0)} {
  if (ell < 1) throw std::invalid_argument("CountTable: ell must be >= 1");
  extend(n_max);
}

void CountTable::extend(int n_max) {
  if (n_max < 0) throw std::invalid_argument("CountTable: n_max must be >= 0");
  const int have = this->n_max();
  if (n_max <= have) return;
  values_.reserve(static_cast<std::size_t>(n_max) + 1);
  g_values_.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int k = have + 1; k <= n_max; ++k) g_values_.push_back(g(ell_, k));

  BigInt acc;
  BigInt quotient;
  for (int n = have + 1; n <= n_max; ++n) {
    acc = 0;
    for (int k = 1; k <= n; ++k) {
      mpz_addmul(acc.get_mpz_t(), g_values_[static_cast<std::size_t>(k)].get_mpz_t(),
                 values_[static_cast<std::size_t>(n - k)].get_mpz_t());
    }
    if (mpz_divisible_ui_p(acc.get_mpz_t(), static_cast<unsigned long>(n)) == 0) {
      throw ConsistencyError("recursion sum for N_" + std::to_string(ell_) + "(" +
                             std::to_string(n) + ") is not divisible by n");
    }
    mpz_divexact_ui(quotient.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(n));
    values_.push_back(quotient);
  }
}

std::shared_ptr<const CountTable> TableBank::get(int ell, int n_max) {
  std::shared_ptr<const CountTable> have;
  {
    std::lock_guard lock(mu_);
    if (auto it = tables_.find(ell); it != tables_.end()) have = it->second;
  }
  if (have && have->n_max() >= n_max) return have;

  auto built = have ? std::make_shared<CountTable>(*have) : std::make_shared<CountTable>(ell);
  built->extend(n_max);

  std::lock_guard lock(mu_);
  auto& slot = tables_[ell];
  if (!slot || slot->n_max() < built->n_max()) slot = built;
  return slot;
}

void TableBank::prefetch(int ell_lo, int ell_hi, int n_max, int workers) {
  if (ell_hi < ell_lo) return;
  parallel_for(static_cast<std::size_t>(ell_hi - ell_lo + 1), workers,
               [&](std::size_t i) { get(ell_lo + static_cast<int>(i), n_max); });
}

BigInt n_ell(int ell, int n) {
  if (ell < 1 || n < 0) throw std::invalid_argument("n_ell: need ell >= 1, n >= 0");
  return CountTable(ell, n)[n];
}

std::vector<BigInt> n_ell_euler_oracle(int ell, int n_max) {
  if (ell < 2 || n_max < 0) {
    throw std::invalid_argument("n_ell_euler_oracle: need ell >= 2, n_max >= 0");
  }
  const auto len = static_cast<std::size_t>(n_max) + 1;
  std::vector<BigInt> series(len, BigInt(0));
  series[0] = 1;
  std::vector<BigInt> factor(len);
  std::vector<BigInt> product(len);
  for (int k = 1; k <= n_max; ++k) {
    // (1 - t^k)^(-e) = sum_j C(e+j-1, j) t^(kj)
    const BigInt e = g(ell - 1, k);
    std::fill(factor.begin(), factor.end(), BigInt(0));
    BigInt binom = 1;
    for (int j = 0; j * k <= n_max; ++j) {
      if (j > 0) binom = binom * (e + j - 1) / j;
      factor[static_cast<std::size_t>(j * k)] = binom;
    }
    for (std::size_t i = 0; i < len; ++i) {
      product[i] = 0;
      for (std::size_t d = 0; d <= i; d += static_cast<std::size_t>(k)) {
        product[i] += series[i - d] * factor[d];
      }
    }
    series.swap(product);
  }
  return series;
}

namespace {

struct CompositionWalk {
  std::vector<BigRat> weight;          // g_ell(m)/m, index m
  std::vector<BigRat> inv_factorial;   // 1/k!, index k
  BigRat total{0};

  void walk(int remaining, int parts, const BigRat& prefix) {
    if (remaining == 0) {
      total += prefix * inv_factorial[static_cast<std::size_t>(parts)];
      return;
    }
    for (int m = 1; m <= remaining; ++m) {
      walk(remaining - m, parts + 1, prefix * weight[static_cast<std::size_t>(m)]);
    }
  }
};

}  // namespace

BigInt n_ell_composition_oracle(int ell, int n) {
  if (ell < 1 || n < 1) {
    throw std::invalid_argument("n_ell_composition_oracle: need ell >= 1, n >= 1");
  }
  if (n > kCompositionGuard) {
    throw GuardRefused("composition oracle: n = " + std::to_string(n) +
                       " exceeds the enumeration guard " +
                       std::to_string(kCompositionGuard) + " (2^(n-1) compositions)");
  }
  CompositionWalk w;
  w.weight.resize(static_cast<std::size_t>(n) + 1);
  w.inv_factorial.resize(static_cast<std::size_t>(n) + 1);
  for (int m = 1; m <= n; ++m) w.weight[static_cast<std::size_t>(m)] = make_rat(g(ell, m), m);
  for (int k = 0; k <= n; ++k) w.inv_factorial[static_cast<std::size_t>(k)] = make_rat(1, factorial(k));
  w.walk(n, 0, BigRat(1));
  return require_integral(w.total, "composition oracle");
}

namespace {

using Perm = std::array<std::uint8_t, kBruteForceMaxN>;

std::vector<Perm> all_permutations(int n) {
  Perm p{};
  std::iota(p.begin(), p.begin() + n, std::uint8_t{0});
  std::vector<Perm> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.begin() + n));
  return out;
}

bool commute(const Perm& x, const Perm& y, int n) {
  for (int i = 0; i < n; ++i) {
    if (x[y[static_cast<std::size_t>(i)]] != y[x[static_cast<std::size_t>(i)]]) return false;
  }
  return true;
}

// Number of ways to extend a tuple by `slots` more permutations, each drawn
// from `candidates` (the common centralizer of everything chosen so far).
std::uint64_t count_extensions(const std::vector<Perm>& candidates, int slots, int n) {
  if (slots == 0) return 1;
  if (slots == 1) return candidates.size();
  std::uint64_t total = 0;
  std::vector<Perm> next;
  for (const Perm& chosen : candidates) {
    next.clear();
    for (const Perm& q : candidates) {
      if (commute(chosen, q, n)) next.push_back(q);
    }
    total += count_extensions(next, slots - 1, n);
  }
  return total;
}

}  // namespace

CommutingTupleCensus brute_force_census(int ell, int n) {
  if (ell < 1 || n < 1) throw std::invalid_argument("brute_force_census: need ell >= 1, n >= 1");
  if (n > kBruteForceMaxN || ell > kBruteForceMaxEll) {
    throw GuardRefused("brute force: (ell, n) = (" + std::to_string(ell) + ", " +
                       std::to_string(n) + ") exceeds the enumeration guard ell <= " +
                       std::to_string(kBruteForceMaxEll) + ", n <= " +
                       std::to_string(kBruteForceMaxN) + " (|S_n|^ell tuples)");
  }
  const auto perms = all_permutations(n);
  CommutingTupleCensus census{ell, n, BigInt(0), BigInt(0)};
  census.raw_count = static_cast<unsigned long>(count_extensions(perms, ell, n));
  const BigInt nfact = factorial(n);
  if (!mpz_divisible_p(census.raw_count.get_mpz_t(), nfact.get_mpz_t())) {
    throw ConsistencyError("brute force: raw count not divisible by n!");
  }
  census.scaled = census.raw_count / nfact;
  return census;
}

std::vector<AsymptoticTerm> closed_form_terms(int n) {
  auto t = [](long num, long den, long base) {
    return AsymptoticTerm{make_rat(num, den), BigInt(base), 0};
  };
  switch (n) {
    case 2:
      return {t(1, 1, 2)};
    case 3:
      return {t(1, 2, 3), t(1, 1, 2), t(-1, 2, 1)};
    case 4:
      return {t(7, 6, 4), t(1, 2, 3), t(-1, 2, 2), t(-1, 6, 1)};
    case 5:
      return {t(1, 2, 6), t(1, 4, 5), t(7, 6, 4), t(-1, 1, 2), t(1, 12, 1)};
    case 7:
      return {t(7, 12, 12), t(1, 4, 10), t(1, 8, 9),   t(5, 6, 8),  t(1, 6, 7),
              t(1, 4, 6),   t(-13, 12, 4), t(-1, 3, 3), t(1, 6, 2), t(1, 24, 1)};
    default:
      throw std::invalid_argument("closed_form: no closed form for n = " + std::to_string(n) +
                                  " (supported: 2, 3, 4, 5, 7)");
  }
}

BigInt closed_form(int n, int ell) {
  if (ell < 1) throw std::invalid_argument("closed_form: ell must be >= 1");
  BigRat total = 0;
  for (const auto& term : closed_form_terms(n)) total += term.at(ell);
  return require_integral(total, "closed form");
}

BigRat remainder(Remainder which, int ell) {
  if (ell < 2) throw std::invalid_argument("remainder: ell must be >= 2");
  auto leading = [ell](long num, long den, long base) {
    return AsymptoticTerm{make_rat(num, den), BigInt(base), 0}.at(ell);
  };
  switch (which) {
    case Remainder::kR4:
      return BigRat(n_ell(ell, 4)) - leading(7, 6, 4) - leading(1, 2, 3);
    case Remainder::kR5:
      return BigRat(n_ell(ell, 5)) - leading(1, 2, 6) - leading(1, 4, 5);
    case Remainder::kR7:
      return BigRat(n_ell(ell, 7)) - leading(7, 12, 12) - leading(1, 4, 10);
  }
  throw std::invalid_argument("remainder: unknown selector");
}

}  // namespace commtuple
