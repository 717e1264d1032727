#pragma once

// Test-only reference computations. Each one follows a route that shares no
// code with the library path it is used to check.

#include <cstdint>
#include <functional>
#include <vector>

#include "commtuple/arith.hpp"

namespace commtuple::oracle {

/// p(0..n_max) by Euler's pentagonal number recursion.
inline std::vector<BigInt> partitions_pentagonal(int n_max) {
  std::vector<BigInt> p(static_cast<std::size_t>(n_max) + 1, BigInt(0));
  p[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    BigInt total = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      const BigInt& t1 = p[static_cast<std::size_t>(n - g1)];
      if (k % 2 == 1) total += t1; else total -= t1;
      if (g2 <= n) {
        const BigInt& t2 = p[static_cast<std::size_t>(n - g2)];
        if (k % 2 == 1) total += t2; else total -= t2;
      }
    }
    p[static_cast<std::size_t>(n)] = total;
  }
  return p;
}

/// Sum of divisors by scanning 1..n.
inline std::int64_t sigma_naive(std::int64_t n) {
  std::int64_t s = 0;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d == 0) s += d;
  }
  return s;
}

inline bool is_prime_naive(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d < n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Index-n subgroups of Z^ell counted as upper-triangular Hermite normal
/// forms: diagonals d_1 ... d_ell with product n, column j contributing
/// d_j^(j-1) choices of reduced entries above the diagonal.
inline BigInt subgroups_hnf(int ell, std::int64_t n) {
  BigInt total = 0;
  std::function<void(int, std::int64_t, BigInt)> go = [&](int column, std::int64_t rest,
                                                          BigInt weight) {
    if (column == ell) {
      if (rest == 1) total += weight;
      return;
    }
    for (std::int64_t d = 1; d <= rest; ++d) {
      if (rest % d != 0) continue;
      go(column + 1, rest / d, weight * pow(BigInt(d), static_cast<unsigned long>(column)));
    }
  };
  go(0, n, BigInt(1));
  return total;
}

}  // namespace commtuple::oracle
