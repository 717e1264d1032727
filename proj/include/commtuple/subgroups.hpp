#pragma once

// g_ell(n): the number of subgroups of index n in Z^ell.

#include <cstdint>

#include "commtuple/arith.hpp"

namespace commtuple {

struct SubgroupCountQuery {
  int ell;
  std::int64_t n;
};

/// g_ell(p^m) = prod_{i<m} (p^(ell+i) - 1) / prod_{i<m} (p^(i+1) - 1).
BigInt g_prime_power(int ell, std::int64_t p, int m);

/// Multiplicative evaluation over the factorization of n.
BigInt g(int ell, std::int64_t n);
inline BigInt g(const SubgroupCountQuery& q) { return g(q.ell, q.n); }

/// Divisor-sum route g_ell(n) = sum_{d|n} d g_{ell-1}(d), bottoming out at
/// g_1 = 1. Independent of the prime-power formula.
BigInt g_via_recursion(int ell, std::int64_t n);

}  // namespace commtuple
