#include "commtuple/subgroups.hpp"

#include <map>
#include <utility>

namespace commtuple {

BigInt g_prime_power(int ell, std::int64_t p, int m) {
  if (ell < 1 || m < 1 || p < 2) {
    throw std::invalid_argument("g_prime_power: need ell >= 1, m >= 1, p prime");
  }
  BigInt num = 1;
  BigInt den = 1;
  for (int i = 0; i < m; ++i) {
    num *= pow(static_cast<long>(p), static_cast<unsigned long>(ell + i)) - 1;
    den *= pow(static_cast<long>(p), static_cast<unsigned long>(i + 1)) - 1;
  }
  return require_integral(make_rat(num, den), "g_prime_power");
}

BigInt g(int ell, std::int64_t n) {
  if (ell < 1 || n < 1) throw std::invalid_argument("g: need ell >= 1, n >= 1");
  BigInt out = 1;
  if (ell == 1) return out;
  for (const auto& [p, e] : factorize(n)) out *= g_prime_power(ell, p, e);
  return out;
}

namespace {

BigInt g_recursive(int ell, std::int64_t n,
                   std::map<std::pair<int, std::int64_t>, BigInt>& memo) {
  if (ell == 1) return 1;
  const auto key = std::make_pair(ell, n);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  BigInt total = 0;
  for (std::int64_t d : divisors(n)) total += BigInt(d) * g_recursive(ell - 1, d, memo);
  memo.emplace(key, total);
  return total;
}

}  // namespace

BigInt g_via_recursion(int ell, std::int64_t n) {
  if (ell < 2 || n < 1) {
    throw std::invalid_argument("g_via_recursion: need ell >= 2, n >= 1");
  }
  std::map<std::pair<int, std::int64_t>, BigInt> memo;
  return g_recursive(ell, n, memo);
}

}  // namespace commtuple
