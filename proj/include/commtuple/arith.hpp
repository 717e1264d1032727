#pragma once

// Exact arithmetic shared by every other module: big integers and canonical
// rationals (GMP-backed), trial-division factorization, divisor sums, and
// decimal rendering of exact values.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace commtuple {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Raised when an input exceeds a configured enumeration or size guard.
class GuardRefused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an identity that must hold exactly (integrality of a
/// recursion, of a closed form) fails. Always an implementation bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline constexpr std::int64_t kDefaultFactorCap = 1'000'000;

struct PrimePower {
  std::int64_t prime;
  int exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

using Factorization = std::vector<PrimePower>;

/// Canonical prime factorization by trial division. factorize(1) is empty.
Factorization factorize(std::int64_t n, std::int64_t cap = kDefaultFactorCap);

/// Every positive divisor of n, ascending.
std::vector<std::int64_t> divisors(std::int64_t n);

BigInt sigma(std::int64_t n);

/// p(n). Computed as N_2(n) through the homomorphism-count recursion.
BigInt partition(int n);

BigInt factorial(int n);
BigInt pow(const BigInt& base, unsigned long exponent);
BigInt pow(long base, unsigned long exponent);
BigRat pow(const BigRat& base, unsigned long exponent);

/// num/den reduced to lowest terms with a positive denominator.
BigRat make_rat(const BigInt& num, const BigInt& den);

/// True when the rational has denominator 1.
inline bool is_integral(const BigRat& q) { return q.get_den() == 1; }

/// Returns the numerator of an integral rational; throws ConsistencyError
/// naming `what` otherwise.
BigInt require_integral(const BigRat& q, const char* what);

inline int sign(const BigInt& x) { return sgn(x); }
inline int sign(const BigRat& x) { return sgn(x); }

std::string to_string(const BigInt& x);
/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const BigRat& q);
/// Parses "p" or "p/q" and canonicalizes.
BigRat parse_rat(const std::string& text);

/// Nearest integer to x, ties rounded away from zero.
BigInt round_half_up(const BigRat& x);

struct ScientificParts {
  bool negative = false;
  std::string mantissa;  // "d.ddddddddd", or "0" when the value is zero
  long exponent = 0;
};

/// Splits x into a `digits`-significant-digit mantissa and a base-10
/// exponent, rounding half up on the magnitude.
ScientificParts scientific(const BigRat& x, int digits = 10);

enum class Notation { kUnicode, kAscii };

/// "d.ddddddddd·10^k" (or "d.ddddddddde<k>" in ASCII notation).
std::string render_scientific(const BigRat& x, int digits = 10,
                              Notation notation = Notation::kUnicode);

/// Fixed-point decimal with `places` digits after the point, half-up.
std::string render_fixed(const BigRat& x, int places = 9);

}  // namespace commtuple
