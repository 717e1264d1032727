#include "commtuple/arith.hpp"

#include <algorithm>

#include "commtuple/homcount.hpp"

namespace commtuple {

Factorization factorize(std::int64_t n, std::int64_t cap) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  if (n > cap) {
    throw GuardRefused("factorize: n = " + std::to_string(n) +
                       " exceeds the factorization cap " + std::to_string(cap));
  }
  Factorization out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base_count = out.size();
    std::int64_t pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base_count; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

BigInt sigma(std::int64_t n) {
  BigInt total = 1;
  for (const auto& [p, e] : factorize(n)) {
    // (p^(e+1) - 1) / (p - 1)
    BigInt term = (pow(static_cast<long>(p), e + 1) - 1) / (p - 1);
    total *= term;
  }
  return total;
}

BigInt partition(int n) {
  if (n < 0) throw std::invalid_argument("partition: n must be nonnegative");
  return n_ell(2, n);
}

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

BigInt pow(long base, unsigned long exponent) { return pow(BigInt(base), exponent); }

BigRat pow(const BigRat& base, unsigned long exponent) {
  return make_rat(pow(BigInt(base.get_num()), exponent),
                  pow(BigInt(base.get_den()), exponent));
}

BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("make_rat: zero denominator");
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

BigInt require_integral(const BigRat& q, const char* what) {
  if (!is_integral(q)) {
    throw ConsistencyError(std::string(what) + ": expected an integer, got " +
                           to_string(q));
  }
  return q.get_num();
}

std::string to_string(const BigInt& x) { return x.get_str(); }

std::string to_string(const BigRat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

BigRat parse_rat(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return BigRat(BigInt(text));
    return make_rat(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("parse_rat: not a rational: '" + text + "'");
  }
}

BigInt round_half_up(const BigRat& x) {
  const BigRat magnitude = abs(x);
  BigInt twice_num = 2 * BigInt(magnitude.get_num()) + magnitude.get_den();
  BigInt den2 = 2 * BigInt(magnitude.get_den());
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), twice_num.get_mpz_t(), den2.get_mpz_t());
  return sgn(x) < 0 ? BigInt(-r) : r;
}

namespace {

BigRat power_of_ten(long k) {
  if (k >= 0) return BigRat(pow(10L, static_cast<unsigned long>(k)));
  return make_rat(1, pow(10L, static_cast<unsigned long>(-k)));
}

}  // namespace

ScientificParts scientific(const BigRat& x, int digits) {
  if (digits < 1) throw std::invalid_argument("scientific: digits must be >= 1");
  ScientificParts out;
  if (sgn(x) == 0) {
    out.mantissa = "0";
    return out;
  }
  out.negative = sgn(x) < 0;
  const BigRat m = abs(x);

  long k = static_cast<long>(mpz_sizeinbase(m.get_num_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(m.get_den_mpz_t(), 10));
  while (m < power_of_ten(k)) --k;
  while (m >= power_of_ten(k + 1)) ++k;

  BigInt r = round_half_up(m * power_of_ten(digits - 1 - k));
  if (r == pow(10L, static_cast<unsigned long>(digits))) {
    r /= 10;
    ++k;
  }
  std::string s = r.get_str();
  out.mantissa = digits > 1 ? s.substr(0, 1) + "." + s.substr(1) : s;
  out.exponent = k;
  return out;
}

std::string render_scientific(const BigRat& x, int digits, Notation notation) {
  const ScientificParts parts = scientific(x, digits);
  if (parts.mantissa == "0") return "0";
  std::string out = parts.negative ? "-" : "";
  out += parts.mantissa;
  out += notation == Notation::kUnicode ? "·10^" : "e";
  out += std::to_string(parts.exponent);
  return out;
}

std::string render_fixed(const BigRat& x, int places) {
  if (places < 0) throw std::invalid_argument("render_fixed: negative places");
  BigInt r = round_half_up(abs(x) * power_of_ten(places));
  std::string s = r.get_str();
  if (static_cast<int>(s.size()) <= places) {
    s.insert(0, static_cast<std::size_t>(places) + 1 - s.size(), '0');
  }
  if (places > 0) s.insert(s.size() - static_cast<std::size_t>(places), ".");
  return (sgn(x) < 0 && r != 0 ? "-" : "") + s;
}

}  // namespace commtuple
