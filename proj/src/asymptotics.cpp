#include "commtuple/asymptotics.hpp"

#include "commtuple/homcount.hpp"
#include "commtuple/parallel.hpp"

namespace commtuple {

namespace {

BigInt pow3(int k) { return pow(3L, static_cast<unsigned long>(k)); }

// 1 / (2^k k!)
BigRat inv_double_factorial_weight(int k) {
  return make_rat(1, pow(2L, static_cast<unsigned long>(k)) * factorial(k));
}

void require_n(int n, int lo, const char* what) {
  if (n < lo) {
    throw std::domain_error(std::string(what) + ": n must be >= " + std::to_string(lo) +
                            ", got " + std::to_string(n));
  }
}

}  // namespace

ResidueClass ResidueClass::of(int n) {
  const int r = n % 3;
  const bool sub = (r == 0 && n > 3) || (r == 1 && n > 7) || (r == 2 && n > 5);
  const bool explicit_m3 = (n >= 3 && n <= 11) || n == 13;
  return {r, sub, explicit_m3};
}

BigInt m1(int n) {
  require_n(n, 2, "m1");
  switch (n % 3) {
    case 0:
      return pow3(n / 3);
    case 1:
      return 4 * pow3((n - 4) / 3);
    default:
      return 2 * pow3((n - 2) / 3);
  }
}

BigInt m3(int n) {
  require_n(n, 3, "m3");
  static constexpr long kSmall[] = {1, 2, 4, 6, 9, 15, 20, 30, 45};  // n = 3..11
  if (n <= 11) return kSmall[n - 3];
  if (n == 13) return 90;
  switch (n % 3) {
    case 0:
      return 64 * pow3((n - 12) / 3);
    case 1:
      return 256 * pow3((n - 16) / 3);
    default:
      return 128 * pow3((n - 14) / 3);
  }
}

AsymptoticTerm leading_term(int n) {
  require_n(n, 2, "leading_term");
  switch (n % 3) {
    case 0:
      return {inv_double_factorial_weight(n / 3), pow3(n / 3), 0};
    case 1: {
      const int k = (n - 4) / 3;
      return {make_rat(7, 6) * inv_double_factorial_weight(k), 4 * pow3(k), 0};
    }
    default: {
      const int k = (n - 2) / 3;
      return {inv_double_factorial_weight(k), 2 * pow3(k), 0};
    }
  }
}

AsymptoticTerm subleading_term(int n) {
  const ResidueClass rc = ResidueClass::of(n);
  if (!rc.subleading_defined) {
    throw std::domain_error("subleading term: n = " + std::to_string(n) +
                            " is outside its branch guard (n>3, n>7, n>5 by n mod 3)");
  }
  switch (rc.residue) {
    case 0: {
      const int k = (n - 6) / 3;
      return {make_rat(5, 6) * inv_double_factorial_weight(k), 8 * pow3(k), 0};
    }
    case 1: {
      const int k = (n - 10) / 3;
      return {make_rat(41, 120) * inv_double_factorial_weight(k), 32 * pow3(k), 0};
    }
    default: {
      const int k = (n - 8) / 3;
      return {make_rat(43, 72) * inv_double_factorial_weight(k), 16 * pow3(k), 0};
    }
  }
}

AsymptoticTerm lower_bound_term(int n) {
  require_n(n, 2, "lower_bound_term");
  switch (n % 3) {
    case 0:
      return {make_rat(1, factorial(n / 3)), pow3(n / 3), 1};
    case 1: {
      const int k = (n - 4) / 3;
      return {make_rat(2, 3 * factorial(k)), 4 * pow3(k), 1};
    }
    default: {
      const int k = (n - 2) / 3;
      return {make_rat(1, factorial(k)), 2 * pow3(k), 1};
    }
  }
}

BigRat b_ell(int ell, int n) { return leading_term(n).at(ell); }
BigRat d_ell(int ell, int n) { return subleading_term(n).at(ell); }
BigRat a_ell(int ell, int n) { return lower_bound_term(n).at(ell); }

BigInt upper_bound(int ell, int n) {
  return partition(n) * pow(m1(n), static_cast<unsigned long>(ell - 1));
}

BigInt envelope(int ell, int n) {
  return partition(n) * pow(m3(n), static_cast<unsigned long>(ell - 1));
}

std::vector<RatioRow> ratio_table(int n, const std::vector<int>& ells, int workers) {
  require_n(n, 2, "ratio_table");
  std::vector<RatioRow> rows(ells.size());
  parallel_for(ells.size(), workers, [&](std::size_t i) {
    const int ell = ells[i];
    RatioRow& row = rows[i];
    row.ell = ell;
    row.n_value = n_ell(ell, n);
    row.b_value = b_ell(ell, n);
    row.ratio = row.b_value / BigRat(row.n_value);
  });
  return rows;
}

}  // namespace commtuple
