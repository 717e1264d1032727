#pragma once

// Growth of N_ell(n) in ell for fixed n: leading term B, subleading term D,
// the growth bases M1 and M3, and the lower bound A. Everything is exact;
// decimal text is produced only when rendering.

#include <string>
#include <vector>

#include "commtuple/arith.hpp"
#include "commtuple/term.hpp"

namespace commtuple {

/// n mod 3 plus which small-n guards of the piecewise definitions hold.
struct ResidueClass {
  int residue;
  bool subleading_defined;  // n>3 / n>7 / n>5 for residue 0 / 1 / 2
  bool m3_explicit;         // n in {3..11, 13}: M3 is a tabulated constant

  static ResidueClass of(int n);
};

BigInt m1(int n);
BigInt m3(int n);

AsymptoticTerm leading_term(int n);
AsymptoticTerm subleading_term(int n);
AsymptoticTerm lower_bound_term(int n);

BigRat b_ell(int ell, int n);
/// Throws std::domain_error outside the branch guard.
BigRat d_ell(int ell, int n);
BigRat a_ell(int ell, int n);

/// p(n) M1(n)^(ell-1).
BigInt upper_bound(int ell, int n);
/// p(n) M3(n)^(ell-1); bounds |N - B - D| for n > 13.
BigInt envelope(int ell, int n);

struct RatioRow {
  int ell;
  BigInt n_value;
  BigRat b_value;
  BigRat ratio;  // B / N

  std::string n_text(Notation notation = Notation::kUnicode) const {
    return render_scientific(BigRat(n_value), 10, notation);
  }
  std::string b_text(Notation notation = Notation::kUnicode) const {
    return render_scientific(b_value, 10, notation);
  }
  std::string ratio_text() const { return render_fixed(ratio, 9); }
};

std::vector<RatioRow> ratio_table(int n, const std::vector<int>& ells, int workers = 1);

}  // namespace commtuple
