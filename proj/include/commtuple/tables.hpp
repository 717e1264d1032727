#pragma once

// Reference tables embedded as text, and recomputation against them.

#include <string>
#include <string_view>
#include <vector>

namespace commtuple::tables {

/// "ell n value" lines: N_ell(n) for ell in {2,3,4}, n in 0..10.
extern const std::string_view kTable1;
/// "ell: a,b a,b ..." lines: strict exceptions (a <= b) for ell in 2..10.
extern const std::string_view kTable2;
/// "ell|N|B|ratio" lines for n = 100.
extern const std::string_view kTable3;
/// "a b label" lines for 2 <= a <= b <= 10.
extern const std::string_view kTable4;

struct CellDiff {
  std::string cell;
  std::string expected;
  std::string actual;
};

struct VerifyResult {
  std::string table;
  int cells = 0;
  std::vector<CellDiff> diffs;
  std::string note;

  bool passed() const { return diffs.empty(); }
};

VerifyResult verify_table1();
/// Compares window-reduced scans with the reference sets.
VerifyResult verify_table2(int a_max = 100, int workers = 1);
VerifyResult verify_table3(int workers = 1);
VerifyResult verify_table4(int workers = 1);

}  // namespace commtuple::tables
