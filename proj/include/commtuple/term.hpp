#pragma once

#include "commtuple/arith.hpp"

namespace commtuple {

/// coefficient * base^(ell - 1 - exponent_offset). Offset 0 is the shape of
/// the leading and subleading growth terms; offset 1 is the ell-2 shape of
/// the lower bound.
struct AsymptoticTerm {
  BigRat coefficient;
  BigInt base;
  int exponent_offset = 0;

  BigRat at(int ell) const {
    const int e = ell - 1 - exponent_offset;
    if (e < 0) return coefficient / pow(BigRat(base), static_cast<unsigned long>(-e));
    return coefficient * BigRat(pow(base, static_cast<unsigned long>(e)));
  }

  friend bool operator==(const AsymptoticTerm&, const AsymptoticTerm&) = default;
};

}  // namespace commtuple
