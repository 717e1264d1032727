#include <doctest.h>

#include <numeric>
#include <random>

#include "commtuple/subgroups.hpp"
#include "oracles.hpp"

using namespace commtuple;

TEST_SUITE("subgroups") {
  TEST_CASE("prime-power formula") {
    CHECK(g_prime_power(2, 2, 1) == 3);
    CHECK(g_prime_power(3, 2, 2) == 35);
    CHECK(g_prime_power(1, 5, 3) == 1);
    CHECK(g_prime_power(2, 2, 1) == sigma(2));
    CHECK_THROWS_AS(g_prime_power(0, 2, 1), std::invalid_argument);
  }

  TEST_CASE("multiplicative evaluation") {
    for (std::int64_t n : {1, 2, 17, 360, 9973}) CHECK(g(1, n) == 1);
    CHECK(g(2, 6) == 12);
    CHECK(g(3, 4) == 35);
    CHECK(g(5, 1) == 1);
    for (std::int64_t n = 1; n <= 300; ++n) CHECK(g(2, n) == sigma(n));
  }

  TEST_CASE("divisor-sum recursion") {
    CHECK(g_via_recursion(2, 4) == 7);
    CHECK(g_via_recursion(3, 4) == 35);
    CHECK(g_via_recursion(4, 2) == 15);
    CHECK_THROWS_AS(g_via_recursion(1, 4), std::invalid_argument);
  }

  TEST_CASE("both routes agree for ell <= 6, n <= 500") {
    for (int ell = 2; ell <= 6; ++ell) {
      for (std::int64_t n = 1; n <= 500; ++n) {
        REQUIRE(g(ell, n) == g_via_recursion(ell, n));
      }
    }
  }

  TEST_CASE("Hermite normal form count agrees") {
    for (int ell = 1; ell <= 4; ++ell) {
      for (std::int64_t n = 1; n <= 40; ++n) CHECK(g(ell, n) == oracle::subgroups_hnf(ell, n));
    }
  }

  TEST_CASE("growth bounds") {
    for (int ell = 2; ell <= 6; ++ell) {
      for (std::int64_t n = 1; n <= 500; ++n) {
        const BigInt value = g(ell, n);
        const BigInt lower = pow(BigInt(n), static_cast<unsigned long>(ell - 1));
        const BigInt upper = pow(BigInt(n), static_cast<unsigned long>(ell));
        CHECK(lower <= value);
        CHECK(value <= upper);
        CHECK(upper <= sigma(n) * lower);
      }
    }
  }

  TEST_CASE("multiplicativity over coprime pairs") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::int64_t> pick(1, 1000);
    int checked = 0;
    while (checked < 300) {
      const auto m = pick(rng);
      const auto n = pick(rng);
      if (std::gcd(m, n) != 1) continue;
      for (int ell = 2; ell <= 5; ++ell) CHECK(g(ell, m * n) == g(ell, m) * g(ell, n));
      ++checked;
    }
  }
}
