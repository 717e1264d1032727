#include <doctest.h>

#include <random>

#include "commtuple/arith.hpp"
#include "oracles.hpp"

using namespace commtuple;

TEST_SUITE("arith") {
  TEST_CASE("factorize") {
    CHECK(factorize(12) == Factorization{{2, 2}, {3, 1}});
    CHECK(factorize(1).empty());
    REQUIRE(oracle::is_prime_naive(9973));
    CHECK(factorize(9973) == Factorization{{9973, 1}});
    CHECK(factorize(1'000'000) == Factorization{{2, 6}, {5, 6}});
  }

  TEST_CASE("factorize names the cap when exceeded") {
    try {
      factorize(1'000'001);
      FAIL("expected refusal");
    } catch (const GuardRefused& e) {
      CHECK(std::string(e.what()).find("1000000") != std::string::npos);
    }
    CHECK_THROWS_AS(factorize(50, 49), GuardRefused);
    CHECK_THROWS_AS(factorize(0), std::invalid_argument);
  }

  TEST_CASE("factorization reconstructs n with prime bases") {
    for (std::int64_t n = 1; n <= 3000; ++n) {
      std::int64_t product = 1;
      std::int64_t last = 1;
      for (const auto& [p, e] : factorize(n)) {
        CHECK(p > last);
        CHECK(oracle::is_prime_naive(p));
        for (int i = 0; i < e; ++i) product *= p;
        last = p;
      }
      CHECK(product == n);
    }
  }

  TEST_CASE("sigma") {
    CHECK(sigma(1) == 1);
    CHECK(sigma(6) == 12);
    CHECK(sigma(4) == 7);
    for (std::int64_t n = 1; n <= 1000; ++n) {
      CHECK(sigma(n) == oracle::sigma_naive(n));
      BigInt from_divisors = 0;
      for (auto d : divisors(n)) from_divisors += d;
      CHECK(sigma(n) == from_divisors);
    }
  }

  TEST_CASE("partition") {
    CHECK(partition(0) == 1);
    CHECK(partition(10) == 42);
    CHECK(partition(7) == 15);
    const auto p = oracle::partitions_pentagonal(200);
    for (int n = 0; n <= 200; ++n) CHECK(partition(n) == p[static_cast<std::size_t>(n)]);
    CHECK(partition(200).get_str() == "3972999029388");
  }

  TEST_CASE("rationals are canonical and round-trip") {
    const BigRat q = make_rat(6, -4);
    CHECK(q.get_num() == -3);
    CHECK(q.get_den() == 2);
    CHECK(to_string(q) == "-3/2");
    CHECK(to_string(make_rat(10, 5)) == "2");
    CHECK_THROWS(make_rat(1, 0));

    std::mt19937_64 rng(20261015);
    std::uniform_int_distribution<long> num(-100000, 100000);
    std::uniform_int_distribution<long> den(1, 100000);
    for (int i = 0; i < 2000; ++i) {
      const BigRat x = make_rat(num(rng), den(rng));
      const BigRat y = make_rat(num(rng), den(rng));
      CHECK((x + y) - y == x);
      CHECK(parse_rat(to_string(x)) == x);
      CHECK(gcd(BigInt(x.get_num()), BigInt(x.get_den())) == 1);
      CHECK(x.get_den() >= 1);
    }
    CHECK_THROWS_AS(parse_rat("3/x"), std::invalid_argument);
  }

  TEST_CASE("round half up") {
    CHECK(round_half_up(make_rat(5, 2)) == 3);
    CHECK(round_half_up(make_rat(-5, 2)) == -3);
    CHECK(round_half_up(make_rat(7, 3)) == 2);
    CHECK(round_half_up(BigRat(0)) == 0);
  }

  TEST_CASE("scientific rendering") {
    CHECK(render_scientific(BigRat(1)) == "1.000000000·10^0");
    CHECK(render_scientific(make_rat(9, 8)) == "1.125000000·10^0");
    CHECK(render_scientific(BigRat(BigInt("12345678905"))) == "1.234567891·10^10");
    CHECK(render_scientific(BigRat(BigInt("12345678904"))) == "1.234567890·10^10");
    CHECK(render_scientific(BigRat(BigInt("99999999995"))) == "1.000000000·10^11");
    CHECK(render_scientific(make_rat(1, 1000)) == "1.000000000·10^-3");
    CHECK(render_scientific(make_rat(-1, 3)) == "-3.333333333·10^-1");
    CHECK(render_scientific(BigRat(0)) == "0");
    CHECK(render_scientific(make_rat(9, 8), 10, Notation::kAscii) == "1.125000000e0");
    CHECK(render_scientific(BigRat(42), 3) == "4.20·10^1");
  }

  TEST_CASE("fixed rendering") {
    CHECK(render_fixed(make_rat(1, 3)) == "0.333333333");
    CHECK(render_fixed(make_rat(2, 3)) == "0.666666667");
    CHECK(render_fixed(BigRat(0)) == "0.000000000");
    CHECK(render_fixed(make_rat(1, 2'000'000'000)) == "0.000000001");
    CHECK(render_fixed(make_rat(1, 2'000'000'001)) == "0.000000000");
    CHECK(render_fixed(make_rat(-3, 2), 2) == "-1.50");
    CHECK(render_fixed(BigRat(7), 0) == "7");
  }
}
