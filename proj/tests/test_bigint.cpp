#include <doctest.h>

#include <random>

#include "fibshift/bigint.hpp"

using fibshift::BigInt;

TEST_SUITE_BEGIN("bigint");

TEST_CASE("construction and int64 round trip") {
  CHECK(BigInt(0).is_zero());
  CHECK(BigInt(0).to_string() == "0");
  CHECK(BigInt(-1).to_int64() == -1);
  CHECK(BigInt(1234567890123456789LL).to_int64() == 1234567890123456789LL);
  CHECK(BigInt(-9223372036854775807LL - 1).to_int64() == -9223372036854775807LL - 1);
}

TEST_CASE("arithmetic agrees with int64 on random values") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> dist(-1000000000LL, 1000000000LL);
  for (int trial = 0; trial < 2000; ++trial) {
    long long a = dist(rng), b = dist(rng);
    CHECK((BigInt(a) + BigInt(b)).to_int64() == a + b);
    CHECK((BigInt(a) - BigInt(b)).to_int64() == a - b);
    CHECK((BigInt(a) * BigInt(b)).to_int64() == a * b);
    CHECK(((BigInt(a) <=> BigInt(b)) == std::strong_ordering::less) == (a < b));
  }
}

TEST_CASE("multi-limb multiplication") {
  BigInt x(1);
  for (int i = 0; i < 25; ++i) x *= BigInt(10);
  CHECK(x.to_string() == "10000000000000000000000000");
  CHECK(!x.fits_int64());
  BigInt y = x * x;
  CHECK(y.to_string() == "100000000000000000000000000000000000000000000000000");
  CHECK((y - y).is_zero());
  CHECK((x - x - x).to_string() == "-" + x.to_string());
}

TEST_CASE("floor_div2 rounds toward minus infinity") {
  CHECK(BigInt(7).floor_div2().to_int64() == 3);
  CHECK(BigInt(-7).floor_div2().to_int64() == -4);
  CHECK(BigInt(-8).floor_div2().to_int64() == -4);
  CHECK(BigInt(0).floor_div2().is_zero());
}

TEST_CASE("parity") {
  CHECK(BigInt(3).odd());
  CHECK(!BigInt(4).odd());
  CHECK(!BigInt(0).odd());
  CHECK(BigInt(-5).odd());
}

TEST_SUITE_END();
