#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "fibshift/golden.hpp"
#include "fibshift/zeckendorf.hpp"

using namespace fibshift;

TEST_SUITE_BEGIN("golden");

TEST_CASE("quad_cmp basics") {
  QuadNum one = QuadNum::one();
  QuadNum phi = QuadNum::phi();
  CHECK(quad_cmp(phi, one) == std::strong_ordering::greater);
  // 2 - phi vs phi - 1: 0.381... < 0.618...
  QuadNum two_minus_phi = QuadNum::from_int(2) - phi;
  QuadNum phi_minus_one = phi - one;
  CHECK(quad_cmp(two_minus_phi, phi_minus_one) == std::strong_ordering::less);
  CHECK(quad_cmp(phi, phi) == std::strong_ordering::equal);
}

TEST_CASE("quad arithmetic identities") {
  QuadNum phi = QuadNum::phi();
  // phi^2 = phi + 1 and phi * (phi - 1) = 1.
  CHECK(phi * phi == phi + QuadNum::one());
  CHECK(phi * QuadNum::inv_phi() == QuadNum::one());
  CHECK(QuadNum::power(QuadNum::inv_phi(), 5) * QuadNum::power(QuadNum::phi(), 5) ==
        QuadNum::one());
}

TEST_CASE("floor_n_phi matches hand-checked values and a decimal oracle") {
  CHECK(floor_n_phi(0) == 0);
  CHECK(floor_n_phi(1) == 1);
  CHECK(floor_n_phi(-5) == -9);
  // Long-double oracle is exact for small n.
  const long double phi = (1.0L + std::sqrt(5.0L)) / 2.0L;
  for (long long n = -3000; n <= 3000; ++n)
    CHECK(floor_n_phi(n) == static_cast<long long>(std::floor(phi * n)));
}

TEST_CASE("QuadNum::floor agrees with floor_n_phi") {
  for (long long n = -500; n <= 500; ++n) {
    QuadNum x(BigInt{n}, BigInt{n});  // n*phi
    CHECK(x.floor().to_int64() == floor_n_phi(n));
  }
}

TEST_CASE("frac_lt worked examples") {
  CHECK(frac_lt(FracPoint{-14}, FracPoint{-9}));  // 0.347... < 0.437...
  CHECK(frac_lt(FracPoint{-3}, FracPoint{-2}));   // 0.145... < 0.763...
  CHECK(!frac_lt(FracPoint{7}, FracPoint{7}));
}

TEST_CASE("frac_cmp agrees with the QuadNum route") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long long> dist(-100000, 100000);
  for (int trial = 0; trial < 5000; ++trial) {
    FracPoint a{dist(rng)}, b{dist(rng)};
    int fast = frac_cmp(a, b);
    auto slow = quad_cmp(a.value(), b.value());
    int slow_i = slow == std::strong_ordering::less ? -1
                 : slow == std::strong_ordering::greater ? 1 : 0;
    CHECK(fast == slow_i);
  }
}

TEST_CASE("frac_lt is a strict total order on distinct points") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long long> dist(-100000, 100000);
  for (int trial = 0; trial < 20000; ++trial) {
    FracPoint a{dist(rng)}, b{dist(rng)}, c{dist(rng)};
    if (a.n != b.n) CHECK(frac_lt(a, b) != frac_lt(b, a));  // antisymmetric + total
    if (frac_lt(a, b) && frac_lt(b, c)) CHECK(frac_lt(a, c));
  }
}

TEST_CASE("circular membership") {
  // f(1) = 1, so {phi} lies in the ones region (-phi, -2phi) mod 1.
  CircInterval ones_open{FracPoint{-1}, FracPoint{-2}, false, false};
  CHECK(ones_open.contains(FracPoint{1}));

  // The msd start interval [-5phi, -8phi) wraps past 1 and contains {0}.
  CircInterval start{FracPoint{-5}, FracPoint{-8}, true, false};
  CHECK(start.contains(FracPoint{0}));

  CircInterval half{FracPoint{-11}, FracPoint{-1}, true, false};
  CHECK(half.contains(FracPoint{-11}));
  CircInterval open_left{FracPoint{-11}, FracPoint{-1}, false, false};
  CHECK(!open_left.contains(FracPoint{-11}));
}

TEST_CASE("interval lengths add up around the circle") {
  CircInterval a{FracPoint{-1}, FracPoint{-2}, true, false};
  CircInterval b{FracPoint{-2}, FracPoint{-1}, true, false};
  CHECK(a.length() + b.length() == QuadNum::one());
}

TEST_CASE("corrected Fibonacci fractional-part identity") {
  // {F_i phi} = {(-1)^(i+1) phi^(-i)}; the sign printed in the source
  // derivation is the other way, which fails already at i = 2.
  for (int i = 2; i <= 40; ++i) {
    QuadNum lhs = (QuadNum::from_int(fib(i)) * QuadNum::phi()).frac();
    QuadNum piece = QuadNum::power(QuadNum::inv_phi(), static_cast<unsigned>(i));
    QuadNum rhs = (i % 2 == 0 ? -piece : piece).frac();
    CHECK(lhs == rhs);
    QuadNum wrong = (i % 2 == 0 ? piece : -piece).frac();
    CHECK(!(lhs == wrong));
  }
}

TEST_SUITE_END();
