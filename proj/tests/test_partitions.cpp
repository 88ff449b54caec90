#include <doctest.h>

#include <vector>

#include "fibshift/partitions.hpp"
#include "fibshift/zeckendorf.hpp"

using namespace fibshift;

TEST_SUITE_BEGIN("partitions");

TEST_CASE("lsd_interval basics") {
  // I_2(0) holds the points whose last digit is 0, so it must contain {0}.
  CircInterval i20 = lsd_interval(2, 0);
  CHECK(i20.contains(FracPoint{0}));
  CHECK(i20.contains(FracPoint{2}));
  CHECK(!i20.contains(FracPoint{1}));
  CircInterval i21 = lsd_interval(2, 1);
  CHECK(i21.contains(FracPoint{1}));
  CHECK(i21.left == FracPoint{-1});
  CHECK(i21.right == FracPoint{-2});

  // Parity switches the endpoint roles between consecutive d.
  CircInterval even = lsd_interval(4, 0);
  CHECK(even.left == FracPoint{-fib(5)});
  CHECK(even.right == FracPoint{-fib(4)});
  CircInterval odd = lsd_interval(3, 0);
  CHECK(odd.left == FracPoint{-fib(3)});
  CHECK(odd.right == FracPoint{-fib(4)});

  CHECK_THROWS_AS(lsd_interval(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(lsd_interval(1, 0), std::invalid_argument);
}

TEST_CASE("lsd_partition counts and endpoints") {
  CHECK(lsd_partition(2).size() == 2);
  CHECK(lsd_partition(5).size() == static_cast<size_t>(fib(6)));
  // Stage-d endpoints are exactly {-phi}, ..., {-F(d+1) phi}.
  for (int d = 2; d <= 8; ++d) {
    GoldenPartition p = lsd_partition(d);
    for (long long j = 1; j <= fib(d + 1); ++j) CHECK(p.has_endpoint(FracPoint{-j}));
    CHECK(!p.has_endpoint(FracPoint{-(fib(d + 1) + 1)}));
  }
  CHECK(lsd_partition(6).total_length() == QuadNum::one());
}

TEST_CASE("-c phi surfaces as an endpoint at its own window size") {
  // For F(k) < c <= F(k+1), the interval of the stage-k partition labeled
  // F(k+1)-c has -c as an endpoint (the side depends on the parity of k).
  for (long long c = 2; c <= 300; ++c) {
    int k = smallest_fib_index_geq(c) - 1;
    long long m = fib(k + 1) - c;
    REQUIRE(m < fib(k));
    CircInterval cell = lsd_interval(k, m);
    CHECK((k % 2 == 0 ? cell.left.n : cell.right.n) == -c);
  }
}

TEST_CASE("locate_lsd worked examples") {
  CHECK(locate_lsd(17, 4) == 4);
  CHECK(locate_lsd(0, 7) == 0);
  for (int d = 2; d <= 10; ++d) CHECK(locate_lsd(fib(d + 1), d) == 0);
}

TEST_CASE("msd_chain follows the worked example") {
  CHECK(msd_chain(-14) == std::vector<long long>{-14, -9, -6, -4, -3, -2, -1});
  CHECK(msd_chain(-2) == std::vector<long long>{-2, -1});
  CHECK(msd_chain(-3) == std::vector<long long>{-3, -2, -1});
  CHECK_THROWS_AS(msd_chain(-1), std::invalid_argument);
  CHECK_THROWS_AS(msd_chain(0), std::invalid_argument);
}

namespace {

std::vector<std::pair<long long, long long>> interval_pairs(const GoldenPartition& p) {
  std::vector<std::pair<long long, long long>> out;
  for (size_t i = 0; i < p.size(); ++i)
    out.push_back({p.interval(i).left.n, p.interval(i).right.n});
  return out;
}

}  // namespace

TEST_CASE("msd_partition of -14 lists its seven expected intervals") {
  GoldenPartition p = msd_partition(-14);
  // In circle order starting from the smallest fractional value.
  std::vector<std::pair<long long, long long>> expect = {
      {-3, -6}, {-6, -14}, {-14, -1}, {-1, -9}, {-9, -4}, {-4, -2}, {-2, -3}};
  CHECK(interval_pairs(p) == expect);
}

TEST_CASE("msd_partition of -2 is the two-interval base case") {
  GoldenPartition p = msd_partition(-2);
  std::vector<std::pair<long long, long long>> expect = {{-1, -2}, {-2, -1}};
  CHECK(interval_pairs(p) == expect);
}

TEST_CASE("chain length matches the endpoint count") {
  for (long long r = -2; r >= -300; --r) {
    GoldenPartition p = msd_partition(r);
    CHECK(p.size() == msd_chain(r).size());
    CHECK(p.total_length() == QuadNum::one());
  }
}

TEST_CASE("combine is idempotent and merges endpoint sets") {
  GoldenPartition a = msd_partition(-11);
  CHECK(combine(a, a) == a);
  GoldenPartition both = combine(msd_partition(-11), msd_partition(-12));
  CHECK(both.size() == 8);
  std::vector<std::pair<long long, long long>> expect = {
      {-8, -3}, {-3, -11}, {-11, -1}, {-1, -12},
      {-12, -7}, {-7, -2}, {-2, -5}, {-5, -8}};
  CHECK(interval_pairs(both) == expect);
}

TEST_CASE("successor_interval reproduces the c=10 transitions") {
  GoldenPartition P = combine(msd_partition(-11), msd_partition(-12));
  auto iv = [&](long long l, long long r) {
    return CircInterval{FracPoint{l}, FracPoint{r}, false, false};
  };
  auto succ = [&](long long l, long long r, int a) {
    CircInterval out = successor_interval(P, iv(l, r), a);
    return std::pair<long long, long long>{out.left.n, out.right.n};
  };
  using pll = std::pair<long long, long long>;
  CHECK(succ(-5, -8, 0) == pll{-5, -8});
  CHECK(succ(-5, -8, 1) == pll{-12, -7});
  CHECK(succ(-12, -7, 0) == pll{-11, -1});
  CHECK(succ(-11, -1, 0) == pll{-2, -5});
  CHECK(succ(-11, -1, 1) == pll{-1, -12});
  CHECK(succ(-1, -12, 0) == pll{-11, -1});
  CHECK(succ(-2, -5, 0) == pll{-8, -3});
  CHECK(succ(-2, -5, 1) == pll{-7, -2});
  CHECK(succ(-8, -3, 0) == pll{-5, -8});
  CHECK(succ(-8, -3, 1) == pll{-1, -12});
  CHECK(succ(-7, -2, 0) == pll{-3, -11});
  CHECK(succ(-3, -11, 0) == pll{-2, -5});
  CHECK(succ(-3, -11, 1) == pll{-1, -12});

  // Intervals inside the ones region have no 1-successor.
  CHECK_THROWS_AS(successor_interval(P, iv(-1, -12), 1), InvalidAppend);
  CHECK_THROWS_AS(successor_interval(P, iv(-12, -7), 1), InvalidAppend);
  CHECK_THROWS_AS(successor_interval(P, iv(-7, -2), 1), InvalidAppend);
}

TEST_CASE("debug dump shows one interval per line") {
  GoldenPartition p = msd_partition(-3);
  std::string dump = p.debug_dump();
  CHECK(dump.find("(-3phi, -1phi)") != std::string::npos);
  CHECK(dump.find("#") != std::string::npos);
  CHECK(std::count(dump.begin(), dump.end(), '\n') == 3);
}

TEST_SUITE_END();
