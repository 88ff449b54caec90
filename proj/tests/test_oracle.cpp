#include <doctest.h>

#include <stdexcept>

#include "fibshift/builders.hpp"
#include "fibshift/oracle.hpp"
#include "fibshift/zeckendorf.hpp"

using namespace fibshift;

TEST_SUITE_BEGIN("oracle");

TEST_CASE("brute minimal machines for the base cases") {
  FibWordOracle words;
  CHECK(brute_min_dfao(SequenceOracle(10, words), ReadOrder::lsd).dfao.size() == 13);
  CHECK(brute_min_dfao(SequenceOracle(0, words), ReadOrder::msd).dfao.size() == 2);
  CHECK(brute_min_dfao(SequenceOracle(0, words), ReadOrder::lsd).dfao.size() == 5);
}

TEST_CASE("brute machines are isomorphic to the built-and-minimized ones") {
  FibWordOracle words;
  words.ensure(15000000);
  for (long long c = 0; c <= 500; ++c) {
    SequenceOracle seq(c, words);
    BruteResult lsd = brute_min_dfao(seq, ReadOrder::lsd);
    REQUIRE(lsd.stabilized);
    Dfao built_lsd_min = minimize(build_lsd(c).dfao);
    // Equal size + equivalence of minimal machines is isomorphism.
    REQUIRE(lsd.dfao.size() == built_lsd_min.size());
    REQUIRE(equivalent(lsd.dfao, built_lsd_min).equivalent);

    BruteResult msd = brute_min_dfao(seq, ReadOrder::msd);
    REQUIRE(msd.stabilized);
    Dfao built_msd_min = minimize(build_msd(c).dfao);
    REQUIRE(msd.dfao.size() == built_msd_min.size());
    REQUIRE(equivalent(msd.dfao, built_msd_min).equivalent);
  }
}

TEST_CASE("brute reports when the horizon cap cuts it off") {
  FibWordOracle words;
  BruteResult r = brute_min_dfao(SequenceOracle(2000, words), ReadOrder::lsd, 6);
  CHECK(!r.stabilized);
}

TEST_CASE("brute stabilizes quickly relative to the representation length") {
  FibWordOracle words;
  for (long long c : {3LL, 21LL, 55LL, 89LL}) {
    BruteResult r = brute_min_dfao(SequenceOracle(c, words), ReadOrder::lsd);
    CHECK(r.stabilized);
    CHECK(r.words_horizon <= static_cast<int>(encode(c).digits.size()) + 8);
  }
}

TEST_CASE("lemma checks pass at reduced desk bounds") {
  CHECK(check_lemma("A1").pass);
  CHECK(check_lemma("L1", 20000).pass);
  CHECK(check_lemma("L2", 120).pass);
  CHECK(check_lemma("partition", 14).pass);
  CHECK(check_lemma("eq1", 3000).pass);
  CHECK(check_lemma("refinement", 10).pass);
  CHECK(check_lemma("endpoint", 120).pass);
  CHECK(check_lemma("B1", 3000).pass);
  CHECK(check_lemma("B2", 60).pass);
  CHECK(check_lemma("B2R", 60).pass);
  CHECK(check_lemma("B3", 60).pass);
  CHECK(check_lemma("L43", 80).pass);
}

TEST_CASE("report lines are machine parseable") {
  LemmaReport rep = check_lemma("B1", 500);
  CHECK(rep.line() == "B1 |n|<=500 pass");
  CHECK_THROWS_AS(check_lemma("nosuch"), std::invalid_argument);
}

TEST_CASE("every registered lemma has a distinct name") {
  const auto& names = lemma_names();
  CHECK(names.size() == 12);
  for (size_t i = 0; i < names.size(); ++i)
    for (size_t j = i + 1; j < names.size(); ++j) CHECK(names[i] != names[j]);
}

TEST_SUITE_END();
