#include <doctest.h>

#include "fibshift/dfao.hpp"
#include "fibshift/fibword.hpp"
#include "fibshift/zeckendorf.hpp"

using namespace fibshift;

namespace {

// The classic 5-state lsd-first machine for the unshifted word.
Dfao fig1_lsd() {
  Dfao m;
  m.order = ReadOrder::lsd;
  int qe = m.add_state(0);
  int a0 = m.add_state(1), a1 = m.add_state(1);
  int r0 = m.add_state(0), r1 = m.add_state(0);
  m.initial = qe;
  m.set_edge(qe, 0, r0);
  m.set_edge(qe, 1, a1);
  m.set_edge(a0, 0, a0);
  m.set_edge(a0, 1, a1);
  m.set_edge(a1, 0, a0);
  m.set_edge(r0, 0, r0);
  m.set_edge(r0, 1, r1);
  m.set_edge(r1, 0, r0);
  return m;
}

// ... and the 2-state msd-first one.
Dfao fig1_msd() {
  Dfao m;
  m.order = ReadOrder::msd;
  int s0 = m.add_state(0);
  int s1 = m.add_state(1);
  m.initial = s0;
  m.set_edge(s0, 0, s0);
  m.set_edge(s0, 1, s1);
  m.set_edge(s1, 0, s0);
  return m;
}

}  // namespace

TEST_SUITE_BEGIN("dfao");

TEST_CASE("eval runs words and flags invalid input") {
  Dfao lsd = fig1_lsd();
  CHECK(eval(lsd, "101") == 1);  // reverse(encode(4)) = 101, f(4) = 1
  CHECK(eval(lsd, "") == 0);     // tau of the initial state
  Dfao msd = fig1_msd();
  CHECK(eval(msd, "11") == std::nullopt);
  CHECK(eval(msd, "101") == 1);
}

TEST_CASE("eval_int on the base automata equals the word") {
  Dfao lsd = fig1_lsd();
  Dfao msd = fig1_msd();
  FibWordOracle w;
  for (long long n = 0; n <= 3000; ++n) {
    CHECK(eval_int(lsd, n) == w.f_morphic(n));
    CHECK(eval_int(msd, n) == w.f_morphic(n));
  }
}

TEST_CASE("padding with zeros never changes the value") {
  Dfao lsd = fig1_lsd();
  Dfao msd = fig1_msd();
  for (long long n = 0; n <= 500; ++n) {
    std::string word = encode(n).digits;
    std::string lsd_word(word.rbegin(), word.rend());
    int want_l = *eval(lsd, lsd_word);
    int want_m = *eval(msd, word);
    std::string pad;
    for (int k = 1; k <= 5; ++k) {
      pad.push_back('0');
      CHECK(eval(lsd, lsd_word + pad) == want_l);
      CHECK(eval(msd, pad + word) == want_m);
    }
  }
}

TEST_CASE("minimize is idempotent and keeps the word function") {
  Dfao m = fig1_lsd();
  Dfao min1 = minimize(m);
  Dfao min2 = minimize(min1);
  CHECK(min1.size() == 5);  // already minimal
  CHECK(min1.size() == min2.size());
  CHECK(equivalent(m, min1).equivalent);

  // Duplicate a state; minimization must fold it back.
  Dfao padded = fig1_lsd();
  int extra = padded.add_state(0);  // clone of R0
  padded.set_edge(extra, 0, extra);
  padded.set_edge(extra, 1, 4);
  padded.set_edge(0, 0, extra);
  CHECK(padded.size() == 6);
  Dfao folded = minimize(padded);
  CHECK(folded.size() == 5);
  CHECK(equivalent(padded, folded).equivalent);
}

TEST_CASE("minimize separates states that differ only in definedness") {
  // Two output-0 sinks, one with a 1-edge and one without: not mergeable.
  Dfao m;
  m.order = ReadOrder::lsd;
  int q0 = m.add_state(0);
  int q1 = m.add_state(0);
  m.initial = q0;
  m.set_edge(q0, 0, q0);
  m.set_edge(q0, 1, q1);
  m.set_edge(q1, 0, q0);
  CHECK(minimize(m).size() == 2);
}

TEST_CASE("equivalent finds witnesses") {
  CHECK(equivalent(fig1_lsd(), fig1_lsd()).equivalent);
  Dfao other = fig1_lsd();
  other.output[2] = 0;  // break A1
  EquivResult r = equivalent(fig1_lsd(), other);
  CHECK(!r.equivalent);
  CHECK(eval(fig1_lsd(), r.witness) != eval(other, r.witness));
  CHECK_THROWS_AS(equivalent(fig1_lsd(), fig1_msd()), std::invalid_argument);
}

TEST_CASE("walnut export round-trips") {
  for (const Dfao& m : {fig1_lsd(), fig1_msd()}) {
    std::string text = export_walnut(m);
    Dfao back = import_walnut(text);
    CHECK(back.order == m.order);
    CHECK(equivalent(m, back).equivalent);
    CHECK(export_walnut(back) == text);
  }
}

TEST_CASE("walnut text layout") {
  std::string text = export_walnut(fig1_msd());
  CHECK(text ==
        "msd_fib\n"
        "\n"
        "0 0\n"
        "0 -> 0\n"
        "1 -> 1\n"
        "\n"
        "1 1\n"
        "0 -> 0\n");
}

TEST_CASE("dot export is stable and well formed") {
  std::string a = export_dot(fig1_msd());
  std::string b = export_dot(fig1_msd());
  CHECK(a == b);
  CHECK(a ==
        "digraph dfao {\n"
        "  rankdir=LR;\n"
        "  node [shape=circle];\n"
        "  __start [shape=point, label=\"\"];\n"
        "  __start -> q0;\n"
        "  q0 [label=\"q0/0\"];\n"
        "  q1 [label=\"q1/1\"];\n"
        "  q0 -> q0 [label=\"0\"];\n"
        "  q0 -> q1 [label=\"1\"];\n"
        "  q1 -> q0 [label=\"0\"];\n"
        "}\n");
}

TEST_SUITE_END();
