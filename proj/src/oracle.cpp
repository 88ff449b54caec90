// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fibshift/oracle.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "fibshift/builders.hpp"
#include "fibshift/partitions.hpp"
#include "fibshift/zeckendorf.hpp"

namespace fibshift {

// ---------------------------------------------------------------------------
// brute_min_dfao
// ---------------------------------------------------------------------------

namespace {

struct SigInterner {
  std::unordered_map<uint64_t, int> ids;
  int intern(int out, int s0, int s1) {
    uint64_t key = (static_cast<uint64_t>(out) << 60) |
                   (static_cast<uint64_t>(static_cast<uint32_t>(s0 + 2)) << 30) |
                   static_cast<uint64_t>(static_cast<uint32_t>(s1 + 2));
    auto [it, fresh] = ids.emplace(key, static_cast<int>(ids.size()));
    return it->second;
  }
};

// A word-tree node. For lsd input the value accumulates a * F(level+2); for
// msd input appending shifts every digit up, tracked by the Fibonacci pair
// (value, value-with-indices-lowered).
struct Node {
  long long a = 0;  // value of the digits read so far
  long long b = 0;  // msd only: companion for the index shift
  int last = 0;
};

Node child(ReadOrder order, const Node& n, int level, int digit) {
  if (order == ReadOrder::lsd) return {n.a + digit * fib(level + 2), 0, digit};
  return {n.a + n.b + digit, n.a + digit, digit};
}

// Future of a node to exactly `depth` more digits, as an interned tree id.
int signature(const SequenceOracle& seq, ReadOrder order, const Node& n, int level,
              int depth, SigInterner& interner) {
  int out = seq(n.a);
  if (depth == 0) return interner.intern(out, -1, -1);
  int s0 = signature(seq, order, child(order, n, level, 0), level + 1, depth - 1, interner);
  int s1 = n.last == 1
               ? -1
               : signature(seq, order, child(order, n, level, 1), level + 1, depth - 1, interner);
  return interner.intern(out, s0, s1);
}

struct ClassInfo {
  int out = -1;
  int c0 = -2, c1 = -2;  // successor classes; -2 unknown, -1 no edge
  bool seen_shallow = false;
};

struct RunResult {
  bool conflict = false;       // same class, different successor classes
  bool boundary_only = false;  // some class seen only at the horizon
  std::unordered_map<int, ClassInfo> classes;  // keyed by signature id
  int initial_class = -1;
};

// Returns the node's class id; records transition info for words shorter
// than the horizon.
int visit(const SequenceOracle& seq, ReadOrder order, const Node& n, int level, int horizon,
          int depth, SigInterner& interner, RunResult& run) {
  int cls = signature(seq, order, n, level, depth, interner);
  ClassInfo& info = run.classes[cls];
  info.out = seq(n.a);
  if (level < horizon) {
    int c0 = visit(seq, order, child(order, n, level, 0), level + 1, horizon, depth, interner, run);
    int c1 = n.last == 1 ? -1
                         : visit(seq, order, child(order, n, level, 1), level + 1, horizon, depth,
                                 interner, run);
    ClassInfo& again = run.classes[cls];  // map may have rehashed during recursion
    if (again.seen_shallow) {
      if (again.c0 != c0 || again.c1 != c1) run.conflict = true;
    } else {
      again.c0 = c0;
      again.c1 = c1;
      again.seen_shallow = true;
    }
  }
  return cls;
}

RunResult run_classes(const SequenceOracle& seq, ReadOrder order, int horizon, int depth) {
  SigInterner interner;
  RunResult run;
  run.initial_class = visit(seq, order, Node{}, 0, horizon, depth, interner, run);
  for (auto& [cls, info] : run.classes) {
    if (!info.seen_shallow) run.boundary_only = true;
  }
  return run;
}

Dfao quotient_to_dfao(const RunResult& run, ReadOrder order) {
  Dfao m;
  m.order = order;
  std::map<int, int> id;
  std::deque<int> queue{run.initial_class};
  id[run.initial_class] = m.add_state(run.classes.at(run.initial_class).out);
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    const ClassInfo& info = run.classes.at(c);
    for (int a : {0, 1}) {
      int t = a == 0 ? info.c0 : info.c1;
      if (t < 0) continue;
      if (!id.count(t)) {
        id[t] = m.add_state(run.classes.at(t).out);
        queue.push_back(t);
      }
      m.set_edge(id.at(c), a, id.at(t));
    }
  }
  m.initial = 0;
  return m;
}

}  // namespace

BruteResult brute_min_dfao(SequenceOracle seq, ReadOrder order, int l_max) {
  constexpr int kTotalDepthCap = 34;
  int len = static_cast<int>(encode(seq.shift()).digits.size());
  int horizon = std::max(4, len);
  int depth = std::min(horizon, 10);

  BruteResult result;
  size_t prev_count = 0;
  bool have_prev = false;
  for (;;) {
    if (horizon > l_max || horizon + depth > kTotalDepthCap) {
      horizon = std::min(horizon, l_max);
      depth = std::min(depth, kTotalDepthCap - horizon);
      seq.ensure_horizon(fib(horizon + depth + 2));
      RunResult last = run_classes(seq, order, horizon, depth);
      result.dfao = quotient_to_dfao(last, order);
      result.stabilized = false;
      result.words_horizon = horizon;
      result.future_depth = depth;
      return result;
    }
    seq.ensure_horizon(fib(horizon + depth + 2));
    RunResult run = run_classes(seq, order, horizon, depth);
    bool clean = !run.conflict && !run.boundary_only;
    if (clean && have_prev && run.classes.size() == prev_count) {
      result.dfao = quotient_to_dfao(run, order);
      result.stabilized = true;
      result.words_horizon = horizon;
      result.future_depth = depth;
      return result;
    }
    if (run.conflict) depth += 4;  // a class merged states the successors tell apart
    if (run.boundary_only || clean) horizon += 2;
    if (!run.conflict) {
      prev_count = run.classes.size();
      have_prev = true;
    }
  }
}

// ---------------------------------------------------------------------------
// Lemma suites
// ---------------------------------------------------------------------------

namespace {

std::string fmt(const char* pattern, long long a, long long b = 0, long long c = 0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

// Sample points {n*phi} for 0 <= n <= n_max, sorted by fractional value,
// with appended values precomputed.
struct Samples {
  std::vector<long long> sorted;  // n values in frac order
  std::vector<long long> app0, app1;  // indexed by n; app1 = -1 when invalid
  std::vector<uint8_t> fval;          // f(n), from the zeck generator

  explicit Samples(long long n_max) {
    sorted.resize(static_cast<size_t>(n_max) + 1);
    for (long long n = 0; n <= n_max; ++n) sorted[static_cast<size_t>(n)] = n;
    std::sort(sorted.begin(), sorted.end(), [](long long a, long long b) {
      return frac_lt(FracPoint{a}, FracPoint{b});
    });
    app0.resize(sorted.size());
    app1.resize(sorted.size());
    fval.resize(sorted.size());
    FibWordOracle w;
    for (long long n = 0; n <= n_max; ++n) {
      app0[static_cast<size_t>(n)] = append_bit(n, 0);
      app1[static_cast<size_t>(n)] = can_append(n, 1) ? append_bit(n, 1) : -1;
      fval[static_cast<size_t>(n)] = static_cast<uint8_t>(w.f_zeck(n));
    }
  }

  // Calls fn(n) for every sample strictly inside the open arc (l, r).
  template <typename Fn>
  bool for_members(FracPoint l, FracPoint r, Fn&& fn) const {
    auto lower = [&](FracPoint x) {
      return std::upper_bound(sorted.begin(), sorted.end(), x,
                              [](FracPoint a, long long b) { return frac_lt(a, FracPoint{b}); });
    };
    auto upper = [&](FracPoint x) {
      return std::lower_bound(sorted.begin(), sorted.end(), x,
                              [](long long a, FracPoint b) { return frac_lt(FracPoint{a}, b); });
    };
    auto scan = [&](auto from, auto to) {
      for (auto it = from; it != to; ++it)
        if (!fn(*it)) return false;
      return true;
    };
    if (frac_lt(l, r)) return scan(lower(l), upper(r));
    return scan(lower(l), sorted.end()) && scan(sorted.begin(), upper(r));
  }
};

bool hypothesis_ok(long long x, long long y) {
  if (x == y) return false;
  CircInterval I{FracPoint{x}, FracPoint{y}, false, false};
  return !I.interior_contains(FracPoint{-1}) && !I.interior_contains(FracPoint{-2});
}

LemmaReport check_a1(long long bound) {
  long long imax = bound < 0 ? 40 : bound;
  LemmaReport rep{"A1", fmt("2<=i<=%lld", imax), true, ""};
  if (imax > 85) {
    return {"A1", rep.bounds, false, "bound too large for exact floor"};
  }
  for (long long i = 2; i <= imax; ++i) {
    QuadNum lhs = (QuadNum::from_int(fib(static_cast<int>(i))) * QuadNum::phi()).frac();
    QuadNum piece = QuadNum::power(QuadNum::inv_phi(), static_cast<unsigned>(i));
    // {F_i phi} = {(-1)^(i+1) phi^(-i)}; the even case is the negative one.
    QuadNum rhs = (i % 2 == 0 ? -piece : piece).frac();
    if (!(lhs == rhs)) {
      rep.pass = false;
      rep.counterexample = fmt("i=%lld", i);
      return rep;
    }
  }
  return rep;
}

LemmaReport check_l1(long long bound) {
  long long imax = bound < 0 ? 1000000 : bound;
  LemmaReport rep{"L1", fmt("0<=i<=%lld", imax), true, ""};
  FibWordOracle w;
  w.ensure(static_cast<size_t>(imax));
  CircInterval ones = fib_ones_interval(0);
  for (long long i = 0; i <= imax; ++i) {
    bool inside = ones.contains(FracPoint{i});
    if ((w.f(i) == 1) != inside) {
      rep.pass = false;
      rep.counterexample = fmt("i=%lld", i);
      return rep;
    }
  }
  return rep;
}

LemmaReport check_l2(long long bound) {
  long long nmax = bound < 0 ? 1000 : bound;
  LemmaReport rep{"L2", fmt("0<=i,c<=%lld", nmax), true, ""};
  FibWordOracle w;
  w.ensure(static_cast<size_t>(2 * nmax + 2));
  for (long long c = 0; c <= nmax; ++c) {
    CircInterval ones = fib_ones_interval(c);
    for (long long i = 0; i <= nmax; ++i) {
      if ((w.f(i + c) == 1) != ones.contains(FracPoint{i})) {
        rep.pass = false;
        rep.counterexample = fmt("i=%lld c=%lld", i, c);
        return rep;
      }
    }
  }
  return rep;
}

LemmaReport check_partition(long long bound) {
  long long dmax = bound < 0 ? 20 : bound;
  LemmaReport rep{"partition", fmt("2<=d<=%lld", dmax), true, ""};
  for (int d = 2; d <= dmax; ++d) {
    GoldenPartition p = lsd_partition(d);  // construction asserts the tiling
    if (p.size() != static_cast<size_t>(fib(d + 1))) {
      rep.pass = false;
      rep.counterexample = fmt("d=%d interval count", d);
      return rep;
    }
    if (!(p.total_length() == QuadNum::one())) {
      rep.pass = false;
      rep.counterexample = fmt("d=%d total length != 1", d);
      return rep;
    }
    QuadNum wide = QuadNum::power(QuadNum::inv_phi(), static_cast<unsigned>(d - 1));
    QuadNum narrow = QuadNum::power(QuadNum::inv_phi(), static_cast<unsigned>(d));
    long long wide_count = 0, narrow_count = 0;
    for (size_t i = 0; i < p.size(); ++i) {
      QuadNum len = p.interval(i).length();
      if (len == wide) ++wide_count;
      else if (len == narrow) ++narrow_count;
      else {
        rep.pass = false;
        rep.counterexample = fmt("d=%d unexpected interval length", d);
        return rep;
      }
    }
    if (wide_count != fib(d) || narrow_count != fib(d - 1)) {
      rep.pass = false;
      rep.counterexample = fmt("d=%d length multiplicities", d);
      return rep;
    }
  }
  return rep;
}

LemmaReport check_eq1(long long bound) {
  long long nmax = bound < 0 ? 100000 : bound;
  LemmaReport rep{"eq1", fmt("n<=%lld,2<=d<=20", nmax), true, ""};
  for (int d = 2; d <= 20; ++d) {
    GoldenPartition p = lsd_partition(d);
    for (long long n = 0; n <= nmax; ++n) {
      if (p.labels()[p.locate(FracPoint{n})] != low_part(n, d)) {
        rep.pass = false;
        rep.counterexample = fmt("n=%lld d=%d", n, d);
        return rep;
      }
    }
  }
  return rep;
}

LemmaReport check_refinement(long long bound) {
  long long dmax = bound < 0 ? 14 : bound;
  LemmaReport rep{"refinement", fmt("2<=d<=%lld", dmax), true, ""};
  for (int d = 2; d < dmax; ++d) {
    GoldenPartition coarse = lsd_partition(d);
    GoldenPartition fine = lsd_partition(d + 1);
    for (size_t i = 0; i < fine.size(); ++i) {
      CircInterval cell = fine.interval(i);
      CircInterval parent = coarse.interval(coarse.locate_floor(cell.left));
      bool crosses = !(parent.right == cell.right) &&
                     CircInterval{cell.left, cell.right, false, false}.interior_contains(parent.right);
      if (crosses) {
        rep.pass = false;
        rep.counterexample = fmt("d=%d cell=%lld", d, static_cast<long long>(i));
        return rep;
      }
    }
  }
  return rep;
}

LemmaReport check_endpoint(long long bound) {
  long long cmax = bound < 0 ? 500 : bound;
  LemmaReport rep{"endpoint", fmt("1<=c<=%lld", cmax), true, ""};
  int dmax = 2;
  while (fib(dmax + 1) < cmax) ++dmax;
  dmax = std::min(dmax + 2, 25);
  std::vector<GoldenPartition> parts;
  for (int d = 2; d <= dmax; ++d) parts.push_back(lsd_partition(d));
  for (long long c = 1; c <= cmax; ++c) {
    // k with F(k) < c <= F(k+1), taking k = 2 for c = 1.
    int k = c == 1 ? 2 : smallest_fib_index_geq(c) - 1;
    for (int d = 2; d <= dmax; ++d) {
      bool is_ep = parts[static_cast<size_t>(d - 2)].has_endpoint(FracPoint{-c});
      bool expect = d >= k;
      if (is_ep != expect) {
        rep.pass = false;
        rep.counterexample = fmt("c=%lld d=%d", c, d);
        return rep;
      }
    }
  }
  return rep;
}

LemmaReport check_b1(long long bound) {
  long long nmax = bound < 0 ? 10000 : bound;
  LemmaReport rep{"B1", fmt("|n|<=%lld", nmax), true, ""};
  for (long long n = 0; n <= nmax; ++n) {
    for (int a : {0, 1}) {
      if (!can_append(n, a)) continue;
      if (drop_bit(append_bit(n, a)) != n) {
        rep.pass = false;
        rep.counterexample = fmt("n=%lld a=%d", n, a);
        return rep;
      }
    }
  }
  for (long long n = 3; n <= nmax; ++n) {
    for (int a : {0, 1}) {
      if (a == 1 && !can_append(-n, 1)) continue;
      if (drop_bit(append_bit(-n, a)) != -n) {
        rep.pass = false;
        rep.counterexample = fmt("n=-%lld a=%d", n, a);
        return rep;
      }
    }
  }
  // The exceptional endpoints: -1 absorbs both appends, -2 only the 0.
  bool edge = drop_bit(append_bit(-1, 0)) == -1 && drop_bit(append_bit(-1, 1)) == -1 &&
              drop_bit(append_bit(-2, 0)) == -2 && drop_bit(append_bit(-2, 1)) == -1;
  if (!edge) {
    rep.pass = false;
    rep.counterexample = "exceptional case at n in {-1,-2}";
  }
  return rep;
}

LemmaReport check_b2(long long bound) {
  long long emax = bound < 0 ? 200 : bound;
  const long long nmax = 10000;
  LemmaReport rep{"B2", fmt("1<=-x,-y<=%lld,n<=%lld", emax, nmax), true, ""};
  Samples samples(nmax);
  for (long long x = -1; x >= -emax && rep.pass; --x) {
    for (long long y = -1; y >= -emax && rep.pass; --y) {
      if (!hypothesis_ok(x, y)) continue;
      for (int a : {0, 1}) {
        long long u = append_bit(y, a);
        long long v = append_bit(x, a);
        if (u == v) {
          rep.pass = false;
          rep.counterexample = fmt("degenerate image x=%lld y=%lld a=%d", x, y, a);
          break;
        }
        CircInterval image{FracPoint{u}, FracPoint{v}, false, false};
        bool ok = samples.for_members(FracPoint{x}, FracPoint{y}, [&](long long n) {
          long long na = a == 0 ? samples.app0[static_cast<size_t>(n)]
                                : samples.app1[static_cast<size_t>(n)];
          if (na < 0) return true;  // f(n) = 1, appending 1 not allowed
          return image.contains(FracPoint{na});
        });
        if (!ok) {
          rep.pass = false;
          rep.counterexample = fmt("x=%lld y=%lld a=%d", x, y, a);
          break;
        }
        if (x != -1 && (image.interior_contains(FracPoint{-1}) ||
                        image.interior_contains(FracPoint{-2}))) {
          rep.pass = false;
          rep.counterexample = fmt("image hits -phi/-2phi: x=%lld y=%lld a=%d", x, y, a);
          break;
        }
      }
    }
  }
  return rep;
}

LemmaReport check_b2_remark(long long bound) {
  long long emax = bound < 0 ? 200 : bound;
  LemmaReport rep{"B2R", fmt("x=-1,2<=-y<=%lld", emax), true, ""};
  for (long long y = -2; y >= -emax; --y) {
    if (!hypothesis_ok(-1, y)) continue;
    CircInterval image0{FracPoint{append_bit(y, 0)}, FracPoint{append_bit(-1, 0)}, false, false};
    if (!image0.interior_contains(FracPoint{-1})) {
      rep.pass = false;
      rep.counterexample = fmt("a=0 y=%lld", y);
      return rep;
    }
    // The a = 1 half needs the append to stay a valid digit word; the
    // collapsing cases y in {-1,-2} and appends onto a trailing 1 put the
    // image elsewhere.
    if (can_append(y, 1)) {
      CircInterval image1{FracPoint{append_bit(y, 1)}, FracPoint{append_bit(-1, 1)}, false, false};
      if (!image1.interior_contains(FracPoint{-2})) {
        rep.pass = false;
        rep.counterexample = fmt("a=1 y=%lld", y);
        return rep;
      }
    }
  }
  return rep;
}

LemmaReport check_b3(long long bound) {
  long long emax = bound < 0 ? 200 : bound;
  LemmaReport rep{"B3", fmt("1<=-x,-y,-r<=%lld", emax), true, ""};
  for (long long x = -1; x >= -emax; --x) {
    for (long long y = -1; y >= -emax; --y) {
      if (!hypothesis_ok(x, y)) continue;
      if ((x == -1 && y == -2) || (x == -2 && y == -1)) continue;  // excluded pair
      CircInterval I{FracPoint{x}, FracPoint{y}, false, false};
      long long xp = drop_bit(x), yp = drop_bit(y);
      if (xp == yp) {
        rep.pass = false;
        rep.counterexample = fmt("degenerate image x=%lld y=%lld", x, y);
        return rep;
      }
      CircInterval image{FracPoint{yp}, FracPoint{xp}, false, false};
      for (long long r = -1; r >= -emax; --r) {
        if (!I.interior_contains(FracPoint{r})) continue;
        if (!image.contains(FracPoint{drop_bit(r)})) {
          rep.pass = false;
          rep.counterexample = fmt("x=%lld y=%lld r=%lld", x, y, r);
          return rep;
        }
      }
    }
  }
  return rep;
}

LemmaReport check_consistency(long long bound) {
  long long rmax = bound < 0 ? 500 : bound;
  const long long nmax = 10000;
  LemmaReport rep{"L43", fmt("2<=-r<=%lld,n<=%lld", rmax, nmax), true, ""};
  Samples samples(nmax);
  CircInterval region1 = fib_ones_interval(0);
  for (long long r = -2; r >= -rmax; --r) {
    GoldenPartition P = msd_partition(r);
    for (size_t i = 0; i < P.size() && rep.pass; ++i) {
      CircInterval I = P.interval(i);
      bool ends_in_1 = region1.contains(I.left);
      for (int a : {0, 1}) {
        if (a == 1 && ends_in_1) continue;
        CircInterval target = successor_interval(P, I, a);
        bool ok = samples.for_members(I.left, I.right, [&](long long n) {
          long long na = a == 0 ? samples.app0[static_cast<size_t>(n)]
                                : samples.app1[static_cast<size_t>(n)];
          if (na < 0) return false;  // legality must match the interval's side
          return target.contains(FracPoint{na});
        });
        if (!ok) {
          rep.pass = false;
          rep.counterexample = fmt("r=%lld interval=%lld a=%d", r, static_cast<long long>(i), a);
        }
      }
    }
    if (!rep.pass) break;
  }
  return rep;
}

using Runner = LemmaReport (*)(long long);

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> r = {
      {"A1", check_a1},           {"L1", check_l1},
      {"L2", check_l2},           {"partition", check_partition},
      {"eq1", check_eq1},         {"refinement", check_refinement},
      {"endpoint", check_endpoint}, {"B1", check_b1},
      {"B2", check_b2},           {"B2R", check_b2_remark},
      {"B3", check_b3},           {"L43", check_consistency},
  };
  return r;
}

}  // namespace

std::string LemmaReport::line() const {
  std::string s = name + " " + bounds + " " + (pass ? "pass" : "fail");
  if (!pass && !counterexample.empty()) s += " " + counterexample;
  return s;
}

LemmaReport check_lemma(const std::string& name, long long bound) {
  for (const auto& [key, runner] : registry()) {
    if (key == name) return runner(bound);
  }
  throw std::invalid_argument("check_lemma: unknown lemma name: " + name);
}

const std::vector<std::string>& lemma_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [key, runner] : registry()) out.push_back(key);
    return out;
  }();
  return names;
}

}  // namespace fibshift
