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

#include "fibshift/builders.hpp"

#include <deque>
#include <stdexcept>

#include "fibshift/fibword.hpp"
#include "fibshift/zeckendorf.hpp"

namespace fibshift {

int lsd_k(long long c) {
  if (c < 0) throw std::invalid_argument("lsd_k: c >= 0 required");
  int k = 2;
  while (fib(k + 1) < c + 2) ++k;
  return k;
}

int g_of(long long c) {
  if (c < 2) throw std::invalid_argument("g_of: c >= 2 required");
  FibWordOracle w;  // f_zeck needs no cache; cheap and thread-safe
  return (w.f_zeck(c - 1) == 0 && w.f_zeck(c - 2) == 0) ? 1 : 0;
}

long long predicted_lsd_states(long long c) {
  if (c < 5) throw std::invalid_argument("predicted_lsd_states: stated for c >= 5 only");
  long long len = static_cast<long long>(encode(c).digits.size());
  return 2 * (len + 1) + 1 - g_of(c);
}

LsdBuild build_lsd(long long c) {
  if (c < 0) throw std::invalid_argument("build_lsd: c >= 0 required");
  LsdBuild b;
  b.trace.c = c;
  int k = b.trace.k = lsd_k(c);

  CircInterval ones = fib_ones_interval(c);
  FracPoint crit1{-(c + 1)}, crit2{-(c + 2)};

  Dfao& m = b.dfao;
  m.order = ReadOrder::lsd;
  int qe = m.add_state(ones.contains(FracPoint{0}) ? 1 : 0);
  int A0 = m.add_state(1), A1 = m.add_state(1);
  int R0 = m.add_state(0), R1 = m.add_state(0);
  m.initial = qe;
  // Sinks come split in two because a 1 may not follow a 1.
  m.set_edge(A0, 0, A0);
  m.set_edge(A0, 1, A1);
  m.set_edge(A1, 0, A0);
  m.set_edge(R0, 0, R0);
  m.set_edge(R0, 1, R1);
  m.set_edge(R1, 0, R0);

  struct Frontier {
    int state;
    std::string word;
    long long m_val;
  };
  std::deque<Frontier> frontier{{qe, "", 0}};

  while (!frontier.empty()) {
    Frontier cur = frontier.front();
    frontier.pop_front();
    int level = static_cast<int>(cur.word.size()) + 1;
    for (int a : {0, 1}) {
      if (a == 1 && !cur.word.empty() && cur.word.back() == '1') continue;
      long long mv = cur.m_val + a * fib(level + 1);
      CircInterval cell = lsd_interval(level + 1, mv);
      bool s1 = cell.interior_contains(crit1);
      bool s2 = cell.interior_contains(crit2);
      std::string word = cur.word + static_cast<char>('0' + a);
      if (!s1 && !s2) {
        // The whole cell is decided; the left endpoint is a member.
        bool accept = ones.contains(cell.left);
        int sink = accept ? (a == 0 ? A0 : A1) : (a == 0 ? R0 : R1);
        m.set_edge(cur.state, a, sink);
        b.trace.sink_events.push_back({word, sink});
      } else {
        int q = m.add_state(ones.contains(FracPoint{mv}) ? 1 : 0);
        m.set_edge(cur.state, a, q);
        b.trace.intermediates.push_back({word, mv, s1, s2, q});
        if (level == 1) ++b.trace.level1_states;
        if (s1) b.trace.critical_string_c1 = word;
        if (s2) b.trace.critical_string_c2 = word;
        if (static_cast<int>(word.size()) > k - 1)
          throw std::logic_error("build_lsd: intermediate state beyond level k-1");
        frontier.push_back({q, word, mv});
      }
    }
  }
  return b;
}

MsdBuild build_msd(long long c) {
  if (c < 0) throw std::invalid_argument("build_msd: c >= 0 required");
  // P(-1) is outside the chain construction's domain; for c = 0 the chain
  // partition of -2 already splits at both {-phi} and {-2phi}.
  GoldenPartition P = c == 0 ? msd_partition(-2)
                             : combine(msd_partition(-(c + 1)), msd_partition(-(c + 2)));
  if (!P.has_endpoint(FracPoint{-(c + 1)}) || !P.has_endpoint(FracPoint{-(c + 2)}))
    throw std::logic_error("build_msd: critical points must be endpoints");

  MsdBuild b{.dfao = Dfao{}, .partition = P, .initial_interval = 0, .unreachable = {}};
  Dfao& m = b.dfao;
  m.order = ReadOrder::msd;

  CircInterval ones = fib_ones_interval(c);
  CircInterval region1 = fib_ones_interval(0);
  size_t n = P.size();
  for (size_t i = 0; i < n; ++i)
    m.add_state(ones.contains(P.interval(i).left) ? 1 : 0);
  b.initial_interval = P.locate(FracPoint{0});
  m.initial = static_cast<int>(b.initial_interval);

  for (size_t i = 0; i < n; ++i) {
    CircInterval I = P.interval(i);
    bool residents_end_in_1 = region1.contains(I.left);
    for (int a : {0, 1}) {
      if (a == 1 && residents_end_in_1) continue;
      CircInterval target = successor_interval(P, I, a);
      m.set_edge(static_cast<int>(i), a, static_cast<int>(P.locate_floor(target.left)));
    }
  }

  std::vector<char> seen(n, 0);
  std::deque<int> queue{m.initial};
  seen[b.initial_interval] = 1;
  while (!queue.empty()) {
    int q = queue.front();
    queue.pop_front();
    for (int a : {0, 1}) {
      int t = m.delta[static_cast<size_t>(q)][static_cast<size_t>(a)];
      if (t >= 0 && !seen[static_cast<size_t>(t)]) {
        seen[static_cast<size_t>(t)] = 1;
        queue.push_back(t);
      }
    }
  }
  for (size_t i = 0; i < n; ++i)
    if (!seen[i]) b.unreachable.push_back(static_cast<int>(i));
  return b;
}

long long msd_state_bound(long long c) {
  if (c < 0) throw std::invalid_argument("msd_state_bound: c >= 0 required");
  long long first = c == 0 ? 1 : static_cast<long long>(msd_chain(-(c + 1)).size());
  return first + static_cast<long long>(msd_chain(-(c + 2)).size());
}

}  // namespace fibshift
