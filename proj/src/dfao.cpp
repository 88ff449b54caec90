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

#include "fibshift/dfao.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

#include "fibshift/zeckendorf.hpp"

namespace fibshift {

std::string_view to_string(ReadOrder order) {
  return order == ReadOrder::msd ? "msd" : "lsd";
}

int Dfao::add_state(int out) {
  delta.push_back({-1, -1});
  output.push_back(out);
  return static_cast<int>(delta.size()) - 1;
}

void Dfao::set_edge(int from, int digit, int to) {
  if (digit != 0 && digit != 1) throw std::invalid_argument("set_edge: digit must be 0 or 1");
  delta.at(static_cast<size_t>(from))[static_cast<size_t>(digit)] = to;
}

std::optional<int> eval(const Dfao& m, std::string_view word) {
  int q = m.initial;
  for (char ch : word) {
    if (ch != '0' && ch != '1') throw std::invalid_argument("eval: word must be over {0,1}");
    q = m.delta[static_cast<size_t>(q)][ch - '0'];
    if (q < 0) return std::nullopt;
  }
  return m.output[static_cast<size_t>(q)];
}

int eval_int(const Dfao& m, long long n) {
  std::string w = encode(n).digits;
  if (m.order == ReadOrder::lsd) std::reverse(w.begin(), w.end());
  auto r = eval(m, w);
  if (!r) throw std::logic_error("eval_int: canonical representation fell off");
  return *r;
}

namespace {

std::vector<int> reachable_order(const Dfao& m) {
  std::vector<int> order;
  std::vector<char> seen(m.size(), 0);
  std::deque<int> queue{m.initial};
  seen[static_cast<size_t>(m.initial)] = 1;
  while (!queue.empty()) {
    int q = queue.front();
    queue.pop_front();
    order.push_back(q);
    for (int a : {0, 1}) {
      int t = m.delta[static_cast<size_t>(q)][static_cast<size_t>(a)];
      if (t >= 0 && !seen[static_cast<size_t>(t)]) {
        seen[static_cast<size_t>(t)] = 1;
        queue.push_back(t);
      }
    }
  }
  return order;
}

}  // namespace

Dfao minimize(const Dfao& m, std::vector<int>* class_of) {
  std::vector<int> reach = reachable_order(m);
  int n = static_cast<int>(reach.size());
  std::vector<int> compact(m.size(), -1);
  for (int i = 0; i < n; ++i) compact[static_cast<size_t>(reach[i])] = i;

  // Completed automaton: state n is the sink with a label outside the
  // output alphabet, so it can never merge with a real state.
  auto edge = [&](int q, int a) {
    if (q == n) return n;
    int t = m.delta[static_cast<size_t>(reach[q])][static_cast<size_t>(a)];
    return t < 0 ? n : compact[static_cast<size_t>(t)];
  };

  std::vector<int> cls(static_cast<size_t>(n) + 1);
  {
    std::map<int, int> by_out;
    for (int q = 0; q < n; ++q) {
      auto [it, fresh] = by_out.emplace(m.output[static_cast<size_t>(reach[q])],
                                        static_cast<int>(by_out.size()));
      cls[static_cast<size_t>(q)] = it->second;
    }
    cls[static_cast<size_t>(n)] = static_cast<int>(by_out.size());  // sink class
  }

  for (;;) {
    std::map<std::array<int, 3>, int> sig_ids;
    std::vector<int> next(cls.size());
    for (int q = 0; q <= n; ++q) {
      std::array<int, 3> sig = {cls[static_cast<size_t>(q)],
                                cls[static_cast<size_t>(edge(q, 0))],
                                cls[static_cast<size_t>(edge(q, 1))]};
      auto [it, fresh] = sig_ids.emplace(sig, static_cast<int>(sig_ids.size()));
      next[static_cast<size_t>(q)] = it->second;
    }
    bool stable = sig_ids.size() ==
                  static_cast<size_t>(1 + *std::max_element(cls.begin(), cls.end()));
    cls.swap(next);
    if (stable) break;
  }

  // Renumber classes breadth-first from the initial state's class.
  int sink_class = cls[static_cast<size_t>(n)];
  std::vector<std::array<int, 2>> class_delta(cls.size(), {-1, -1});
  std::vector<int> class_out(cls.size(), -1);
  for (int q = 0; q < n; ++q) {
    int c = cls[static_cast<size_t>(q)];
    class_out[static_cast<size_t>(c)] = m.output[static_cast<size_t>(reach[q])];
    for (int a : {0, 1}) {
      int t = cls[static_cast<size_t>(edge(q, a))];
      class_delta[static_cast<size_t>(c)][static_cast<size_t>(a)] = t;
    }
  }

  Dfao out;
  out.order = m.order;
  std::vector<int> renum(cls.size(), -1);
  std::deque<int> queue{cls[static_cast<size_t>(0)]};
  renum[static_cast<size_t>(queue.front())] = out.add_state(
      class_out[static_cast<size_t>(queue.front())]);
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    for (int a : {0, 1}) {
      int t = class_delta[static_cast<size_t>(c)][static_cast<size_t>(a)];
      if (t == sink_class || t < 0) continue;
      if (renum[static_cast<size_t>(t)] < 0) {
        renum[static_cast<size_t>(t)] = out.add_state(class_out[static_cast<size_t>(t)]);
        queue.push_back(t);
      }
      out.set_edge(renum[static_cast<size_t>(c)], a, renum[static_cast<size_t>(t)]);
    }
  }
  out.initial = 0;

  if (class_of) {
    class_of->assign(m.size(), -1);
    for (int q = 0; q < n; ++q)
      (*class_of)[static_cast<size_t>(reach[q])] =
          renum[static_cast<size_t>(cls[static_cast<size_t>(q)])];
  }
  return out;
}

EquivResult equivalent(const Dfao& a, const Dfao& b) {
  if (a.order != b.order)
    throw std::invalid_argument("equivalent: reading orders differ");
  const int dead = -1;
  auto out_of = [](const Dfao& m, int q) { return q < 0 ? -2 : m.output[static_cast<size_t>(q)]; };
  auto step = [](const Dfao& m, int q, int digit) {
    return q < 0 ? -1 : m.delta[static_cast<size_t>(q)][static_cast<size_t>(digit)];
  };

  // BFS over (state_a, state_b, last digit was 1) restricted to valid words.
  struct Node {
    int qa, qb;
    bool last1;
  };
  auto key = [&](const Node& s) {
    long long ka = s.qa + 1, kb = s.qb + 1;
    return (ka * (static_cast<long long>(b.size()) + 2) + kb) * 2 + (s.last1 ? 1 : 0);
  };
  std::map<long long, std::pair<long long, int>> parent;  // key -> (parent key, digit)
  std::deque<Node> queue;
  Node start{a.initial, b.initial, false};
  parent[key(start)] = {-1, -1};
  queue.push_back(start);
  while (!queue.empty()) {
    Node s = queue.front();
    queue.pop_front();
    if (out_of(a, s.qa) != out_of(b, s.qb)) {
      std::string w;
      long long k = key(s);
      while (true) {
        auto [pk, d] = parent[k];
        if (pk < 0) break;
        w.push_back(static_cast<char>('0' + d));
        k = pk;
      }
      std::reverse(w.begin(), w.end());
      return {false, w};
    }
    for (int d : {0, 1}) {
      if (d == 1 && s.last1) continue;  // keep words valid
      Node t{step(a, s.qa, d), step(b, s.qb, d), d == 1};
      if (t.qa == dead && t.qb == dead) continue;
      long long k = key(t);
      if (parent.count(k)) continue;
      parent[k] = {key(s), d};
      queue.push_back(t);
    }
  }
  return {true, ""};
}

std::string export_dot(const Dfao& m) {
  std::ostringstream os;
  os << "digraph dfao {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=circle];\n";
  os << "  __start [shape=point, label=\"\"];\n";
  os << "  __start -> q" << m.initial << ";\n";
  for (size_t q = 0; q < m.size(); ++q)
    os << "  q" << q << " [label=\"q" << q << "/" << m.output[q] << "\"];\n";
  for (size_t q = 0; q < m.size(); ++q) {
    for (int a : {0, 1}) {
      int t = m.delta[q][static_cast<size_t>(a)];
      if (t >= 0) os << "  q" << q << " -> q" << t << " [label=\"" << a << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

Dfao canonical_renumber(const Dfao& m) {
  std::vector<int> order = reachable_order(m);
  std::vector<int> newid(m.size(), -1);
  for (size_t i = 0; i < order.size(); ++i) newid[static_cast<size_t>(order[i])] = static_cast<int>(i);
  Dfao out;
  out.order = m.order;
  out.initial = 0;
  for (int q : order) out.add_state(m.output[static_cast<size_t>(q)]);
  for (int q : order) {
    for (int a : {0, 1}) {
      int t = m.delta[static_cast<size_t>(q)][static_cast<size_t>(a)];
      if (t >= 0) out.set_edge(newid[static_cast<size_t>(q)], a, newid[static_cast<size_t>(t)]);
    }
  }
  return out;
}

std::string export_walnut(const Dfao& m) {
  // Walnut numbers the initial state 0.
  Dfao c = canonical_renumber(m);
  std::ostringstream os;
  os << (c.order == ReadOrder::msd ? "msd_fib" : "lsd_fib") << "\n";
  for (size_t q = 0; q < c.size(); ++q) {
    os << "\n" << q << " " << c.output[q] << "\n";
    for (int a : {0, 1}) {
      int t = c.delta[q][static_cast<size_t>(a)];
      if (t >= 0) os << a << " -> " << t << "\n";
    }
  }
  return os.str();
}

Dfao import_walnut(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  Dfao m;
  bool have_header = false;
  int current = -1;
  std::vector<std::pair<std::array<int, 3>, int>> pending;  // (state, digit, target)
  while (std::getline(is, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    size_t start = line.find_first_not_of(' ');
    if (start == std::string::npos) continue;
    line = line.substr(start);
    if (!have_header) {
      if (line == "msd_fib") m.order = ReadOrder::msd;
      else if (line == "lsd_fib") m.order = ReadOrder::lsd;
      else throw std::invalid_argument("import_walnut: unknown numeration header");
      have_header = true;
      continue;
    }
    std::istringstream ls{line};
    if (line.find("->") != std::string::npos) {
      int a, t;
      std::string arrow;
      if (!(ls >> a >> arrow >> t) || arrow != "->" || current < 0)
        throw std::invalid_argument("import_walnut: malformed transition line");
      pending.push_back({{current, a, t}, 0});
    } else {
      int id, out;
      if (!(ls >> id >> out)) throw std::invalid_argument("import_walnut: malformed state line");
      if (id != static_cast<int>(m.size()))
        throw std::invalid_argument("import_walnut: states must be numbered in order");
      current = m.add_state(out);
    }
  }
  if (!have_header) throw std::invalid_argument("import_walnut: missing header");
  for (auto& [edge, unused] : pending) {
    (void)unused;
    if (edge[2] < 0 || edge[2] >= static_cast<int>(m.size()))
      throw std::invalid_argument("import_walnut: transition target out of range");
    m.set_edge(edge[0], edge[1], edge[2]);
  }
  m.initial = 0;
  return m;
}

}  // namespace fibshift
