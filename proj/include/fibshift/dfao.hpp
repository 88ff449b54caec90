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

#ifndef FIBSHIFT_DFAO_HPP
#define FIBSHIFT_DFAO_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fibshift {

enum class ReadOrder { msd, lsd };

std::string_view to_string(ReadOrder order);

/// Deterministic finite automaton with output over the alphabet {0,1}.
/// Transitions are partial: words that are not valid Zeckendorf
/// representations fall off and produce no output.
struct Dfao {
  ReadOrder order = ReadOrder::msd;
  int initial = 0;
  std::vector<std::array<int, 2>> delta;  // -1 marks a missing transition
  std::vector<int> output;

  int add_state(int out);
  void set_edge(int from, int digit, int to);
  size_t size() const { return delta.size(); }
};

/// Runs the word as-is; nullopt when a transition is missing.
std::optional<int> eval(const Dfao& m, std::string_view word);

/// Output on the canonical representation of n (reversed for lsd input).
int eval_int(const Dfao& m, long long n);

/// The unique minimal DFAO with the same outputs on all words the input
/// defines (and the same definedness). Implemented by completing with a
/// fresh sink carrying a non-output label, Moore partition refinement,
/// then deleting the sink's class and renumbering breadth-first.
/// `class_of`, when given, receives old state -> new state (-1 unreachable).
Dfao minimize(const Dfao& m, std::vector<int>* class_of = nullptr);

struct EquivResult {
  bool equivalent = false;
  std::string witness;  // shortest distinguishing valid word when not equivalent
};

/// Agreement on every valid Zeckendorf word; both-undefined counts as
/// agreement. Requires equal reading order.
EquivResult equivalent(const Dfao& a, const Dfao& b);

/// Reachable part renumbered breadth-first with the initial state as 0.
Dfao canonical_renumber(const Dfao& m);

std::string export_dot(const Dfao& m);
std::string export_walnut(const Dfao& m);
Dfao import_walnut(std::string_view text);

}  // namespace fibshift

#endif  // FIBSHIFT_DFAO_HPP
