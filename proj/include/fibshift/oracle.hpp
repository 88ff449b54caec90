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

#ifndef FIBSHIFT_ORACLE_HPP
#define FIBSHIFT_ORACLE_HPP

#include <string>
#include <vector>

#include "fibshift/dfao.hpp"
#include "fibshift/fibword.hpp"

namespace fibshift {

/// The shifted word (f(i+c)) backed by the cross-checked generators.
class SequenceOracle {
 public:
  SequenceOracle(long long c, FibWordOracle& words) : c_(c), words_(&words) {}

  long long shift() const { return c_; }
  int operator()(long long i) const { return words_->f(i + c_); }
  void ensure_horizon(long long max_index) { words_->ensure(static_cast<size_t>(max_index + c_)); }

 private:
  long long c_;
  FibWordOracle* words_;
};

struct BruteResult {
  Dfao dfao;
  bool stabilized = false;
  int words_horizon = 0;   // max state-word length of the accepted run
  int future_depth = 0;    // signature depth of the accepted run
};

/// Independent minimal-DFAO construction: words up to a horizon are grouped
/// by the outputs of all their valid extensions up to a separation depth
/// (undefined = undefined counts as agreement). The horizon grows until the
/// class count repeats and the quotient's transitions are well defined.
/// Builder-independent; used to validate the constructions and the exact
/// state-count formula at desk scale.
BruteResult brute_min_dfao(SequenceOracle seq, ReadOrder order, int l_max = 24);

struct LemmaReport {
  std::string name;
  std::string bounds;
  bool pass = false;
  std::string counterexample;
  std::string line() const;  // "name bounds status [counterexample]"
};

/// Named desk-scale exhaustive checks; `bound` overrides each check's
/// primary bound (-1 keeps the documented default). Unknown names throw
/// std::invalid_argument.
LemmaReport check_lemma(const std::string& name, long long bound = -1);

const std::vector<std::string>& lemma_names();

}  // namespace fibshift

#endif  // FIBSHIFT_ORACLE_HPP
