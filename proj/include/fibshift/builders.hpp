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

#ifndef FIBSHIFT_BUILDERS_HPP
#define FIBSHIFT_BUILDERS_HPP

#include <string>
#include <vector>

#include "fibshift/dfao.hpp"
#include "fibshift/partitions.hpp"

namespace fibshift {

/// Diagnostics from the lsd construction. Words are in reading order
/// (first-read digit first); m is the value of the digits read so far.
struct LsdBuildTrace {
  long long c = 0;
  int k = 0;  // F(k) < c+2 <= F(k+1)
  struct Intermediate {
    std::string word;
    long long m = 0;
    bool straddles_c1 = false;  // interval holds {-(c+1)phi} in its interior
    bool straddles_c2 = false;
    int state = -1;
  };
  std::vector<Intermediate> intermediates;
  std::vector<std::pair<std::string, int>> sink_events;  // word -> sink state
  int level1_states = 0;
  std::string critical_string_c1, critical_string_c2;  // longest straddling words
};

struct LsdBuild {
  Dfao dfao;
  LsdBuildTrace trace;
};

/// Lsd-first shift automaton: initial state, four split sinks, and per-level
/// intermediate states for the intervals that still straddle a critical
/// point {-(c+1)phi} or {-(c+2)phi}. At most 2k+3 states.
LsdBuild build_lsd(long long c);

/// Exact minimal lsd state count 2(|(c)_F|+1)+1-g(c) for c >= 5, where
/// g(c) = 1 when f(c-1) = f(c-2) = 0.
long long predicted_lsd_states(long long c);

int lsd_k(long long c);  // the k with F(k) < c+2 <= F(k+1)
int g_of(long long c);   // c >= 2

struct MsdBuild {
  Dfao dfao;
  GoldenPartition partition;     // states are its intervals, in stored order
  size_t initial_interval = 0;   // the interval containing {0}
  std::vector<int> unreachable;  // interval indices never reached from it
};

/// Msd-first shift automaton over the combined partition of the drop-bit
/// chains of -(c+1) and -(c+2) (the chain of -2 alone when c = 0).
MsdBuild build_msd(long long c);

/// A-priori endpoint bound |chain(-(c+1))| + |chain(-(c+2))| on the msd
/// state count.
long long msd_state_bound(long long c);

}  // namespace fibshift

#endif  // FIBSHIFT_BUILDERS_HPP
