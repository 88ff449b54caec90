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

#ifndef FIBSHIFT_COMMANDS_HPP
#define FIBSHIFT_COMMANDS_HPP

#include <iosfwd>
#include <string>

#include "fibshift/dfao.hpp"
#include "fibshift/util.hpp"

namespace fibshift {

// Exit-code contract: 0 success, 1 verification failure, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFail = 1;
inline constexpr int kExitUsage = 2;

struct BuildConfig {
  long long c = 0;
  ReadOrder order = ReadOrder::lsd;
  std::string format = "dot";  // dot | walnut
  bool minimize = false;
  std::string out_path;  // empty = stdout
};

struct VerifyConfig {
  Range c_range{0, 0};
  long long horizon = 5000;  // outputs checked for 0 <= i < horizon
};

struct TableConfig {
  Range c_range{0, 0};
  std::string out_path;
};

struct LemmasConfig {
  bool all = false;
  std::string name;
  long long bound = -1;
};

int cmd_build(const BuildConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_table(const TableConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_lemmas(const LemmasConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace fibshift

#endif  // FIBSHIFT_COMMANDS_HPP
