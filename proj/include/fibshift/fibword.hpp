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

#ifndef FIBSHIFT_FIBWORD_HPP
#define FIBSHIFT_FIBWORD_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace fibshift {

/// The Fibonacci word 01001010..., generated three independent ways so the
/// generators can cross-check each other:
///   - morphic: fixed point of 0 -> 01, 1 -> 0, cached with prefix doubling;
///   - sturmian: floor((i+2)(2-phi)) - floor((i+1)(2-phi)), exact arithmetic;
///   - zeck: last digit of the Zeckendorf representation of i.
///
/// The morphic cache grows on demand; that path is single-threaded. Parallel
/// drivers call ensure() up front and then share the oracle read-only.
class FibWordOracle {
 public:
  FibWordOracle();

  void ensure(size_t n);  // cache at least n+1 letters

  int f_morphic(long long i);
  int f_sturmian(long long i) const;
  int f_zeck(long long i) const;

  int f(long long i) { return f_morphic(i); }
  int f(long long i) const;  // read-only, requires ensure() to have covered i
  int shifted(long long c, long long i) { return f_morphic(i + c); }

  size_t cached() const { return buf_.size(); }

 private:
  std::vector<uint8_t> buf_;
  size_t prev_len_;  // previous Fibonacci prefix length, for self-append growth
};

}  // namespace fibshift

#endif  // FIBSHIFT_FIBWORD_HPP
