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

#include "fibshift/fibword.hpp"

#include <stdexcept>

#include "fibshift/golden.hpp"
#include "fibshift/zeckendorf.hpp"

namespace fibshift {

FibWordOracle::FibWordOracle() : buf_{0, 1}, prev_len_(1) {}

void FibWordOracle::ensure(size_t n) {
  // Prefix recurrence B(k+1) = B(k) B(k-1): append a copy of the current
  // word's own prefix of the previous Fibonacci length.
  while (buf_.size() <= n) {
    size_t cur = buf_.size();
    buf_.resize(cur + prev_len_);
    for (size_t i = 0; i < prev_len_; ++i) buf_[cur + i] = buf_[i];
    prev_len_ = cur;
  }
}

int FibWordOracle::f_morphic(long long i) {
  if (i < 0) throw std::invalid_argument("f_morphic: i >= 0 required");
  ensure(static_cast<size_t>(i));
  return buf_[static_cast<size_t>(i)];
}

int FibWordOracle::f(long long i) const {
  if (i < 0 || static_cast<size_t>(i) >= buf_.size())
    throw std::out_of_range("FibWordOracle: index beyond cached prefix");
  return buf_[static_cast<size_t>(i)];
}

int FibWordOracle::f_sturmian(long long i) const {
  if (i < 0) throw std::invalid_argument("f_sturmian: i >= 0 required");
  // floor(n*(2-phi)) = 2n - floor(n*phi) - 1 for n >= 1 (n*phi never integral).
  auto floor_gamma = [](long long n) {
    return n == 0 ? 0 : 2 * n - floor_n_phi(n) - 1;
  };
  return static_cast<int>(floor_gamma(i + 2) - floor_gamma(i + 1));
}

int FibWordOracle::f_zeck(long long i) const {
  if (i < 0) throw std::invalid_argument("f_zeck: i >= 0 required");
  ZeckRepr r = encode(i);
  return (!r.digits.empty() && r.digits.back() == '1') ? 1 : 0;
}

}  // namespace fibshift
