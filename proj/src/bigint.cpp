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

#include "fibshift/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace fibshift {

BigInt::BigInt(long long v) {
  if (v == 0) return;
  sign_ = v < 0 ? -1 : 1;
  // Avoid overflow on LLONG_MIN by working in unsigned space.
  unsigned long long m = v < 0 ? ~static_cast<unsigned long long>(v) + 1ull
                                : static_cast<unsigned long long>(v);
  while (m != 0) {
    limbs_.push_back(static_cast<uint32_t>(m & 0xffffffffull));
    m >>= 32;
  }
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) sign_ = 0;
}

int BigInt::ucmp(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

void BigInt::uadd(std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  uint64_t carry = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    uint64_t s = carry + a[i] + (i < b.size() ? b[i] : 0u);
    a[i] = static_cast<uint32_t>(s);
    carry = s >> 32;
  }
  if (carry) a.push_back(static_cast<uint32_t>(carry));
}

void BigInt::usub(std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  int64_t borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    int64_t s = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0u);
    borrow = 0;
    if (s < 0) {
      s += int64_t{1} << 32;
      borrow = 1;
    }
    a[i] = static_cast<uint32_t>(s);
  }
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  r.sign_ = -r.sign_;
  return r;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
  if (rhs.sign_ == 0) return *this;
  if (sign_ == 0) { *this = rhs; return *this; }
  if (sign_ == rhs.sign_) {
    uadd(limbs_, rhs.limbs_);
    return *this;
  }
  int c = ucmp(limbs_, rhs.limbs_);
  if (c == 0) { sign_ = 0; limbs_.clear(); return *this; }
  if (c > 0) {
    usub(limbs_, rhs.limbs_);
  } else {
    std::vector<uint32_t> tmp = rhs.limbs_;
    usub(tmp, limbs_);
    limbs_ = std::move(tmp);
    sign_ = rhs.sign_;
  }
  trim();
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) { return *this += -rhs; }

BigInt& BigInt::operator*=(const BigInt& rhs) {
  if (sign_ == 0 || rhs.sign_ == 0) { sign_ = 0; limbs_.clear(); return *this; }
  std::vector<uint32_t> out(limbs_.size() + rhs.limbs_.size(), 0);
  for (size_t i = 0; i < limbs_.size(); ++i) {
    uint64_t carry = 0;
    uint64_t ai = limbs_[i];
    for (size_t j = 0; j < rhs.limbs_.size(); ++j) {
      uint64_t s = ai * rhs.limbs_[j] + out[i + j] + carry;
      out[i + j] = static_cast<uint32_t>(s);
      carry = s >> 32;
    }
    size_t k = i + rhs.limbs_.size();
    while (carry) {
      uint64_t s = out[k] + carry;
      out[k] = static_cast<uint32_t>(s);
      carry = s >> 32;
      ++k;
    }
  }
  limbs_ = std::move(out);
  sign_ *= rhs.sign_;
  trim();
  return *this;
}

std::strong_ordering BigInt::operator<=>(const BigInt& rhs) const {
  if (sign_ != rhs.sign_) return sign_ <=> rhs.sign_;
  int c = ucmp(limbs_, rhs.limbs_) * sign_;
  return c <=> 0;
}

BigInt BigInt::floor_div2() const {
  if (sign_ == 0) return BigInt{};
  BigInt r = *this;
  bool was_odd = r.odd();
  uint32_t carry = 0;
  for (size_t i = r.limbs_.size(); i-- > 0;) {
    uint32_t next = r.limbs_[i] & 1u;
    r.limbs_[i] = (r.limbs_[i] >> 1) | (carry << 31);
    carry = next;
  }
  r.trim();
  // Floor semantics: -3/2 = -2.
  if (sign_ < 0 && was_odd) r -= BigInt{1};
  return r;
}

bool BigInt::fits_int64() const {
  if (limbs_.size() > 2) return false;
  if (limbs_.size() < 2) return true;
  uint64_t m = (static_cast<uint64_t>(limbs_[1]) << 32) | limbs_[0];
  if (sign_ > 0) return m <= 0x7fffffffffffffffull;
  return m <= 0x8000000000000000ull;
}

long long BigInt::to_int64() const {
  if (!fits_int64()) throw std::overflow_error("BigInt does not fit in int64");
  uint64_t m = 0;
  for (size_t i = limbs_.size(); i-- > 0;) m = (m << 32) | limbs_[i];
  if (sign_ < 0) return static_cast<long long>(~m + 1ull);
  return static_cast<long long>(m);
}

std::string BigInt::to_string() const {
  if (sign_ == 0) return "0";
  std::vector<uint32_t> tmp = limbs_;
  std::string digits;
  while (!tmp.empty()) {
    uint64_t rem = 0;
    for (size_t i = tmp.size(); i-- > 0;) {
      uint64_t cur = (rem << 32) | tmp[i];
      tmp[i] = static_cast<uint32_t>(cur / 1000000000u);
      rem = cur % 1000000000u;
    }
    while (!tmp.empty() && tmp.back() == 0) tmp.pop_back();
    std::string chunk = std::to_string(rem);
    if (!tmp.empty()) chunk.insert(0, 9 - chunk.size(), '0');
    digits.insert(0, chunk);
  }
  if (sign_ < 0) digits.insert(0, 1, '-');
  return digits;
}

}  // namespace fibshift
