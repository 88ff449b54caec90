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

#ifndef FIBSHIFT_BIGINT_HPP
#define FIBSHIFT_BIGINT_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace fibshift {

/// Arbitrary-precision signed integer, sign-magnitude with 32-bit limbs.
///
/// Only the operations the exact golden-ratio arithmetic needs: addition,
/// subtraction, multiplication, comparison, parity, halving and decimal
/// formatting. There is deliberately no general division.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);  // NOLINT: implicit by design, mirrors integer literals

  bool is_zero() const { return sign_ == 0; }
  int sign() const { return sign_; }
  bool odd() const { return sign_ != 0 && (limbs_[0] & 1u); }

  BigInt operator-() const;
  BigInt& operator+=(const BigInt& rhs);
  BigInt& operator-=(const BigInt& rhs);
  BigInt& operator*=(const BigInt& rhs);
  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }

  std::strong_ordering operator<=>(const BigInt& rhs) const;
  bool operator==(const BigInt& rhs) const = default;

  /// Floor division by 2 (arithmetic shift, rounds toward -inf).
  BigInt floor_div2() const;

  bool fits_int64() const;
  long long to_int64() const;  // throws std::overflow_error when out of range
  std::string to_string() const;

 private:
  static int ucmp(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static void uadd(std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static void usub(std::vector<uint32_t>& a, const std::vector<uint32_t>& b);  // a >= b
  void trim();

  int sign_ = 0;                  // -1, 0, +1
  std::vector<uint32_t> limbs_;   // little-endian magnitude, empty iff zero
};

}  // namespace fibshift

#endif  // FIBSHIFT_BIGINT_HPP
