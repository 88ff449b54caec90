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

#ifndef FIBSHIFT_ZECKENDORF_HPP
#define FIBSHIFT_ZECKENDORF_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fibshift {

/// Appending the digit 1 after a representation that already ends in 1 is
/// not a valid Fibonacci representation; callers that try get this.
struct InvalidAppend : std::domain_error {
  using std::domain_error::domain_error;
};

/// Fibonacci numbers with F(0)=0, F(1)=1; the table spans all of int64.
long long fib(int i);
int fib_count();  // number of valid indices

/// Smallest k with fib(k) >= n, for n >= 1; ties resolve to k >= 2.
int smallest_fib_index_geq(long long n);

/// Zeckendorf representation. Digits are msd-first over {0,1}, position j
/// from the right holds the coefficient of F(j+2). Nonnegative values store
/// the canonical greedy expansion (empty word for zero). Negative values -n
/// are written -F(k) + m with F(k) the smallest Fibonacci >= n; `digits`
/// then holds m left-padded to k-2 digits and the leading -1 is implicit.
struct ZeckRepr {
  bool negative = false;
  std::string digits;

  std::string to_string() const;  // "100101", "0", "(-1)00101"
  bool operator==(const ZeckRepr&) const = default;
};

ZeckRepr encode(long long n);                // n >= 0
long long decode(std::string_view word);     // total: any {0,1} word, leading zeros ok
ZeckRepr encode_neg(long long n);            // n >= 1, returns representation of -n

/// True when appending digit `a` to n's representation keeps all digit
/// positions over {0,1} (the value-level operation below is defined anyway
/// for negative n; for nonnegative n an invalid append is rejected).
bool can_append(long long n, int a);

/// n with digit `a` appended at the right end of its representation.
/// For negative n the two non-canonical collapses (-1 -> -1, -2 -> -2 when
/// appending 1) fall out of the value-level formula. Throws InvalidAppend
/// for nonnegative n whose representation ends in 1 when a = 1.
long long append_bit(long long n, int a);

/// n with the rightmost digit removed and every index shifted down;
/// total, with (-1)' = -1 and 0' = 0.
long long drop_bit(long long n);

/// Sum of the digits of n at Fibonacci indices 2..d (the "low window").
long long low_part(long long n, int d);   // n >= 0, d >= 2
/// Sum of the digits of n at indices >= d (so n = low(n,d) + high(n,d+1)).
long long high_part(long long n, int d);  // n >= 0, d >= 2

}  // namespace fibshift

#endif  // FIBSHIFT_ZECKENDORF_HPP
