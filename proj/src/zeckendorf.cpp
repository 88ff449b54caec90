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

#include "fibshift/zeckendorf.hpp"

#include <array>
#include <cassert>

namespace fibshift {

namespace {

// F(0)..F(91); F(92) would overflow int64.
constexpr int kFibCount = 92;

const std::array<long long, kFibCount>& table() {
  static const std::array<long long, kFibCount> t = [] {
    std::array<long long, kFibCount> a{};
    a[0] = 0;
    a[1] = 1;
    for (int i = 2; i < kFibCount; ++i) a[i] = a[i - 1] + a[i - 2];
    return a;
  }();
  return t;
}

// Value of n's digits shifted one Fibonacci index up: sum a_i F(i+1).
long long shift_up(long long n) {
  assert(n >= 0);
  long long out = 0;
  int i = kFibCount - 1;
  while (n > 0) {
    while (table()[i] > n) --i;
    out += table()[i + 1];
    n -= table()[i];
  }
  return out;
}

// Digits shifted one index down with the last digit dropped:
// sum over i >= 3 of a_i F(i-1).
long long shift_down_drop(long long n) {
  assert(n >= 0);
  long long out = 0;
  int i = kFibCount - 1;
  while (n > 0) {
    while (table()[i] > n) --i;
    if (i >= 3) out += table()[i - 1];
    n -= table()[i];
  }
  return out;
}

// Last digit of the canonical expansion (0 for n = 0).
int last_digit(long long n) {
  assert(n >= 0);
  int i = kFibCount - 1;
  while (n > 0) {
    while (table()[i] > n) --i;
    if (i == 2) return 1;
    n -= table()[i];
  }
  return 0;
}

// Decompose -n = -F(k) + m for n >= 1.
struct NegParts {
  int k;
  long long m;
};

NegParts neg_parts(long long n) {
  assert(n >= 1);
  int k = smallest_fib_index_geq(n);
  return {k, table()[k] - n};
}

}  // namespace

long long fib(int i) {
  if (i < 0 || i >= kFibCount) throw std::out_of_range("fib index");
  return table()[i];
}

int fib_count() { return kFibCount; }

int smallest_fib_index_geq(long long n) {
  if (n < 1) throw std::invalid_argument("smallest_fib_index_geq: n >= 1 required");
  for (int k = 2; k < kFibCount; ++k) {
    if (table()[k] >= n) return k;
  }
  throw std::overflow_error("no int64 Fibonacci number >= n");
}

std::string ZeckRepr::to_string() const {
  if (negative) return "(-1)" + digits;
  return digits.empty() ? "0" : digits;
}

ZeckRepr encode(long long n) {
  if (n < 0) throw std::invalid_argument("encode: n >= 0 required");
  ZeckRepr r;
  if (n == 0) return r;
  int t = smallest_fib_index_geq(n);
  if (table()[t] > n) --t;  // largest F(t) <= n
  for (int i = t; i >= 2; --i) {
    if (table()[i] <= n) {
      r.digits.push_back('1');
      n -= table()[i];
    } else {
      r.digits.push_back('0');
    }
  }
  return r;
}

long long decode(std::string_view word) {
  long long v = 0;
  int idx = static_cast<int>(word.size()) + 1;
  for (char ch : word) {
    if (ch == '1') {
      v += fib(idx);
    } else if (ch != '0') {
      throw std::invalid_argument("decode: word must be over {0,1}");
    }
    --idx;
  }
  return v;
}

ZeckRepr encode_neg(long long n) {
  if (n < 1) throw std::invalid_argument("encode_neg: n >= 1 required");
  auto [k, m] = neg_parts(n);
  ZeckRepr r;
  r.negative = true;
  std::string ms = encode(m).digits;
  r.digits = std::string(static_cast<size_t>(k - 2) - ms.size(), '0') + ms;
  return r;
}

bool can_append(long long n, int a) {
  if (a == 0) return true;
  if (n >= 0) return last_digit(n) == 0;
  // Appending 1 collides when the stored positive part already ends in 1,
  // and collapses non-canonically for -1 and -2.
  return n <= -3 && last_digit(neg_parts(-n).m) == 0;
}

long long append_bit(long long n, int a) {
  if (a != 0 && a != 1) throw std::invalid_argument("append_bit: digit must be 0 or 1");
  if (n >= 0) {
    if (a == 1 && last_digit(n) == 1)
      throw InvalidAppend("append_bit: representation ends in 1, cannot append 1");
    return shift_up(n) + a;
  }
  auto [k, m] = neg_parts(-n);
  return -fib(k + 1) + shift_up(m) + a;
}

long long drop_bit(long long n) {
  if (n >= 0) return shift_down_drop(n);
  auto [k, m] = neg_parts(-n);
  return -fib(k - 1) + shift_down_drop(m);
}

long long low_part(long long n, int d) {
  if (n < 0 || d < 2) throw std::invalid_argument("low_part: n >= 0, d >= 2 required");
  long long out = 0;
  int i = kFibCount - 1;
  while (n > 0) {
    while (table()[i] > n) --i;
    if (i <= d) out += table()[i];
    n -= table()[i];
  }
  return out;
}

long long high_part(long long n, int d) {
  if (n < 0 || d < 2) throw std::invalid_argument("high_part: n >= 0, d >= 2 required");
  long long out = 0;
  int i = kFibCount - 1;
  while (n > 0) {
    while (table()[i] > n) --i;
    if (i >= d) out += table()[i];
    n -= table()[i];
  }
  return out;
}

}  // namespace fibshift
