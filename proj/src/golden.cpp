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

#include "fibshift/golden.hpp"

#include <cmath>
#include <stdexcept>

namespace fibshift {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

// Largest |n| for which the int64 fast paths are used; 5n^2 and the derived
// squares stay well inside 128 bits.
constexpr long long kFastPathMax = 200000000000000000LL;  // 2e17

u128 isqrt_u128(u128 x) {
  if (x == 0) return 0;
  auto r = static_cast<u128>(std::sqrt(static_cast<long double>(x)));
  while (r > 0 && r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

// floor(|n| * sqrt5) for |n| <= kFastPathMax; never exact for n != 0.
i128 floor_abs_sqrt5(long long n) {
  u128 an = n < 0 ? static_cast<u128>(-static_cast<i128>(n)) : static_cast<u128>(n);
  return static_cast<i128>(isqrt_u128(5 * an * an));
}

int sgn_i128(i128 v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); }

// Sign of u*sqrt5 - e, exact.
int cmp_usqrt5_vs(i128 u, i128 e) {
  int su = sgn_i128(u), se = sgn_i128(e);
  if (su != se) return su > se ? 1 : (su < se ? -1 : 0);
  if (su == 0) return 0;
  u128 lhs = 5 * static_cast<u128>(u < 0 ? -u : u) * static_cast<u128>(u < 0 ? -u : u);
  u128 rhs = static_cast<u128>(e < 0 ? -e : e) * static_cast<u128>(e < 0 ? -e : e);
  if (lhs == rhs) return 0;  // impossible for u != 0 (sqrt5 irrational)
  int mag = lhs > rhs ? 1 : -1;
  return su > 0 ? mag : -mag;
}

}  // namespace

QuadNum::QuadNum(BigInt p_, BigInt q_) : p(std::move(p_)), q(std::move(q_)) {
  if (p.odd() != q.odd()) throw std::invalid_argument("QuadNum: p and q must have equal parity");
}

QuadNum QuadNum::operator*(const QuadNum& r) const {
  // ((p1 + q1 s)(p2 + q2 s))/4 with s^2 = 5; the halves stay integral
  // because p == q (mod 2) on both sides.
  BigInt np = (p * r.p + BigInt(5) * q * r.q).floor_div2();
  BigInt nq = (p * r.q + q * r.p).floor_div2();
  return QuadNum(std::move(np), std::move(nq));
}

int QuadNum::sign() const {
  int sp = p.sign(), sq = q.sign();
  if (sq == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  // Mixed signs: compare p^2 vs 5 q^2.
  BigInt lhs = p * p;
  BigInt rhs = BigInt(5) * q * q;
  auto c = lhs <=> rhs;
  if (c == std::strong_ordering::equal) return 0;  // unreachable: sqrt5 irrational
  int mag = c == std::strong_ordering::greater ? 1 : -1;
  return sp > 0 ? mag : -mag;
}

std::strong_ordering quad_cmp(const QuadNum& a, const QuadNum& b) {
  return (a - b).sign() <=> 0;
}

BigInt QuadNum::floor() const {
  long long pi = p.to_int64();
  long long qi = q.to_int64();
  if (pi > kFastPathMax || pi < -kFastPathMax || qi > kFastPathMax || qi < -kFastPathMax)
    throw std::overflow_error("QuadNum::floor out of supported range");
  i128 t;
  if (qi == 0) {
    t = 0;
  } else {
    i128 s = floor_abs_sqrt5(qi);
    t = qi > 0 ? s : -s - 1;
  }
  i128 num = static_cast<i128>(pi) + t;
  i128 fl = num >= 0 ? num / 2 : -((-num + 1) / 2);
  return BigInt(static_cast<long long>(fl));
}

QuadNum QuadNum::frac() const { return *this - from_big(floor()); }

QuadNum QuadNum::power(QuadNum base, unsigned e) {
  QuadNum acc = QuadNum::one();
  while (e) {
    if (e & 1u) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

double QuadNum::approx() const {
  static const double s5 = std::sqrt(5.0);
  double dp = 0, dq = 0;
  // Good enough for debug printing; exact paths never call this.
  try {
    dp = static_cast<double>(p.to_int64());
    dq = static_cast<double>(q.to_int64());
  } catch (const std::overflow_error&) {
    return std::nan("");
  }
  return (dp + dq * s5) / 2.0;
}

std::string QuadNum::to_string() const {
  return "(" + p.to_string() + " + " + q.to_string() + "*sqrt5)/2";
}

long long floor_n_phi(long long n) {
  if (n == 0) return 0;
  if (n > kFastPathMax || n < -kFastPathMax)
    throw std::overflow_error("floor_n_phi out of supported range");
  i128 t;
  i128 s = floor_abs_sqrt5(n);
  t = n > 0 ? s : -s - 1;
  i128 num = static_cast<i128>(n) + t;
  i128 fl = num >= 0 ? num / 2 : -((-num + 1) / 2);
  return static_cast<long long>(fl);
}

QuadNum FracPoint::value() const {
  QuadNum x(BigInt{n}, BigInt{n});  // n*phi
  return x.frac();
}

int frac_cmp(FracPoint a, FracPoint b) {
  if (a.n == b.n) return 0;
  if (a.n <= kFastPathMax / 4 && a.n >= -kFastPathMax / 4 &&
      b.n <= kFastPathMax / 4 && b.n >= -kFastPathMax / 4) {
    // {a phi} - {b phi} = (u + u sqrt5)/2 - d with u = a-b, d = floor diff;
    // its sign is the sign of u*sqrt5 - (2d - u).
    i128 u = static_cast<i128>(a.n) - b.n;
    i128 d = static_cast<i128>(floor_n_phi(a.n)) - floor_n_phi(b.n);
    return cmp_usqrt5_vs(u, 2 * d - u);
  }
  auto c = quad_cmp(a.value(), b.value());
  return c == std::strong_ordering::less ? -1 : (c == std::strong_ordering::greater ? 1 : 0);
}

namespace {

bool at_or_after_left(const CircInterval& I, FracPoint x, bool closed) {
  int c = frac_cmp(x, I.left);
  return c > 0 || (c == 0 && closed);
}

bool at_or_before_right(const CircInterval& I, FracPoint x, bool closed) {
  int c = frac_cmp(x, I.right);
  return c < 0 || (c == 0 && closed);
}

bool contains_impl(const CircInterval& I, FracPoint x, bool lc, bool rc) {
  int lr = frac_cmp(I.left, I.right);
  if (lr == 0) throw std::invalid_argument("CircInterval: empty or full circle");
  bool ge_left = at_or_after_left(I, x, lc);
  bool le_right = at_or_before_right(I, x, rc);
  // Wrapping arcs split into [left, 1) and [0, right).
  return lr < 0 ? (ge_left && le_right) : (ge_left || le_right);
}

}  // namespace

bool CircInterval::contains(FracPoint x) const {
  return contains_impl(*this, x, left_closed, right_closed);
}

bool CircInterval::interior_contains(FracPoint x) const {
  return contains_impl(*this, x, false, false);
}

QuadNum CircInterval::length() const {
  QuadNum d = right.value() - left.value();
  if (d.sign() <= 0) d = d + QuadNum::one();
  return d;
}

CircInterval fib_ones_interval(long long c) {
  return CircInterval{FracPoint{-(c + 1)}, FracPoint{-(c + 2)}, true, false};
}

}  // namespace fibshift
