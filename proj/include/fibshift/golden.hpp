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

#ifndef FIBSHIFT_GOLDEN_HPP
#define FIBSHIFT_GOLDEN_HPP

#include <compare>
#include <string>

#include "fibshift/bigint.hpp"

namespace fibshift {

/// Element of Q(sqrt5), stored as (p + q*sqrt5)/2 with p == q (mod 2).
/// This grid holds the integers, phi = (1+sqrt5)/2 and every Z-linear
/// combination of them, which covers all quantities the constructions use.
/// All comparisons are integer-exact; there is no floating point path.
struct QuadNum {
  BigInt p, q;

  QuadNum() = default;
  QuadNum(BigInt p_, BigInt q_);

  static QuadNum from_int(long long n) { return QuadNum(BigInt(2 * n), BigInt(0)); }
  static QuadNum from_big(const BigInt& n) { return QuadNum(n + n, BigInt(0)); }
  static QuadNum phi() { return QuadNum(BigInt(1), BigInt(1)); }       // (1+sqrt5)/2
  static QuadNum inv_phi() { return QuadNum(BigInt(-1), BigInt(1)); }  // phi - 1
  static QuadNum zero() { return QuadNum(); }
  static QuadNum one() { return from_int(1); }

  QuadNum operator-() const { return QuadNum(-p, -q); }
  QuadNum operator+(const QuadNum& r) const { return QuadNum(p + r.p, q + r.q); }
  QuadNum operator-(const QuadNum& r) const { return QuadNum(p - r.p, q - r.q); }
  QuadNum operator*(const QuadNum& r) const;
  bool operator==(const QuadNum& r) const = default;

  /// Sign of the real value; decided by sign analysis of p + q*sqrt5,
  /// squaring (p^2 vs 5q^2) only when the components disagree.
  int sign() const;

  bool is_zero() const { return p.is_zero() && q.is_zero(); }

  /// Exact floor. Requires the components to fit in int64 (all desk-scale
  /// uses do); throws std::overflow_error otherwise.
  BigInt floor() const;
  QuadNum frac() const;  // *this - floor()

  static QuadNum power(QuadNum base, unsigned e);

  double approx() const;        // for debug output only, never for decisions
  std::string to_string() const;
};

std::strong_ordering quad_cmp(const QuadNum& a, const QuadNum& b);

/// floor(n*phi), exact via integer square root of 5n^2.
long long floor_n_phi(long long n);

/// Point {n*phi} on the circle [0,1), stored symbolically by the integer n.
/// Distinct n denote distinct points (phi is irrational).
struct FracPoint {
  long long n = 0;
  QuadNum value() const;  // the exact fractional part as a QuadNum
  bool operator==(const FracPoint&) const = default;
};

/// Compares {a*phi} vs {b*phi}: -1, 0, +1. Zero only when a == b.
int frac_cmp(FracPoint a, FracPoint b);
inline bool frac_lt(FracPoint a, FracPoint b) { return frac_cmp(a, b) < 0; }

/// Circular arc from {left*phi} to {right*phi}, moving through increasing
/// residues mod 1 and wrapping past 1 when {left*phi} > {right*phi}.
struct CircInterval {
  FracPoint left, right;
  bool left_closed = true;
  bool right_closed = false;

  bool contains(FracPoint x) const;
  bool interior_contains(FracPoint x) const;
  QuadNum length() const;
  bool operator==(const CircInterval&) const = default;
};

/// The arc where the shifted Fibonacci word is 1:
/// f(n+c) = 1  iff  {n*phi} lies in [-(c+1)*phi, -(c+2)*phi) mod 1.
CircInterval fib_ones_interval(long long c = 0);

}  // namespace fibshift

#endif  // FIBSHIFT_GOLDEN_HPP
