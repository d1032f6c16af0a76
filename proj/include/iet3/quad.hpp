// Copyright 2026 The iet3 Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact real numbers of the form (a + b*sqrt(d)) / c.
//
// Every value is kept in canonical form: c > 0, d square-free, d = 0 whenever
// b = 0, and gcd(a, b, c) = 1. Two canonical values are equal iff their
// coefficients are equal. Arithmetic and ordering are exact; binary
// operations require both operands to live in the same quadratic field
// (same d, or one of them rational).

#ifndef IET3_QUAD_HPP_
#define IET3_QUAD_HPP_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace iet3 {

class QuadNumber {
 public:
  constexpr QuadNumber() = default;
  // Integers convert implicitly so that `x + 1` and `x < 2` read naturally.
  constexpr QuadNumber(std::int64_t n) : a_(n) {}  // NOLINT
  // (a + b*sqrt(d)) / c. Throws DomainError for c = 0 or d < 0.
  QuadNumber(std::int64_t a, std::int64_t b, std::int64_t d, std::int64_t c);

  static QuadNumber rational(std::int64_t p, std::int64_t q);

  // Accepts "p", "p/q", "(a+b*sqrt(d))/c", "(a-sqrt(d))/c", "b*sqrt(d)+a"
  // and similar sums; whitespace is ignored. Throws ParseError naming the
  // offending token.
  static QuadNumber parse(std::string_view text);

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::int64_t d() const { return d_; }
  std::int64_t c() const { return c_; }
  bool is_rational() const { return b_ == 0; }
  bool is_integer() const { return b_ == 0 && c_ == 1; }

  // Unique integer n with n <= x < n + 1.
  std::int64_t floor() const;
  // x - floor(x), in [0, 1).
  QuadNumber frac() const;
  // Sign of the value: -1, 0 or +1.
  int sign() const;

  long double approx() const;
  std::string str() const;

  QuadNumber operator-() const;
  friend QuadNumber operator+(const QuadNumber& x, const QuadNumber& y);
  friend QuadNumber operator-(const QuadNumber& x, const QuadNumber& y);
  friend QuadNumber operator*(const QuadNumber& x, const QuadNumber& y);
  // Throws DomainError on division by zero.
  friend QuadNumber operator/(const QuadNumber& x, const QuadNumber& y);
  QuadNumber& operator+=(const QuadNumber& y) { return *this = *this + y; }
  QuadNumber& operator-=(const QuadNumber& y) { return *this = *this - y; }

  friend bool operator==(const QuadNumber&, const QuadNumber&) = default;
  friend std::strong_ordering operator<=>(const QuadNumber& x,
                                          const QuadNumber& y);

 private:
  struct Raw;
  static QuadNumber canonical(const Raw& raw);
  static std::int64_t common_radicand(const QuadNumber& x, const QuadNumber& y);

  std::int64_t a_ = 0;
  std::int64_t b_ = 0;
  std::int64_t d_ = 0;
  std::int64_t c_ = 1;
};

std::ostream& operator<<(std::ostream& os, const QuadNumber& x);

}  // namespace iet3

#endif  // IET3_QUAD_HPP_
