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

#include "iet3/quad.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "iet3/error.hpp"

namespace iet3 {

namespace {

using i128 = __int128;

i128 abs128(i128 x) { return x < 0 ? -x : x; }

i128 gcd128(i128 x, i128 y) {
  x = abs128(x);
  y = abs128(y);
  while (y != 0) {
    const i128 t = x % y;
    x = y;
    y = t;
  }
  return x;
}

[[noreturn]] void overflow() {
  throw std::overflow_error("quadratic number coefficient overflow");
}

i128 mul(i128 x, i128 y) {
  i128 r;
  if (__builtin_mul_overflow(x, y, &r)) overflow();
  return r;
}

i128 add(i128 x, i128 y) {
  i128 r;
  if (__builtin_add_overflow(x, y, &r)) overflow();
  return r;
}

std::int64_t narrow(i128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    overflow();
  }
  return static_cast<std::int64_t>(v);
}

// floor(sqrt(v)) for v >= 0.
i128 isqrt(i128 v) {
  i128 r = static_cast<i128>(std::sqrt(static_cast<long double>(v)));
  while (r > 0 && mul(r, r) > v) --r;
  while (mul(r + 1, r + 1) <= v) ++r;
  return r;
}

i128 floor_div(i128 x, i128 y) {
  i128 q = x / y;
  if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
  return q;
}

std::int64_t parse_int(std::string_view token, std::string_view literal) {
  std::int64_t v = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && token.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (token.empty() || ec != std::errc() || ptr != last) {
    throw ParseError("invalid token '" + std::string(token) +
                     "' in quadratic literal '" + std::string(literal) + "'");
  }
  return v;
}

// One summand: "7", "3*sqrt(5)" or "sqrt(5)", without its sign.
QuadNumber parse_term(std::string_view term, std::string_view literal) {
  const auto root = term.find("sqrt(");
  if (root == std::string_view::npos) return QuadNumber(parse_int(term, literal));
  if (term.back() != ')') {
    throw ParseError("invalid token '" + std::string(term) +
                     "' in quadratic literal '" + std::string(literal) + "'");
  }
  std::int64_t coef = 1;
  if (root > 0) {
    const auto head = term.substr(0, root);
    if (head.back() != '*') {
      throw ParseError("invalid token '" + std::string(term) +
                       "' in quadratic literal '" + std::string(literal) + "'");
    }
    coef = parse_int(head.substr(0, head.size() - 1), literal);
  }
  const auto radicand = term.substr(root + 5, term.size() - root - 6);
  const std::int64_t d = parse_int(radicand, literal);
  if (d < 0) {
    throw ParseError("negative radicand '" + std::string(radicand) +
                     "' in quadratic literal '" + std::string(literal) + "'");
  }
  return QuadNumber(0, coef, d, 1);
}

// Signed sum of terms, split at '+'/'-' outside of parentheses.
QuadNumber parse_sum(std::string_view sum, std::string_view literal) {
  if (sum.empty()) {
    throw ParseError("empty expression in quadratic literal '" +
                     std::string(literal) + "'");
  }
  QuadNumber total;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= sum.size(); ++i) {
    const bool at_end = i == sum.size();
    if (!at_end) {
      const char ch = sum[i];
      if (ch == '(') ++depth;
      if (ch == ')') --depth;
      if (depth < 0) {
        throw ParseError("unbalanced ')' in quadratic literal '" +
                         std::string(literal) + "'");
      }
    }
    const bool split = at_end || (depth == 0 && i > start &&
                                  (sum[i] == '+' || sum[i] == '-') &&
                                  sum[i - 1] != '*');
    if (!split) continue;
    auto term = sum.substr(start, i - start);
    bool negative = false;
    if (!term.empty() && (term.front() == '+' || term.front() == '-')) {
      negative = term.front() == '-';
      term.remove_prefix(1);
    }
    if (term.empty()) {
      throw ParseError("dangling sign in quadratic literal '" +
                       std::string(literal) + "'");
    }
    const QuadNumber t = parse_term(term, literal);
    total = negative ? total - t : total + t;
    start = i;
  }
  if (depth != 0) {
    throw ParseError("unbalanced '(' in quadratic literal '" +
                     std::string(literal) + "'");
  }
  return total;
}

}  // namespace

struct QuadNumber::Raw {
  i128 a;
  i128 b;
  i128 d;
  i128 c;
};

QuadNumber QuadNumber::canonical(const Raw& raw) {
  i128 a = raw.a, b = raw.b, d = raw.d, c = raw.c;
  if (c == 0) throw DomainError("zero denominator in quadratic number");
  if (d < 0) throw DomainError("negative radicand in quadratic number");
  if (b != 0 && d > 1) {
    for (i128 f = 2; f * f <= d; ++f) {
      while (d % (f * f) == 0) {
        d /= f * f;
        b = mul(b, f);
      }
    }
  }
  if (d == 1) {
    a = add(a, b);
    b = 0;
  }
  if (b == 0 || d == 0) {
    b = 0;
    d = 0;
  }
  if (c < 0) {
    a = -a;
    b = -b;
    c = -c;
  }
  const i128 g = gcd128(gcd128(a, b), c);
  if (g > 1) {
    a /= g;
    b /= g;
    c /= g;
  }
  QuadNumber out;
  out.a_ = narrow(a);
  out.b_ = narrow(b);
  out.d_ = narrow(d);
  out.c_ = narrow(c);
  return out;
}

QuadNumber::QuadNumber(std::int64_t a, std::int64_t b, std::int64_t d,
                       std::int64_t c)
    : QuadNumber(canonical(Raw{a, b, d, c})) {}

QuadNumber QuadNumber::rational(std::int64_t p, std::int64_t q) {
  return canonical(Raw{p, 0, 0, q});
}

std::int64_t QuadNumber::common_radicand(const QuadNumber& x,
                                         const QuadNumber& y) {
  if (x.b_ == 0) return y.d_;
  if (y.b_ == 0) return x.d_;
  if (x.d_ != y.d_) {
    throw UnsupportedFieldError("cannot combine sqrt(" + std::to_string(x.d_) +
                                ") and sqrt(" + std::to_string(y.d_) + ")");
  }
  return x.d_;
}

QuadNumber QuadNumber::operator-() const {
  QuadNumber out = *this;
  out.a_ = narrow(-static_cast<i128>(a_));
  out.b_ = narrow(-static_cast<i128>(b_));
  return out;
}

QuadNumber operator+(const QuadNumber& x, const QuadNumber& y) {
  const i128 d = QuadNumber::common_radicand(x, y);
  return QuadNumber::canonical(
      {add(mul(x.a_, y.c_), mul(y.a_, x.c_)),
       add(mul(x.b_, y.c_), mul(y.b_, x.c_)), d, mul(x.c_, y.c_)});
}

QuadNumber operator-(const QuadNumber& x, const QuadNumber& y) {
  return x + (-y);
}

QuadNumber operator*(const QuadNumber& x, const QuadNumber& y) {
  const i128 d = QuadNumber::common_radicand(x, y);
  return QuadNumber::canonical(
      {add(mul(x.a_, y.a_), mul(mul(x.b_, y.b_), d)),
       add(mul(x.a_, y.b_), mul(x.b_, y.a_)), d, mul(x.c_, y.c_)});
}

QuadNumber operator/(const QuadNumber& x, const QuadNumber& y) {
  if (y.sign() == 0) throw DomainError("division by zero");
  const i128 d = QuadNumber::common_radicand(x, y);
  // Multiply through by the conjugate of y; its norm is a non-zero integer.
  const i128 norm = add(mul(y.a_, y.a_), -mul(mul(y.b_, y.b_), d));
  const i128 ca = mul(y.c_, y.a_);
  const i128 cb = mul(y.c_, y.b_);
  return QuadNumber::canonical(
      {add(mul(x.a_, ca), -mul(mul(x.b_, cb), d)),
       add(mul(x.b_, ca), -mul(x.a_, cb)), d, mul(x.c_, norm)});
}

int QuadNumber::sign() const {
  const int sa = (a_ > 0) - (a_ < 0);
  const int sb = (b_ > 0) - (b_ < 0);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // a and b*sqrt(d) have opposite signs; the larger magnitude wins. The
  // squares never tie because d is not a perfect square.
  const i128 a2 = mul(a_, a_);
  const i128 b2d = mul(mul(b_, b_), d_);
  return a2 > b2d ? sa : sb;
}

std::strong_ordering operator<=>(const QuadNumber& x, const QuadNumber& y) {
  const int s = (x - y).sign();
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater
                        : std::strong_ordering::equal);
}

std::int64_t QuadNumber::floor() const {
  // s = floor(b*sqrt(d)); then a + b*sqrt(d) lies in [a + s, a + s + 1).
  i128 s = 0;
  if (b_ != 0) {
    const i128 r = isqrt(mul(mul(b_, b_), d_));
    s = b_ > 0 ? r : -r - 1;
  }
  std::int64_t n = narrow(floor_div(add(a_, s), c_));
  if (*this >= QuadNumber(n) + 1) ++n;
  return n;
}

QuadNumber QuadNumber::frac() const { return *this - QuadNumber(floor()); }

long double QuadNumber::approx() const {
  return (static_cast<long double>(a_) +
          static_cast<long double>(b_) * std::sqrt(static_cast<long double>(d_))) /
         static_cast<long double>(c_);
}

std::string QuadNumber::str() const {
  if (b_ == 0) {
    return c_ == 1 ? std::to_string(a_)
                   : std::to_string(a_) + "/" + std::to_string(c_);
  }
  std::string s = "(" + std::to_string(a_);
  s += b_ < 0 ? "-" : "+";
  const i128 magnitude = abs128(b_);
  s += std::to_string(static_cast<unsigned long long>(magnitude));
  s += "*sqrt(" + std::to_string(d_) + "))/" + std::to_string(c_);
  return s;
}

QuadNumber QuadNumber::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (ch != ' ' && ch != '\t') s.push_back(ch);
  }
  if (s.empty()) throw ParseError("empty quadratic literal");
  std::string_view v = s;

  bool negate = false;
  if (v.size() > 1 && v[0] == '-' && v[1] == '(') {
    negate = true;
    v.remove_prefix(1);
  }
  QuadNumber value;
  if (v.front() == '(') {
    int depth = 0;
    std::size_t close = std::string_view::npos;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] == '(') ++depth;
      if (v[i] == ')' && --depth == 0) {
        close = i;
        break;
      }
    }
    if (close == std::string_view::npos) {
      throw ParseError("unbalanced '(' in quadratic literal '" +
                       std::string(text) + "'");
    }
    value = parse_sum(v.substr(1, close - 1), text);
    auto rest = v.substr(close + 1);
    if (!rest.empty()) {
      if (rest.front() != '/') {
        throw ParseError("invalid token '" + std::string(rest) +
                         "' in quadratic literal '" + std::string(text) + "'");
      }
      const std::int64_t q = parse_int(rest.substr(1), text);
      if (q == 0) throw ParseError("zero denominator in quadratic literal '" +
                                   std::string(text) + "'");
      value = value / QuadNumber(q);
    }
  } else if (const auto slash = v.find('/'); slash != std::string_view::npos) {
    const std::int64_t p = parse_int(v.substr(0, slash), text);
    const std::int64_t q = parse_int(v.substr(slash + 1), text);
    if (q == 0) throw ParseError("zero denominator in quadratic literal '" +
                                 std::string(text) + "'");
    value = rational(p, q);
  } else {
    value = parse_sum(v, text);
  }
  return negate ? -value : value;
}

std::ostream& operator<<(std::ostream& os, const QuadNumber& x) {
  return os << x.str();
}

}  // namespace iet3
