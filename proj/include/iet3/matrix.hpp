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

// Small square integer matrices. Rows of an incidence matrix are the Parikh
// vectors of the letter images.

#ifndef IET3_MATRIX_HPP_
#define IET3_MATRIX_HPP_

#include <algorithm>
#include <array>
#include <charconv>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "iet3/error.hpp"

namespace iet3 {

template <std::size_t N>
struct IntMatrix {
  static_assert(N == 2 || N == 3);

  std::array<std::array<std::int64_t, N>, N> rows{};

  static IntMatrix identity() {
    IntMatrix m;
    for (std::size_t i = 0; i < N; ++i) m.rows[i][i] = 1;
    return m;
  }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return rows[r][c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const {
    return rows[r][c];
  }

  // Sum of all entries.
  std::int64_t norm() const {
    std::int64_t s = 0;
    for (const auto& row : rows) {
      for (auto x : row) s += x;
    }
    return s;
  }

  std::int64_t det() const {
    const auto& m = rows;
    if constexpr (N == 2) {
      return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    } else {
      return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
             m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
             m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    }
  }

  bool non_negative() const {
    for (const auto& row : rows) {
      if (std::any_of(row.begin(), row.end(), [](auto x) { return x < 0; })) {
        return false;
      }
    }
    return true;
  }

  IntMatrix transpose() const {
    IntMatrix t;
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = 0; j < N; ++j) t.rows[j][i] = rows[i][j];
    }
    return t;
  }

  IntMatrix operator-() const {
    IntMatrix t = *this;
    for (auto& row : t.rows) {
      for (auto& x : row) x = -x;
    }
    return t;
  }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    IntMatrix z;
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t k = 0; k < N; ++k) {
        for (std::size_t j = 0; j < N; ++j) z.rows[i][j] += x.rows[i][k] * y.rows[k][j];
      }
    }
    return z;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;

  // "r00,r01;r10,r11" (rows separated by semicolons).
  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < N; ++i) {
      if (i > 0) s += ';';
      for (std::size_t j = 0; j < N; ++j) {
        if (j > 0) s += ',';
        s += std::to_string(rows[i][j]);
      }
    }
    return s;
  }

  // Inverse of str(); whitespace is ignored. Throws ParseError.
  static IntMatrix parse(std::string_view text) {
    std::string compact;
    for (char ch : text) {
      if (ch != ' ' && ch != '\t') compact.push_back(ch);
    }
    IntMatrix m;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = 0; j < N; ++j) {
        const char sep = j + 1 < N ? ',' : (i + 1 < N ? ';' : '\0');
        std::size_t end = sep == '\0' ? compact.size() : compact.find(sep, pos);
        if (end == std::string::npos) {
          throw ParseError("matrix literal '" + std::string(text) + "' needs " +
                           std::to_string(N) + "x" + std::to_string(N) +
                           " entries");
        }
        const std::string_view token =
            std::string_view(compact).substr(pos, end - pos);
        auto [ptr, ec] = std::from_chars(token.data(),
                                         token.data() + token.size(),
                                         m.rows[i][j]);
        if (token.empty() || ec != std::errc() ||
            ptr != token.data() + token.size()) {
          throw ParseError("invalid matrix entry '" + std::string(token) +
                           "' in '" + std::string(text) + "'");
        }
        pos = end + 1;
      }
    }
    return m;
  }
};

template <std::size_t N>
std::ostream& operator<<(std::ostream& os, const IntMatrix<N>& m) {
  return os << '[' << m.str() << ']';
}

using IntMatrix2 = IntMatrix<2>;
using IntMatrix3 = IntMatrix<3>;

// Named quantities of A = [[p0, q0], [p1, q1]].
struct MatrixParams {
  std::int64_t p0, q0, p1, q1;
  std::int64_t p;      // p0 + p1, number of 0s in phi(01)
  std::int64_t q;      // q0 + q1
  std::int64_t n;      // p + q = ||A||
  std::int64_t delta;  // det A
  std::int64_t m;      // min(p, q)
};

inline MatrixParams params(const IntMatrix2& a) {
  MatrixParams r{a(0, 0), a(0, 1), a(1, 0), a(1, 1), 0, 0, 0, 0, 0};
  r.p = r.p0 + r.p1;
  r.q = r.q0 + r.q1;
  r.n = r.p + r.q;
  r.delta = a.det();
  r.m = std::min(r.p, r.q);
  return r;
}

// Non-negative with determinant +1 or -1.
inline bool is_unimodular(const IntMatrix2& a) {
  const auto d = a.det();
  return a.non_negative() && (d == 1 || d == -1);
}

}  // namespace iet3

#endif  // IET3_MATRIX_HPP_
