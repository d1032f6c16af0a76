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

#include <numeric>
#include <string>

#include "doctest.h"
#include "oracles.hpp"

#include "iet3/error.hpp"
#include "iet3/iet.hpp"

using iet3::QuadNumber;
using iet3::ThreeIET;
using iet3::TwoIET;

namespace {

QuadNumber q(const char* text) { return QuadNumber::parse(text); }

}  // namespace

TEST_CASE("two-interval codings") {
  CHECK(iet3::two_iet_code(TwoIET(q("2/3")), 0, 3).str() == "001");
  CHECK(iet3::two_iet_code(TwoIET(q("(-1+sqrt(5))/2")), 0, 3).str() == "001");
  CHECK(iet3::two_iet_code(TwoIET(1), 0, 2).str() == "00");
  CHECK(iet3::two_iet_code(TwoIET(0), 0, 2).str() == "11");
  CHECK_THROWS_AS(TwoIET(q("3/2")), iet3::DomainError);
  CHECK_THROWS_AS(TwoIET(-1), iet3::DomainError);
  CHECK_THROWS_AS(iet3::two_iet_code(TwoIET(q("1/2")), 1, 3), iet3::DomainError);
}

TEST_CASE("coding words w(k)") {
  CHECK(iet3::coding_word_k(2, 3, 0).str() == "001");
  CHECK(iet3::coding_word_k(2, 3, 1).str() == "010");
  CHECK(iet3::coding_word_k(2, 3, 2).str() == "100");
  CHECK_THROWS_AS(iet3::coding_word_k(2, 4, 0), iet3::PreconditionError);
  CHECK_THROWS_AS(iet3::coding_word_k(0, 3, 0), iet3::PreconditionError);
  CHECK_THROWS_AS(iet3::coding_word_k(3, 3, 0), iet3::PreconditionError);
}

TEST_CASE("three-interval codings") {
  const ThreeIET t(q("2/5"), q("3/10"));
  CHECK(iet3::three_iet_code(t, 0, 3).str() == "ABB");
  CHECK(iet3::three_iet_code(t, q("7/10"), 1).str() == "C");
  CHECK(iet3::three_iet_code(ThreeIET(q("(3-sqrt(5))/2"), q("1/4")), 0, 1).str() == "A");
  CHECK(t.gamma() == q("3/10"));
  CHECK_THROWS_AS(ThreeIET(q("1/2"), q("1/2")), iet3::DomainError);
  CHECK_THROWS_AS(ThreeIET(0, q("1/2")), iet3::DomainError);
  CHECK_THROWS_AS(ThreeIET(q("sqrt(2)-1"), q("sqrt(5)-2")), iet3::UnsupportedFieldError);
}

TEST_CASE("non-degenerate parameters") {
  CHECK_FALSE(iet3::is_nondegenerate_params(ThreeIET(q("1/4"), q("1/4"))));
  CHECK(iet3::is_nondegenerate_params(ThreeIET(q("(3-sqrt(5))/2"), q("1/4"))));
  CHECK_FALSE(iet3::is_nondegenerate_params(ThreeIET(q("(3-sqrt(5))/2"), q("sqrt(5)-2"))));
}

TEST_CASE("codings agree with iterating the exchange maps") {
  for (const char* slope : {"(-1+sqrt(5))/2", "(3-sqrt(5))/2", "sqrt(2)-1", "2/7"}) {
    for (const char* start : {"0", "1/3", "5/6"}) {
      const TwoIET t(q(slope));
      CHECK(iet3::two_iet_code(t, q(start), 200).str() ==
            oracle::two_iet_orbit(t, q(start), 200));
    }
  }
  const ThreeIET t(q("(3-sqrt(5))/2"), q("1/4"));
  CHECK(iet3::three_iet_code(t, 0, 300).str() == oracle::three_iet_orbit(t, 0, 300));
  const ThreeIET r(q("2/5"), q("3/10"));
  CHECK(iet3::three_iet_code(r, q("1/7"), 100).str() ==
        oracle::three_iet_orbit(r, q("1/7"), 100));
}

TEST_CASE("rational and residue engines agree; coding words are balanced") {
  for (std::int64_t n = 2; n <= 30; ++n) {
    for (std::int64_t p = 1; p < n; ++p) {
      if (std::gcd(p, n) != 1) continue;
      const TwoIET t(QuadNumber::rational(p, n));
      for (std::int64_t k = 0; k < n; ++k) {
        const iet3::Word w = iet3::coding_word_k(p, n, k);
        CHECK(w == iet3::two_iet_code(t, QuadNumber::rational(k, n), n));
        CHECK(oracle::balanced(w.str()));
        CHECK(static_cast<std::int64_t>(w.count(0)) == p);
      }
    }
  }
}

TEST_CASE("irrational slopes give Sturmian complexity on prefixes") {
  for (const char* slope : {"(-1+sqrt(5))/2", "(3-sqrt(5))/2", "sqrt(2)-1", "(sqrt(3))/2"}) {
    const iet3::Word w = iet3::two_iet_code(TwoIET(q(slope)), 0, 500);
    for (std::size_t m = 1; m <= 10; ++m) CHECK(iet3::factor_complexity(w, m) == m + 1);
  }
}
