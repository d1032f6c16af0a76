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

#include <cmath>
#include <random>
#include <string>

#include "doctest.h"

#include "iet3/error.hpp"
#include "iet3/quad.hpp"

using iet3::QuadNumber;

namespace {

QuadNumber q(const char* text) { return QuadNumber::parse(text); }

}  // namespace

TEST_CASE("canonical form and printing") {
  CHECK(q("(1+sqrt(5))/2").str() == "(1+1*sqrt(5))/2");
  CHECK(q("(3-sqrt(5))/2").str() == "(3-1*sqrt(5))/2");
  CHECK(q("(2+2*sqrt(5))/4") == q("(1+sqrt(5))/2"));
  CHECK(q("sqrt(20)") == q("2*sqrt(5)"));
  CHECK(q("sqrt(9)") == QuadNumber(3));
  CHECK(q("6/4").str() == "3/2");
  CHECK(q("2/4") == QuadNumber::rational(1, 2));
  CHECK(q("sqrt(5)-2") == QuadNumber(-2, 1, 5, 1));
  CHECK(q("-(1+sqrt(5))/2") == -q("(1+sqrt(5))/2"));
  CHECK(QuadNumber(7).str() == "7");
  for (const char* text : {"(1+1*sqrt(5))/2", "(3-1*sqrt(5))/2", "-7/3", "0",
                           "(-2+1*sqrt(5))/1", "(5+3*sqrt(2))/7"}) {
    CHECK(QuadNumber::parse(q(text).str()) == q(text));
  }
}

TEST_CASE("parse errors name the offending token") {
  auto message = [](const char* text) {
    try {
      QuadNumber::parse(text);
    } catch (const iet3::ParseError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message("(1+sqrt(x))/2").find("x") != std::string::npos);
  CHECK(message("1+foo").find("foo") != std::string::npos);
  CHECK(message("(3-sqrt(5)/2").find("unbalanced") != std::string::npos);
  CHECK_FALSE(message("").empty());
  CHECK_FALSE(message("1/0").empty());
  CHECK_FALSE(message("sqrt(-5)").empty());
}

TEST_CASE("arithmetic") {
  const QuadNumber phi = q("(1+sqrt(5))/2");
  CHECK(phi * phi == phi + 1);
  CHECK(phi - phi == QuadNumber(0));
  CHECK(QuadNumber(1) / phi == phi - 1);
  CHECK(q("1/3") + q("1/6") == q("1/2"));
  CHECK_THROWS_AS(phi + q("sqrt(2)"), iet3::UnsupportedFieldError);
  CHECK_THROWS_AS(phi / QuadNumber(0), iet3::DomainError);
  CHECK_THROWS_AS(QuadNumber(1, 1, 5, 0), iet3::DomainError);
}

TEST_CASE("comparison, floor and frac") {
  CHECK(q("(1+sqrt(5))/2").floor() == 1);
  CHECK(q("(-1+sqrt(5))/2") < q("2/3"));
  CHECK((-q("(-1+sqrt(5))/2")).frac() == q("(3-sqrt(5))/2"));
  CHECK(q("-1/2").floor() == -1);
  CHECK(q("-2").floor() == -2);
  CHECK(q("7/2").frac() == q("1/2"));
  CHECK(q("sqrt(2)-1").floor() == 0);
  CHECK(q("1-sqrt(2)").floor() == -1);
  CHECK(q("(-1-sqrt(5))/2").floor() == -2);
  CHECK(q("sqrt(5)-2").sign() == 1);
  CHECK(q("2-sqrt(5)").sign() == -1);
}

TEST_CASE("comparison and floor agree with long double on random values") {
  std::mt19937_64 rng(5);
  const std::int64_t radicands[] = {2, 3, 5, 7};
  auto pick = [&](std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::int64_t d = radicands[rng() % 4];
    const QuadNumber x(pick(-50, 50), pick(-20, 20), d, pick(1, 30));
    const QuadNumber y(pick(-50, 50), pick(-20, 20), d, pick(1, 30));
    const long double gap = x.approx() - y.approx();
    if (std::fabs(static_cast<double>(gap)) > 1e-9) {
      CHECK((x < y) == (gap < 0));
      ++checked;
    }
    const long double fx = std::floor(x.approx());
    if (std::fabs(static_cast<double>(x.approx() - fx)) > 1e-9) {
      CHECK(x.floor() == static_cast<std::int64_t>(fx));
    }
    const QuadNumber f = x.frac();
    CHECK(f >= QuadNumber(0));
    CHECK(f < QuadNumber(1));
  }
  CHECK(checked > 900);
}
