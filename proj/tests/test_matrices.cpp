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

#include <map>
#include <set>

#include "doctest.h"
#include "oracles.hpp"

#include "iet3/amicability.hpp"
#include "iet3/error.hpp"
#include "iet3/matrices.hpp"

using iet3::Alphabet;
using iet3::IntMatrix2;
using iet3::IntMatrix3;
using iet3::Morphism;

namespace {

IntMatrix2 mat(const char* text) { return IntMatrix2::parse(text); }
IntMatrix3 mat3(const char* text) { return IntMatrix3::parse(text); }

}  // namespace

TEST_CASE("unimodular sweep matches a direct enumeration") {
  for (std::int64_t n : {0, 2, 5, 12}) CHECK(iet3::unimodular_matrices(n) == oracle::unimodular(n));
  CHECK(iet3::unimodular_matrices(12).size() == 90);
}

TEST_CASE("count formulas") {
  CHECK(iet3::count_formula_total(mat("2,1;3,2")) == 18);
  CHECK(iet3::count_formula_total(IntMatrix2::identity()) == 1);
  CHECK(iet3::count_formula_total(mat("0,1;1,0")) == 0);
  CHECK(iet3::count_formula_b(mat("2,1;3,2"), 1) == 7);
  CHECK(iet3::count_formula_b(mat("2,1;3,2"), 0) == 0);
  CHECK(iet3::count_formula_b(mat("1,1;1,0"), 0) == 1);
  CHECK(iet3::count_formula_b(mat("2,1;3,2"), 4) == 0);
  CHECK(iet3::count_formula_b(mat("2,1;3,2"), -1) == 0);
  CHECK_THROWS_AS(iet3::count_formula_total(mat("1,1;1,1")), iet3::NotUnimodularError);
  CHECK_THROWS_AS(iet3::count_formula_b(mat("2,0;0,1"), 0), iet3::NotUnimodularError);
}

TEST_CASE("brute-force pairs") {
  const auto one = iet3::brute_force_pairs(mat("1,1;1,0"));
  REQUIRE(one.size() == 1);
  CHECK(one[0].phi == Morphism::binary("01", "0"));
  CHECK(one[0].psi == Morphism::binary("10", "0"));
  CHECK(one[0].b0 == 1);
  CHECK(one[0].b1 == 0);
  CHECK(one[0].b == 0);
  CHECK(one[0].eta == iet3::xi2());
  CHECK(iet3::brute_force_pairs(mat("0,1;1,0")).empty());
  const auto many = iet3::brute_force_pairs(mat("2,1;3,2"));
  CHECK(many.size() == 18);
  bool found = false;
  for (const auto& p : many) {
    if (p.phi == Morphism::binary("001", "00101") && p.psi == Morphism::binary("010", "01001")) {
      found = p.b0 == 1 && p.b1 == 1 && p.b == 3;
    }
  }
  CHECK(found);
  for (std::size_t i = 1; i < many.size(); ++i) {
    CHECK(std::pair(many[i - 1].k, many[i - 1].kbar) < std::pair(many[i].k, many[i].kbar));
  }
}

TEST_CASE("ternarization matrices") {
  CHECK(iet3::ternarization_matrix(mat("2,1;3,2"), 1, 1) == mat3("1,1,0;2,3,0;2,1,1"));
  CHECK(iet3::ternarization_matrix(IntMatrix2::identity(), 0, 0) == IntMatrix3::identity());
  CHECK(iet3::ternarization_matrix(mat("1,1;1,0"), 1, 0) == mat3("0,1,0;2,0,1;1,0,0"));
  CHECK(iet3::ternarization_matrix(mat("1,1;1,0"), 1, 0) == iet3::incidence_matrix3(iet3::xi2()));
  CHECK_THROWS_AS(iet3::ternarization_matrix(mat("2,1;3,2"), 3, 0), iet3::InfeasibleError);
  CHECK(iet3::satisfies_ternarization_conditions(mat("2,1;3,2"), 1, 1));
  CHECK(iet3::satisfies_ternarization_conditions(mat("2,1;3,2"), 0, 0));
  CHECK_FALSE(iet3::satisfies_ternarization_conditions(mat("2,1;3,2"), 2, 0));
}

TEST_CASE("classification") {
  CHECK(iet3::classify_matrix3(mat3("1,1,0;2,3,0;2,1,1")) ==
        iet3::ClassificationWitness{mat("2,1;3,2"), 1, 1, 1});
  CHECK(iet3::classify_matrix3(IntMatrix3::identity()) ==
        iet3::ClassificationWitness{IntMatrix2::identity(), 0, 0, 1});
  CHECK_FALSE(iet3::classify_matrix3(mat3("0,0,1;0,1,0;1,0,0")).has_value());
  CHECK_FALSE(iet3::classify_matrix3(mat3("1,1,1;1,1,1;1,1,1")).has_value());
}

TEST_CASE("E-condition") {
  CHECK(iet3::e_condition(IntMatrix3::identity()) == 1);
  CHECK(iet3::e_condition(mat3("0,0,1;0,1,0;1,0,0")) == -1);
  CHECK(iet3::e_condition(mat3("1,1,0;2,3,0;2,1,1")).has_value());
  CHECK_FALSE(iet3::e_condition(mat3("1,1,0;0,1,0;0,0,1")).has_value());
  CHECK(iet3::e_matrix() == mat3("0,1,1;-1,0,1;-1,-1,0"));
}

TEST_CASE("named morphisms") {
  CHECK(iet3::xi1() == Morphism::ternary("C", "B", "A"));
  CHECK(iet3::xi2() == Morphism::ternary("B", "ACA", "A"));
  CHECK(iet3::cac_morphism() == Morphism::ternary("B", "CAC", "C"));
}

TEST_CASE("conjecture probe") {
  const auto report = iet3::conjecture_probe(iet3::cac_morphism());
  CHECK(report.any_member);
  REQUIRE(report.entries.size() == 5);
  CHECK(report.entries[0].label == "eta");
  CHECK_FALSE(report.entries[0].membership.pair.has_value());
  CHECK(report.entries[2].label == "eta.xi1");
  CHECK(report.entries[2].morphism == Morphism::ternary("C", "CAC", "B"));
  CHECK(report.entries[2].membership.pair ==
        iet3::MorphismPair{Morphism::binary("1", "01"), Morphism::binary("1", "10")});
  const auto identity = iet3::conjecture_probe(Morphism::identity(Alphabet::kTernary));
  CHECK(identity.entries[0].membership.pair.has_value());
  const auto swap = iet3::conjecture_probe(iet3::xi1());
  CHECK_FALSE(swap.entries[0].membership.pair.has_value());
  // xi1 o xi1 is the identity.
  CHECK(swap.entries[1].membership.pair.has_value());
  CHECK(swap.any_member);
}

TEST_CASE("counts agree with an independent pair search") {
  for (const IntMatrix2& a : oracle::unimodular(9)) {
    const auto bs = oracle::amicable_pair_bs(a);
    CHECK(static_cast<std::int64_t>(bs.size()) == iet3::count_formula_total(a));
    CHECK(iet3::brute_force_pairs(a).size() == bs.size());
    std::map<std::int64_t, std::int64_t> histogram;
    for (int b : bs) ++histogram[b];
    for (std::int64_t b = -1; b <= a.norm() + 1; ++b) {
      CHECK(histogram[b] == iet3::count_formula_b(a, b));
    }
  }
}

TEST_CASE("per-b counts sum to the total up to norm 40") {
  for (const IntMatrix2& a : oracle::unimodular(40)) {
    std::int64_t sum = 0;
    for (std::int64_t b = 0; b <= a.norm(); ++b) sum += iet3::count_formula_b(a, b);
    CHECK(sum == iet3::count_formula_total(a));
  }
}

TEST_CASE("matrix construction agrees with the conjugated block form") {
  for (const IntMatrix2& a : oracle::unimodular(14)) {
    for (std::int64_t b0 = 0; b0 <= a.norm(); ++b0) {
      for (std::int64_t b1 = 0; b1 <= a.norm(); ++b1) {
        const IntMatrix3 expected = oracle::conjugated_block(a, b0, b1);
        if (!expected.non_negative()) {
          CHECK_THROWS_AS(iet3::ternarization_matrix(a, b0, b1), iet3::InfeasibleError);
          continue;
        }
        CHECK(iet3::ternarization_matrix(a, b0, b1) == expected);
        if (iet3::satisfies_ternarization_conditions(a, b0, b1)) {
          CHECK(iet3::classify_matrix3(expected) ==
                iet3::ClassificationWitness{a, b0, b1, a.det()});
        }
      }
    }
  }
}

TEST_CASE("brute-forced matrices: set equality, E-condition, lengths") {
  for (const IntMatrix2& a : oracle::unimodular(8)) {
    std::set<IntMatrix3> brute;
    for (const auto& pair : iet3::brute_force_pairs(a)) {
      const IntMatrix3 b = iet3::incidence_matrix3(pair.eta);
      brute.insert(b);
      CHECK(oracle::e_sign(b).has_value());
      CHECK(iet3::e_condition(b) == oracle::e_sign(b));
      for (std::size_t row = 0; row < 3; ++row) {
        CHECK(b(row, 0) + b(row, 1) + b(row, 2) ==
              static_cast<std::int64_t>(pair.eta.image(static_cast<iet3::Letter>(row)).size()));
      }
      CHECK(b == oracle::conjugated_block(a, pair.b0, pair.b1));
    }
    const auto admissible = iet3::admissible_ternarization_matrices(a);
    CHECK(std::vector<IntMatrix3>(brute.begin(), brute.end()) == admissible);
  }
  CHECK(oracle::e_sign(iet3::incidence_matrix3(iet3::xi1())) == -1);
}
