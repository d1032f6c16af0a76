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

// Counting amicable Sturmian pairs and characterizing the 3x3 incidence
// matrices of their ternarizations, each with an exact formula and a
// brute-force counterpart.

#ifndef IET3_MATRICES_HPP_
#define IET3_MATRICES_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "iet3/amicability.hpp"
#include "iet3/matrix.hpp"
#include "iet3/morphism.hpp"

namespace iet3 {

// All non-negative 2x2 matrices with |det| = 1 and ||A|| <= max_norm, in
// lexicographic order of (p0, q0, p1, q1).
std::vector<IntMatrix2> unimodular_matrices(std::int64_t max_norm);

// m(||A|| - 1) + m(det A - m)/2 with m = min(p0 + p1, q0 + q1): the number
// of ordered amicable Sturmian pairs with incidence matrix A. Throws
// NotUnimodularError.
std::int64_t count_formula_total(const IntMatrix2& a);

// Number of ordered b-amicable Sturmian pairs with incidence matrix A.
std::int64_t count_formula_b(const IntMatrix2& a, std::int64_t b);

// Every ordered pair of enumerate_sturmian(a) tested for amicability,
// sorted by (k, kbar).
std::vector<AmicablePair> brute_force_pairs(const IntMatrix2& a);

// [[p0-b0, b0, q0-b0], [p-b, b, q-b], [p1-b1, b1, q1-b1]] with
// b = b0 + b1 + det A. Throws InfeasibleError if an entry is negative.
IntMatrix3 ternarization_matrix(const IntMatrix2& a, std::int64_t b0,
                                std::int64_t b1);

// Conditions (a) |b0(p1+q1) - b1(p0+q0)| < ||A|| and
// (b) (1-D)/2 <= b0+b1 <= min(p, q) - (D+1)/2, with D = det A.
bool satisfies_ternarization_conditions(const IntMatrix2& a, std::int64_t b0,
                                        std::int64_t b1);

// ternarization_matrix(a, b0, b1) over all (b0, b1) meeting the conditions
// with non-negative entries, sorted.
std::vector<IntMatrix3> admissible_ternarization_matrices(const IntMatrix2& a);

struct ClassificationWitness {
  IntMatrix2 a;
  std::int64_t b0;
  std::int64_t b1;
  std::int64_t delta;

  friend bool operator==(const ClassificationWitness&,
                         const ClassificationWitness&) = default;
};

// Reads (A, b0, b1, delta) off B and accepts iff B is the incidence matrix
// of some ternarization of an amicable Sturmian pair.
std::optional<ClassificationWitness> classify_matrix3(const IntMatrix3& b);

// E = [[0,1,1],[-1,0,1],[-1,-1,0]].
const IntMatrix3& e_matrix();

// +1 if B E B^T = E, -1 if B E B^T = -E, nothing otherwise.
std::optional<int> e_condition(const IntMatrix3& b);

// xi1 = (A->C, B->B, C->A).
const Morphism& xi1();
// xi2 = (A->B, B->ACA, C->A).
const Morphism& xi2();
// (A->B, B->CAC, C->C): 3iet-preserving, but not a ternarization.
const Morphism& cac_morphism();

struct ProbeEntry {
  std::string label;  // "eta", "eta^2", "eta.xi1", "eta.xi2", "eta.xi1.xi2"
  Morphism morphism;
  MembershipOutcome membership;
};

struct ProbeReport {
  std::vector<ProbeEntry> entries;
  bool any_member = false;
};

// Membership of eta, eta^2 and eta composed with xi1, xi2, xi1 o xi2.
ProbeReport conjecture_probe(const Morphism& eta);

}  // namespace iet3

#endif  // IET3_MATRICES_HPP_
