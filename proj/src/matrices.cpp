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

#include "iet3/matrices.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <tuple>

#include "iet3/error.hpp"

namespace iet3 {

namespace {

void require_unimodular(const IntMatrix2& a) {
  if (!is_unimodular(a)) {
    throw NotUnimodularError("matrix " + a.str() +
                             " is not a non-negative matrix with det +-1");
  }
}

}  // namespace

std::vector<IntMatrix2> unimodular_matrices(std::int64_t max_norm) {
  std::vector<IntMatrix2> out;
  for (std::int64_t p0 = 0; p0 <= max_norm; ++p0) {
    for (std::int64_t q0 = 0; p0 + q0 <= max_norm; ++q0) {
      for (std::int64_t p1 = 0; p0 + q0 + p1 <= max_norm; ++p1) {
        for (std::int64_t q1 = 0; p0 + q0 + p1 + q1 <= max_norm; ++q1) {
          const IntMatrix2 a{{{{p0, q0}, {p1, q1}}}};
          if (std::abs(a.det()) == 1) out.push_back(a);
        }
      }
    }
  }
  return out;
}

std::int64_t count_formula_total(const IntMatrix2& a) {
  require_unimodular(a);
  const auto prm = params(a);
  // m(delta - m) is always even: one of m, m +- 1 is.
  return prm.m * (prm.n - 1) + prm.m * (prm.delta - prm.m) / 2;
}

std::int64_t count_formula_b(const IntMatrix2& a, std::int64_t b) {
  require_unimodular(a);
  const auto prm = params(a);
  if (prm.delta == 1 && 1 <= b && b <= prm.m) return prm.n - b;
  if (prm.delta == -1 && 0 <= b && b <= prm.m - 1) return prm.n - b - 2;
  return 0;
}

std::vector<AmicablePair> brute_force_pairs(const IntMatrix2& a) {
  const auto chain = enumerate_sturmian(a);
  std::vector<AmicablePair> pairs;
  for (const Morphism& phi : chain) {
    for (const Morphism& psi : chain) {
      if (auto pair = make_amicable_pair(phi, psi)) {
        pairs.push_back(std::move(*pair));
      }
    }
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const AmicablePair& x, const AmicablePair& y) {
              return std::tie(x.k, x.kbar) < std::tie(y.k, y.kbar);
            });
  return pairs;
}

IntMatrix3 ternarization_matrix(const IntMatrix2& a, std::int64_t b0,
                                std::int64_t b1) {
  require_unimodular(a);
  const auto prm = params(a);
  const std::int64_t b = b0 + b1 + prm.delta;
  const IntMatrix3 m{{{{prm.p0 - b0, b0, prm.q0 - b0},
                       {prm.p - b, b, prm.q - b},
                       {prm.p1 - b1, b1, prm.q1 - b1}}}};
  if (!m.non_negative()) {
    throw InfeasibleError("b0=" + std::to_string(b0) + ", b1=" +
                          std::to_string(b1) + " give a negative entry for A=" +
                          a.str());
  }
  return m;
}

bool satisfies_ternarization_conditions(const IntMatrix2& a, std::int64_t b0,
                                        std::int64_t b1) {
  const auto prm = params(a);
  if (b0 < 0 || b1 < 0) return false;
  // (a) with the denominator ||A|| cleared.
  if (std::abs(b0 * (prm.p1 + prm.q1) - b1 * (prm.p0 + prm.q0)) >= prm.n) {
    return false;
  }
  // (b); 1 - delta and delta + 1 are both even.
  const std::int64_t sum = b0 + b1;
  return (1 - prm.delta) / 2 <= sum && sum <= prm.m - (prm.delta + 1) / 2;
}

std::vector<IntMatrix3> admissible_ternarization_matrices(const IntMatrix2& a) {
  require_unimodular(a);
  const auto prm = params(a);
  std::vector<IntMatrix3> out;
  for (std::int64_t b0 = 0; b0 <= std::min(prm.p0, prm.q0); ++b0) {
    for (std::int64_t b1 = 0; b1 <= std::min(prm.p1, prm.q1); ++b1) {
      if (!satisfies_ternarization_conditions(a, b0, b1)) continue;
      const std::int64_t b = b0 + b1 + prm.delta;
      if (b < 0 || b > prm.m) continue;
      out.push_back(ternarization_matrix(a, b0, b1));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<ClassificationWitness> classify_matrix3(const IntMatrix3& m) {
  if (!m.non_negative()) return std::nullopt;
  const std::int64_t b0 = m(0, 1);
  const std::int64_t b1 = m(2, 1);
  const std::int64_t b = m(1, 1);
  const std::int64_t delta = b - b0 - b1;
  if (delta != 1 && delta != -1) return std::nullopt;
  const IntMatrix2 a{{{{m(0, 0) + b0, m(0, 2) + b0},
                       {m(2, 0) + b1, m(2, 2) + b1}}}};
  if (a.det() != delta) return std::nullopt;
  const auto prm = params(a);
  if (m(1, 0) != prm.p - b || m(1, 2) != prm.q - b) return std::nullopt;
  if (!satisfies_ternarization_conditions(a, b0, b1)) return std::nullopt;
  return ClassificationWitness{a, b0, b1, delta};
}

const IntMatrix3& e_matrix() {
  static const IntMatrix3 e{{{{0, 1, 1}, {-1, 0, 1}, {-1, -1, 0}}}};
  return e;
}

std::optional<int> e_condition(const IntMatrix3& b) {
  const IntMatrix3 product = b * e_matrix() * b.transpose();
  if (product == e_matrix()) return 1;
  if (product == -e_matrix()) return -1;
  return std::nullopt;
}

const Morphism& xi1() {
  static const Morphism m = Morphism::ternary("C", "B", "A");
  return m;
}

const Morphism& xi2() {
  static const Morphism m = Morphism::ternary("B", "ACA", "A");
  return m;
}

const Morphism& cac_morphism() {
  static const Morphism m = Morphism::ternary("B", "CAC", "C");
  return m;
}

ProbeReport conjecture_probe(const Morphism& eta) {
  if (eta.alphabet() != Alphabet::kTernary) {
    throw AlphabetError("the probe takes a ternary morphism");
  }
  const std::vector<std::pair<std::string, Morphism>> candidates = {
      {"eta", eta},
      {"eta^2", compose(eta, eta)},
      {"eta.xi1", compose(eta, xi1())},
      {"eta.xi2", compose(eta, xi2())},
      {"eta.xi1.xi2", compose(eta, compose(xi1(), xi2()))},
  };
  ProbeReport report;
  for (const auto& [label, morphism] : candidates) {
    auto membership = check_ternarization(morphism);
    report.any_member = report.any_member || membership.pair.has_value();
    report.entries.push_back({label, morphism, std::move(membership)});
  }
  return report;
}

}  // namespace iet3
