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

// Amicability of binary words and Sturmian morphisms, and ternarization.
//
// The projections sigma01, sigma10 : {A,B,C}* -> {0,1}* send A -> 0, C -> 1
// and B -> 01 (resp. 10). A binary word w is b-amicable to w' when both are
// projections of one ternary factor v with |v|_B = b; v is then the
// ternarization ter(w, w'). For finite words, "factor of a 3iet word" is
// decided as "both projections are balanced".

#ifndef IET3_AMICABILITY_HPP_
#define IET3_AMICABILITY_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "iet3/iet.hpp"
#include "iet3/morphism.hpp"
#include "iet3/words.hpp"

namespace iet3 {

enum class Projection { k01, k10 };

std::string_view projection_name(Projection which);  // "sigma01" / "sigma10"

Word sigma(const Word& v, Projection which);

struct AmicabilityWitness {
  Word v;          // ternary, sigma01(v) = w and sigma10(v) = w'
  std::int64_t b;  // |v|_B
};

// Either a witness or the reason the scan failed (with the position).
struct TernarizeOutcome {
  std::optional<AmicabilityWitness> witness;
  std::string reason;
};

TernarizeOutcome try_ternarize_words(const Word& w, const Word& w2);

// Simultaneous scan of w and w2: equal letters give A or C, a 01 block over a
// 10 block gives B. Throws NotAmicableError naming the failing position.
AmicabilityWitness ternarize_words(const Word& w, const Word& w2);

std::optional<std::int64_t> amicable_words_b(const Word& w, const Word& w2);

struct AmicableCounts {
  std::int64_t b0;  // B's in ter(phi(0), psi(0))
  std::int64_t b1;  // B's in ter(phi(1), psi(1))
  std::int64_t b;   // B's in ter(phi(01), psi(10))

  friend bool operator==(const AmicableCounts&, const AmicableCounts&) = default;
};

// Present iff phi and psi are Sturmian and phi(0) ~ psi(0),
// phi(01) ~ psi(10), phi(1) ~ psi(1).
std::optional<AmicableCounts> amicable_morphisms(const Morphism& phi,
                                                 const Morphism& psi);

// eta(A) = ter(phi(0), psi(0)), eta(B) = ter(phi(01), psi(10)),
// eta(C) = ter(phi(1), psi(1)). Throws NotAmicableError.
Morphism ternarize_morphisms(const Morphism& phi, const Morphism& psi);

// An amicable Sturmian pair together with its ternarization and indices.
struct AmicablePair {
  Morphism phi;
  Morphism psi;
  Morphism eta;
  std::int64_t b0;
  std::int64_t b1;
  std::int64_t b;
  std::int64_t k;     // k_index(phi)
  std::int64_t kbar;  // k_index(psi)
};

std::optional<AmicablePair> make_amicable_pair(const Morphism& phi,
                                               const Morphism& psi);

using MorphismPair = std::pair<Morphism, Morphism>;

struct MembershipOutcome {
  std::optional<MorphismPair> pair;  // recovered (phi, psi)
  std::string diagnostic;            // empty on success
};

// Tests sigma01 eta(B) = sigma01 eta(AC) and sigma10 eta(B) = sigma10 eta(CA),
// then checks that the recovered pair is Sturmian and amicable.
MembershipOutcome check_ternarization(const Morphism& eta);

std::optional<MorphismPair> is_ternarization(const Morphism& eta);

struct PreservationReport {
  bool preserved = false;
  std::string violation;  // first failed check, empty when preserved
  std::size_t prefix_length = 0;
  std::size_t image_length = 0;
};

inline constexpr std::size_t kDefaultPrefixLength = 1000;
inline constexpr std::size_t kDefaultMaxComplexityLength = 20;

// Applies eta to the first n letters of the coding of x0 under t and checks
// both projections: balanced, and C(m) = m + 1 for 1 <= m <= kmax. Throws
// PreconditionError for degenerate parameters.
PreservationReport check_3iet_preservation(
    const Morphism& eta, const ThreeIET& t, const QuadNumber& x0,
    std::size_t n = kDefaultPrefixLength,
    std::size_t kmax = kDefaultMaxComplexityLength);

}  // namespace iet3

#endif  // IET3_AMICABILITY_HPP_
