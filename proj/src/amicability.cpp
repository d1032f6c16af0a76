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

#include "iet3/amicability.hpp"

#include <string>
#include <vector>

#include "iet3/error.hpp"

namespace iet3 {

std::string_view projection_name(Projection which) {
  return which == Projection::k01 ? "sigma01" : "sigma10";
}

Word sigma(const Word& v, Projection which) {
  if (v.alphabet() != Alphabet::kTernary) {
    throw AlphabetError("sigma projections take ternary words");
  }
  std::vector<Letter> out;
  out.reserve(v.size() + v.count(kB));
  for (Letter x : v.letters()) {
    switch (x) {
      case kA:
        out.push_back(0);
        break;
      case kC:
        out.push_back(1);
        break;
      default:
        if (which == Projection::k01) {
          out.push_back(0);
          out.push_back(1);
        } else {
          out.push_back(1);
          out.push_back(0);
        }
    }
  }
  return Word(Alphabet::kBinary, std::move(out));
}

TernarizeOutcome try_ternarize_words(const Word& w, const Word& w2) {
  if (w.alphabet() != Alphabet::kBinary || w2.alphabet() != Alphabet::kBinary) {
    throw AlphabetError("ternarization takes two binary words");
  }
  TernarizeOutcome out;
  if (w.size() != w2.size()) {
    out.reason = "lengths differ (" + std::to_string(w.size()) + " vs " +
                 std::to_string(w2.size()) + ")";
    return out;
  }
  std::vector<Letter> v;
  std::int64_t b = 0;
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n;) {
    if (w[i] == w2[i]) {
      v.push_back(w[i] == 0 ? kA : kC);
      ++i;
      continue;
    }
    const std::string at = " at position " + std::to_string(i);
    if (w[i] == 1) {
      out.reason = "mismatch 1/0" + at;
      return out;
    }
    if (i + 1 == n) {
      out.reason = "dangling mismatch 0/1" + at;
      return out;
    }
    if (w[i + 1] != 1 || w2[i + 1] != 0) {
      out.reason = "mismatch 0/1" + at + " is not followed by 1/0";
      return out;
    }
    v.push_back(kB);
    ++b;
    i += 2;
  }
  if (!is_balanced(w)) {
    out.reason = "first word " + w.str() + " is not balanced";
    return out;
  }
  if (!is_balanced(w2)) {
    out.reason = "second word " + w2.str() + " is not balanced";
    return out;
  }
  out.witness = AmicabilityWitness{Word(Alphabet::kTernary, std::move(v)), b};
  return out;
}

AmicabilityWitness ternarize_words(const Word& w, const Word& w2) {
  auto outcome = try_ternarize_words(w, w2);
  if (!outcome.witness) {
    throw NotAmicableError(w.str() + " is not amicable to " + w2.str() + ": " +
                           outcome.reason);
  }
  return std::move(*outcome.witness);
}

std::optional<std::int64_t> amicable_words_b(const Word& w, const Word& w2) {
  const auto outcome = try_ternarize_words(w, w2);
  if (!outcome.witness) return std::nullopt;
  return outcome.witness->b;
}

std::optional<AmicableCounts> amicable_morphisms(const Morphism& phi,
                                                 const Morphism& psi) {
  if (!is_sturmian_morphism(phi) || !is_sturmian_morphism(psi)) {
    return std::nullopt;
  }
  const auto b0 = amicable_words_b(phi.image(0), psi.image(0));
  if (!b0) return std::nullopt;
  const auto b1 = amicable_words_b(phi.image(1), psi.image(1));
  if (!b1) return std::nullopt;
  const auto b = amicable_words_b(phi.image(0) + phi.image(1),
                                  psi.image(1) + psi.image(0));
  if (!b) return std::nullopt;
  return AmicableCounts{*b0, *b1, *b};
}

Morphism ternarize_morphisms(const Morphism& phi, const Morphism& psi) {
  if (!amicable_morphisms(phi, psi)) {
    throw NotAmicableError(phi.str() + " is not amicable to " + psi.str());
  }
  return Morphism(
      Alphabet::kTernary,
      {ternarize_words(phi.image(0), psi.image(0)).v,
       ternarize_words(phi.image(0) + phi.image(1), psi.image(1) + psi.image(0)).v,
       ternarize_words(phi.image(1), psi.image(1)).v});
}

std::optional<AmicablePair> make_amicable_pair(const Morphism& phi,
                                               const Morphism& psi) {
  const auto counts = amicable_morphisms(phi, psi);
  if (!counts) return std::nullopt;
  return AmicablePair{phi,        psi,           ternarize_morphisms(phi, psi),
                      counts->b0, counts->b1,    counts->b,
                      k_index(phi), k_index(psi)};
}

MembershipOutcome check_ternarization(const Morphism& eta) {
  if (eta.alphabet() != Alphabet::kTernary) {
    throw AlphabetError("ternarization membership takes a ternary morphism");
  }
  MembershipOutcome out;
  const Word& ea = eta.image(kA);
  const Word& eb = eta.image(kB);
  const Word& ec = eta.image(kC);

  const Word s01_b = sigma(eb, Projection::k01);
  const Word s01_ac = sigma(ea + ec, Projection::k01);
  if (s01_b != s01_ac) {
    out.diagnostic = "sigma01(B)=" + s01_b.str() + " != " + s01_ac.str();
    return out;
  }
  const Word s10_b = sigma(eb, Projection::k10);
  const Word s10_ca = sigma(ec + ea, Projection::k10);
  if (s10_b != s10_ca) {
    out.diagnostic = "sigma10(B)=" + s10_b.str() + " != " + s10_ca.str();
    return out;
  }

  Morphism phi(Alphabet::kBinary,
               {sigma(ea, Projection::k01), sigma(ec, Projection::k01)});
  Morphism psi(Alphabet::kBinary,
               {sigma(ea, Projection::k10), sigma(ec, Projection::k10)});
  if (!is_sturmian_morphism(phi)) {
    out.diagnostic = "recovered phi=" + phi.str() + " is not Sturmian";
    return out;
  }
  if (!is_sturmian_morphism(psi)) {
    out.diagnostic = "recovered psi=" + psi.str() + " is not Sturmian";
    return out;
  }
  if (!amicable_morphisms(phi, psi)) {
    out.diagnostic = "recovered phi=" + phi.str() + " is not amicable to psi=" +
                     psi.str();
    return out;
  }
  if (ternarize_morphisms(phi, psi) != eta) {
    out.diagnostic = "ternarization of the recovered pair differs from eta";
    return out;
  }
  out.pair = MorphismPair{std::move(phi), std::move(psi)};
  return out;
}

std::optional<MorphismPair> is_ternarization(const Morphism& eta) {
  return check_ternarization(eta).pair;
}

PreservationReport check_3iet_preservation(const Morphism& eta,
                                           const ThreeIET& t,
                                           const QuadNumber& x0, std::size_t n,
                                           std::size_t kmax) {
  if (eta.alphabet() != Alphabet::kTernary) {
    throw AlphabetError("3iet preservation takes a ternary morphism");
  }
  if (!is_nondegenerate_params(t)) {
    throw PreconditionError("degenerate 3iet parameters alpha=" +
                            t.alpha().str() + ", beta=" + t.beta().str() +
                            ": (1-alpha)/(1+beta) is rational");
  }
  PreservationReport report;
  report.prefix_length = n;
  const Word image = apply(eta, three_iet_code(t, x0, n));
  report.image_length = image.size();
  for (Projection which : {Projection::k01, Projection::k10}) {
    const Word w = sigma(image, which);
    const std::string name(projection_name(which));
    if (!is_balanced(w)) {
      report.violation = name + " projection is not balanced";
      return report;
    }
    for (std::size_t m = 1; m <= kmax; ++m) {
      const auto c = factor_complexity(w, m);
      if (c != m + 1) {
        report.violation = name + " projection has C(" + std::to_string(m) +
                           ")=" + std::to_string(c) + ", expected " +
                           std::to_string(m + 1);
        return report;
      }
    }
  }
  report.preserved = true;
  return report;
}

}  // namespace iet3
