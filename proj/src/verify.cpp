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

#include "iet3/verify.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "iet3/amicability.hpp"
#include "iet3/error.hpp"
#include "iet3/iet.hpp"
#include "iet3/matrices.hpp"
#include "iet3/morphism.hpp"

namespace iet3::verify {

namespace {

using nlohmann::json;

// Evaluates fn(0..n-1) on a small thread pool; results keep index order so
// the output does not depend on scheduling.
template <typename Fn>
auto parallel_map(std::size_t n, Fn fn) {
  using R = decltype(fn(std::size_t{0}));
  std::vector<R> results(n);
  std::atomic<std::size_t> next{0};
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(n, std::thread::hardware_concurrency()));
  std::vector<std::future<void>> running;
  for (std::size_t w = 0; w < workers; ++w) {
    running.push_back(std::async(std::launch::async, [&] {
      for (std::size_t i = next++; i < n; i = next++) results[i] = fn(i);
    }));
  }
  for (auto& f : running) f.get();
  return results;
}

SuiteResult counting_suite(std::int64_t max_norm, const Hooks& hooks) {
  SuiteResult result;
  const auto matrices = unimodular_matrices(max_norm);
  result.rows = parallel_map(matrices.size(), [&](std::size_t i) {
    const IntMatrix2& a = matrices[i];
    const auto pairs = brute_force_pairs(a);
    const std::int64_t formula = hooks.count_formula_total(a);
    std::map<std::int64_t, std::int64_t> histogram;
    for (const auto& pair : pairs) ++histogram[pair.b];
    bool histogram_match = true;
    std::int64_t sum_b = 0;
    for (std::int64_t b = 0; b <= a.norm(); ++b) {
      const std::int64_t expected = hooks.count_formula_b(a, b);
      sum_b += expected;
      const auto it = histogram.find(b);
      const std::int64_t got = it == histogram.end() ? 0 : it->second;
      histogram_match = histogram_match && got == expected;
    }
    for (const auto& [b, count] : histogram) {
      histogram_match = histogram_match && b >= 0 && b <= a.norm();
    }
    const auto brute = static_cast<std::int64_t>(pairs.size());
    const bool ok = brute == formula && histogram_match && sum_b == formula;
    return json{{"matrix", a.str()},       {"det", a.det()},
                {"norm", a.norm()},        {"formula", formula},
                {"brute", brute},          {"histogram_match", histogram_match},
                {"sum_b", sum_b},          {"ok", ok}};
  });
  return result;
}

SuiteResult lemma_suite(std::int64_t max_n) {
  SuiteResult result;
  std::vector<std::pair<std::int64_t, std::int64_t>> cases;
  for (std::int64_t n = 2; n <= max_n; ++n) {
    for (std::int64_t p = 1; p < n; ++p) {
      if (std::gcd(p, n) == 1) cases.emplace_back(p, n);
    }
  }
  result.rows = parallel_map(cases.size(), [&](std::size_t i) {
    const auto [p, n] = cases[i];
    const std::int64_t m = std::min(p, n - p);
    std::vector<Word> words;
    for (std::int64_t k = 0; k < n; ++k) words.push_back(coding_word_k(p, n, k));
    std::int64_t mismatches = 0;
    for (std::int64_t k = 0; k < n; ++k) {
      for (std::int64_t kbar = 0; kbar < n; ++kbar) {
        const auto got = amicable_words_b(words[k], words[kbar]);
        const std::int64_t diff = kbar - k;
        const std::optional<std::int64_t> expected =
            (0 <= diff && diff <= m) ? std::optional<std::int64_t>(diff)
                                     : std::nullopt;
        if (got != expected) ++mismatches;
      }
    }
    return json{{"p", p},
                {"N", n},
                {"pairs", n * n},
                {"mismatches", mismatches},
                {"ok", mismatches == 0}};
  });
  return result;
}

SuiteResult matrices_suite(std::int64_t max_norm) {
  SuiteResult result;
  const auto matrices = unimodular_matrices(max_norm);
  result.rows = parallel_map(matrices.size(), [&](std::size_t i) {
    const IntMatrix2& a = matrices[i];
    std::set<IntMatrix3> brute;
    bool e_ok = true;
    bool classify_ok = true;
    for (const auto& pair : brute_force_pairs(a)) {
      const IntMatrix3 m = incidence_matrix3(pair.eta);
      brute.insert(m);
      e_ok = e_ok && e_condition(m).has_value();
      classify_ok = classify_ok &&
                    classify_matrix3(m) ==
                        ClassificationWitness{a, pair.b0, pair.b1, a.det()};
    }
    const auto admissible = admissible_ternarization_matrices(a);
    const bool set_equal =
        std::vector<IntMatrix3>(brute.begin(), brute.end()) == admissible;
    return json{{"matrix", a.str()},
                {"brute_matrices", brute.size()},
                {"admissible_matrices", admissible.size()},
                {"set_equal", set_equal},
                {"e_condition", e_ok},
                {"classified", classify_ok},
                {"ok", set_equal && e_ok && classify_ok}};
  });
  // E-condition is necessary but not sufficient: xi1 passes it and fails.
  const IntMatrix3 swap = incidence_matrix3(xi1());
  const auto sign = e_condition(swap);
  const bool rejected = !classify_matrix3(swap).has_value();
  result.rows.push_back(json{{"matrix3", swap.str()},
                             {"morphism", xi1().str()},
                             {"e_sign", sign ? json(*sign) : json(nullptr)},
                             {"classified", !rejected},
                             {"ok", sign == -1 && rejected}});
  return result;
}

bool intertwines(const Morphism& eta, const Morphism& phi, const Morphism& psi) {
  for (Letter x : {kA, kB, kC}) {
    const Word letter(Alphabet::kTernary, {x});
    if (sigma(eta.image(x), Projection::k01) !=
            apply(phi, sigma(letter, Projection::k01)) ||
        sigma(eta.image(x), Projection::k10) !=
            apply(psi, sigma(letter, Projection::k10))) {
      return false;
    }
  }
  return true;
}

std::vector<AmicablePair> all_pairs(std::int64_t max_norm) {
  std::vector<AmicablePair> pairs;
  for (const auto& a : unimodular_matrices(max_norm)) {
    for (auto& pair : brute_force_pairs(a)) pairs.push_back(std::move(pair));
  }
  return pairs;
}

SuiteResult monoid_suite(std::int64_t max_norm, const Options& options) {
  SuiteResult result;
  const auto pairs = all_pairs(max_norm);
  if (pairs.empty()) return result;
  std::mt19937_64 rng(options.seed);
  std::vector<std::pair<std::size_t, std::size_t>> picks;
  for (std::size_t s = 0; s < options.samples; ++s) {
    const std::size_t i = rng() % pairs.size();
    const std::size_t j = rng() % pairs.size();
    picks.emplace_back(i, j);
  }
  result.rows = parallel_map(picks.size(), [&](std::size_t s) {
    const AmicablePair& outer = pairs[picks[s].first];
    const AmicablePair& inner = pairs[picks[s].second];
    const Morphism composite = compose(outer.eta, inner.eta);
    const Morphism phi = compose(outer.phi, inner.phi);
    const Morphism psi = compose(outer.psi, inner.psi);
    const bool amicable = amicable_morphisms(phi, psi).has_value();
    const bool closure = amicable && ternarize_morphisms(phi, psi) == composite;
    const bool intertwining = intertwines(outer.eta, outer.phi, outer.psi) &&
                              intertwines(inner.eta, inner.phi, inner.psi) &&
                              intertwines(composite, phi, psi);
    return json{{"sample", s},
                {"outer", outer.eta.str()},
                {"inner", inner.eta.str()},
                {"composite", composite.str()},
                {"closure", closure},
                {"intertwining", intertwining},
                {"ok", closure && intertwining}};
  });
  return result;
}

SuiteResult preserve_suite(std::int64_t max_norm, const Options& options) {
  SuiteResult result;
  const ThreeIET t(QuadNumber::parse("(3-sqrt(5))/2"), QuadNumber::rational(1, 4));
  const auto pairs = all_pairs(max_norm);
  result.rows = parallel_map(pairs.size(), [&](std::size_t i) {
    const auto report = check_3iet_preservation(
        pairs[i].eta, t, QuadNumber(0), options.prefix_length, options.kmax);
    return json{{"eta", pairs[i].eta.str()},
                {"matrix", incidence_matrix2(pairs[i].phi).str()},
                {"preserved", report.preserved},
                {"violation", report.violation},
                {"ok", report.preserved}};
  });
  const ThreeIET trap(QuadNumber::parse("(3-sqrt(5))/2"),
                      QuadNumber::parse("sqrt(5)-2"));
  bool rejected = false;
  try {
    check_3iet_preservation(Morphism::identity(Alphabet::kTernary), trap,
                            QuadNumber(0), options.prefix_length, options.kmax);
  } catch (const PreconditionError&) {
    rejected = true;
  }
  result.rows.push_back(json{{"alpha", trap.alpha().str()},
                             {"beta", trap.beta().str()},
                             {"degenerate_rejected", rejected},
                             {"ok", rejected}});
  return result;
}

}  // namespace

Hooks Hooks::defaults() {
  return Hooks{
      [](const IntMatrix2& a) { return iet3::count_formula_total(a); },
      [](const IntMatrix2& a, std::int64_t b) {
        return iet3::count_formula_b(a, b);
      }};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"counting", "lemma-w",
                                                 "matrices", "monoid",
                                                 "preserve"};
  return names;
}

std::int64_t default_max_norm(std::string_view suite) {
  if (suite == "counting") return 12;
  if (suite == "lemma-w") return 24;
  if (suite == "matrices") return 10;
  return 6;
}

SuiteResult run_suite(std::string_view suite, const Options& options,
                      const Hooks& hooks) {
  const std::int64_t max_norm = options.max_norm.value_or(default_max_norm(suite));
  SuiteResult result;
  if (suite == "counting") {
    result = counting_suite(max_norm, hooks);
  } else if (suite == "lemma-w") {
    result = lemma_suite(max_norm);
  } else if (suite == "matrices") {
    result = matrices_suite(max_norm);
  } else if (suite == "monoid") {
    result = monoid_suite(max_norm, options);
  } else if (suite == "preserve") {
    result = preserve_suite(max_norm, options);
  } else {
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
  }
  result.suite = std::string(suite);
  result.max_norm = max_norm;
  result.checked = result.rows.size();
  result.failures = static_cast<std::size_t>(
      std::count_if(result.rows.begin(), result.rows.end(),
                    [](const json& row) { return !row.at("ok").get<bool>(); }));
  return result;
}

}  // namespace iet3::verify
