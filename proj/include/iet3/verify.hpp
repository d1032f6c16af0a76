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

// Exhaustive verification suites behind `iet3 verify`. Each suite recomputes
// a closed-form result by brute force over a bounded family and reports one
// row per checked object.

#ifndef IET3_VERIFY_HPP_
#define IET3_VERIFY_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "iet3/matrix.hpp"

namespace iet3::verify {

// Replaceable entry points, so tests can inject faults into a formula and
// watch the suite catch them.
struct Hooks {
  std::function<std::int64_t(const IntMatrix2&)> count_formula_total;
  std::function<std::int64_t(const IntMatrix2&, std::int64_t)> count_formula_b;

  static Hooks defaults();
};

struct Options {
  std::optional<std::int64_t> max_norm;  // suite default when empty
  std::uint64_t seed = 20120107;
  std::size_t samples = 200;
  std::size_t prefix_length = 1000;
  std::size_t kmax = 20;
};

struct SuiteResult {
  std::string suite;
  std::int64_t max_norm = 0;
  std::vector<nlohmann::json> rows;
  std::size_t checked = 0;
  std::size_t failures = 0;
  bool passed() const { return failures == 0; }
};

// "counting", "lemma-w", "matrices", "monoid", "preserve".
const std::vector<std::string>& suite_names();
std::int64_t default_max_norm(std::string_view suite);

// Throws std::invalid_argument for an unknown suite name.
SuiteResult run_suite(std::string_view suite, const Options& options,
                      const Hooks& hooks = Hooks::defaults());

}  // namespace iet3::verify

#endif  // IET3_VERIFY_HPP_
