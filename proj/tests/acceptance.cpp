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

// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.
// Exits non-zero if any criterion fails. A budget of 0 means untimed.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "iet3/amicability.hpp"
#include "iet3/matrices.hpp"
#include "iet3/morphism.hpp"
#include "iet3/verify.hpp"

using iet3::Morphism;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

std::string suite_detail(const iet3::verify::SuiteResult& r) {
  return std::to_string(r.checked) + " checks, " + std::to_string(r.failures) + " failures";
}

Outcome timed_suite(const char* suite, double budget) {
  const auto start = Clock::now();
  const auto r = iet3::verify::run_suite(suite, {});
  const double elapsed = seconds_since(start);
  char buf[96];
  if (budget > 0) {
    std::snprintf(buf, sizeof buf, ", %.2f s (budget %.0f s)", elapsed, budget);
  } else {
    std::snprintf(buf, sizeof buf, ", %.2f s", elapsed);
  }
  return {r.passed() && r.checked > 0 && (budget <= 0 || elapsed < budget),
          suite_detail(r) + buf};
}

Outcome worked_example() {
  const Morphism phi = Morphism::binary("001", "00101");
  const Morphism psi = Morphism::binary("010", "01001");
  const Morphism expected = Morphism::ternary("AB", "ABABB", "ABAC");
  const auto start = Clock::now();
  const Morphism eta = iet3::ternarize_morphisms(phi, psi);
  const double ms = seconds_since(start) * 1e3;
  char buf[64];
  std::snprintf(buf, sizeof buf, " in %.3f ms", ms);
  return {eta == expected && ms < 1.0, eta.str() + buf};
}

Outcome membership_rejection() {
  const auto outcome = iet3::check_ternarization(iet3::cac_morphism());
  const std::string expected = "sigma01(B)=010 != 011";
  return {!outcome.pair && outcome.diagnostic == expected,
          "diagnostic \"" + outcome.diagnostic + "\", expected \"" + expected + "\""};
}

Outcome sturmian_census() {
  std::size_t matrices = 0;
  bool ok = true;
  for (const auto& a : iet3::unimodular_matrices(12)) {
    ++matrices;
    const auto all = iet3::enumerate_sturmian(a);
    const std::int64_t n = a.norm();
    std::set<Morphism> distinct;
    std::set<std::int64_t> ks;
    int standard = 0;
    for (const Morphism& m : all) {
      ok = ok && iet3::incidence_matrix2(m) == a;
      distinct.insert(m);
      ks.insert(iet3::k_index(m));
      standard += iet3::is_standard_morphism(m);
    }
    ok = ok && static_cast<std::int64_t>(all.size()) == n - 1 &&
         distinct.size() == all.size() && standard == 1 && ks.size() == all.size() &&
         !ks.count(a.det() == 1 ? n - 1 : 0);
  }
  return {ok && matrices == 90, std::to_string(matrices) + " matrices"};
}

Outcome e_condition(const iet3::verify::SuiteResult& matrices) {
  std::size_t checked = 0;
  bool ok = !matrices.rows.empty();
  for (std::size_t i = 0; i + 1 < matrices.rows.size(); ++i) {
    ok = ok && matrices.rows[i].at("e_condition").get<bool>();
    ++checked;
  }
  const auto swap = iet3::incidence_matrix3(iet3::xi1());
  const bool witness = iet3::e_condition(swap) == -1 && !iet3::classify_matrix3(swap);
  return {ok && witness, std::to_string(checked) + " matrices; xi1 sign -1 and rejected: " +
                             (witness ? "yes" : "no")};
}

Outcome conjecture_probe() {
  const auto report = iet3::conjecture_probe(iet3::cac_morphism());
  for (const auto& entry : report.entries) {
    if (entry.label != "eta.xi1") continue;
    const bool ok =
        entry.membership.pair ==
            iet3::MorphismPair{Morphism::binary("1", "01"), Morphism::binary("1", "10")} &&
        !report.entries.front().membership.pair;
    return {ok, entry.morphism.str() + (entry.membership.pair
                                            ? " -> (" + entry.membership.pair->first.str() +
                                                  ", " + entry.membership.pair->second.str() + ")"
                                            : " not a member")};
  }
  return {false, "no eta.xi1 entry"};
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int id, const char* title, const std::function<Outcome()>& check) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("[%s] %2d. %s: %s\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str());
    std::fflush(stdout);
  };

  report(1, "worked example ternarization", worked_example);
  report(2, "membership rejection diagnostic", membership_rejection);
  report(3, "counting theorem, norm <= 12", [] { return timed_suite("counting", 60); });
  report(4, "coding-word lemma, N <= 24", [] { return timed_suite("lemma-w", 30); });
  iet3::verify::SuiteResult matrices;
  report(5, "matrix set equality, norm <= 10", [&] {
    const auto start = Clock::now();
    matrices = iet3::verify::run_suite("matrices", {});
    const double elapsed = seconds_since(start);
    bool set_equal = !matrices.rows.empty();
    for (std::size_t i = 0; i + 1 < matrices.rows.size(); ++i) {
      set_equal = set_equal && matrices.rows[i].at("set_equal").get<bool>();
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, ", %.2f s (budget 60 s)", elapsed);
    return Outcome{set_equal && elapsed < 60, suite_detail(matrices) + buf};
  });
  report(6, "Sturmian census, norm <= 12", sturmian_census);
  report(7, "monoid closure and intertwining", [] { return timed_suite("monoid", 0); });
  report(8, "3iet preservation at prefix scale", [] { return timed_suite("preserve", 120); });
  report(9, "E-condition necessity and non-sufficiency", [&] { return e_condition(matrices); });
  report(10, "conjecture probe", conjecture_probe);

  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
