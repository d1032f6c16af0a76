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

#include "iet3/iet.hpp"

#include <numeric>
#include <string>
#include <vector>

#include "iet3/error.hpp"

namespace iet3 {

namespace {

void check_start(const QuadNumber& x0) {
  if (x0 < 0 || x0 >= 1) {
    throw DomainError("start point " + x0.str() + " is outside [0,1)");
  }
}

}  // namespace

TwoIET::TwoIET(QuadNumber slope) : slope_(std::move(slope)) {
  if (slope_ < 0 || slope_ > 1) {
    throw DomainError("slope " + slope_.str() + " is outside [0,1]");
  }
}

QuadNumber TwoIET::step(const QuadNumber& x) const {
  return x < slope_ ? x + 1 - slope_ : x - slope_;
}

ThreeIET::ThreeIET(QuadNumber alpha, QuadNumber beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (alpha_ <= 0 || beta_ <= 0 || alpha_ + beta_ >= 1) {
    throw DomainError("3iet parameters alpha=" + alpha_.str() +
                      ", beta=" + beta_.str() +
                      " violate 0 < alpha, 0 < beta, alpha + beta < 1");
  }
}

Letter ThreeIET::interval_of(const QuadNumber& x) const {
  if (x < alpha_) return kA;
  if (x < alpha_ + beta_) return kB;
  return kC;
}

QuadNumber ThreeIET::step(const QuadNumber& x) const {
  switch (interval_of(x)) {
    case kA:
      return x + beta_ + gamma();
    case kB:
      return x - alpha_ + gamma();
    default:
      return x - alpha_ - beta_;
  }
}

Word two_iet_code(const TwoIET& t, const QuadNumber& x0, std::size_t n) {
  check_start(x0);
  std::vector<Letter> letters;
  letters.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    letters.push_back((x0 - t.slope() * static_cast<std::int64_t>(i)).frac() <
                              t.slope()
                          ? 0
                          : 1);
  }
  return Word(Alphabet::kBinary, std::move(letters));
}

Word coding_word_k(std::int64_t p, std::int64_t N, std::int64_t k) {
  if (p <= 0 || p >= N || std::gcd(p, N) != 1) {
    throw PreconditionError("coding word needs co-prime 0 < p < N, got p=" +
                            std::to_string(p) + ", N=" + std::to_string(N));
  }
  std::vector<Letter> letters(static_cast<std::size_t>(N));
  std::int64_t r = ((k % N) + N) % N;
  for (auto& x : letters) {
    x = r < p ? 0 : 1;
    r -= p;
    if (r < 0) r += N;
  }
  return Word(Alphabet::kBinary, std::move(letters));
}

Word three_iet_code(const ThreeIET& t, const QuadNumber& x0, std::size_t n) {
  check_start(x0);
  std::vector<Letter> letters;
  letters.reserve(n);
  QuadNumber x = x0;
  for (std::size_t i = 0; i < n; ++i) {
    letters.push_back(t.interval_of(x));
    x = t.step(x);
  }
  return Word(Alphabet::kTernary, std::move(letters));
}

bool is_nondegenerate_params(const ThreeIET& t) {
  return !((QuadNumber(1) - t.alpha()) / (QuadNumber(1) + t.beta())).is_rational();
}

}  // namespace iet3
