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

// Codings of orbits under 2- and 3-interval exchange transformations, with
// exact quadratic arithmetic throughout. Only left-closed partitions of
// [0,1) are supported.

#ifndef IET3_IET_HPP_
#define IET3_IET_HPP_

#include <cstddef>
#include <cstdint>

#include "iet3/quad.hpp"
#include "iet3/words.hpp"

namespace iet3 {

// S x = x + 1 - slope on [0, slope), x - slope on [slope, 1).
class TwoIET {
 public:
  // Throws DomainError unless 0 <= slope <= 1.
  explicit TwoIET(QuadNumber slope);

  const QuadNumber& slope() const { return slope_; }
  QuadNumber step(const QuadNumber& x) const;

 private:
  QuadNumber slope_;
};

// Exchange of I_A = [0,alpha), I_B = [alpha,alpha+beta), I_C = [alpha+beta,1)
// with permutation (3,2,1).
class ThreeIET {
 public:
  // Throws DomainError unless alpha > 0, beta > 0, alpha + beta < 1, and
  // UnsupportedFieldError if alpha and beta lie in different fields.
  ThreeIET(QuadNumber alpha, QuadNumber beta);

  const QuadNumber& alpha() const { return alpha_; }
  const QuadNumber& beta() const { return beta_; }
  QuadNumber gamma() const { return QuadNumber(1) - alpha_ - beta_; }

  // Letter (kA, kB or kC) of the interval containing x.
  Letter interval_of(const QuadNumber& x) const;
  QuadNumber step(const QuadNumber& x) const;

 private:
  QuadNumber alpha_;
  QuadNumber beta_;
};

// u_i = 0 iff frac(x0 - i*slope) < slope, for i < n. Throws DomainError if
// x0 is outside [0,1).
Word two_iet_code(const TwoIET& t, const QuadNumber& x0, std::size_t n);

// The word w^(k) of length N: position i is 0 iff (k - i*p) mod N < p.
// Throws PreconditionError unless 0 < p < N and gcd(p, N) = 1.
Word coding_word_k(std::int64_t p, std::int64_t N, std::int64_t k);

// Ternary coding of the orbit of x0 under t, first n letters.
Word three_iet_code(const ThreeIET& t, const QuadNumber& x0, std::size_t n);

// True iff (1 - alpha) / (1 + beta) is irrational, i.e. the coding is an
// aperiodic 3iet word.
bool is_nondegenerate_params(const ThreeIET& t);

}  // namespace iet3

#endif  // IET3_IET_HPP_
