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

// Morphisms of the free monoids {0,1}* and {A,B,C}*, their incidence
// matrices, and the Sturmian machinery built on standard pairs: the standard
// morphism of a unimodular matrix, right conjugation, and the chain of all
// Sturmian morphisms sharing one incidence matrix.

#ifndef IET3_MORPHISM_HPP_
#define IET3_MORPHISM_HPP_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "iet3/matrix.hpp"
#include "iet3/words.hpp"

namespace iet3 {

// A morphism over one alphabet, determined by the image of every letter.
class Morphism {
 public:
  // Throws AlphabetError unless there is exactly one image per letter and
  // every image is over `alphabet`.
  Morphism(Alphabet alphabet, std::vector<Word> images);

  static Morphism identity(Alphabet alphabet);
  // "0->001,1->00101" or "A->AB,B->ABABB,C->ABAC"; whitespace-insensitive,
  // letters in any order, each exactly once. Throws ParseError.
  static Morphism parse(std::string_view text);
  // Shorthand for tests and constants: binary("001", "00101").
  static Morphism binary(std::string_view image0, std::string_view image1);
  static Morphism ternary(std::string_view image_a, std::string_view image_b,
                          std::string_view image_c);

  Alphabet alphabet() const { return alphabet_; }
  const Word& image(Letter x) const { return images_[x]; }
  const std::vector<Word>& images() const { return images_; }
  bool is_non_erasing() const;
  std::string str() const;

  Word operator()(const Word& w) const;

  friend bool operator==(const Morphism&, const Morphism&) = default;
  friend auto operator<=>(const Morphism&, const Morphism&) = default;

 private:
  Alphabet alphabet_;
  std::vector<Word> images_;
};

std::ostream& operator<<(std::ostream& os, const Morphism& m);

// Concatenation of the images of the letters of w.
Word apply(const Morphism& m, const Word& w);

// (outer o inner)(x) = outer(inner(x)).
Morphism compose(const Morphism& outer, const Morphism& inner);

// Entry (a, b) is |m(a)|_b. Throw AlphabetError on the wrong alphabet.
IntMatrix2 incidence_matrix2(const Morphism& m);
IntMatrix3 incidence_matrix3(const Morphism& m);

// The unique standard morphism with incidence matrix `a`. Throws
// NotUnimodularError if `a` is negative or det a is not +-1.
Morphism standard_morphism(const IntMatrix2& a);

// True iff the image pair (swapped when det = -1) reduces to (0, 1) by
// undoing L(x, y) = (x, xy) and R(x, y) = (yx, y) on words.
bool is_standard_morphism(const Morphism& m);

// If every image starts with the same letter c, the morphism
// a -> c^{-1} m(a) c; otherwise nothing.
std::optional<Morphism> right_conjugate_step(const Morphism& m);

// The standard morphism of `a` followed by its successive right conjugates;
// ||a|| - 1 morphisms in conjugation-chain order.
std::vector<Morphism> enumerate_sturmian(const IntMatrix2& a);

// The k in [0, N) with m(01) = coding_word_k(p, N, k), where N = ||M_m|| and
// p = |m(01)|_0. Throws NotSturmianError if no such k exists.
std::int64_t k_index(const Morphism& m);

// Binary, non-erasing, unimodular matrix, and a member of the conjugation
// chain of its matrix.
bool is_sturmian_morphism(const Morphism& m);

}  // namespace iet3

#endif  // IET3_MORPHISM_HPP_
