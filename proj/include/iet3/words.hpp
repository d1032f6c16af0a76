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

// Finite words over the binary alphabet {0,1} and the ternary alphabet
// {A,B,C}, with the combinatorial statistics used throughout the library:
// Parikh vectors, balance, factor complexity and conjugacy.

#ifndef IET3_WORDS_HPP_
#define IET3_WORDS_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace iet3 {

enum class Alphabet : std::uint8_t { kBinary, kTernary };

constexpr std::size_t alphabet_size(Alphabet a) {
  return a == Alphabet::kBinary ? 2 : 3;
}

std::string_view alphabet_name(Alphabet a);

using Letter = std::uint8_t;

// Letter indices of the ternary alphabet.
inline constexpr Letter kA = 0;
inline constexpr Letter kB = 1;
inline constexpr Letter kC = 2;

// Printable character of letter `x` ('0'/'1' or 'A'/'B'/'C').
char letter_char(Alphabet a, Letter x);

// Immutable sequence of letters tagged with its alphabet. Words over
// different alphabets never compare equal and never concatenate.
class Word {
 public:
  Word() = default;
  explicit Word(Alphabet alphabet) : alphabet_(alphabet) {}
  // Throws AlphabetError if a letter index is out of range.
  Word(Alphabet alphabet, std::vector<Letter> letters);
  Word(Alphabet alphabet, std::initializer_list<Letter> letters)
      : Word(alphabet, std::vector<Letter>(letters)) {}

  // "0101" or "ABAC"; the empty string is the empty word.
  static Word parse(std::string_view text, Alphabet alphabet);
  // Infers the alphabet from the first character; "" parses as the empty
  // binary word.
  static Word parse(std::string_view text);

  Alphabet alphabet() const { return alphabet_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  std::span<const Letter> letters() const { return letters_; }

  std::size_t count(Letter x) const;
  Word substr(std::size_t pos, std::size_t len) const;
  std::string str() const;

  Word& operator+=(const Word& rhs);
  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  Alphabet alphabet_ = Alphabet::kBinary;
  std::vector<Letter> letters_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

// Letter counts, one entry per letter of the alphabet.
struct ParikhVector {
  std::vector<std::int64_t> counts;

  std::int64_t operator[](std::size_t i) const { return counts[i]; }
  std::int64_t total() const;
  friend ParikhVector operator+(const ParikhVector& x, const ParikhVector& y);
  friend bool operator==(const ParikhVector&, const ParikhVector&) = default;
};

ParikhVector parikh(const Word& w);

// True iff any two factors of equal length differ by at most one in their
// number of 1s. Only defined for binary words.
bool is_balanced(const Word& w);

// Number of distinct factors of length n; 1 for n = 0, 0 for n > |w|.
std::size_t factor_complexity(const Word& w, std::size_t n);

// True iff w v = v w2 for some word v, i.e. w2 is a cyclic rotation of w.
bool is_conjugate_word(const Word& w, const Word& w2);

}  // namespace iet3

#endif  // IET3_WORDS_HPP_
