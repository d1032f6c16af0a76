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

#include "iet3/words.hpp"

#include <algorithm>
#include <ostream>
#include <string>
#include <unordered_set>

#include "iet3/error.hpp"

namespace iet3 {

namespace {

bool letter_from_char(Alphabet a, char c, Letter* out) {
  if (a == Alphabet::kBinary) {
    if (c != '0' && c != '1') return false;
    *out = static_cast<Letter>(c - '0');
  } else {
    if (c < 'A' || c > 'C') return false;
    *out = static_cast<Letter>(c - 'A');
  }
  return true;
}

}  // namespace

std::string_view alphabet_name(Alphabet a) {
  return a == Alphabet::kBinary ? "binary" : "ternary";
}

char letter_char(Alphabet a, Letter x) {
  return a == Alphabet::kBinary ? static_cast<char>('0' + x)
                                : static_cast<char>('A' + x);
}

Word::Word(Alphabet alphabet, std::vector<Letter> letters)
    : alphabet_(alphabet), letters_(std::move(letters)) {
  const auto n = alphabet_size(alphabet_);
  for (Letter x : letters_) {
    if (x >= n) {
      throw AlphabetError("letter index " + std::to_string(x) +
                          " is not in the " +
                          std::string(alphabet_name(alphabet_)) + " alphabet");
    }
  }
}

Word Word::parse(std::string_view text, Alphabet alphabet) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char c : text) {
    Letter x;
    if (!letter_from_char(alphabet, c, &x)) {
      throw ParseError("invalid " + std::string(alphabet_name(alphabet)) +
                       " letter '" + std::string(1, c) + "' in word \"" +
                       std::string(text) + "\"");
    }
    letters.push_back(x);
  }
  return Word(alphabet, std::move(letters));
}

Word Word::parse(std::string_view text) {
  if (text.empty()) return Word(Alphabet::kBinary);
  const char c = text.front();
  return parse(text, (c == '0' || c == '1') ? Alphabet::kBinary
                                            : Alphabet::kTernary);
}

std::size_t Word::count(Letter x) const {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), x));
}

Word Word::substr(std::size_t pos, std::size_t len) const {
  pos = std::min(pos, letters_.size());
  len = std::min(len, letters_.size() - pos);
  Word out(alphabet_);
  out.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                      letters_.begin() + static_cast<std::ptrdiff_t>(pos + len));
  return out;
}

std::string Word::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter x : letters_) s.push_back(letter_char(alphabet_, x));
  return s;
}

Word& Word::operator+=(const Word& rhs) {
  if (rhs.alphabet_ != alphabet_) {
    throw AlphabetError("cannot concatenate words over different alphabets");
  }
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
  return os << '"' << w.str() << '"';
}

std::int64_t ParikhVector::total() const {
  std::int64_t s = 0;
  for (auto c : counts) s += c;
  return s;
}

ParikhVector operator+(const ParikhVector& x, const ParikhVector& y) {
  if (x.counts.size() != y.counts.size()) {
    throw AlphabetError("Parikh vectors of different dimension");
  }
  ParikhVector out = x;
  for (std::size_t i = 0; i < out.counts.size(); ++i) out.counts[i] += y.counts[i];
  return out;
}

ParikhVector parikh(const Word& w) {
  ParikhVector v{std::vector<std::int64_t>(alphabet_size(w.alphabet()), 0)};
  for (Letter x : w.letters()) ++v.counts[x];
  return v;
}

bool is_balanced(const Word& w) {
  if (w.alphabet() != Alphabet::kBinary) {
    throw AlphabetError("balance is only defined for binary words");
  }
  const std::size_t n = w.size();
  std::vector<std::int32_t> prefix(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + w[i];
  for (std::size_t len = 1; len < n; ++len) {
    std::int32_t lo = prefix[len];
    std::int32_t hi = lo;
    for (std::size_t i = 1; i + len <= n; ++i) {
      const std::int32_t ones = prefix[i + len] - prefix[i];
      lo = std::min(lo, ones);
      hi = std::max(hi, ones);
    }
    if (hi - lo > 1) return false;
  }
  return true;
}

std::size_t factor_complexity(const Word& w, std::size_t n) {
  if (n == 0) return 1;
  if (n > w.size()) return 0;
  const auto letters = w.letters();
  if (n <= 32) {
    // Two bits per letter pack a factor into one machine word.
    const std::uint64_t mask =
        n == 32 ? ~std::uint64_t{0} : (std::uint64_t{1} << (2 * n)) - 1;
    std::unordered_set<std::uint64_t> seen;
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      code = ((code << 2) | letters[i]) & mask;
      if (i + 1 >= n) seen.insert(code);
    }
    return seen.size();
  }
  const std::string s = w.str();
  std::unordered_set<std::string_view> seen;
  for (std::size_t i = 0; i + n <= s.size(); ++i) {
    seen.insert(std::string_view(s).substr(i, n));
  }
  return seen.size();
}

bool is_conjugate_word(const Word& w, const Word& w2) {
  if (w.alphabet() != w2.alphabet()) {
    throw AlphabetError("conjugacy test across alphabets");
  }
  if (w.size() != w2.size()) return false;
  const Word doubled = w + w;
  const auto hay = doubled.letters();
  const auto needle = w2.letters();
  return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) !=
         hay.end();
}

}  // namespace iet3
