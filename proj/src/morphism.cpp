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

#include "iet3/morphism.hpp"

#include <algorithm>
#include <ostream>
#include <string>
#include <utility>

#include "iet3/error.hpp"
#include "iet3/iet.hpp"

namespace iet3 {

namespace {

bool has_prefix(const Word& w, const Word& prefix) {
  return prefix.size() <= w.size() &&
         std::equal(prefix.letters().begin(), prefix.letters().end(),
                    w.letters().begin());
}

template <std::size_t N>
IntMatrix<N> incidence(const Morphism& m) {
  if (alphabet_size(m.alphabet()) != N) {
    throw AlphabetError("incidence matrix of size " + std::to_string(N) +
                        " requested for a " +
                        std::string(alphabet_name(m.alphabet())) + " morphism");
  }
  IntMatrix<N> out;
  for (std::size_t a = 0; a < N; ++a) {
    for (Letter x : m.image(static_cast<Letter>(a)).letters()) ++out(a, x);
  }
  return out;
}

}  // namespace

Morphism::Morphism(Alphabet alphabet, std::vector<Word> images)
    : alphabet_(alphabet), images_(std::move(images)) {
  if (images_.size() != alphabet_size(alphabet_)) {
    throw AlphabetError("a " + std::string(alphabet_name(alphabet_)) +
                        " morphism needs " +
                        std::to_string(alphabet_size(alphabet_)) + " images");
  }
  for (const Word& w : images_) {
    if (w.alphabet() != alphabet_) {
      throw AlphabetError("morphism image " + w.str() +
                          " is over the wrong alphabet");
    }
  }
}

Morphism Morphism::identity(Alphabet alphabet) {
  std::vector<Word> images;
  for (std::size_t x = 0; x < alphabet_size(alphabet); ++x) {
    images.emplace_back(alphabet, std::vector<Letter>{static_cast<Letter>(x)});
  }
  return Morphism(alphabet, std::move(images));
}

Morphism Morphism::parse(std::string_view text) {
  std::string compact;
  for (char ch : text) {
    if (ch != ' ' && ch != '\t' && ch != '\n') compact.push_back(ch);
  }
  std::vector<std::pair<char, std::string>> rules;
  std::size_t pos = 0;
  while (pos <= compact.size()) {
    const auto end = std::min(compact.find(',', pos), compact.size());
    const std::string rule = compact.substr(pos, end - pos);
    const auto arrow = rule.find("->");
    if (arrow != 1) {
      throw ParseError("invalid morphism rule '" + rule + "' in '" +
                       std::string(text) + "'");
    }
    rules.emplace_back(rule[0], rule.substr(3));
    pos = end + 1;
  }
  const char first = rules.front().first;
  const Alphabet alphabet = (first == '0' || first == '1') ? Alphabet::kBinary
                                                           : Alphabet::kTernary;
  const std::size_t n = alphabet_size(alphabet);
  std::vector<std::optional<Word>> images(n);
  for (const auto& [key, image] : rules) {
    const Word letter = [&] {
      try {
        return Word::parse(std::string_view(&key, 1), alphabet);
      } catch (const ParseError&) {
        throw ParseError("invalid morphism letter '" + std::string(1, key) +
                         "' in '" + std::string(text) + "'");
      }
    }();
    auto& slot = images[letter[0]];
    if (slot) {
      throw ParseError("duplicate morphism letter '" + std::string(1, key) +
                       "' in '" + std::string(text) + "'");
    }
    slot = Word::parse(image, alphabet);
  }
  std::vector<Word> out;
  for (std::size_t x = 0; x < n; ++x) {
    if (!images[x]) {
      throw ParseError("missing image of letter '" +
                       std::string(1, letter_char(alphabet, static_cast<Letter>(x))) +
                       "' in '" + std::string(text) + "'");
    }
    out.push_back(*images[x]);
  }
  return Morphism(alphabet, std::move(out));
}

Morphism Morphism::binary(std::string_view image0, std::string_view image1) {
  return Morphism(Alphabet::kBinary,
                  {Word::parse(image0, Alphabet::kBinary),
                   Word::parse(image1, Alphabet::kBinary)});
}

Morphism Morphism::ternary(std::string_view image_a, std::string_view image_b,
                           std::string_view image_c) {
  return Morphism(Alphabet::kTernary,
                  {Word::parse(image_a, Alphabet::kTernary),
                   Word::parse(image_b, Alphabet::kTernary),
                   Word::parse(image_c, Alphabet::kTernary)});
}

bool Morphism::is_non_erasing() const {
  return std::none_of(images_.begin(), images_.end(),
                      [](const Word& w) { return w.empty(); });
}

std::string Morphism::str() const {
  std::string s;
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (x > 0) s += ',';
    s += letter_char(alphabet_, static_cast<Letter>(x));
    s += "->";
    s += images_[x].str();
  }
  return s;
}

Word Morphism::operator()(const Word& w) const { return apply(*this, w); }

std::ostream& operator<<(std::ostream& os, const Morphism& m) {
  return os << m.str();
}

Word apply(const Morphism& m, const Word& w) {
  if (w.alphabet() != m.alphabet()) {
    throw AlphabetError("cannot apply a " +
                        std::string(alphabet_name(m.alphabet())) +
                        " morphism to a " +
                        std::string(alphabet_name(w.alphabet())) + " word");
  }
  Word out(m.alphabet());
  for (Letter x : w.letters()) out += m.image(x);
  return out;
}

Morphism compose(const Morphism& outer, const Morphism& inner) {
  if (outer.alphabet() != inner.alphabet()) {
    throw AlphabetError("cannot compose morphisms over different alphabets");
  }
  std::vector<Word> images;
  for (const Word& w : inner.images()) images.push_back(apply(outer, w));
  return Morphism(outer.alphabet(), std::move(images));
}

IntMatrix2 incidence_matrix2(const Morphism& m) { return incidence<2>(m); }
IntMatrix3 incidence_matrix3(const Morphism& m) { return incidence<3>(m); }

Morphism standard_morphism(const IntMatrix2& a) {
  if (!is_unimodular(a)) {
    throw NotUnimodularError("matrix " + a.str() +
                             " is not a non-negative matrix with det +-1");
  }
  const bool swapped = a.det() == -1;
  // Parikh vectors of the standard pair (x, y); its matrix has det +1.
  std::array<std::int64_t, 2> x{a(0, 0), a(0, 1)};
  std::array<std::int64_t, 2> y{a(1, 0), a(1, 1)};
  if (swapped) std::swap(x, y);

  std::vector<char> ops;  // reverse order
  while (!(x == std::array<std::int64_t, 2>{1, 0} &&
           y == std::array<std::int64_t, 2>{0, 1})) {
    if (y[0] >= x[0] && y[1] >= x[1]) {
      ops.push_back('L');
      y = {y[0] - x[0], y[1] - x[1]};
    } else if (x[0] >= y[0] && x[1] >= y[1]) {
      ops.push_back('R');
      x = {x[0] - y[0], x[1] - y[1]};
    } else {
      throw InvalidMatrixError("matrix " + a.str() +
                               " does not reduce to a standard pair");
    }
  }

  Word wx = Word::parse("0", Alphabet::kBinary);
  Word wy = Word::parse("1", Alphabet::kBinary);
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    if (*it == 'L') {
      wy = wx + wy;
    } else {
      wx = wy + wx;
    }
  }
  if (swapped) std::swap(wx, wy);
  return Morphism(Alphabet::kBinary, {std::move(wx), std::move(wy)});
}

bool is_standard_morphism(const Morphism& m) {
  if (m.alphabet() != Alphabet::kBinary || !m.is_non_erasing()) return false;
  const auto a = incidence_matrix2(m);
  if (!is_unimodular(a)) return false;
  Word x = m.image(0);
  Word y = m.image(1);
  if (a.det() == -1) std::swap(x, y);
  const Word zero = Word::parse("0", Alphabet::kBinary);
  const Word one = Word::parse("1", Alphabet::kBinary);
  while (!(x == zero && y == one)) {
    if (y.size() > x.size() && has_prefix(y, x)) {
      y = y.substr(x.size(), y.size() - x.size());
    } else if (x.size() > y.size() && has_prefix(x, y)) {
      x = x.substr(y.size(), x.size() - y.size());
    } else {
      return false;
    }
  }
  return true;
}

std::optional<Morphism> right_conjugate_step(const Morphism& m) {
  if (!m.is_non_erasing()) return std::nullopt;
  const Letter c = m.image(0).front();
  for (const Word& w : m.images()) {
    if (w.front() != c) return std::nullopt;
  }
  const Word tail(m.alphabet(), {c});
  std::vector<Word> images;
  for (const Word& w : m.images()) {
    images.push_back(w.substr(1, w.size() - 1) + tail);
  }
  return Morphism(m.alphabet(), std::move(images));
}

std::vector<Morphism> enumerate_sturmian(const IntMatrix2& a) {
  std::vector<Morphism> chain{standard_morphism(a)};
  const auto limit = static_cast<std::size_t>(a.norm());
  while (auto next = right_conjugate_step(chain.back())) {
    // A chain longer than ||A|| would mean the conjugates cycle.
    if (chain.size() > limit) {
      throw InvalidMatrixError("conjugation chain of " + a.str() +
                               " does not terminate");
    }
    chain.push_back(std::move(*next));
  }
  return chain;
}

std::int64_t k_index(const Morphism& m) {
  if (m.alphabet() != Alphabet::kBinary) {
    throw NotSturmianError("k-index needs a binary morphism");
  }
  const auto a = incidence_matrix2(m);
  if (!is_unimodular(a)) {
    throw NotSturmianError("morphism " + m.str() +
                           " does not have a unimodular matrix");
  }
  const auto prm = params(a);
  const Word image = m.image(0) + m.image(1);
  for (std::int64_t k = 0; k < prm.n; ++k) {
    if (coding_word_k(prm.p, prm.n, k) == image) return k;
  }
  throw NotSturmianError("image " + image.str() + " of 01 under " + m.str() +
                         " is not a coding word");
}

bool is_sturmian_morphism(const Morphism& m) {
  if (m.alphabet() != Alphabet::kBinary || !m.is_non_erasing()) return false;
  const auto a = incidence_matrix2(m);
  if (!is_unimodular(a)) return false;
  const auto chain = enumerate_sturmian(a);
  return std::find(chain.begin(), chain.end(), m) != chain.end();
}

}  // namespace iet3
