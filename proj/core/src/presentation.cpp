// Copyright 2026 The adian authors
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

#include "adian/presentation.hpp"

#include <algorithm>
#include <utility>

namespace adian {

namespace {

bool is_generator_char(char c) { return c >= 'a' && c <= 'z'; }
bool is_inverse_char(char c) { return c >= 'A' && c <= 'Z'; }

}  // namespace

SignedLetter SignedLetter::from_char(char c) {
  if (is_generator_char(c)) {
    return {Letter{c}, Sign::positive};
  }
  if (is_inverse_char(c)) {
    return {Letter{static_cast<char>(c - 'A' + 'a')}, Sign::inverse};
  }
  throw Error(std::string("invalid letter character '") + c + "'");
}

Word::Word(std::vector<SignedLetter> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) {
    throw Error("empty words are not permitted");
  }
}

Word Word::from_positive(std::string_view text) {
  std::vector<SignedLetter> letters;
  letters.reserve(text.size());
  for (char c : text) {
    if (!is_generator_char(c)) {
      throw Error(std::string("positive word expected, got '") + c + "'");
    }
    letters.push_back({Letter{c}, Sign::positive});
  }
  return Word(std::move(letters));
}

bool Word::is_positive() const noexcept {
  return std::all_of(letters_.begin(), letters_.end(),
                     [](const SignedLetter& l) { return l.is_positive(); });
}

Word Word::inverted() const {
  std::vector<SignedLetter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.push_back(it->inverted());
  }
  return Word(std::move(out));
}

Word Word::subword(std::size_t from, std::size_t count) const {
  if (count == 0 || from + count > letters_.size()) {
    throw Error("subword range out of bounds");
  }
  return Word(std::vector<SignedLetter>(letters_.begin() + from,
                                        letters_.begin() + from + count));
}

std::string Word::render() const {
  std::string out;
  out.reserve(letters_.size());
  for (const SignedLetter& l : letters_) {
    out.push_back(l.render());
  }
  return out;
}

Word operator+(const Word& a, const Word& b) {
  std::vector<SignedLetter> letters = a.letters_;
  letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(letters));
}

bool Presentation::contains(Letter l) const noexcept {
  return std::find(alphabet.begin(), alphabet.end(), l) != alphabet.end();
}

Word parse_word(std::string_view text, const std::vector<Letter>& alphabet) {
  if (text.empty()) {
    throw Error("empty word");
  }
  std::vector<SignedLetter> letters;
  letters.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    SignedLetter l = SignedLetter::from_char(text[i]);
    if (std::find(alphabet.begin(), alphabet.end(), l.base) ==
        alphabet.end()) {
      throw Error(std::string("letter '") + text[i] +
                  "' is not in the alphabet (position " + std::to_string(i) +
                  ")");
    }
    letters.push_back(l);
  }
  return Word(std::move(letters));
}

namespace {

// Strips a '#' comment and trailing/leading whitespace.
std::string_view strip(std::string_view line) {
  if (auto pos = line.find('#'); pos != std::string_view::npos) {
    line = line.substr(0, pos);
  }
  while (!line.empty() && (line.front() == ' ' || line.front() == '\t' ||
                           line.front() == '\r')) {
    line.remove_prefix(1);
  }
  while (!line.empty() &&
         (line.back() == ' ' || line.back() == '\t' || line.back() == '\r')) {
    line.remove_suffix(1);
  }
  return line;
}

Word parse_relation_side(std::string_view text, std::size_t line_no,
                         std::size_t col, const std::vector<Letter>& alphabet,
                         const char* which) {
  if (text.empty()) {
    throw ParseError(std::string("empty ") + which + " of a relation",
                     line_no, col);
  }
  std::vector<SignedLetter> letters;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == ' ' || c == '\t') {
      throw ParseError("relation sides must not contain spaces", line_no,
                       col + i);
    }
    if (!is_generator_char(c)) {
      throw ParseError(std::string("relation sides must be positive words; "
                                   "got '") +
                           c + "'",
                       line_no, col + i);
    }
    Letter l{c};
    if (std::find(alphabet.begin(), alphabet.end(), l) == alphabet.end()) {
      throw ParseError(std::string("unknown letter '") + c + "'", line_no,
                       col + i);
    }
    letters.push_back({l, Sign::positive});
  }
  return Word(std::move(letters));
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  bool have_alphabet = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++line_no;
    std::size_t next = eol == std::string_view::npos ? text.size() + 1
                                                     : eol + 1;

    std::string_view line = strip(raw);
    if (line.empty()) {
      pos = next;
      continue;
    }

    if (!have_alphabet) {
      // Alphabet line: single lowercase letters separated by single spaces.
      std::size_t indent = static_cast<std::size_t>(line.data() - raw.data());
      std::size_t i = 0;
      while (i < line.size()) {
        char c = line[i];
        std::size_t col = indent + i + 1;
        if (!is_generator_char(c)) {
          throw ParseError(std::string("alphabet letters must be lowercase "
                                       "a-z; got '") +
                               c + "'",
                           line_no, col);
        }
        Letter l{c};
        if (p.contains(l)) {
          throw ParseError(std::string("duplicate alphabet letter '") + c +
                               "'",
                           line_no, col);
        }
        p.alphabet.push_back(l);
        ++i;
        if (i < line.size()) {
          if (line[i] != ' ') {
            throw ParseError("alphabet letters must be separated by single "
                             "spaces",
                             line_no, col + 1);
          }
          ++i;
          if (i == line.size()) {
            throw ParseError("trailing separator in alphabet line", line_no,
                             col + 2);
          }
        }
      }
      have_alphabet = true;
      pos = next;
      continue;
    }

    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("expected 'LHS = RHS'", line_no, 1);
    }
    std::string_view lhs_text = strip(line.substr(0, eq));
    std::string_view rhs_text = strip(line.substr(eq + 1));
    Word lhs =
        parse_relation_side(lhs_text, line_no, 1, p.alphabet, "left side");
    Word rhs = parse_relation_side(rhs_text, line_no, eq + 2, p.alphabet,
                                   "right side");
    if (lhs == rhs) {
      throw ParseError("trivial relation: both sides are the word '" +
                           lhs.render() + "'",
                       line_no, 1);
    }
    p.relations.push_back({std::move(lhs), std::move(rhs)});
    pos = next;
  }

  if (!have_alphabet) {
    throw ParseError("missing alphabet line", 1, 1);
  }
  return p;
}

}  // namespace adian
