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

// Positive presentations of inverse semigroups and words over the
// generators and their formal inverses.
//
// Generators are single lowercase letters 'a'..'z'.  The formal inverse of a
// generator is written as the corresponding uppercase letter, so "aB" denotes
// the word a * b^-1.  Relation sides are always positive (generators only)
// and non-empty; the empty word is rejected everywhere.

#ifndef ADIAN_PRESENTATION_HPP_
#define ADIAN_PRESENTATION_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace adian {

/// Base class of every exception thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax or validation failure while reading a presentation or a word.
/// Lines and columns are 1-based; column 0 means "whole line".
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A generator symbol drawn from a finite alphabet of lowercase letters.
struct Letter {
  char symbol;

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

enum class Sign : std::uint8_t { positive, inverse };

/// A generator or the formal inverse of a generator.
struct SignedLetter {
  Letter base;
  Sign sign;

  SignedLetter inverted() const noexcept {
    return {base, sign == Sign::positive ? Sign::inverse : Sign::positive};
  }

  bool is_positive() const noexcept { return sign == Sign::positive; }

  /// Lowercase for generators, uppercase for inverses.
  char render() const noexcept {
    return sign == Sign::positive
               ? base.symbol
               : static_cast<char>(base.symbol - 'a' + 'A');
  }

  /// Maps 'a'..'z' to positive letters and 'A'..'Z' to inverses.
  static SignedLetter from_char(char c);

  friend auto operator<=>(const SignedLetter&, const SignedLetter&) = default;
};

/// A non-empty word over the generators and their formal inverses.
class Word {
 public:
  explicit Word(std::vector<SignedLetter> letters);

  /// Builds a positive word from lowercase text.  No alphabet check; use
  /// parse_word() to validate against a presentation's alphabet.
  static Word from_positive(std::string_view text);

  std::size_t size() const noexcept { return letters_.size(); }
  const SignedLetter& operator[](std::size_t i) const { return letters_[i]; }

  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }
  const std::vector<SignedLetter>& letters() const noexcept {
    return letters_;
  }

  /// True iff every letter is a plain generator.
  bool is_positive() const noexcept;

  /// The formal inverse: reversed sequence with every sign flipped.
  Word inverted() const;

  /// Contiguous subword [from, from + count).
  Word subword(std::size_t from, std::size_t count) const;

  std::string render() const;

  friend Word operator+(const Word& a, const Word& b);
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<SignedLetter> letters_;
};

/// One defining relation; both sides are positive, non-empty and distinct.
struct Relation {
  Word lhs;
  Word rhs;

  friend auto operator<=>(const Relation&, const Relation&) = default;
};

enum class RelationSide : std::uint8_t { lhs, rhs };

inline RelationSide opposite(RelationSide s) noexcept {
  return s == RelationSide::lhs ? RelationSide::rhs : RelationSide::lhs;
}

inline const Word& side_word(const Relation& r, RelationSide s) noexcept {
  return s == RelationSide::lhs ? r.lhs : r.rhs;
}

/// A positive presentation: a finite alphabet plus positive relations.
struct Presentation {
  std::vector<Letter> alphabet;
  std::vector<Relation> relations;

  bool contains(Letter l) const noexcept;
};

/// Reads a presentation file.  Format: the first non-blank line lists the
/// alphabet letters separated by single spaces; every further non-blank line
/// is "LHS = RHS" with both sides positive words; '#' starts a comment that
/// runs to the end of the line.
Presentation parse_presentation(std::string_view text);

/// Parses a word against an alphabet; lowercase characters map to positive
/// letters, uppercase to the inverses of the corresponding generators.
Word parse_word(std::string_view text, const std::vector<Letter>& alphabet);

inline Word invert_word(const Word& w) { return w.inverted(); }

inline std::string render_word(const Word& w) { return w.render(); }

}  // namespace adian

#endif  // ADIAN_PRESENTATION_HPP_
