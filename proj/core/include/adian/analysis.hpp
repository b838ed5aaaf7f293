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

// Left/right graphs, the Adian (cycle-free) property, self-overlap normal
// forms and the overlap classification of one-relation presentations.

#ifndef ADIAN_ANALYSIS_HPP_
#define ADIAN_ANALYSIS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adian/presentation.hpp"

namespace adian {

class MultipleRelationsError : public Error {
 public:
  using Error::Error;
};

/// Undirected multigraph on the alphabet with one edge per relation, joining
/// the first letters (left graph) or the last letters (right graph) of the
/// two sides.  Self-pairs are kept: they are loops.
struct SideGraph {
  std::vector<Letter> nodes;
  std::vector<std::pair<Letter, Letter>> edges;  // normalized (min, max)
};

SideGraph build_left_graph(const Presentation& p);
SideGraph build_right_graph(const Presentation& p);

/// True iff the edge multiset is a forest: no loops, no parallel edges, no
/// cycles.  Parallel edges count as cycles (a closed path in the multigraph
/// sense).
bool is_forest(const SideGraph& g);

/// True iff both the left and the right graph are forests.
bool is_adian(const Presentation& p);

enum class SelfOverlapKind : std::uint8_t { none, power, xsx, xsxsx };

/// Normal form of a self-overlapping positive word t:
///   power:  t = x^n with x primitive and n >= 2;
///   xsx:    t = x s x with x a border whose two occurrences are disjoint;
///   xsxsx:  t = x s x s x where x s x is the maximal border of t.
/// In the xsx form, x is the maximal border when that border's occurrences
/// are disjoint.  When the maximal border overlaps itself, the xsxsx
/// decomposition is emitted if it exists; highly periodic non-powers such
/// as (ab)^3 a admit no xsxsx split and take the xsx form with the longest
/// disjoint-occurrence border instead (one always exists for a non-power).
struct SelfOverlapForm {
  SelfOverlapKind kind = SelfOverlapKind::none;
  std::optional<Word> x;
  std::optional<Word> s;
  std::optional<std::size_t> exponent;  // power only
};

SelfOverlapForm self_overlap_form(const Word& t);

/// Length of the longest proper non-empty border (prefix that is also a
/// suffix) of a positive word; 0 if there is none.
std::size_t max_border_length(const Word& t);

/// True iff t overlaps with itself, i.e. has a non-empty proper border.
bool self_overlaps(const Word& t);

/// True iff `factor` occurs as a contiguous subword of `w`.
bool is_factor(const Word& factor, const Word& w);

enum class CrossOverlapKind : std::uint8_t {
  none,
  one_way_uv,  // a proper suffix of u is a prefix of v
  one_way_vu,  // a proper suffix of v is a prefix of u
  two_way,
};

/// Overlap between two distinct positive words, neither a subword of the
/// other.
CrossOverlapKind cross_overlap(const Word& u, const Word& v);

enum class OverlapType : std::uint8_t {
  no_overlap,
  type1,   // exactly one side self-overlaps, no cross overlap
  type2a,  // both sides self-overlap, no cross overlap, no shared letter
  type2b,  // both sides self-overlap, no cross overlap, shared letter
  type3,   // cross overlap in exactly one direction
  type4,   // cross overlaps in both directions
};

enum class DecidableClass : std::uint8_t {
  class1,
  class2,
  class3,
  class4,
  unknown,
};

struct Classification {
  bool adian = false;
  bool lhs_subword_of_rhs = false;
  bool rhs_subword_of_lhs = false;
  /// Absent when one side is a subword of the other.
  std::optional<OverlapType> overlap_type;
  DecidableClass decidable_class = DecidableClass::unknown;

  /// Single-line key=value record: adian, subword, overlap_type, class.
  std::string to_record() const;
};

/// Classifies a one-relation presentation.  Throws MultipleRelationsError
/// unless the presentation has exactly one relation.
Classification classify(const Presentation& p);

const char* to_string(OverlapType t);
const char* to_string(DecidableClass c);
const char* to_string(CrossOverlapKind k);
const char* to_string(SelfOverlapKind k);

}  // namespace adian

#endif  // ADIAN_ANALYSIS_HPP_
