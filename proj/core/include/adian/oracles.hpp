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

// Brute-force ground truth, independent of the expansion engine: positive
// words are compared by breadth-first rewriting, and the relation-free case
// by folded linear graphs.

#ifndef ADIAN_ORACLES_HPP_
#define ADIAN_ORACLES_HPP_

#include <cstddef>
#include <set>

#include "adian/presentation.hpp"
#include "adian/word_graph.hpp"

namespace adian {

/// The words reachable from `center` by at most `radius` single-factor
/// replacements.  `saturated` is true when the BFS ran out of new words
/// before exhausting the radius, i.e. members is the whole equivalence
/// class.
struct RewriteBall {
  Word center;
  std::size_t radius;
  std::set<Word> members;
  bool saturated = false;
};

/// All words obtained from `w` by one replacement of a factor equal to one
/// relation side by the other side, at every position, both directions.
std::set<Word> rewrite_neighbors(const Word& w, const Presentation& p);

RewriteBall rewrite_ball(const Word& w, const Presentation& p,
                         std::size_t radius);

enum class OracleVerdict : std::uint8_t { equal, not_equal_within_radius };

/// Breadth-first closure of `u` under rewriting up to `radius` steps; equal
/// iff `v` is encountered.  Never claims inequality absolutely.
OracleVerdict positive_equal_bfs(const Word& u, const Word& v,
                                 const Presentation& p, std::size_t radius);

/// Folded linear graph over the empty relation set; decides equality in the
/// free inverse monoid.  The positive subgraph is a tree.
struct MunnGraph {
  BirootedGraph graph;
};

MunnGraph munn_graph(const Word& w);

/// Equality in the free inverse monoid, by root-matching isomorphism of the
/// folded linear graphs.
bool munn_equal(const Word& u, const Word& v);

}  // namespace adian

#endif  // ADIAN_ORACLES_HPP_
