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

// Subgraphs of a Schutzenberger graph generated by one occurrence of a
// relation word.  The construction runs like the closure iteration but with
// a locality filter: after the seed expansion, a step only expands the
// unsaturated segments that start or terminate at an interior vertex of a
// segment sewn in the previous step.  Each expansion leaves a region tagged
// with its generation number.

#ifndef ADIAN_RWORD_SUBGRAPH_HPP_
#define ADIAN_RWORD_SUBGRAPH_HPP_

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "adian/presentation.hpp"
#include "adian/stephen.hpp"
#include "adian/word_graph.hpp"

namespace adian {

class OccurrenceMismatchError : public Error {
 public:
  using Error::Error;
};

/// The i-th occurrence (1-based, counting overlaps, left to right) of a
/// relation word inside a positive word.
struct Occurrence {
  Word rword;
  std::size_t index;      // 1-based occurrence number
  std::size_t start_pos;  // 0-based letter offset
};

/// All factor occurrences of `r` in `w`, including overlapping ones.
std::vector<Occurrence> occurrences(const Word& r, const Word& w);

/// A sewn-on relation instance: the readable side that triggered the
/// expansion and the freshly sewn side, tagged with the step that made it.
struct GenRegion {
  std::size_t generation;    // 1-based step number
  Segment boundary_existing;  // the unsaturated side
  Segment boundary_new;       // the sewn side
};

struct DeltaGraph {
  BirootedGraph graph;
  std::vector<GenRegion> regions;
  std::set<Edge> linear_edges;  // edges of the linear graph of w
  bool closed = false;
  std::size_t steps_used = 0;

  std::size_t regions_of_generation(std::size_t g) const;
};

/// Builds the subgraph generated by the given occurrence: step 1 expands
/// exactly that occurrence's segment; step n+1 expands exactly the
/// unsaturated segments that start or terminate at an interior vertex of a
/// segment sewn at step n.  Stops when no such segment exists (closed) or
/// the budget is exhausted.
DeltaGraph delta(const Word& w, const Occurrence& occ, const Presentation& p,
                 const Budget& b);

/// Vertices at which some relation word both ends and starts (both reads
/// inside the graph).
std::vector<VertexId> special_vertices(const DeltaGraph& d,
                                       const Presentation& p);

/// Generation-3 regions using no edge of the linear graph of w.
std::vector<GenRegion> special_regions(const DeltaGraph& d);

struct DeltaReportEntry {
  Occurrence occ;
  bool closed;
  std::size_t steps;
  std::size_t regions;
  std::size_t vertices;
};

struct DeltaReport {
  std::vector<DeltaReportEntry> entries;
  bool all_closed = true;

  /// "<rword> occ=<i> pos=<p> closed=<bool> steps=<n> regions=<k>
  /// vertices=<V>" per entry.
  std::string to_text() const;
};

/// Runs delta for every occurrence of every relation word in `w`.  Budget
/// failures are reported, not raised.
DeltaReport all_deltas_finite(const Word& w, const Presentation& p,
                              const Budget& b);

}  // namespace adian

#endif  // ADIAN_RWORD_SUBGRAPH_HPP_
