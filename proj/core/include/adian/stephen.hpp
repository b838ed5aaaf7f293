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

// Iterative construction of Schutzenberger automata: elementary and full
// expansions, closure under a budget, language membership and the
// two-sided equality decision.

#ifndef ADIAN_STEPHEN_HPP_
#define ADIAN_STEPHEN_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "adian/presentation.hpp"
#include "adian/word_graph.hpp"

namespace adian {

class StaleSegmentError : public Error {
 public:
  using Error::Error;
};

class NotClosedError : public Error {
 public:
  using Error::Error;
};

/// A path labeled by one side of a relation whose other side cannot be read
/// between the same endpoints.
struct UnsaturatedSegment {
  Segment segment;
  std::size_t relation_index;
  RelationSide side;  // the side that labels `segment`
};

/// Caps for the closure iteration; the procedure need not terminate outside
/// the decidable classes.
struct Budget {
  std::size_t max_full_expansions = 64;
  std::size_t max_vertices = 100000;
};

struct ExpansionStep {
  std::size_t step_index;  // 1-based
  std::vector<UnsaturatedSegment> expansions_applied;
  std::size_t vertices_after;
  std::size_t edges_after;
};

struct ExpansionTrace {
  std::vector<ExpansionStep> steps;
  bool closed = false;

  /// "step <n> expanded <k> vertices <V> edges <E>" per step, then a final
  /// "closed" or "budget-exceeded" line.
  std::string to_text() const;
};

struct SchutzenbergerResult {
  BirootedGraph graph;
  ExpansionTrace trace;

  bool closed() const { return trace.closed; }
};

/// All unsaturated segments of a deterministic graph, in (start vertex,
/// relation index, side) order; duplicates with the same endpoints and the
/// same missing side are reported once.
std::vector<UnsaturatedSegment> find_unsaturated(const BirootedGraph& g,
                                                 const Presentation& p);

/// Sews the missing side across the segment's endpoints and folds.  Throws
/// StaleSegmentError if the missing side has become readable meanwhile.
BirootedGraph elementary_expansion(BirootedGraph g,
                                   const UnsaturatedSegment& u,
                                   const Presentation& p);

/// Expands every unsaturated segment present in `g` (segments created
/// mid-step wait for the next round), then folds once.
BirootedGraph full_expansion(BirootedGraph g, const Presentation& p);

/// Iterates full expansions from the folded linear graph of `w` until no
/// unsaturated segment remains or the budget runs out.  When the trace says
/// closed, the graph is the Schutzenberger automaton of `w`.
SchutzenbergerResult schutzenberger(const Word& w, const Presentation& p,
                                    const Budget& b);

/// True iff `w` labels a start-to-end path.  Only meaningful on closed
/// automata; throws NotClosedError otherwise.
bool membership(const Word& w, const SchutzenbergerResult& r);

enum class ApproxMembership : std::uint8_t { yes_geq, unknown };

/// On a partial (possibly unclosed) graph a successful read only certifies
/// that `w` lies above the graph's word in the natural partial order.
ApproxMembership approx_membership(const Word& w, const BirootedGraph& g);

enum class Verdict : std::uint8_t { equal, not_equal, budget_exceeded };

struct DecisionOutcome {
  Verdict verdict;
  ExpansionTrace trace_u;
  ExpansionTrace trace_v;
  /// True when the presentation is relation-free or its one-relation
  /// classification lands in a decidable class, i.e. closure was certain.
  bool guaranteed = false;
};

/// Builds both automata (concurrently) and decides u = v by two-sided
/// membership.
DecisionOutcome decide_equal(const Word& u, const Word& v,
                             const Presentation& p, const Budget& b);

/// Decides w = w^2.
DecisionOutcome is_idempotent(const Word& w, const Presentation& p,
                              const Budget& b);

const char* to_string(Verdict v);

}  // namespace adian

#endif  // ADIAN_STEPHEN_HPP_
