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

// Birooted inverse word graphs.
//
// An inverse word graph is an edge-labeled directed graph closed under the
// involution: (u, x, v) is an edge iff (v, x^-1, u) is one.  Only the
// positively labeled member of each such pair is stored; the inverse edge is
// implied, which makes involution closure structural rather than checked.
//
// Vertices are merged by folding (determination): two equally labeled edges
// leaving one vertex are identified, together with their targets.  Merging
// goes through a union-find whose canonical representative is the smaller
// original id, so folded graphs print identically across runs.  Ids of
// merged-away vertices are never reused.

#ifndef ADIAN_WORD_GRAPH_HPP_
#define ADIAN_WORD_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "adian/presentation.hpp"

namespace adian {

using VertexId = std::uint32_t;

/// Raised when an operation that requires a deterministic graph is handed a
/// graph that still folds.
class NotDeterministicError : public Error {
 public:
  using Error::Error;
};

/// A stored (positively labeled) edge.
struct Edge {
  VertexId src;
  Letter label;
  VertexId dst;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A path: chain[0], ..., chain[n] with chain[i] -> chain[i+1] labeled by
/// the i-th letter of `label` (inverse letters traverse stored edges
/// backwards).
struct Segment {
  std::vector<VertexId> chain;
  Word label;

  VertexId from() const { return chain.front(); }
  VertexId to() const { return chain.back(); }
  std::size_t length() const { return chain.size() - 1; }

  /// The traversed edges in stored (positive) orientation.
  std::vector<Edge> stored_edges() const;
};

class BirootedGraph {
 public:
  BirootedGraph() = default;

  VertexId add_vertex();

  /// Adds the positive edge src --label--> dst (and, implicitly, its
  /// inverse).  Endpoints may be stale ids; they are canonicalized.
  void add_edge(VertexId src, Letter label, VertexId dst);

  void set_roots(VertexId start, VertexId end);

  /// Sews a fresh path labeled by `w` from `from` to `to`.  Interior
  /// vertices are brand new; no folding is performed.
  Segment sew(VertexId from, VertexId to, const Word& w);

  VertexId start() const {
    require_nonempty();
    return find(start_);
  }
  VertexId end() const {
    require_nonempty();
    return find(end_);
  }

  /// Canonical representative of a (possibly merged-away) vertex id.
  VertexId canonical(VertexId v) const { return find(v); }
  bool valid_id(VertexId v) const { return v < parent_.size(); }

  std::size_t vertex_count() const { return live_; }
  std::size_t edge_count() const;

  /// Live vertex ids, ascending.
  std::vector<VertexId> vertices() const;

  /// Canonicalized stored edges, sorted by (src, label, dst).
  std::vector<Edge> edges() const;

  bool is_deterministic() const;

  /// Follows the unique edge labeled `l` out of `from`.  Requires a
  /// deterministic graph.
  std::optional<VertexId> step(VertexId from, SignedLetter l) const;

 private:
  struct Adjacency {
    std::vector<std::pair<Letter, VertexId>> out;  // v --l--> target
    std::vector<std::pair<Letter, VertexId>> in;   // source --l--> v
  };

  VertexId find(VertexId v) const;
  void merge_into(VertexId rep, VertexId other);
  void canonicalize_and_dedupe(VertexId v);
  void splice_lists(VertexId rep, VertexId other);
  void require_nonempty() const {
    if (parent_.empty()) {
      throw Error("graph has no vertices");
    }
  }

  mutable std::vector<VertexId> parent_;
  std::vector<Adjacency> adj_;
  VertexId start_ = 0;
  VertexId end_ = 0;
  std::size_t live_ = 0;
  mutable std::optional<bool> deterministic_cache_;

  friend BirootedGraph fold_impl(BirootedGraph g, std::mt19937* rng);
  friend bool involution_consistent(const BirootedGraph& g);
};

/// The linear graph of `w`: |w|+1 vertices 0..|w| on a simple path from
/// start 0 to end |w|, not yet folded.
BirootedGraph linear_graph(const Word& w);

/// Folds until deterministic.  Confluent, idempotent, never increases the
/// vertex count.
BirootedGraph fold_to_deterministic(BirootedGraph g);

/// Folding with a randomized processing order; the result is the same graph
/// up to iso_birooted (used to exercise confluence).
BirootedGraph fold_to_deterministic(BirootedGraph g, std::mt19937& rng);

/// Endpoint of the path labeled `w` starting at `from`, or nullopt if some
/// step has no edge.  Throws NotDeterministicError on unfolded graphs.
std::optional<VertexId> read_word(const BirootedGraph& g, VertexId from,
                                  const Word& w);

/// Like read_word but returns the whole path.
std::optional<Segment> read_path(const BirootedGraph& g, VertexId from,
                                 const Word& w);

/// Value-style sewing: returns the grown graph and the new segment.
std::pair<BirootedGraph, Segment> sew_segment(BirootedGraph g, VertexId from,
                                              VertexId to, const Word& w);

/// Label-preserving bijection matching starts to starts and ends to ends.
/// Both graphs must be deterministic (and connected); a synchronized
/// traversal from the roots then checks the unique candidate morphism.
bool iso_birooted(const BirootedGraph& g1, const BirootedGraph& g2);

/// True iff `sub` maps injectively into `host` by a label-preserving
/// morphism sending roots to roots.  Both must be deterministic.
bool embeds_in(const BirootedGraph& sub, const BirootedGraph& host);

/// Vertices with no incoming (resp. outgoing) positive edge, ascending.
std::pair<std::vector<VertexId>, std::vector<VertexId>> sources_and_sinks(
    const BirootedGraph& g);

/// True iff the positively labeled subgraph has a directed cycle.
bool has_positive_cycle(const BirootedGraph& g);

/// Checks the stored adjacency mirrors (every out entry has exactly one
/// matching in entry).  Always true for graphs built through this API.
bool involution_consistent(const BirootedGraph& g);

/// GraphViz DOT: one directed edge per stored positive edge, start rendered
/// as doublecircle, end as doubleoctagon (a shared root keeps doublecircle).
std::string to_dot(const BirootedGraph& g);

/// Line-based dump ("v <id>", "e <src> <label> <dst>", "roots <s> <e>"),
/// sorted by id for byte-stable golden files.
std::string dump(const BirootedGraph& g);

}  // namespace adian

#endif  // ADIAN_WORD_GRAPH_HPP_
