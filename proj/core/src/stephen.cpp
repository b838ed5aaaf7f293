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

#include "adian/stephen.hpp"

#include <future>
#include <set>
#include <sstream>
#include <tuple>
#include <utility>

#include "adian/analysis.hpp"

namespace adian {

std::string ExpansionTrace::to_text() const {
  std::ostringstream os;
  for (const ExpansionStep& s : steps) {
    os << "step " << s.step_index << " expanded "
       << s.expansions_applied.size() << " vertices " << s.vertices_after
       << " edges " << s.edges_after << "\n";
  }
  os << (closed ? "closed" : "budget-exceeded") << "\n";
  return os.str();
}

std::vector<UnsaturatedSegment> find_unsaturated(const BirootedGraph& g,
                                                 const Presentation& p) {
  if (!g.is_deterministic()) {
    throw NotDeterministicError(
        "find_unsaturated requires a deterministic graph");
  }
  std::vector<UnsaturatedSegment> out;
  // (from, to, missing word) triples already reported.
  std::set<std::tuple<VertexId, VertexId, Word>> seen;
  for (VertexId v : g.vertices()) {
    for (std::size_t ri = 0; ri < p.relations.size(); ++ri) {
      const Relation& rel = p.relations[ri];
      for (RelationSide side : {RelationSide::lhs, RelationSide::rhs}) {
        const Word& readable = side_word(rel, side);
        const Word& missing = side_word(rel, opposite(side));
        std::optional<Segment> seg = read_path(g, v, readable);
        if (!seg) {
          continue;
        }
        std::optional<VertexId> other = read_word(g, v, missing);
        if (other && *other == seg->to()) {
          continue;  // saturated
        }
        auto key = std::make_tuple(v, seg->to(), missing);
        if (!seen.insert(key).second) {
          continue;
        }
        out.push_back({std::move(*seg), ri, side});
      }
    }
  }
  return out;
}

BirootedGraph elementary_expansion(BirootedGraph g,
                                   const UnsaturatedSegment& u,
                                   const Presentation& p) {
  const Relation& rel = p.relations.at(u.relation_index);
  const Word& missing = side_word(rel, opposite(u.side));
  VertexId from = g.canonical(u.segment.from());
  VertexId to = g.canonical(u.segment.to());
  if (read_word(g, from, missing) == std::optional<VertexId>(to)) {
    throw StaleSegmentError("segment is no longer unsaturated: '" +
                            missing.render() + "' already reads " +
                            std::to_string(from) + " -> " +
                            std::to_string(to));
  }
  g.sew(from, to, missing);
  return fold_to_deterministic(std::move(g));
}

namespace {

// Sews the missing side of every snapshot segment; folding is left to the
// caller.  Expansions are applied relative to the snapshot, so a side that
// became readable through freshly sewn material is sewn anyway and the
// duplicate folds away.
void apply_expansions(BirootedGraph& g,
                      const std::vector<UnsaturatedSegment>& snapshot,
                      const Presentation& p) {
  for (const UnsaturatedSegment& u : snapshot) {
    const Relation& rel = p.relations.at(u.relation_index);
    const Word& missing = side_word(rel, opposite(u.side));
    g.sew(g.canonical(u.segment.from()), g.canonical(u.segment.to()),
          missing);
  }
}

}  // namespace

BirootedGraph full_expansion(BirootedGraph g, const Presentation& p) {
  std::vector<UnsaturatedSegment> snapshot = find_unsaturated(g, p);
  apply_expansions(g, snapshot, p);
  return fold_to_deterministic(std::move(g));
}

SchutzenbergerResult schutzenberger(const Word& w, const Presentation& p,
                                    const Budget& b) {
  SchutzenbergerResult r;
  r.graph = fold_to_deterministic(linear_graph(w));
  std::size_t steps = 0;
  while (true) {
    std::vector<UnsaturatedSegment> snapshot = find_unsaturated(r.graph, p);
    if (snapshot.empty()) {
      r.trace.closed = true;
      break;
    }
    if (steps >= b.max_full_expansions ||
        r.graph.vertex_count() > b.max_vertices) {
      break;
    }
    apply_expansions(r.graph, snapshot, p);
    r.graph = fold_to_deterministic(std::move(r.graph));
    ++steps;
    r.trace.steps.push_back({steps, std::move(snapshot),
                             r.graph.vertex_count(), r.graph.edge_count()});
  }
  return r;
}

bool membership(const Word& w, const SchutzenbergerResult& r) {
  if (!r.closed()) {
    throw NotClosedError(
        "membership is only defined on closed automata; use "
        "approx_membership for partial graphs");
  }
  return read_word(r.graph, r.graph.start(), w) ==
         std::optional<VertexId>(r.graph.end());
}

ApproxMembership approx_membership(const Word& w, const BirootedGraph& g) {
  return read_word(g, g.start(), w) == std::optional<VertexId>(g.end())
             ? ApproxMembership::yes_geq
             : ApproxMembership::unknown;
}

namespace {

bool closure_guaranteed(const Presentation& p) {
  if (p.relations.empty()) {
    return true;
  }
  if (p.relations.size() == 1) {
    return classify(p).decidable_class != DecidableClass::unknown;
  }
  return false;
}

}  // namespace

DecisionOutcome decide_equal(const Word& u, const Word& v,
                             const Presentation& p, const Budget& b) {
  // The two constructions are independent; run one of them on a worker.
  std::future<SchutzenbergerResult> fu = std::async(
      std::launch::async, [&]() { return schutzenberger(u, p, b); });
  SchutzenbergerResult rv = schutzenberger(v, p, b);
  SchutzenbergerResult ru = fu.get();

  DecisionOutcome out;
  out.guaranteed = closure_guaranteed(p);
  if (!ru.closed() || !rv.closed()) {
    out.verdict = Verdict::budget_exceeded;
  } else {
    bool equal = membership(u, rv) && membership(v, ru);
    out.verdict = equal ? Verdict::equal : Verdict::not_equal;
  }
  out.trace_u = std::move(ru.trace);
  out.trace_v = std::move(rv.trace);
  return out;
}

DecisionOutcome is_idempotent(const Word& w, const Presentation& p,
                              const Budget& b) {
  return decide_equal(w, w + w, p, b);
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::equal:
      return "equal";
    case Verdict::not_equal:
      return "not-equal";
    case Verdict::budget_exceeded:
      return "budget-exceeded";
  }
  return "?";
}

}  // namespace adian
