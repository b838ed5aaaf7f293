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

#include "adian/rword_subgraph.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

namespace adian {

std::vector<Occurrence> occurrences(const Word& r, const Word& w) {
  if (!r.is_positive() || !w.is_positive()) {
    throw Error("occurrences expects positive words");
  }
  std::vector<Occurrence> out;
  if (r.size() > w.size()) {
    return out;
  }
  std::size_t index = 1;
  for (std::size_t pos = 0; pos + r.size() <= w.size(); ++pos) {
    bool match = true;
    for (std::size_t i = 0; i < r.size() && match; ++i) {
      match = w[pos + i] == r[i];
    }
    if (match) {
      out.push_back({r, index++, pos});
    }
  }
  return out;
}

std::size_t DeltaGraph::regions_of_generation(std::size_t g) const {
  return static_cast<std::size_t>(
      std::count_if(regions.begin(), regions.end(),
                    [g](const GenRegion& r) { return r.generation == g; }));
}

namespace {

Segment canonical_segment(const BirootedGraph& g, Segment s) {
  for (VertexId& v : s.chain) {
    v = g.canonical(v);
  }
  return s;
}

void validate_occurrence(const Word& w, const Occurrence& occ,
                         const Presentation& p) {
  if (!w.is_positive()) {
    throw Error("delta expects a positive word");
  }
  bool is_side = false;
  for (const Relation& rel : p.relations) {
    is_side = is_side || rel.lhs == occ.rword || rel.rhs == occ.rword;
  }
  if (!is_side) {
    throw OccurrenceMismatchError("'" + occ.rword.render() +
                                  "' is not a side of any relation");
  }
  std::vector<Occurrence> all = occurrences(occ.rword, w);
  if (occ.index == 0 || occ.index > all.size() ||
      all[occ.index - 1].start_pos != occ.start_pos) {
    throw OccurrenceMismatchError(
        "occurrence " + std::to_string(occ.index) + " of '" +
        occ.rword.render() + "' at position " +
        std::to_string(occ.start_pos) + " does not exist in '" + w.render() +
        "'");
  }
}

}  // namespace

DeltaGraph delta(const Word& w, const Occurrence& occ, const Presentation& p,
                 const Budget& b) {
  validate_occurrence(w, occ, p);

  DeltaGraph d;
  d.graph = fold_to_deterministic(linear_graph(w));
  for (const Edge& e : d.graph.edges()) {
    d.linear_edges.insert(e);
  }

  const VertexId occ_from = d.graph.canonical(
      static_cast<VertexId>(occ.start_pos));
  const VertexId occ_to = d.graph.canonical(
      static_cast<VertexId>(occ.start_pos + occ.rword.size()));

  std::set<VertexId> last_interiors;
  std::size_t step = 0;
  while (true) {
    std::vector<UnsaturatedSegment> candidates =
        find_unsaturated(d.graph, p);
    std::vector<UnsaturatedSegment> eligible;
    for (UnsaturatedSegment& u : candidates) {
      if (step == 0) {
        if (u.segment.from() == occ_from && u.segment.to() == occ_to &&
            u.segment.label == occ.rword) {
          eligible.push_back(std::move(u));
        }
      } else if (last_interiors.contains(u.segment.from()) ||
                 last_interiors.contains(u.segment.to())) {
        eligible.push_back(std::move(u));
      }
    }
    if (eligible.empty()) {
      d.closed = true;
      break;
    }
    if (step >= b.max_full_expansions ||
        d.graph.vertex_count() > b.max_vertices) {
      break;
    }

    std::set<VertexId> new_interiors;
    std::vector<std::pair<Segment, Segment>> sewn;  // (existing, new)
    for (const UnsaturatedSegment& u : eligible) {
      const Relation& rel = p.relations.at(u.relation_index);
      const Word& missing = side_word(rel, opposite(u.side));
      Segment fresh = d.graph.sew(u.segment.from(), u.segment.to(), missing);
      sewn.emplace_back(u.segment, std::move(fresh));
    }
    d.graph = fold_to_deterministic(std::move(d.graph));
    ++step;
    for (auto& [existing, fresh] : sewn) {
      Segment ce = canonical_segment(d.graph, std::move(existing));
      Segment cf = canonical_segment(d.graph, std::move(fresh));
      for (std::size_t i = 1; i + 1 < cf.chain.size(); ++i) {
        new_interiors.insert(cf.chain[i]);
      }
      d.regions.push_back({step, std::move(ce), std::move(cf)});
    }
    last_interiors = std::move(new_interiors);
  }
  d.steps_used = step;
  return d;
}

std::vector<VertexId> special_vertices(const DeltaGraph& d,
                                       const Presentation& p) {
  // Distinct relation words, in relation order.
  std::vector<Word> rwords;
  for (const Relation& rel : p.relations) {
    for (const Word* side : {&rel.lhs, &rel.rhs}) {
      if (std::find(rwords.begin(), rwords.end(), *side) == rwords.end()) {
        rwords.push_back(*side);
      }
    }
  }
  std::vector<VertexId> out;
  for (const Word& r : rwords) {
    std::set<VertexId> ends;
    for (VertexId v : d.graph.vertices()) {
      if (auto t = read_word(d.graph, v, r)) {
        ends.insert(*t);
      }
    }
    for (VertexId v : ends) {
      if (read_word(d.graph, v, r)) {
        out.push_back(v);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<GenRegion> special_regions(const DeltaGraph& d) {
  std::set<Edge> linear;
  for (const Edge& e : d.linear_edges) {
    linear.insert({d.graph.canonical(e.src), e.label,
                   d.graph.canonical(e.dst)});
  }
  std::vector<GenRegion> out;
  for (const GenRegion& r : d.regions) {
    if (r.generation != 3) {
      continue;
    }
    bool uses_linear = false;
    for (const Segment* side : {&r.boundary_existing, &r.boundary_new}) {
      for (Edge e : side->stored_edges()) {
        e.src = d.graph.canonical(e.src);
        e.dst = d.graph.canonical(e.dst);
        uses_linear = uses_linear || linear.contains(e);
      }
    }
    if (!uses_linear) {
      out.push_back(r);
    }
  }
  return out;
}

std::string DeltaReport::to_text() const {
  std::ostringstream os;
  for (const DeltaReportEntry& e : entries) {
    os << e.occ.rword.render() << " occ=" << e.occ.index
       << " pos=" << e.occ.start_pos << " closed="
       << (e.closed ? "true" : "false") << " steps=" << e.steps
       << " regions=" << e.regions << " vertices=" << e.vertices << "\n";
  }
  return os.str();
}

DeltaReport all_deltas_finite(const Word& w, const Presentation& p,
                              const Budget& b) {
  DeltaReport report;
  std::vector<Word> rwords;
  for (const Relation& rel : p.relations) {
    for (const Word* side : {&rel.lhs, &rel.rhs}) {
      if (std::find(rwords.begin(), rwords.end(), *side) == rwords.end()) {
        rwords.push_back(*side);
      }
    }
  }
  for (const Word& r : rwords) {
    for (const Occurrence& occ : occurrences(r, w)) {
      DeltaGraph d = delta(w, occ, p, b);
      report.entries.push_back({occ, d.closed, d.steps_used,
                                d.regions.size(), d.graph.vertex_count()});
      report.all_closed = report.all_closed && d.closed;
    }
  }
  return report;
}

}  // namespace adian
