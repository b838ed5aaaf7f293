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

#include "adian/word_graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_map>

namespace adian {

std::vector<Edge> Segment::stored_edges() const {
  std::vector<Edge> out;
  out.reserve(label.size());
  for (std::size_t i = 0; i < label.size(); ++i) {
    const SignedLetter& l = label[i];
    if (l.is_positive()) {
      out.push_back({chain[i], l.base, chain[i + 1]});
    } else {
      out.push_back({chain[i + 1], l.base, chain[i]});
    }
  }
  return out;
}

VertexId BirootedGraph::find(VertexId v) const {
  VertexId root = v;
  while (parent_[root] != root) {
    root = parent_[root];
  }
  while (parent_[v] != root) {
    VertexId next = parent_[v];
    parent_[v] = root;
    v = next;
  }
  return root;
}

VertexId BirootedGraph::add_vertex() {
  VertexId id = static_cast<VertexId>(parent_.size());
  parent_.push_back(id);
  adj_.emplace_back();
  ++live_;
  deterministic_cache_.reset();
  return id;
}

void BirootedGraph::add_edge(VertexId src, Letter label, VertexId dst) {
  if (!valid_id(src) || !valid_id(dst)) {
    throw Error("add_edge: vertex id out of range");
  }
  src = find(src);
  dst = find(dst);
  adj_[src].out.emplace_back(label, dst);
  adj_[dst].in.emplace_back(label, src);
  deterministic_cache_.reset();
}

void BirootedGraph::set_roots(VertexId start, VertexId end) {
  if (!valid_id(start) || !valid_id(end)) {
    throw Error("set_roots: vertex id out of range");
  }
  start_ = start;
  end_ = end;
}

Segment BirootedGraph::sew(VertexId from, VertexId to, const Word& w) {
  if (!valid_id(from) || !valid_id(to)) {
    throw Error("sew: attachment vertex is not in the graph");
  }
  std::vector<VertexId> chain;
  chain.reserve(w.size() + 1);
  chain.push_back(find(from));
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    chain.push_back(add_vertex());
  }
  chain.push_back(find(to));
  for (std::size_t i = 0; i < w.size(); ++i) {
    const SignedLetter& l = w[i];
    if (l.is_positive()) {
      add_edge(chain[i], l.base, chain[i + 1]);
    } else {
      add_edge(chain[i + 1], l.base, chain[i]);
    }
  }
  return Segment{std::move(chain), w};
}

std::size_t BirootedGraph::edge_count() const { return edges().size(); }

std::vector<VertexId> BirootedGraph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(live_);
  for (VertexId v = 0; v < parent_.size(); ++v) {
    if (parent_[v] == v) {
      out.push_back(v);
    }
  }
  return out;
}

std::vector<Edge> BirootedGraph::edges() const {
  std::vector<Edge> out;
  for (VertexId v = 0; v < parent_.size(); ++v) {
    if (parent_[v] != v) {
      continue;
    }
    for (const auto& [label, target] : adj_[v].out) {
      out.push_back({v, label, find(target)});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool BirootedGraph::is_deterministic() const {
  if (deterministic_cache_) {
    return *deterministic_cache_;
  }
  bool result = true;
  std::vector<Edge> es = edges();
  for (std::size_t i = 0; i + 1 < es.size() && result; ++i) {
    // es is sorted by (src, label, dst) and deduplicated, so an (src, label)
    // repeat means two distinct targets.
    if (es[i].src == es[i + 1].src && es[i].label == es[i + 1].label) {
      result = false;
    }
  }
  if (result) {
    std::vector<std::pair<Letter, VertexId>> incoming;
    incoming.reserve(es.size());
    for (const Edge& e : es) {
      incoming.emplace_back(e.label, e.dst);
    }
    std::sort(incoming.begin(), incoming.end());
    for (std::size_t i = 0; i + 1 < incoming.size(); ++i) {
      if (incoming[i] == incoming[i + 1]) {
        result = false;
        break;
      }
    }
  }
  deterministic_cache_ = result;
  return result;
}

std::optional<VertexId> BirootedGraph::step(VertexId from,
                                            SignedLetter l) const {
  VertexId v = find(from);
  if (l.is_positive()) {
    for (const auto& [label, target] : adj_[v].out) {
      if (label == l.base) {
        return find(target);
      }
    }
  } else {
    for (const auto& [label, source] : adj_[v].in) {
      if (label == l.base) {
        return find(source);
      }
    }
  }
  return std::nullopt;
}

void BirootedGraph::splice_lists(VertexId rep, VertexId other) {
  auto& r = adj_[rep];
  auto& o = adj_[other];
  r.out.insert(r.out.end(), o.out.begin(), o.out.end());
  r.in.insert(r.in.end(), o.in.begin(), o.in.end());
  o.out.clear();
  o.out.shrink_to_fit();
  o.in.clear();
  o.in.shrink_to_fit();
}

void BirootedGraph::merge_into(VertexId rep, VertexId other) {
  parent_[other] = rep;
  splice_lists(rep, other);
  --live_;
  deterministic_cache_.reset();
}

void BirootedGraph::canonicalize_and_dedupe(VertexId v) {
  auto canon = [this](std::vector<std::pair<Letter, VertexId>>& list) {
    for (auto& [label, w] : list) {
      w = find(w);
    }
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  };
  canon(adj_[v].out);
  canon(adj_[v].in);
}

BirootedGraph fold_impl(BirootedGraph g, std::mt19937* rng) {
  // Worklist of vertices whose adjacency may hold a foldable pair.  The
  // deterministic variant always takes the smallest id; the seeded variant
  // picks at random.  Folding is confluent, so both converge to isomorphic
  // graphs; the deterministic order additionally pins vertex ids.
  std::set<VertexId> pending_set;
  std::vector<VertexId> pending_vec;
  auto push = [&](VertexId v) {
    if (rng != nullptr) {
      pending_vec.push_back(v);
    } else {
      pending_set.insert(v);
    }
  };
  auto pop = [&]() -> VertexId {
    if (rng != nullptr) {
      std::uniform_int_distribution<std::size_t> pick(0,
                                                      pending_vec.size() - 1);
      std::size_t i = pick(*rng);
      VertexId v = pending_vec[i];
      pending_vec[i] = pending_vec.back();
      pending_vec.pop_back();
      return v;
    }
    VertexId v = *pending_set.begin();
    pending_set.erase(pending_set.begin());
    return v;
  };
  auto empty = [&]() {
    return rng != nullptr ? pending_vec.empty() : pending_set.empty();
  };

  for (VertexId v : g.vertices()) {
    push(v);
  }

  while (!empty()) {
    VertexId v = g.find(pop());
    bool changed = true;
    while (changed) {
      changed = false;
      g.canonicalize_and_dedupe(v);

      // Collect all foldable pairs at v: two out-edges (or two in-edges)
      // with the same label and distinct endpoints.
      std::vector<std::pair<VertexId, VertexId>> conflicts;
      auto scan = [&](const std::vector<std::pair<Letter, VertexId>>& list) {
        for (std::size_t i = 0; i + 1 < list.size(); ++i) {
          if (list[i].first == list[i + 1].first &&
              list[i].second != list[i + 1].second) {
            conflicts.emplace_back(list[i].second, list[i + 1].second);
          }
        }
      };
      scan(g.adj_[v].out);
      scan(g.adj_[v].in);
      if (conflicts.empty()) {
        break;
      }
      std::size_t which = 0;
      if (rng != nullptr && conflicts.size() > 1) {
        std::uniform_int_distribution<std::size_t> pick(
            0, conflicts.size() - 1);
        which = pick(*rng);
      }
      auto [a, b] = conflicts[which];
      a = g.find(a);
      b = g.find(b);
      if (a != b) {
        VertexId rep = std::min(a, b);
        VertexId other = std::max(a, b);
        g.merge_into(rep, other);
        g.canonicalize_and_dedupe(rep);
        // Any neighbor of the merged vertex may now hold a foldable pair.
        for (const auto& [label, t] : g.adj_[rep].out) {
          push(g.find(t));
        }
        for (const auto& [label, s] : g.adj_[rep].in) {
          push(g.find(s));
        }
        push(rep);
        v = g.find(v);
      }
      changed = true;
    }
  }

  for (VertexId v : g.vertices()) {
    g.canonicalize_and_dedupe(v);
  }
  g.deterministic_cache_ = true;
  return g;
}

BirootedGraph fold_to_deterministic(BirootedGraph g) {
  return fold_impl(std::move(g), nullptr);
}

BirootedGraph fold_to_deterministic(BirootedGraph g, std::mt19937& rng) {
  return fold_impl(std::move(g), &rng);
}

BirootedGraph linear_graph(const Word& w) {
  BirootedGraph g;
  VertexId first = g.add_vertex();
  VertexId prev = first;
  for (std::size_t i = 0; i < w.size(); ++i) {
    VertexId next = g.add_vertex();
    const SignedLetter& l = w[i];
    if (l.is_positive()) {
      g.add_edge(prev, l.base, next);
    } else {
      g.add_edge(next, l.base, prev);
    }
    prev = next;
  }
  g.set_roots(first, prev);
  return g;
}

std::optional<Segment> read_path(const BirootedGraph& g, VertexId from,
                                 const Word& w) {
  if (!g.is_deterministic()) {
    throw NotDeterministicError(
        "read on a graph that is not deterministic; fold it first");
  }
  if (!g.valid_id(from)) {
    throw Error("read: vertex id out of range");
  }
  std::vector<VertexId> chain;
  chain.reserve(w.size() + 1);
  VertexId v = g.canonical(from);
  chain.push_back(v);
  for (const SignedLetter& l : w) {
    std::optional<VertexId> next = g.step(v, l);
    if (!next) {
      return std::nullopt;
    }
    v = *next;
    chain.push_back(v);
  }
  return Segment{std::move(chain), w};
}

std::optional<VertexId> read_word(const BirootedGraph& g, VertexId from,
                                  const Word& w) {
  std::optional<Segment> seg = read_path(g, from, w);
  if (!seg) {
    return std::nullopt;
  }
  return seg->to();
}

std::pair<BirootedGraph, Segment> sew_segment(BirootedGraph g, VertexId from,
                                              VertexId to, const Word& w) {
  Segment s = g.sew(from, to, w);
  return {std::move(g), std::move(s)};
}

namespace {

// Letter -> neighbor maps of the vertices of a deterministic graph.
struct LetterMaps {
  std::map<Letter, VertexId> out;
  std::map<Letter, VertexId> in;
};

std::unordered_map<VertexId, LetterMaps> all_letter_maps(
    const BirootedGraph& g) {
  std::unordered_map<VertexId, LetterMaps> maps;
  for (VertexId v : g.vertices()) {
    maps[v];
  }
  for (const Edge& e : g.edges()) {
    maps[e.src].out[e.label] = e.dst;
    maps[e.dst].in[e.label] = e.src;
  }
  return maps;
}

}  // namespace

bool iso_birooted(const BirootedGraph& g1, const BirootedGraph& g2) {
  if (!g1.is_deterministic() || !g2.is_deterministic()) {
    throw NotDeterministicError("iso_birooted requires deterministic graphs");
  }
  if (g1.vertex_count() != g2.vertex_count() ||
      g1.edge_count() != g2.edge_count()) {
    return false;
  }
  auto maps1 = all_letter_maps(g1);
  auto maps2 = all_letter_maps(g2);
  std::unordered_map<VertexId, VertexId> fwd;
  std::queue<std::pair<VertexId, VertexId>> queue;
  fwd[g1.start()] = g2.start();
  queue.push({g1.start(), g2.start()});
  while (!queue.empty()) {
    auto [u, v] = queue.front();
    queue.pop();
    const LetterMaps& mu = maps1.at(u);
    const LetterMaps& mv = maps2.at(v);
    if (mu.out.size() != mv.out.size() || mu.in.size() != mv.in.size()) {
      return false;
    }
    auto match = [&](const std::map<Letter, VertexId>& a,
                     const std::map<Letter, VertexId>& b) {
      for (const auto& [label, ta] : a) {
        auto it = b.find(label);
        if (it == b.end()) {
          return false;
        }
        VertexId tb = it->second;
        auto seen = fwd.find(ta);
        if (seen == fwd.end()) {
          fwd[ta] = tb;
          queue.push({ta, tb});
        } else if (seen->second != tb) {
          return false;
        }
      }
      return true;
    };
    if (!match(mu.out, mv.out) || !match(mu.in, mv.in)) {
      return false;
    }
  }
  if (fwd.size() != g1.vertex_count()) {
    return false;  // roots do not reach all of g1
  }
  auto at_end = fwd.find(g1.end());
  return at_end != fwd.end() && at_end->second == g2.end();
}

bool embeds_in(const BirootedGraph& sub, const BirootedGraph& host) {
  if (!sub.is_deterministic() || !host.is_deterministic()) {
    throw NotDeterministicError("embeds_in requires deterministic graphs");
  }
  auto sub_maps = all_letter_maps(sub);
  auto host_maps = all_letter_maps(host);
  std::unordered_map<VertexId, VertexId> fwd;
  std::unordered_map<VertexId, VertexId> bwd;
  std::queue<VertexId> queue;
  auto bind = [&](VertexId u, VertexId v) {
    auto it = fwd.find(u);
    if (it != fwd.end()) {
      return it->second == v;
    }
    if (bwd.contains(v)) {
      return false;  // not injective
    }
    fwd[u] = v;
    bwd[v] = u;
    queue.push(u);
    return true;
  };
  if (!bind(sub.start(), host.start())) {
    return false;
  }
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop();
    VertexId v = fwd.at(u);
    const LetterMaps& mu = sub_maps.at(u);
    const LetterMaps& mv = host_maps.at(v);
    for (const auto& [label, tu] : mu.out) {
      auto it = mv.out.find(label);
      if (it == mv.out.end() || !bind(tu, it->second)) {
        return false;
      }
    }
    for (const auto& [label, su] : mu.in) {
      auto it = mv.in.find(label);
      if (it == mv.in.end() || !bind(su, it->second)) {
        return false;
      }
    }
  }
  auto at_end = fwd.find(sub.end());
  return at_end != fwd.end() && at_end->second == host.end();
}

std::pair<std::vector<VertexId>, std::vector<VertexId>> sources_and_sinks(
    const BirootedGraph& g) {
  std::set<VertexId> has_in;
  std::set<VertexId> has_out;
  for (const Edge& e : g.edges()) {
    has_out.insert(e.src);
    has_in.insert(e.dst);
  }
  std::vector<VertexId> sources;
  std::vector<VertexId> sinks;
  for (VertexId v : g.vertices()) {
    if (!has_in.contains(v)) {
      sources.push_back(v);
    }
    if (!has_out.contains(v)) {
      sinks.push_back(v);
    }
  }
  return {std::move(sources), std::move(sinks)};
}

bool has_positive_cycle(const BirootedGraph& g) {
  std::map<VertexId, std::vector<VertexId>> succ;
  for (const Edge& e : g.edges()) {
    succ[e.src].push_back(e.dst);
  }
  enum class Color { white, gray, black };
  std::map<VertexId, Color> color;
  for (VertexId v : g.vertices()) {
    color[v] = Color::white;
  }
  // Iterative DFS with explicit entry/exit events.
  for (VertexId root : g.vertices()) {
    if (color[root] != Color::white) {
      continue;
    }
    std::vector<std::pair<VertexId, bool>> stack{{root, false}};
    while (!stack.empty()) {
      auto [v, exiting] = stack.back();
      stack.pop_back();
      if (exiting) {
        color[v] = Color::black;
        continue;
      }
      if (color[v] == Color::black) {
        continue;
      }
      if (color[v] == Color::gray) {
        continue;
      }
      color[v] = Color::gray;
      stack.push_back({v, true});
      for (VertexId w : succ[v]) {
        if (color[w] == Color::gray) {
          return true;
        }
        if (color[w] == Color::white) {
          stack.push_back({w, false});
        }
      }
    }
  }
  return false;
}

bool involution_consistent(const BirootedGraph& g) {
  std::vector<Edge> from_out;
  std::vector<Edge> from_in;
  for (VertexId v = 0; v < g.parent_.size(); ++v) {
    if (g.parent_[v] != v) {
      if (!g.adj_[v].out.empty() || !g.adj_[v].in.empty()) {
        return false;  // merged-away vertices must hold no edges
      }
      continue;
    }
    for (const auto& [label, t] : g.adj_[v].out) {
      from_out.push_back({v, label, g.find(t)});
    }
    for (const auto& [label, s] : g.adj_[v].in) {
      from_in.push_back({g.find(s), label, v});
    }
  }
  std::sort(from_out.begin(), from_out.end());
  std::sort(from_in.begin(), from_in.end());
  return from_out == from_in;
}

std::string to_dot(const BirootedGraph& g) {
  std::ostringstream os;
  os << "digraph inverse_word_graph {\n";
  os << "  rankdir=LR;\n";
  VertexId start = g.start();
  VertexId end = g.end();
  for (VertexId v : g.vertices()) {
    const char* shape = "circle";
    if (v == start) {
      shape = "doublecircle";
    } else if (v == end) {
      shape = "doubleoctagon";
    }
    os << "  \"" << v << "\" [shape=" << shape << "];\n";
  }
  for (const Edge& e : g.edges()) {
    os << "  \"" << e.src << "\" -> \"" << e.dst << "\" [label=\""
       << e.label.symbol << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string dump(const BirootedGraph& g) {
  std::ostringstream os;
  for (VertexId v : g.vertices()) {
    os << "v " << v << "\n";
  }
  for (const Edge& e : g.edges()) {
    os << "e " << e.src << " " << e.label.symbol << " " << e.dst << "\n";
  }
  os << "roots " << g.start() << " " << g.end() << "\n";
  return os.str();
}

}  // namespace adian
