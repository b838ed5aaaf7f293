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

#include "adian/oracles.hpp"

#include <string>
#include <vector>

namespace adian {

namespace {

void replacements_into(const std::string& w, const std::string& from,
                       const std::string& to, std::set<std::string>& out) {
  if (from.size() > w.size()) {
    return;
  }
  for (std::size_t pos = 0; pos + from.size() <= w.size(); ++pos) {
    if (w.compare(pos, from.size(), from) == 0) {
      std::string next = w.substr(0, pos) + to + w.substr(pos + from.size());
      out.insert(std::move(next));
    }
  }
}

std::set<std::string> neighbors_str(const std::string& w,
                                    const Presentation& p) {
  std::set<std::string> out;
  for (const Relation& rel : p.relations) {
    const std::string lhs = rel.lhs.render();
    const std::string rhs = rel.rhs.render();
    replacements_into(w, lhs, rhs, out);
    replacements_into(w, rhs, lhs, out);
  }
  out.erase(w);
  return out;
}

}  // namespace

std::set<Word> rewrite_neighbors(const Word& w, const Presentation& p) {
  if (!w.is_positive()) {
    throw Error("rewrite_neighbors expects a positive word");
  }
  std::set<Word> out;
  for (const std::string& s : neighbors_str(w.render(), p)) {
    out.insert(Word::from_positive(s));
  }
  return out;
}

RewriteBall rewrite_ball(const Word& w, const Presentation& p,
                         std::size_t radius) {
  if (!w.is_positive()) {
    throw Error("rewrite_ball expects a positive word");
  }
  RewriteBall ball{w, radius, {}, false};
  std::set<std::string> members{w.render()};
  std::vector<std::string> frontier{w.render()};
  for (std::size_t level = 0; level < radius && !frontier.empty(); ++level) {
    std::vector<std::string> next;
    for (const std::string& s : frontier) {
      for (const std::string& n : neighbors_str(s, p)) {
        if (members.insert(n).second) {
          next.push_back(n);
        }
      }
    }
    frontier = std::move(next);
  }
  ball.saturated = frontier.empty();
  for (const std::string& s : members) {
    ball.members.insert(Word::from_positive(s));
  }
  return ball;
}

OracleVerdict positive_equal_bfs(const Word& u, const Word& v,
                                 const Presentation& p, std::size_t radius) {
  if (!u.is_positive() || !v.is_positive()) {
    throw Error("positive_equal_bfs expects positive words");
  }
  const std::string target = v.render();
  std::set<std::string> seen{u.render()};
  std::vector<std::string> frontier{u.render()};
  if (u.render() == target) {
    return OracleVerdict::equal;
  }
  for (std::size_t level = 0; level < radius && !frontier.empty(); ++level) {
    std::vector<std::string> next;
    for (const std::string& s : frontier) {
      for (const std::string& n : neighbors_str(s, p)) {
        if (n == target) {
          return OracleVerdict::equal;
        }
        if (seen.insert(n).second) {
          next.push_back(n);
        }
      }
    }
    frontier = std::move(next);
  }
  return OracleVerdict::not_equal_within_radius;
}

MunnGraph munn_graph(const Word& w) {
  return MunnGraph{fold_to_deterministic(linear_graph(w))};
}

bool munn_equal(const Word& u, const Word& v) {
  return iso_birooted(munn_graph(u).graph, munn_graph(v).graph);
}

}  // namespace adian
