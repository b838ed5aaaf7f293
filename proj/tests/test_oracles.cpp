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

#include <doctest.h>

#include <array>
#include <map>
#include <random>
#include <string>

#include "adian/oracles.hpp"
#include "adian/stephen.hpp"
#include "test_helpers.hpp"

using namespace adian;
using adian_test::aba_cc_presentation;
using adian_test::all_positive_words;
using adian_test::comm_presentation;
using adian_test::free_presentation;
using adian_test::pw;
using adian_test::sw;

TEST_CASE("rewrite_neighbors replaces factors in both directions") {
  Presentation comm = comm_presentation();
  CHECK(rewrite_neighbors(pw("ab"), comm) == std::set<Word>{pw("ba")});
  CHECK(rewrite_neighbors(pw("aabb"), comm) == std::set<Word>{pw("abab")});

  Presentation abacc = aba_cc_presentation();
  CHECK(rewrite_neighbors(pw("cc"), abacc) == std::set<Word>{pw("aba")});
  CHECK(rewrite_neighbors(pw("b"), abacc).empty());
}

TEST_CASE("positive_equal_bfs finds derivations within the radius") {
  Presentation comm = comm_presentation();
  CHECK(positive_equal_bfs(pw("aabbaabb"), pw("bbbbaaaa"), comm, 20) ==
        OracleVerdict::equal);
  CHECK(positive_equal_bfs(pw("a"), pw("b"), comm, 10) ==
        OracleVerdict::not_equal_within_radius);

  Presentation abacc = aba_cc_presentation();
  CHECK(positive_equal_bfs(pw("aba"), pw("cc"), abacc, 1) ==
        OracleVerdict::equal);
  CHECK(positive_equal_bfs(pw("cccc"), pw("cabac"), abacc, 8) ==
        OracleVerdict::equal);
  CHECK(positive_equal_bfs(pw("ccc"), pw("cabac"), abacc, 8) ==
        OracleVerdict::not_equal_within_radius);
}

TEST_CASE("positive_equal_bfs is symmetric") {
  Presentation comm = comm_presentation();
  auto words = all_positive_words("ab", 4);
  for (const std::string& u : words) {
    for (const std::string& v : words) {
      CHECK(positive_equal_bfs(pw(u), pw(v), comm, 12) ==
            positive_equal_bfs(pw(v), pw(u), comm, 12));
    }
  }
}

TEST_CASE("rewrite balls under ab=ba preserve the letter multiset") {
  Presentation comm = comm_presentation();
  for (const std::string& w : all_positive_words("ab", 5)) {
    RewriteBall ball = rewrite_ball(pw(w), comm, 16);
    CHECK(ball.saturated);
    CHECK(ball.members.contains(pw(w)));
    auto counts = [](const std::string& s) {
      std::array<int, 2> c{0, 0};
      for (char ch : s) {
        ++c[ch - 'a'];
      }
      return c;
    };
    for (const Word& member : ball.members) {
      CHECK(counts(member.render()) == counts(w));
    }
  }
}

TEST_CASE("munn_equal matches the folded-graph examples") {
  CHECK(munn_equal(sw("aA"), sw("aAaA")));
  CHECK_FALSE(munn_equal(sw("aA"), sw("Aa")));
  CHECK(munn_equal(sw("abBA"), sw("abBA")));
  CHECK_FALSE(munn_equal(sw("ab"), sw("ba")));
}

TEST_CASE("munn graphs are trees on the positive subgraph") {
  std::mt19937 gen(31337);
  const std::string chars = "abAB";
  std::uniform_int_distribution<int> len(1, 8);
  std::uniform_int_distribution<int> pick(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    std::string text;
    int n = len(gen);
    for (int i = 0; i < n; ++i) {
      text += chars[pick(gen)];
    }
    MunnGraph m = munn_graph(sw(text));
    // Connected with V-1 undirected edges: a tree.
    CHECK(m.graph.edge_count() == m.graph.vertex_count() - 1);
    CHECK_FALSE(has_positive_cycle(m.graph));
  }
}

TEST_CASE("munn_equal agrees with decide_equal over the free presentation") {
  Presentation free_ab = free_presentation("ab");
  Budget budget;
  std::mt19937 gen(2718281);
  const std::string chars = "abAB";
  std::uniform_int_distribution<int> len(1, 6);
  std::uniform_int_distribution<int> pick(0, 3);
  auto random_word = [&]() {
    std::string text;
    int n = len(gen);
    for (int i = 0; i < n; ++i) {
      text += chars[pick(gen)];
    }
    return text;
  };
  for (int trial = 0; trial < 500; ++trial) {
    Word u = sw(random_word());
    Word v = sw(random_word());
    DecisionOutcome out = decide_equal(u, v, free_ab, budget);
    REQUIRE(out.verdict != Verdict::budget_exceeded);
    CHECK((out.verdict == Verdict::equal) == munn_equal(u, v));
  }
}
