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

#include <random>
#include <string>

#include "adian/analysis.hpp"
#include "test_helpers.hpp"

using namespace adian;
using adian_test::all_positive_words;
using adian_test::brute_border;
using adian_test::brute_power;
using adian_test::make_presentation;
using adian_test::pw;

TEST_CASE("left and right graphs pick first and last letters") {
  Presentation comm = make_presentation("ab", {{"ab", "ba"}});
  SideGraph lg = build_left_graph(comm);
  REQUIRE(lg.edges.size() == 1);
  CHECK(lg.edges[0] == std::pair<Letter, Letter>{{'a'}, {'b'}});
  SideGraph rg = build_right_graph(comm);
  REQUIRE(rg.edges.size() == 1);
  CHECK(rg.edges[0] == std::pair<Letter, Letter>{{'a'}, {'b'}});

  Presentation selfloop = make_presentation("ab", {{"ab", "abba"}});
  CHECK(build_left_graph(selfloop).edges[0] ==
        std::pair<Letter, Letter>{{'a'}, {'a'}});

  Presentation abacc = make_presentation("abc", {{"aba", "cc"}});
  CHECK(build_left_graph(abacc).edges[0] ==
        std::pair<Letter, Letter>{{'a'}, {'c'}});
  CHECK(build_right_graph(abacc).edges[0] ==
        std::pair<Letter, Letter>{{'a'}, {'c'}});

  Presentation aab_b = make_presentation("ab", {{"aab", "b"}});
  CHECK(build_right_graph(aab_b).edges[0] ==
        std::pair<Letter, Letter>{{'b'}, {'b'}});
}

TEST_CASE("is_adian detects loops, parallel edges and cycles") {
  CHECK(is_adian(make_presentation("ab", {{"ab", "ba"}})));
  CHECK(is_adian(make_presentation("abc", {{"aba", "cc"}})));
  CHECK_FALSE(is_adian(make_presentation("ab", {{"ab", "abba"}})));

  // Two relations joining the same pair of first letters: a multigraph
  // cycle even without a loop.
  CHECK_FALSE(is_adian(make_presentation("ab", {{"ab", "ba"}, {"aa", "bb"}})));

  // A genuine triangle.
  CHECK_FALSE(is_adian(
      make_presentation("abc", {{"ab", "bc"}, {"ba", "ca"}, {"cb", "ac"}})));

  // Relation-free presentations are trivially cycle-free.
  CHECK(is_adian(make_presentation("ab", {})));
}

TEST_CASE("is_adian is false whenever first or last letters coincide") {
  std::mt19937 gen(99);
  std::uniform_int_distribution<int> len(1, 5);
  std::uniform_int_distribution<int> letter(0, 1);
  auto random_word = [&]() {
    std::string s;
    int n = len(gen);
    for (int i = 0; i < n; ++i) {
      s += letter(gen) ? 'b' : 'a';
    }
    return s;
  };
  for (int trial = 0; trial < 200; ++trial) {
    std::string u = random_word();
    std::string v = random_word();
    if (u == v) {
      continue;
    }
    if (u.front() == v.front() || u.back() == v.back()) {
      CHECK_FALSE(is_adian(make_presentation("ab", {{u, v}})));
    }
  }
}

TEST_CASE("self_overlap_form matches the three normal forms") {
  SelfOverlapForm power = self_overlap_form(pw("abab"));
  CHECK(power.kind == SelfOverlapKind::power);
  CHECK(power.x == pw("ab"));
  CHECK(power.exponent == 2);

  SelfOverlapForm xsx = self_overlap_form(pw("aba"));
  CHECK(xsx.kind == SelfOverlapKind::xsx);
  CHECK(xsx.x == pw("a"));
  CHECK(xsx.s == pw("b"));

  SelfOverlapForm xsxsx = self_overlap_form(pw("ababa"));
  CHECK(xsxsx.kind == SelfOverlapKind::xsxsx);
  CHECK(xsxsx.x == pw("a"));
  CHECK(xsxsx.s == pw("b"));

  CHECK(self_overlap_form(pw("a")).kind == SelfOverlapKind::none);
  CHECK(self_overlap_form(pw("ab")).kind == SelfOverlapKind::none);
}

TEST_CASE("highly periodic non-powers fall back to a disjoint border") {
  // (ab)^3 a has maximal border ababa, which overlaps itself but admits no
  // x s x s x split; the longest disjoint border is aba.
  SelfOverlapForm f = self_overlap_form(pw("abababa"));
  CHECK(f.kind == SelfOverlapKind::xsx);
  CHECK(f.x == pw("aba"));
  CHECK(f.s == pw("b"));
}

TEST_CASE("self_overlap_form agrees with brute force (length <= 10)") {
  for (const std::string& t : all_positive_words("ab", 10)) {
    Word w = pw(t);
    SelfOverlapForm f = self_overlap_form(w);
    const std::size_t border = brute_border(t);
    CHECK((f.kind != SelfOverlapKind::none) == (border > 0));
    CHECK(max_border_length(w) == border);

    auto [root, exp] = brute_power(t);
    if (f.kind == SelfOverlapKind::power) {
      REQUIRE(exp >= 2);
      CHECK(f.x->render() == root);
      CHECK(*f.exponent == exp);
      // The reported root is primitive.
      CHECK(brute_power(root).second == 0);
      // Exact reconstruction x^n == t.
      std::string rebuilt;
      for (std::size_t i = 0; i < *f.exponent; ++i) {
        rebuilt += f.x->render();
      }
      CHECK(rebuilt == t);
    } else {
      CHECK(exp == 0);  // non-power words never report kind=power
    }
    if (f.kind == SelfOverlapKind::xsx) {
      CHECK(f.x->render() + f.s->render() + f.x->render() == t);
      CHECK(2 * f.x->size() < w.size());  // disjoint occurrences
    }
    if (f.kind == SelfOverlapKind::xsxsx) {
      const std::string x = f.x->render();
      const std::string s = f.s->render();
      CHECK(x + s + x + s + x == t);
      // x s x is the maximal border.
      CHECK(x + s + x == t.substr(0, border));
    }
  }
}

TEST_CASE("cross_overlap reports directions") {
  CHECK(cross_overlap(pw("ab"), pw("ba")) == CrossOverlapKind::two_way);
  CHECK(cross_overlap(pw("aba"), pw("cc")) == CrossOverlapKind::none);
  CHECK(cross_overlap(pw("ab"), pw("bc")) == CrossOverlapKind::one_way_uv);
  CHECK(cross_overlap(pw("bc"), pw("ab")) == CrossOverlapKind::one_way_vu);
}

TEST_CASE("cross_overlap is symmetric under swapping arguments") {
  auto flip = [](CrossOverlapKind k) {
    switch (k) {
      case CrossOverlapKind::one_way_uv:
        return CrossOverlapKind::one_way_vu;
      case CrossOverlapKind::one_way_vu:
        return CrossOverlapKind::one_way_uv;
      default:
        return k;
    }
  };
  for (const std::string& u : all_positive_words("ab", 4)) {
    for (const std::string& v : all_positive_words("ab", 4)) {
      if (u == v) {
        continue;
      }
      CHECK(cross_overlap(pw(u), pw(v)) == flip(cross_overlap(pw(v), pw(u))));
    }
  }
}

TEST_CASE("classify reproduces the one-relation table") {
  Classification c1 = classify(make_presentation("abc", {{"aba", "cc"}}));
  CHECK(c1.adian);
  CHECK_FALSE(c1.lhs_subword_of_rhs);
  CHECK_FALSE(c1.rhs_subword_of_lhs);
  CHECK(c1.overlap_type == OverlapType::type2a);
  CHECK(c1.decidable_class == DecidableClass::class3);
  CHECK(c1.to_record() ==
        "adian=true subword=none overlap_type=2a class=3");

  Classification c2 = classify(make_presentation("ab", {{"aba", "bbb"}}));
  CHECK(c2.overlap_type == OverlapType::type2b);
  CHECK(c2.decidable_class == DecidableClass::class3);

  Classification c3 = classify(make_presentation("abcd", {{"ab", "cd"}}));
  CHECK(c3.overlap_type == OverlapType::no_overlap);
  CHECK(c3.decidable_class == DecidableClass::class1);

  Classification c4 = classify(make_presentation("ab", {{"ab", "ba"}}));
  CHECK(c4.overlap_type == OverlapType::type4);
  CHECK(c4.decidable_class == DecidableClass::unknown);

  // One self-overlapping side, no cross overlap.
  Classification c5 = classify(make_presentation("abcd", {{"aba", "cd"}}));
  CHECK(c5.overlap_type == OverlapType::type1);
  CHECK(c5.decidable_class == DecidableClass::class2);

  // One-way cross overlap with no self overlaps.
  Classification c6 = classify(make_presentation("abc", {{"ab", "bc"}}));
  CHECK(c6.overlap_type == OverlapType::type3);
  CHECK(c6.decidable_class == DecidableClass::class4);

  // Type 2 with both sides proper powers stays open.
  Classification c7 = classify(make_presentation("ab", {{"aa", "bb"}}));
  CHECK(c7.overlap_type == OverlapType::type2a);
  CHECK(c7.decidable_class == DecidableClass::unknown);
}

TEST_CASE("classify flags subword relations and skips the overlap type") {
  Classification c = classify(make_presentation("ab", {{"a", "aba"}}));
  CHECK(c.lhs_subword_of_rhs);
  CHECK_FALSE(c.rhs_subword_of_lhs);
  CHECK_FALSE(c.overlap_type.has_value());
  CHECK(c.decidable_class == DecidableClass::unknown);
  CHECK(c.to_record() ==
        "adian=false subword=lhs-of-rhs overlap_type=na class=unknown");
}

TEST_CASE("classify requires exactly one relation") {
  CHECK_THROWS_AS(classify(make_presentation("ab", {})),
                  MultipleRelationsError);
  CHECK_THROWS_AS(
      classify(make_presentation("abcd", {{"ab", "cd"}, {"ac", "bd"}})),
      MultipleRelationsError);
}

TEST_CASE("classes honor the Adian hypothesis") {
  // Disjoint letters but a shared first letter: not Adian, so no class.
  Classification c = classify(make_presentation("abc", {{"ab", "ac"}}));
  CHECK_FALSE(c.adian);
  CHECK(c.overlap_type == OverlapType::no_overlap);
  CHECK(c.decidable_class == DecidableClass::unknown);
}

TEST_CASE("classify is total on non-subword pairs (exhaustive, length <= 4)") {
  auto words = all_positive_words("ab", 4);
  for (const std::string& u : words) {
    for (const std::string& v : words) {
      if (u == v) {
        continue;
      }
      Word wu = pw(u);
      Word wv = pw(v);
      if (is_factor(wu, wv) || is_factor(wv, wu)) {
        continue;
      }
      Classification c = classify(make_presentation("ab", {{u, v}}));
      REQUIRE(c.overlap_type.has_value());

      // Cross-check every invariant with independent string predicates.
      const bool su = brute_border(u) > 0;
      const bool sv = brute_border(v) > 0;
      CrossOverlapKind cross = cross_overlap(wu, wv);
      switch (*c.overlap_type) {
        case OverlapType::no_overlap:
          CHECK((!su && !sv && cross == CrossOverlapKind::none));
          break;
        case OverlapType::type1:
          CHECK((su != sv && cross == CrossOverlapKind::none));
          break;
        case OverlapType::type2a:
        case OverlapType::type2b:
          CHECK((su && sv && cross == CrossOverlapKind::none));
          break;
        case OverlapType::type3:
          CHECK((cross == CrossOverlapKind::one_way_uv ||
                 cross == CrossOverlapKind::one_way_vu));
          break;
        case OverlapType::type4:
          CHECK(cross == CrossOverlapKind::two_way);
          break;
      }
    }
  }
}
