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

#include "adian/analysis.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace adian {

namespace {

std::pair<Letter, Letter> normalized(Letter a, Letter b) {
  return a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
}

SideGraph build_side_graph(const Presentation& p, bool first_letters) {
  SideGraph g;
  g.nodes = p.alphabet;
  g.edges.reserve(p.relations.size());
  for (const Relation& r : p.relations) {
    Letter a = first_letters ? r.lhs[0].base : r.lhs[r.lhs.size() - 1].base;
    Letter b = first_letters ? r.rhs[0].base : r.rhs[r.rhs.size() - 1].base;
    g.edges.push_back(normalized(a, b));
  }
  return g;
}

}  // namespace

SideGraph build_left_graph(const Presentation& p) {
  return build_side_graph(p, true);
}

SideGraph build_right_graph(const Presentation& p) {
  return build_side_graph(p, false);
}

bool is_forest(const SideGraph& g) {
  // Union-find over the letters; a loop, a parallel edge or an edge within
  // one component closes a path.
  std::map<Letter, Letter> parent;
  for (Letter l : g.nodes) {
    parent[l] = l;
  }
  auto find = [&](Letter l) {
    while (parent[l] != l) {
      l = parent[l] = parent[parent[l]];
    }
    return l;
  };
  for (const auto& [a, b] : g.edges) {
    if (a == b) {
      return false;
    }
    Letter ra = find(a);
    Letter rb = find(b);
    if (ra == rb) {
      return false;
    }
    parent[ra] = rb;
  }
  return true;
}

bool is_adian(const Presentation& p) {
  return is_forest(build_left_graph(p)) && is_forest(build_right_graph(p));
}

std::size_t max_border_length(const Word& t) {
  // Failure function of the Knuth-Morris-Pratt automaton.
  const std::size_t n = t.size();
  std::vector<std::size_t> pi(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = pi[i - 1];
    while (k > 0 && !(t[i] == t[k])) {
      k = pi[k - 1];
    }
    if (t[i] == t[k]) {
      ++k;
    }
    pi[i] = k;
  }
  return pi[n - 1];
}

bool self_overlaps(const Word& t) { return max_border_length(t) > 0; }

SelfOverlapForm self_overlap_form(const Word& t) {
  if (!t.is_positive()) {
    throw Error("self_overlap_form expects a positive word");
  }
  const std::size_t n = t.size();
  const std::size_t b = max_border_length(t);
  if (b == 0) {
    return {};
  }

  const std::size_t period = n - b;
  if (n % period == 0) {
    // The root cut at the smallest period is primitive.
    SelfOverlapForm f;
    f.kind = SelfOverlapKind::power;
    f.x = t.subword(0, period);
    f.exponent = n / period;
    return f;
  }

  if (2 * b < n) {
    SelfOverlapForm f;
    f.kind = SelfOverlapKind::xsx;
    f.x = t.subword(0, b);
    f.s = t.subword(b, n - 2 * b);
    return f;
  }

  // The maximal border overlaps itself in t.  With d the length of the
  // overlap of its two occurrences, t = x s x s x exactly when the middle
  // piece s = t[d .. b-d) is non-empty.
  const std::size_t d = 2 * b - n;
  if (b > 2 * d) {
    SelfOverlapForm f;
    f.kind = SelfOverlapKind::xsxsx;
    f.x = t.subword(0, d);
    f.s = t.subword(d, b - 2 * d);
    Word rebuilt = *f.x + *f.s + *f.x + *f.s + *f.x;
    if (!(rebuilt == t)) {
      throw Error("self_overlap_form: xsxsx decomposition failed for '" +
                  t.render() + "'");
    }
    return f;
  }

  // Degenerate periodicity (for example (ab)^3 a): no xsxsx split exists.
  // Walk the border chain down to the longest border with disjoint
  // occurrences; a non-power word always has one, since its shortest border
  // is unbordered and an overlapping unbordered border is impossible.
  std::size_t xb = b;
  while (xb > 0 && 2 * xb >= n) {
    xb = max_border_length(t.subword(0, xb));
  }
  if (xb == 0) {
    throw Error("self_overlap_form: no disjoint border for '" + t.render() +
                "'");
  }
  SelfOverlapForm f;
  f.kind = SelfOverlapKind::xsx;
  f.x = t.subword(0, xb);
  f.s = t.subword(xb, n - 2 * xb);
  return f;
}

bool is_factor(const Word& factor, const Word& w) {
  if (factor.size() > w.size()) {
    return false;
  }
  const auto& fs = factor.letters();
  const auto& ws = w.letters();
  return std::search(ws.begin(), ws.end(), fs.begin(), fs.end()) != ws.end();
}

namespace {

bool suffix_matches_prefix(const Word& u, const Word& v) {
  // Some non-empty proper suffix of u equals a prefix of v.
  const std::size_t limit = std::min(u.size(), v.size());
  for (std::size_t k = 1; k < limit; ++k) {
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      ok = u[u.size() - k + i] == v[i];
    }
    if (ok) {
      return true;
    }
  }
  return false;
}

}  // namespace

CrossOverlapKind cross_overlap(const Word& u, const Word& v) {
  bool uv = suffix_matches_prefix(u, v);
  bool vu = suffix_matches_prefix(v, u);
  if (uv && vu) {
    return CrossOverlapKind::two_way;
  }
  if (uv) {
    return CrossOverlapKind::one_way_uv;
  }
  if (vu) {
    return CrossOverlapKind::one_way_vu;
  }
  return CrossOverlapKind::none;
}

namespace {

bool shares_letter(const Word& u, const Word& v) {
  std::set<Letter> seen;
  for (const SignedLetter& l : u) {
    seen.insert(l.base);
  }
  for (const SignedLetter& l : v) {
    if (seen.contains(l.base)) {
      return true;
    }
  }
  return false;
}

}  // namespace

Classification classify(const Presentation& p) {
  if (p.relations.size() != 1) {
    throw MultipleRelationsError(
        "classification needs exactly one relation, got " +
        std::to_string(p.relations.size()));
  }
  const Word& u = p.relations[0].lhs;
  const Word& v = p.relations[0].rhs;

  Classification c;
  c.adian = is_adian(p);
  c.lhs_subword_of_rhs = is_factor(u, v);
  c.rhs_subword_of_lhs = is_factor(v, u);
  if (c.lhs_subword_of_rhs || c.rhs_subword_of_lhs) {
    c.decidable_class = DecidableClass::unknown;
    return c;
  }

  const bool su = self_overlaps(u);
  const bool sv = self_overlaps(v);
  const CrossOverlapKind cross = cross_overlap(u, v);

  OverlapType type;
  if (cross == CrossOverlapKind::two_way) {
    type = OverlapType::type4;
  } else if (cross != CrossOverlapKind::none) {
    type = OverlapType::type3;
  } else if (su && sv) {
    // Both sides have length >= 2 here, so a shared letter is exactly a
    // shared proper subword.
    type = shares_letter(u, v) ? OverlapType::type2b : OverlapType::type2a;
  } else if (su || sv) {
    type = OverlapType::type1;
  } else {
    type = OverlapType::no_overlap;
  }
  c.overlap_type = type;

  // Decidable classes follow the one-relation theorem, whose hypothesis
  // includes the Adian property; without it every class is unknown.
  if (c.adian) {
    switch (type) {
      case OverlapType::no_overlap:
        c.decidable_class = DecidableClass::class1;
        break;
      case OverlapType::type1:
        c.decidable_class = DecidableClass::class2;
        break;
      case OverlapType::type2a:
      case OverlapType::type2b: {
        bool u_power = self_overlap_form(u).kind == SelfOverlapKind::power;
        bool v_power = self_overlap_form(v).kind == SelfOverlapKind::power;
        c.decidable_class = (!u_power || !v_power) ? DecidableClass::class3
                                                   : DecidableClass::unknown;
        break;
      }
      case OverlapType::type3:
        c.decidable_class = (!su && !sv) ? DecidableClass::class4
                                         : DecidableClass::unknown;
        break;
      case OverlapType::type4:
        c.decidable_class = DecidableClass::unknown;
        break;
    }
  }
  return c;
}

const char* to_string(OverlapType t) {
  switch (t) {
    case OverlapType::no_overlap:
      return "none";
    case OverlapType::type1:
      return "1";
    case OverlapType::type2a:
      return "2a";
    case OverlapType::type2b:
      return "2b";
    case OverlapType::type3:
      return "3";
    case OverlapType::type4:
      return "4";
  }
  return "?";
}

const char* to_string(DecidableClass c) {
  switch (c) {
    case DecidableClass::class1:
      return "1";
    case DecidableClass::class2:
      return "2";
    case DecidableClass::class3:
      return "3";
    case DecidableClass::class4:
      return "4";
    case DecidableClass::unknown:
      return "unknown";
  }
  return "?";
}

const char* to_string(CrossOverlapKind k) {
  switch (k) {
    case CrossOverlapKind::none:
      return "none";
    case CrossOverlapKind::one_way_uv:
      return "one-way-uv";
    case CrossOverlapKind::one_way_vu:
      return "one-way-vu";
    case CrossOverlapKind::two_way:
      return "two-way";
  }
  return "?";
}

const char* to_string(SelfOverlapKind k) {
  switch (k) {
    case SelfOverlapKind::none:
      return "none";
    case SelfOverlapKind::power:
      return "power";
    case SelfOverlapKind::xsx:
      return "xsx";
    case SelfOverlapKind::xsxsx:
      return "xsxsx";
  }
  return "?";
}

std::string Classification::to_record() const {
  std::ostringstream os;
  os << "adian=" << (adian ? "true" : "false");
  os << " subword=";
  if (lhs_subword_of_rhs) {
    os << "lhs-of-rhs";
  } else if (rhs_subword_of_lhs) {
    os << "rhs-of-lhs";
  } else {
    os << "none";
  }
  os << " overlap_type=" << (overlap_type ? to_string(*overlap_type) : "na");
  os << " class=" << to_string(decidable_class);
  return os.str();
}

}  // namespace adian
