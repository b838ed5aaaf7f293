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

// Command-line front end: analyze / sgraph / subgraph / deltas / decide /
// idempotent.
//
// Exit codes: 0 success (decide: equal; sgraph/subgraph/deltas: closed),
// 1 decide: not equal, 2 budget exceeded, 3 usage or input errors.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "adian/analysis.hpp"
#include "adian/oracles.hpp"
#include "adian/presentation.hpp"
#include "adian/rword_subgraph.hpp"
#include "adian/stephen.hpp"
#include "adian/word_graph.hpp"

namespace {

constexpr int kExitNotEqual = 1;
constexpr int kExitBudget = 2;
constexpr int kExitError = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw adian::Error("cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

adian::Presentation load_presentation(const std::string& path) {
  try {
    return adian::parse_presentation(read_file(path));
  } catch (const adian::ParseError& e) {
    throw adian::Error(path + ":" + e.what());
  }
}

void write_dot(const std::string& path, const adian::BirootedGraph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw adian::Error("cannot write '" + path + "'");
  }
  out << adian::to_dot(g);
}

struct CommonOptions {
  std::string presentation_file;
  std::size_t budget_steps = adian::Budget{}.max_full_expansions;
  std::size_t max_vertices = adian::Budget{}.max_vertices;

  adian::Budget budget() const { return {budget_steps, max_vertices}; }
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool with_budget = true) {
  cmd->add_option("-p,--presentation", opts.presentation_file,
                  "presentation file")
      ->required();
  if (with_budget) {
    cmd->add_option("--budget", opts.budget_steps,
                    "maximum number of full expansions");
    cmd->add_option("--max-vertices", opts.max_vertices,
                    "vertex cap for the construction");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"word problem tools for Adian inverse semigroups"};
  app.require_subcommand(1);

  CommonOptions opts;

  auto* analyze = app.add_subcommand(
      "analyze", "classify a presentation (Adian / overlap type / class)");
  add_common(analyze, opts, false);

  std::string word_text;
  std::string dot_path;
  bool trace = false;
  auto* sgraph = app.add_subcommand(
      "sgraph", "build the Schutzenberger automaton of a word");
  add_common(sgraph, opts);
  sgraph->add_option("-w,--word", word_text, "input word")->required();
  sgraph->add_option("--dot", dot_path, "write the graph as DOT");
  sgraph->add_flag("--trace", trace, "print one line per full expansion");

  std::string side_text;
  std::size_t occurrence_index = 1;
  std::size_t relation_index = 0;
  auto* subgraph = app.add_subcommand(
      "subgraph", "build the subgraph generated by one relation-word "
                  "occurrence");
  add_common(subgraph, opts);
  subgraph->add_option("-w,--word", word_text, "positive input word")
      ->required();
  subgraph->add_option("-r,--side", side_text, "lhs or rhs")->required();
  subgraph->add_option("-i,--occurrence", occurrence_index,
                       "1-based occurrence number")
      ->required();
  subgraph->add_option("--rel", relation_index,
                       "relation index (default 0)");
  subgraph->add_option("--dot", dot_path, "write the graph as DOT");

  auto* deltas = app.add_subcommand(
      "deltas", "build the subgraphs generated by every relation-word "
                "occurrence");
  add_common(deltas, opts);
  deltas->add_option("-w,--word", word_text, "positive input word")
      ->required();

  std::string u_text;
  std::string v_text;
  auto* decide = app.add_subcommand("decide", "decide whether u = v");
  add_common(decide, opts);
  decide->add_option("-u", u_text, "left word")->required();
  decide->add_option("-v", v_text, "right word")->required();

  auto* idempotent = app.add_subcommand(
      "idempotent", "decide whether w is an idempotent (w = w^2)");
  add_common(idempotent, opts);
  idempotent->add_option("-w,--word", word_text, "input word")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints the message; 0 for --help
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (app.got_subcommand(analyze)) {
      adian::Presentation p = load_presentation(opts.presentation_file);
      if (p.relations.size() == 1) {
        std::cout << adian::classify(p).to_record() << "\n";
      } else {
        std::cout << "adian=" << (adian::is_adian(p) ? "true" : "false")
                  << " subword=na overlap_type=na class=na\n";
      }
      return 0;
    }

    if (app.got_subcommand(sgraph)) {
      adian::Presentation p = load_presentation(opts.presentation_file);
      adian::Word w = adian::parse_word(word_text, p.alphabet);
      adian::SchutzenbergerResult r =
          adian::schutzenberger(w, p, opts.budget());
      if (!dot_path.empty()) {
        write_dot(dot_path, r.graph);
      }
      if (trace) {
        std::cout << r.trace.to_text();
      } else {
        std::cout << (r.closed() ? "closed" : "budget-exceeded") << "\n";
      }
      return r.closed() ? 0 : kExitBudget;
    }

    if (app.got_subcommand(subgraph)) {
      adian::Presentation p = load_presentation(opts.presentation_file);
      adian::Word w = adian::parse_word(word_text, p.alphabet);
      if (!w.is_positive()) {
        throw adian::Error("subgraph requires a positive word");
      }
      if (relation_index >= p.relations.size()) {
        throw adian::Error("relation index out of range");
      }
      if (side_text != "lhs" && side_text != "rhs") {
        throw adian::Error("-r expects 'lhs' or 'rhs'");
      }
      const adian::Relation& rel = p.relations[relation_index];
      const adian::Word& rword = side_text == "lhs" ? rel.lhs : rel.rhs;
      auto occs = adian::occurrences(rword, w);
      if (occurrence_index == 0 || occurrence_index > occs.size()) {
        throw adian::Error("'" + rword.render() + "' has " +
                           std::to_string(occs.size()) +
                           " occurrence(s) in '" + w.render() + "'");
      }
      adian::DeltaGraph d =
          adian::delta(w, occs[occurrence_index - 1], p, opts.budget());
      if (!dot_path.empty()) {
        write_dot(dot_path, d.graph);
      }
      const adian::Occurrence& occ = occs[occurrence_index - 1];
      std::cout << occ.rword.render() << " occ=" << occ.index
                << " pos=" << occ.start_pos
                << " closed=" << (d.closed ? "true" : "false")
                << " steps=" << d.steps_used
                << " regions=" << d.regions.size()
                << " vertices=" << d.graph.vertex_count() << "\n";
      return d.closed ? 0 : kExitBudget;
    }

    if (app.got_subcommand(deltas)) {
      adian::Presentation p = load_presentation(opts.presentation_file);
      adian::Word w = adian::parse_word(word_text, p.alphabet);
      if (!w.is_positive()) {
        throw adian::Error("deltas requires a positive word");
      }
      adian::DeltaReport report = adian::all_deltas_finite(w, p,
                                                           opts.budget());
      std::cout << report.to_text();
      std::cout << "all-closed=" << (report.all_closed ? "true" : "false")
                << "\n";
      return report.all_closed ? 0 : kExitBudget;
    }

    if (app.got_subcommand(decide) || app.got_subcommand(idempotent)) {
      adian::Presentation p = load_presentation(opts.presentation_file);
      adian::DecisionOutcome out = [&] {
        if (app.got_subcommand(decide)) {
          adian::Word u = adian::parse_word(u_text, p.alphabet);
          adian::Word v = adian::parse_word(v_text, p.alphabet);
          return adian::decide_equal(u, v, p, opts.budget());
        }
        adian::Word w = adian::parse_word(word_text, p.alphabet);
        return adian::is_idempotent(w, p, opts.budget());
      }();
      std::cout << adian::to_string(out.verdict)
                << " guaranteed=" << (out.guaranteed ? "true" : "false")
                << "\n";
      switch (out.verdict) {
        case adian::Verdict::equal:
          return 0;
        case adian::Verdict::not_equal:
          return kExitNotEqual;
        case adian::Verdict::budget_exceeded:
          return kExitBudget;
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return 0;
}
