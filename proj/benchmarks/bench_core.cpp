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

#include <benchmark/benchmark.h>

#include <string>

#include "adian/analysis.hpp"
#include "adian/oracles.hpp"
#include "adian/presentation.hpp"
#include "adian/rword_subgraph.hpp"
#include "adian/stephen.hpp"
#include "adian/word_graph.hpp"

namespace {

adian::Presentation comm() {
  return adian::parse_presentation("a b\nab = ba\n");
}

// Alternating block word (ab)-style: a^k b^k repeated.
adian::Word block_word(int blocks, int width) {
  std::string text;
  for (int i = 0; i < blocks; ++i) {
    text += std::string(width, 'a');
    text += std::string(width, 'b');
  }
  return adian::Word::from_positive(text);
}

void BM_fold_zigzag(benchmark::State& state) {
  std::string text;
  for (int i = 0; i < state.range(0); ++i) {
    text += i % 2 ? "aA" : "bB";
  }
  std::vector<adian::SignedLetter> letters;
  for (char c : text) {
    letters.push_back(adian::SignedLetter::from_char(c));
  }
  adian::Word w{letters};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        adian::fold_to_deterministic(adian::linear_graph(w)));
  }
}
BENCHMARK(BM_fold_zigzag)->Range(8, 512);

void BM_schutzenberger_closure(benchmark::State& state) {
  adian::Presentation p = comm();
  adian::Word w = block_word(static_cast<int>(state.range(0)), 2);
  adian::Budget budget{256, 1000000};
  for (auto _ : state) {
    auto r = adian::schutzenberger(w, p, budget);
    if (!r.closed()) {
      state.SkipWithError("did not close");
      break;
    }
    benchmark::DoNotOptimize(r.graph.vertex_count());
  }
}
BENCHMARK(BM_schutzenberger_closure)->DenseRange(2, 5);

void BM_delta_first_occurrence(benchmark::State& state) {
  adian::Presentation p = comm();
  adian::Word w = block_word(static_cast<int>(state.range(0)), 2);
  adian::Word ab = adian::Word::from_positive("ab");
  adian::Budget budget{256, 1000000};
  for (auto _ : state) {
    auto occs = adian::occurrences(ab, w);
    auto d = adian::delta(w, occs.front(), p, budget);
    benchmark::DoNotOptimize(d.regions.size());
  }
}
BENCHMARK(BM_delta_first_occurrence)->DenseRange(2, 5);

void BM_decide_equal(benchmark::State& state) {
  adian::Presentation p = comm();
  adian::Word u = block_word(2, static_cast<int>(state.range(0)));
  adian::Word v = u.inverted().inverted();  // same word, fresh storage
  adian::Budget budget{256, 1000000};
  for (auto _ : state) {
    auto out = adian::decide_equal(u, v, p, budget);
    benchmark::DoNotOptimize(out.verdict);
  }
}
BENCHMARK(BM_decide_equal)->DenseRange(2, 4);

void BM_classify_exhaustive(benchmark::State& state) {
  for (auto _ : state) {
    adian::Presentation p = adian::parse_presentation("a b c\naba = cc\n");
    benchmark::DoNotOptimize(adian::classify(p));
  }
}
BENCHMARK(BM_classify_exhaustive);

}  // namespace

BENCHMARK_MAIN();
