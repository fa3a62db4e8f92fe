// Copyright 2026 The Loretag Authors
//
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

#include <random>
#include <string>
#include <vector>

#include "loretag/gazetteer.h"
#include "loretag/ingest.h"
#include "loretag/tagger.h"
#include "loretag/textspan.h"

namespace {

const std::vector<std::string> kWords = {
    "the",    "goblin", "steam",  "mephit", "ettin",  "dragon", "green",
    "ancient", "gold",  "wyrmling", "imp",  "ape",    "shape",  "lair",
    "hissed", "in",     "a",      "of",     "cult",   "fanatic"};

std::string random_text(std::mt19937& rng, std::size_t words) {
  std::uniform_int_distribution<std::size_t> pick(0, kWords.size() - 1);
  std::string text;
  for (std::size_t i = 0; i < words; ++i) {
    if (i) text += (i % 17 == 0) ? ". " : " ";
    text += kWords[pick(rng)];
  }
  return text + ".";
}

std::vector<std::string> bench_names(std::size_t count) {
  std::vector<std::string> names = {"steam mephit", "mephit", "ettin",
                                    "green dragon wyrmling", "goblin", "imp",
                                    "ape", "cult fanatic", "ancient gold dragon"};
  for (std::size_t i = names.size(); i < count; ++i) {
    names.push_back("monster" + std::to_string(i));
  }
  return names;
}

void BM_FindSpans(benchmark::State& state, loretag::MatchMode mode) {
  std::mt19937 rng(7);
  const auto gazetteer = loretag::build_gazetteer(
      bench_names(static_cast<std::size_t>(state.range(0))), {});
  const loretag::Matcher matcher(gazetteer, mode);
  const std::string sentence = random_text(rng, 40);
  for (auto _ : state) {
    benchmark::DoNotOptimize(matcher.find_spans(sentence));
  }
}
BENCHMARK_CAPTURE(BM_FindSpans, substring, loretag::MatchMode::kSubstring)
    ->Arg(50)->Arg(900);
BENCHMARK_CAPTURE(BM_FindSpans, word_boundary, loretag::MatchMode::kWordBoundary)
    ->Arg(50)->Arg(900);

void BM_Tokenize(benchmark::State& state) {
  std::mt19937 rng(11);
  const std::string sentence = random_text(rng, 40);
  for (auto _ : state) {
    benchmark::DoNotOptimize(loretag::tokenize(sentence));
  }
}
BENCHMARK(BM_Tokenize);

void BM_TagCorpus(benchmark::State& state) {
  std::mt19937 rng(13);
  loretag::LoreCorpus corpus;
  for (int i = 0; i < state.range(0); ++i) {
    corpus.documents.push_back(
        {"Owner " + std::to_string(i), random_text(rng, 300)});
  }
  const auto gazetteer = loretag::build_gazetteer(bench_names(900), {});
  for (auto _ : state) {
    benchmark::DoNotOptimize(loretag::tag_corpus(
        corpus, gazetteer, loretag::MatchMode::kWordBoundary));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TagCorpus)->Arg(250);

void BM_IgnoreList(benchmark::State& state) {
  std::mt19937 rng(17);
  loretag::LoreCorpus corpus;
  for (int i = 0; i < 250; ++i) {
    corpus.documents.push_back(
        {"Owner " + std::to_string(i), random_text(rng, 300)});
  }
  const auto names = bench_names(900);
  for (auto _ : state) {
    benchmark::DoNotOptimize(loretag::compute_ignore_list(corpus, names));
  }
}
BENCHMARK(BM_IgnoreList);

}  // namespace

BENCHMARK_MAIN();
