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

// Corpus splitting, CoNLL serialization and statistics.
//
// CoNLL layout written by write_conll (UTF-8, "\n" line endings):
//
//   # doc: Goblin
//   A O
//   goblin B-MONS
//   . O
//   <blank line after every sentence>
//
// read_conll accepts tabs as separators, skips other '#' comment lines and
// puts everything into one document when there are no "# doc:" markers.

#ifndef LORETAG_CORPUS_H_
#define LORETAG_CORPUS_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "loretag/bio.h"

namespace loretag {

struct SplitSpec {
  std::array<double, 3> ratios{2.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0};  // train, dev, test
  std::optional<std::uint64_t> shuffle_seed;

  // Throws Error(kUsage) unless ratios are non-negative and sum to 1.
  void validate() const;

  // "2/3,1/6,1/6" or "0.8,0.1,0.1".
  static std::array<double, 3> parse_ratios(std::string_view text);
};

struct SplitResult {
  BioCorpus train;
  BioCorpus dev;
  BioCorpus test;
  std::vector<std::string> warnings;
};

// Assigns whole documents, in (optionally shuffled) order, to the earliest
// split whose running total, counted together with all earlier splits, is
// still below its cumulative sentence quota. Documents left over once every
// quota is met go to the test split.
SplitResult split_corpus(const BioCorpus& corpus, const SplitSpec& spec = {});

// Document order after the seeded shuffle (identity without a seed).
std::vector<std::size_t> document_order(std::size_t count,
                                        std::optional<std::uint64_t> seed);

// Throws Error(kData) for content the format cannot carry: empty, padded or
// multi-line owners, sentences without tokens, tokens containing
// whitespace, and tags that are not well-formed BIO.
std::string to_conll(const BioCorpus& corpus);
void write_conll(const BioCorpus& corpus, const std::filesystem::path& path);

struct ConllParseResult {
  BioCorpus corpus;
  std::size_t repairs = 0;  // malformed I- tags rewritten as B-
};

inline constexpr std::string_view kUnnamedDocument = "document";

// Sentence text is rebuilt by joining tokens with single spaces.
ConllParseResult parse_conll(std::string_view text,
                             std::string_view default_owner = kUnnamedDocument);
ConllParseResult read_conll(const std::filesystem::path& path);

struct CorpusStats {
  std::size_t n_documents = 0;
  std::size_t n_sentences = 0;
  std::size_t n_tokens = 0;
  std::size_t n_spans = 0;
  std::map<std::string, std::size_t> spans_per_label;

  CorpusStats& operator+=(const CorpusStats& other);
  bool operator==(const CorpusStats&) const = default;

  std::string to_json() const;
};

CorpusStats corpus_stats(const BioCorpus& corpus);

}  // namespace loretag

#endif  // LORETAG_CORPUS_H_
