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

// BIO-tagged corpus types shared by the tagger, corpus, eval and assoc
// modules.

#ifndef LORETAG_BIO_H_
#define LORETAG_BIO_H_

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "loretag/textspan.h"

namespace loretag {

inline constexpr std::string_view kDefaultLabel = "MONS";
inline constexpr std::string_view kOutsideTag = "O";

struct BioTag {
  enum class Prefix { kOutside, kBegin, kInside };

  Prefix prefix = Prefix::kOutside;
  std::string label;  // empty for kOutside

  std::string str() const;
  bool operator==(const BioTag&) const = default;
};

// "O", "B-<label>" or "I-<label>" with a non-empty, whitespace-free label.
std::optional<BioTag> parse_tag(std::string_view tag);
bool is_valid_label(std::string_view label);

// Tags parse and no I-X follows anything other than B-X or I-X.
bool is_well_formed(std::span<const std::string> tags);

struct TaggedSentence {
  Sentence sentence;
  std::vector<std::string> tags;  // one per token

  bool operator==(const TaggedSentence&) const = default;
};

struct BioDocument {
  std::string owner_name;
  std::vector<TaggedSentence> sentences;

  bool operator==(const BioDocument&) const = default;
};

struct BioCorpus {
  std::vector<BioDocument> documents;

  std::size_t sentence_count() const;
  bool empty() const { return documents.empty(); }

  bool operator==(const BioCorpus&) const = default;
};

// A labeled run of tokens within one sentence, end exclusive.
struct TokenSpan {
  std::size_t token_start = 0;
  std::size_t token_end = 0;
  std::string label;

  auto operator<=>(const TokenSpan&) const = default;
};

// Throws Error(kData) when a sentence breaks its invariants: tag count,
// tag grammar, or token offsets that do not match the sentence text.
void validate_sentence(const TaggedSentence& sentence);

}  // namespace loretag

#endif  // LORETAG_BIO_H_
