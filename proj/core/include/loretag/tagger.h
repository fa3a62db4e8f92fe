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

// Dictionary tagging with longest-first priority.
//
// Gazetteer entries are considered in gazetteer order. Each occurrence of an
// entry is accepted unless it overlaps an occurrence accepted earlier, so a
// longer name always wins over a shorter name it contains ("steam mephit"
// over "mephit"). Occurrences of one entry are taken left to right. The
// Matcher finds all occurrences in one Aho-Corasick pass and then replays
// this acceptance order, which yields the same spans as scanning entry by
// entry.

#ifndef LORETAG_TAGGER_H_
#define LORETAG_TAGGER_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "loretag/aho_corasick.h"
#include "loretag/bio.h"
#include "loretag/gazetteer.h"
#include "loretag/ingest.h"
#include "loretag/textspan.h"

namespace loretag {

enum class MatchMode {
  kSubstring,     // anywhere, including inside words ("imp" in "impressive")
  kWordBoundary,  // both ends must fall on token boundaries
};

std::string_view to_string(MatchMode mode);
MatchMode parse_match_mode(std::string_view name);

struct EntitySpan {
  std::size_t start = 0;  // code point offsets into the sentence
  std::size_t end = 0;
  std::string label;
  std::string surface;        // sentence text in [start, end)
  std::string gazetteer_key;  // normalized name that matched

  bool operator==(const EntitySpan&) const = default;
};

class Matcher {
 public:
  Matcher(const Gazetteer& gazetteer, MatchMode mode,
          std::string label = std::string(kDefaultLabel));

  // Accepted spans sorted by start offset.
  std::vector<EntitySpan> find_spans(std::string_view sentence) const;

  MatchMode mode() const { return mode_; }
  const std::string& label() const { return label_; }

 private:
  std::vector<std::string> keys_;
  AhoCorasick automaton_;
  MatchMode mode_;
  bool case_insensitive_;
  std::string label_;
};

// Convenience wrapper; builds a Matcher per call.
std::vector<EntitySpan> find_spans(std::string_view sentence,
                                   const Gazetteer& gazetteer, MatchMode mode,
                                   std::string_view label = kDefaultLabel);

// Assigns each token to the first span (by start) that overlaps it. Spans
// become B- on their first assigned token and I- on the rest. A span that
// starts inside a token still tags that token, which is how substring
// matching turns "impressive" into a B- token. Throws std::logic_error for
// a span that overlaps no token.
std::vector<TokenSpan> project_spans(std::span<const Token> tokens,
                                     std::span<const EntitySpan> spans);
std::vector<std::string> spans_to_bio(std::span<const Token> tokens,
                                      std::span<const EntitySpan> spans);

TaggedSentence tag_sentence(Sentence sentence, const Matcher& matcher);

BioCorpus tag_corpus(const LoreCorpus& corpus, const Gazetteer& gazetteer,
                     MatchMode mode,
                     std::string_view label = kDefaultLabel,
                     const SegmenterOptions& segmenter = {});

}  // namespace loretag

#endif  // LORETAG_TAGGER_H_
