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

#include "loretag/tagger.h"

#include <algorithm>
#include <iterator>
#include <map>
#include <stdexcept>

#include "loretag/error.h"
#include "loretag/unicode.h"

namespace loretag {

std::string_view to_string(MatchMode mode) {
  return mode == MatchMode::kSubstring ? "substring" : "word_boundary";
}

MatchMode parse_match_mode(std::string_view name) {
  if (name == "substring") return MatchMode::kSubstring;
  if (name == "word_boundary" || name == "word-boundary") {
    return MatchMode::kWordBoundary;
  }
  throw UsageError("unknown match mode '" + std::string(name) +
                   "' (expected substring or word_boundary)");
}

namespace {

std::vector<std::u32string> decode_keys(const std::vector<std::string>& keys) {
  std::vector<std::u32string> patterns;
  patterns.reserve(keys.size());
  for (const auto& key : keys) patterns.push_back(unicode::decode_utf8(key));
  return patterns;
}

std::vector<std::string> entry_keys(const Gazetteer& gazetteer) {
  std::vector<std::string> keys;
  keys.reserve(gazetteer.size());
  for (const auto& entry : gazetteer.entries()) keys.push_back(entry.norm);
  return keys;
}

}  // namespace

Matcher::Matcher(const Gazetteer& gazetteer, MatchMode mode, std::string label)
    : keys_(entry_keys(gazetteer)),
      automaton_(decode_keys(keys_)),
      mode_(mode),
      case_insensitive_(gazetteer.case_insensitive()),
      label_(std::move(label)) {
  if (!is_valid_label(label_)) {
    throw UsageError("invalid entity label '" + label_ + "'");
  }
}

std::vector<EntitySpan> Matcher::find_spans(std::string_view sentence) const {
  const std::u32string text = unicode::decode_utf8(sentence);
  const std::u32string haystack =
      case_insensitive_ ? unicode::fold_case(text) : text;

  // Pattern index is the gazetteer rank, so sorting by (pattern, start)
  // reproduces the entry-by-entry, left-to-right scan.
  std::vector<AhoCorasick::Match> candidates;
  automaton_.for_each_match(haystack, [&](const AhoCorasick::Match& m) {
    if (mode_ == MatchMode::kWordBoundary &&
        !(is_token_boundary(text, m.start) && is_token_boundary(text, m.end))) {
      return;
    }
    candidates.push_back(m);
  });
  std::sort(candidates.begin(), candidates.end(),
            [](const AhoCorasick::Match& a, const AhoCorasick::Match& b) {
              return a.pattern != b.pattern ? a.pattern < b.pattern
                                            : a.start < b.start;
            });

  std::map<std::size_t, const AhoCorasick::Match*> accepted;  // by start
  for (const auto& m : candidates) {
    auto next = accepted.lower_bound(m.end);
    if (next != accepted.begin() && std::prev(next)->second->end > m.start) {
      continue;
    }
    accepted.emplace(m.start, &m);
  }

  std::vector<EntitySpan> spans;
  spans.reserve(accepted.size());
  const std::u32string_view view(text);
  for (const auto& [start, m] : accepted) {
    spans.push_back({m->start, m->end, label_,
                     unicode::encode_utf8(view.substr(m->start, m->end - m->start)),
                     keys_[m->pattern]});
  }
  return spans;
}

std::vector<EntitySpan> find_spans(std::string_view sentence,
                                   const Gazetteer& gazetteer, MatchMode mode,
                                   std::string_view label) {
  return Matcher(gazetteer, mode, std::string(label)).find_spans(sentence);
}

std::vector<TokenSpan> project_spans(std::span<const Token> tokens,
                                     std::span<const EntitySpan> spans) {
  std::vector<const EntitySpan*> ordered;
  ordered.reserve(spans.size());
  for (const auto& s : spans) ordered.push_back(&s);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const EntitySpan* a, const EntitySpan* b) {
                     return a->start < b->start;
                   });

  std::vector<TokenSpan> projected;
  std::size_t next_free = 0;  // first token not yet claimed by a span
  for (const EntitySpan* span : ordered) {
    auto overlaps = [&](const Token& t) {
      return t.start < span->end && span->start < t.end;
    };
    // First token whose end lies past the span start.
    auto first = std::partition_point(
        tokens.begin(), tokens.end(),
        [&](const Token& t) { return t.end <= span->start; });
    if (first == tokens.end() || !overlaps(*first)) {
      throw std::logic_error("span [" + std::to_string(span->start) + "," +
                             std::to_string(span->end) + ") '" +
                             span->surface + "' covers no token");
    }
    auto begin = static_cast<std::size_t>(first - tokens.begin());
    std::size_t end = begin;
    while (end < tokens.size() && overlaps(tokens[end])) ++end;
    begin = std::max(begin, next_free);
    if (begin >= end) continue;  // every overlapped token already claimed
    projected.push_back({begin, end, span->label});
    next_free = end;
  }
  return projected;
}

std::vector<std::string> spans_to_bio(std::span<const Token> tokens,
                                      std::span<const EntitySpan> spans) {
  std::vector<std::string> tags(tokens.size(), std::string(kOutsideTag));
  for (const auto& span : project_spans(tokens, spans)) {
    tags[span.token_start] = "B-" + span.label;
    for (std::size_t i = span.token_start + 1; i < span.token_end; ++i) {
      tags[i] = "I-" + span.label;
    }
  }
  return tags;
}

TaggedSentence tag_sentence(Sentence sentence, const Matcher& matcher) {
  TaggedSentence tagged;
  const auto spans = matcher.find_spans(sentence.text);
  tagged.tags = spans_to_bio(sentence.tokens, spans);
  tagged.sentence = std::move(sentence);
  return tagged;
}

BioCorpus tag_corpus(const LoreCorpus& corpus, const Gazetteer& gazetteer,
                     MatchMode mode, std::string_view label,
                     const SegmenterOptions& segmenter) {
  const Matcher matcher(gazetteer, mode, std::string(label));
  BioCorpus tagged;
  tagged.documents.reserve(corpus.documents.size());
  for (const auto& doc : corpus.documents) {
    BioDocument out;
    out.owner_name = doc.owner_name;
    for (auto& sentence : segment_document(doc.owner_name, doc.text, segmenter)) {
      out.sentences.push_back(tag_sentence(std::move(sentence), matcher));
    }
    tagged.documents.push_back(std::move(out));
  }
  return tagged;
}

}  // namespace loretag
