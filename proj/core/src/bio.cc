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

#include "loretag/bio.h"

#include "loretag/error.h"
#include "loretag/unicode.h"

namespace loretag {

std::string BioTag::str() const {
  switch (prefix) {
    case Prefix::kOutside:
      return std::string(kOutsideTag);
    case Prefix::kBegin:
      return "B-" + label;
    case Prefix::kInside:
      return "I-" + label;
  }
  return std::string(kOutsideTag);
}

bool is_valid_label(std::string_view label) {
  if (label.empty() || !unicode::is_valid_utf8(label)) return false;
  for (char32_t cp : unicode::decode_utf8(label)) {
    if (unicode::is_space(cp)) return false;
  }
  return true;
}

std::optional<BioTag> parse_tag(std::string_view tag) {
  if (tag == kOutsideTag) return BioTag{};
  if (tag.size() < 3 || tag[1] != '-') return std::nullopt;
  BioTag parsed;
  if (tag[0] == 'B') {
    parsed.prefix = BioTag::Prefix::kBegin;
  } else if (tag[0] == 'I') {
    parsed.prefix = BioTag::Prefix::kInside;
  } else {
    return std::nullopt;
  }
  parsed.label = std::string(tag.substr(2));
  if (!is_valid_label(parsed.label)) return std::nullopt;
  return parsed;
}

bool is_well_formed(std::span<const std::string> tags) {
  std::optional<BioTag> previous;
  for (const auto& tag : tags) {
    auto parsed = parse_tag(tag);
    if (!parsed) return false;
    if (parsed->prefix == BioTag::Prefix::kInside) {
      if (!previous || previous->prefix == BioTag::Prefix::kOutside ||
          previous->label != parsed->label) {
        return false;
      }
    }
    previous = std::move(parsed);
  }
  return true;
}

std::size_t BioCorpus::sentence_count() const {
  std::size_t n = 0;
  for (const auto& doc : documents) n += doc.sentences.size();
  return n;
}

void validate_sentence(const TaggedSentence& tagged) {
  const auto& s = tagged.sentence;
  if (tagged.tags.size() != s.tokens.size()) {
    throw DataError("sentence has " + std::to_string(s.tokens.size()) +
                    " tokens but " + std::to_string(tagged.tags.size()) +
                    " tags: '" + s.text + "'");
  }
  if (!is_well_formed(tagged.tags)) {
    throw DataError("malformed BIO tag sequence in sentence '" + s.text + "'");
  }
  const std::u32string text = unicode::decode_utf8(s.text);
  std::size_t previous_end = 0;
  for (const auto& token : s.tokens) {
    if (token.end <= token.start || token.start < previous_end ||
        token.end > text.size() ||
        unicode::encode_utf8(std::u32string_view(text).substr(
            token.start, token.end - token.start)) != token.text) {
      throw DataError("token '" + token.text +
                      "' does not match its offsets in '" + s.text + "'");
    }
    previous_end = token.end;
  }
}

}  // namespace loretag
