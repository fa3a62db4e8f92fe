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

#include "loretag/textspan.h"

#include "loretag/unicode.h"

namespace loretag {
namespace {

using unicode::is_alnum;
using unicode::is_joiner;
using unicode::is_space;

bool is_terminator(char32_t cp) {
  return cp == U'.' || cp == U'!' || cp == U'?';
}

bool is_closer(char32_t cp) {
  switch (cp) {
    case U'"': case U'\'': case U')': case U']': case U'}':
    case 0x2019: case 0x201D: case 0xBB:
      return true;
    default:
      return false;
  }
}

// Does the whitespace-delimited word ending at text[last] (inclusive) end
// with one of the abbreviations?
bool ends_with_abbreviation(std::u32string_view text, std::size_t last,
                            const std::vector<std::u32string>& abbreviations) {
  std::size_t begin = last;
  while (begin > 0 && !is_space(text[begin - 1])) --begin;
  const std::u32string word =
      unicode::fold_case(text.substr(begin, last + 1 - begin));
  for (const auto& abbr : abbreviations) {
    if (abbr.empty() || abbr.size() > word.size()) continue;
    const std::size_t at = word.size() - abbr.size();
    if (word.compare(at, abbr.size(), abbr) != 0) continue;
    if (at == 0 || !is_alnum(word[at - 1])) return true;
  }
  return false;
}

}  // namespace

bool is_token_boundary(std::u32string_view text, std::size_t pos) {
  if (pos == 0 || pos >= text.size()) return true;
  const char32_t before = text[pos - 1];
  const char32_t after = text[pos];
  if (is_alnum(before) && is_alnum(after)) return false;
  if (is_alnum(before) && is_joiner(after) && pos + 1 < text.size() &&
      is_alnum(text[pos + 1])) {
    return false;
  }
  if (is_joiner(before) && is_alnum(after) && pos >= 2 &&
      is_alnum(text[pos - 2])) {
    return false;
  }
  return true;
}

std::vector<SentenceSlice> split_sentences(std::string_view text,
                                           const SegmenterOptions& options) {
  const std::u32string cps = unicode::decode_utf8(text);
  std::vector<std::u32string> abbreviations;
  abbreviations.reserve(options.abbreviations.size());
  for (const auto& abbr : options.abbreviations) {
    abbreviations.push_back(unicode::fold_case(unicode::decode_utf8(abbr)));
  }

  std::vector<SentenceSlice> slices;
  auto emit = [&](std::size_t begin, std::size_t end) {
    while (begin < end && is_space(cps[begin])) ++begin;
    while (end > begin && is_space(cps[end - 1])) --end;
    if (begin == end) return;
    slices.push_back(
        {unicode::encode_utf8(std::u32string_view(cps).substr(begin, end - begin)),
         begin, end});
  };

  const std::size_t n = cps.size();
  std::size_t sentence_start = 0;
  std::size_t i = 0;
  while (i < n) {
    const char32_t cp = cps[i];
    if (is_terminator(cp)) {
      std::size_t k = i + 1;
      while (k < n && is_terminator(cps[k])) ++k;
      const std::size_t last_terminator = k - 1;
      while (k < n && is_closer(cps[k])) ++k;
      const bool at_break = (k == n) || is_space(cps[k]);
      const bool abbreviated =
          cps[last_terminator] == U'.' &&
          ends_with_abbreviation(cps, last_terminator, abbreviations);
      if (at_break && !abbreviated) {
        emit(sentence_start, k);
        sentence_start = k;
      }
      i = k;
      continue;
    }
    if (cp == U'\n') {
      // A blank line: newline, optional horizontal space, newline.
      std::size_t k = i + 1;
      while (k < n && is_space(cps[k]) && cps[k] != U'\n') ++k;
      if (k < n && cps[k] == U'\n') {
        emit(sentence_start, i);
        sentence_start = k;
        i = k;
        continue;
      }
    }
    ++i;
  }
  emit(sentence_start, n);
  return slices;
}

std::vector<Token> tokenize(std::u32string_view text) {
  std::vector<Token> tokens;
  const std::size_t n = text.size();
  std::size_t i = 0;
  while (i < n) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    if (is_alnum(text[i])) {
      while (j < n) {
        if (is_alnum(text[j])) {
          ++j;
        } else if (is_joiner(text[j]) && j + 1 < n && is_alnum(text[j + 1])) {
          j += 2;
        } else {
          break;
        }
      }
    }
    tokens.push_back({unicode::encode_utf8(text.substr(i, j - i)), i, j});
    i = j;
  }
  return tokens;
}

std::vector<Token> tokenize(std::string_view sentence) {
  return tokenize(std::u32string_view(unicode::decode_utf8(sentence)));
}

std::vector<Sentence> segment_document(std::string_view owner,
                                       std::string_view text,
                                       const SegmenterOptions& options) {
  std::vector<Sentence> sentences;
  for (auto& slice : split_sentences(text, options)) {
    Sentence s;
    s.tokens = tokenize(slice.text);
    s.text = std::move(slice.text);
    s.doc_owner = std::string(owner);
    sentences.push_back(std::move(s));
  }
  return sentences;
}

}  // namespace loretag
