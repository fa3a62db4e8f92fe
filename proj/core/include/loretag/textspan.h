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

// Rule-based sentence segmentation and word tokenization.
//
// Tokens are maximal runs of letters and digits, where an apostrophe or
// hyphen flanked on both sides by a letter or digit stays inside the run
// ("owlbear's", "half-orc"). Every other non-whitespace code point is a
// token of its own. Tokens therefore never contain whitespace, which the
// one-token-per-line corpus format depends on.
//
// Offsets are code point offsets; start is inclusive, end exclusive.

#ifndef LORETAG_TEXTSPAN_H_
#define LORETAG_TEXTSPAN_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace loretag {

struct Token {
  std::string text;
  std::size_t start = 0;
  std::size_t end = 0;

  bool operator==(const Token&) const = default;
};

struct Sentence {
  std::string text;
  std::vector<Token> tokens;
  std::string doc_owner;

  bool operator==(const Sentence&) const = default;
};

// A sentence cut out of a document, with its document offsets.
struct SentenceSlice {
  std::string text;
  std::size_t start = 0;
  std::size_t end = 0;

  bool operator==(const SentenceSlice&) const = default;
};

struct SegmenterOptions {
  // A '.' ending one of these words (case-insensitive) never ends a
  // sentence.
  std::vector<std::string> abbreviations{"Mr.", "Dr.", "e.g.", "i.e.", "vs."};
};

// Splits at '.', '!' or '?' (optionally followed by more terminators and
// closing quotes or brackets) when followed by whitespace or end of text,
// and at blank lines. Sentences carry no leading or trailing whitespace;
// only whitespace lies between them.
std::vector<SentenceSlice> split_sentences(std::string_view text,
                                           const SegmenterOptions& options = {});

std::vector<Token> tokenize(std::string_view sentence);
std::vector<Token> tokenize(std::u32string_view sentence);

// True when no token of `text` straddles position `pos` (a position between
// two code points). 0 and text.size() are always boundaries.
bool is_token_boundary(std::u32string_view text, std::size_t pos);

// split_sentences + tokenize, tagging each sentence with its owner.
std::vector<Sentence> segment_document(std::string_view owner,
                                       std::string_view text,
                                       const SegmenterOptions& options = {});

}  // namespace loretag

#endif  // LORETAG_TEXTSPAN_H_
