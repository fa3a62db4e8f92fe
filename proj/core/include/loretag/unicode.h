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

// UTF-8 conversion and the small set of code point classes used by the
// segmenter, tokenizer and matcher. All character offsets in loretag are
// code point offsets.

#ifndef LORETAG_UNICODE_H_
#define LORETAG_UNICODE_H_

#include <string>
#include <string_view>

namespace loretag::unicode {

bool is_valid_utf8(std::string_view bytes);

// Throws Error(kData) on malformed input.
std::u32string decode_utf8(std::string_view bytes);

void append_utf8(std::string& out, char32_t cp);
std::string encode_utf8(std::u32string_view text);

bool is_space(char32_t cp);

// Letters and digits. Non-ASCII code points count as letters unless they
// fall in a punctuation, symbol or space block.
bool is_alnum(char32_t cp);

// Characters that join two alphanumeric runs into one word ("owlbear's",
// "half-orc").
bool is_apostrophe(char32_t cp);
bool is_hyphen(char32_t cp);
inline bool is_joiner(char32_t cp) { return is_apostrophe(cp) || is_hyphen(cp); }

// Simple one-to-one lowercase mapping (ASCII, Latin-1, Latin Extended-A,
// basic Greek and Cyrillic). Length-preserving, so offsets survive folding.
char32_t fold_case(char32_t cp);
std::u32string fold_case(std::u32string_view text);
std::string fold_case_utf8(std::string_view bytes);

// Strips leading/trailing whitespace (code point aware).
std::string_view trim(std::string_view bytes);

}  // namespace loretag::unicode

#endif  // LORETAG_UNICODE_H_
