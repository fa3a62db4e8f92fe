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

#include "loretag/unicode.h"

#include <cstdint>
#include <optional>

#include "loretag/error.h"

namespace loretag::unicode {
namespace {

// Decodes one code point starting at bytes[pos]. Returns the code point and
// advances pos, or nullopt on malformed input (overlongs, surrogates and
// values above U+10FFFF are rejected).
std::optional<char32_t> next_code_point(std::string_view bytes,
                                        std::size_t& pos) {
  const auto lead = static_cast<unsigned char>(bytes[pos]);
  if (lead < 0x80) {
    ++pos;
    return lead;
  }
  int extra = 0;
  char32_t cp = 0;
  char32_t min = 0;
  if ((lead & 0xE0) == 0xC0) {
    extra = 1;
    cp = lead & 0x1F;
    min = 0x80;
  } else if ((lead & 0xF0) == 0xE0) {
    extra = 2;
    cp = lead & 0x0F;
    min = 0x800;
  } else if ((lead & 0xF8) == 0xF0) {
    extra = 3;
    cp = lead & 0x07;
    min = 0x10000;
  } else {
    return std::nullopt;
  }
  if (pos + extra >= bytes.size()) return std::nullopt;
  for (int i = 1; i <= extra; ++i) {
    const auto cont = static_cast<unsigned char>(bytes[pos + i]);
    if ((cont & 0xC0) != 0x80) return std::nullopt;
    cp = (cp << 6) | (cont & 0x3F);
  }
  if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    return std::nullopt;
  }
  pos += extra + 1;
  return cp;
}

}  // namespace

bool is_valid_utf8(std::string_view bytes) {
  std::size_t pos = 0;
  while (pos < bytes.size()) {
    if (!next_code_point(bytes, pos)) return false;
  }
  return true;
}

std::u32string decode_utf8(std::string_view bytes) {
  std::u32string out;
  out.reserve(bytes.size());
  std::size_t pos = 0;
  while (pos < bytes.size()) {
    const std::size_t at = pos;
    auto cp = next_code_point(bytes, pos);
    if (!cp) {
      throw DataError("invalid UTF-8 at byte offset " + std::to_string(at));
    }
    out.push_back(*cp);
  }
  return out;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string encode_utf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : text) append_utf8(out, cp);
  return out;
}

bool is_space(char32_t cp) {
  switch (cp) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
    case 0x85: case 0xA0: case 0x1680: case 0x200B: case 0x2028:
    case 0x2029: case 0x202F: case 0x205F: case 0x3000: case 0xFEFF:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

bool is_apostrophe(char32_t cp) {
  return cp == U'\'' || cp == 0x2019 || cp == 0x02BC;
}

bool is_hyphen(char32_t cp) {
  return cp == U'-' || cp == 0x2010 || cp == 0x2011;
}

bool is_alnum(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= U'0' && cp <= U'9') || (cp >= U'a' && cp <= U'z') ||
           (cp >= U'A' && cp <= U'Z');
  }
  if (is_space(cp)) return false;
  // Latin-1 punctuation and symbols, keeping the feminine/masculine
  // ordinals and micro sign which are letters.
  if (cp >= 0xA0 && cp <= 0xBF) return cp == 0xAA || cp == 0xB5 || cp == 0xBA;
  if (cp == 0xD7 || cp == 0xF7) return false;
  if (cp >= 0x2000 && cp <= 0x2BFF) return false;  // punctuation .. symbols
  if (cp >= 0x2E00 && cp <= 0x2E7F) return false;
  if (cp >= 0x3000 && cp <= 0x303F) return false;
  if (cp >= 0xFE30 && cp <= 0xFE4F) return false;
  if (cp >= 0xFF01 && cp <= 0xFF0F) return false;
  if (cp >= 0x1F000 && cp <= 0x1FAFF) return false;  // emoji and pictographs
  return true;
}

char32_t fold_case(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= U'A' && cp <= U'Z') ? cp + 0x20 : cp;
  }
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
  if (cp >= 0x100 && cp <= 0x17F) {
    if ((cp <= 0x137) || (cp >= 0x14A && cp <= 0x177)) {
      return (cp % 2 == 0) ? cp + 1 : cp;
    }
    if ((cp >= 0x139 && cp <= 0x148) || (cp >= 0x179 && cp <= 0x17E)) {
      return (cp % 2 == 1) ? cp + 1 : cp;
    }
    if (cp == 0x178) return 0xFF;
    return cp;
  }
  if (cp >= 0x391 && cp <= 0x3A9 && cp != 0x3A2) return cp + 0x20;
  if (cp >= 0x410 && cp <= 0x42F) return cp + 0x20;
  if (cp >= 0x400 && cp <= 0x40F) return cp + 0x50;
  return cp;
}

std::u32string fold_case(std::u32string_view text) {
  std::u32string out(text);
  for (char32_t& cp : out) cp = fold_case(cp);
  return out;
}

std::string fold_case_utf8(std::string_view bytes) {
  return encode_utf8(fold_case(decode_utf8(bytes)));
}

std::string_view trim(std::string_view bytes) {
  std::size_t first = bytes.size();
  std::size_t last = 0;  // one past the last non-space byte
  std::size_t pos = 0;
  while (pos < bytes.size()) {
    const std::size_t at = pos;
    auto cp = next_code_point(bytes, pos);
    if (!cp) {
      // Malformed bytes are kept verbatim; callers validate separately.
      pos = at + 1;
      if (first == bytes.size()) first = at;
      last = pos;
      continue;
    }
    if (!is_space(*cp)) {
      if (first == bytes.size()) first = at;
      last = pos;
    }
  }
  if (first == bytes.size()) return bytes.substr(0, 0);
  return bytes.substr(first, last - first);
}

}  // namespace loretag::unicode
