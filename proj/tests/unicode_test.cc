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

#include <gtest/gtest.h>

#include "loretag/error.h"

namespace loretag::unicode {
namespace {

TEST(Utf8, DecodeEncodeRoundTrip) {
  const std::string text = "Ölbär’s wyrm 火";
  const std::u32string cps = decode_utf8(text);
  EXPECT_EQ(cps.size(), 14u);
  EXPECT_EQ(encode_utf8(cps), text);
}

TEST(Utf8, RejectsMalformedInput) {
  EXPECT_FALSE(is_valid_utf8("\xC3"));
  EXPECT_FALSE(is_valid_utf8("\xC0\xAF"));        // overlong
  EXPECT_FALSE(is_valid_utf8("\xED\xA0\x80"));    // surrogate
  EXPECT_FALSE(is_valid_utf8("\xF4\x90\x80\x80"));  // above U+10FFFF
  EXPECT_TRUE(is_valid_utf8(""));
  EXPECT_TRUE(is_valid_utf8("plain"));
  try {
    decode_utf8("ab\xFF");
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kData);
  }
}

TEST(CharClasses, Basics) {
  EXPECT_TRUE(is_space(U' '));
  EXPECT_TRUE(is_space(U' '));
  EXPECT_TRUE(is_space(U'　'));
  EXPECT_FALSE(is_space(U'x'));
  EXPECT_TRUE(is_alnum(U'z'));
  EXPECT_TRUE(is_alnum(U'7'));
  EXPECT_TRUE(is_alnum(U'ö'));
  EXPECT_TRUE(is_alnum(U'火'));
  EXPECT_FALSE(is_alnum(U'.'));
  EXPECT_FALSE(is_alnum(U'“'));
  EXPECT_FALSE(is_alnum(U'«'));
  EXPECT_TRUE(is_apostrophe(U'\''));
  EXPECT_TRUE(is_apostrophe(U'’'));
  EXPECT_TRUE(is_hyphen(U'-'));
  EXPECT_FALSE(is_joiner(U'_'));
}

TEST(FoldCase, PreservesLength) {
  EXPECT_EQ(fold_case_utf8("Steam MEPHIT"), "steam mephit");
  EXPECT_EQ(fold_case_utf8("ÖLBÄR Ætherling"), "ölbär ætherling");
  EXPECT_EQ(fold_case_utf8("ΔΡΑΚΩΝ"), "δρακων");
  EXPECT_EQ(fold_case_utf8("ДРАКОН"), "дракон");
  const std::u32string text = U"İstanbul ẞ ß";
  EXPECT_EQ(fold_case(text).size(), text.size());
}

TEST(Trim, StripsUnicodeWhitespace) {
  EXPECT_EQ(trim("  \t goblin \n"), "goblin");
  EXPECT_EQ(trim(" ettin　"), "ettin");
  EXPECT_EQ(trim("   "), "");
}

}  // namespace
}  // namespace loretag::unicode
