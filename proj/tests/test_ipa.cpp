// Copyright (c) 2026 The loanlex Authors
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

#include <gtest/gtest.h>

#include "loanlex/error.hpp"
#include "loanlex/ipa.hpp"
#include "loanlex/unicode.hpp"

namespace loanlex {
namespace {

TEST(Utf8, DecodesAndReportsIllFormedInput) {
  EXPECT_TRUE(unicode::is_valid_utf8("ʁa.kɔ̃"));
  EXPECT_FALSE(unicode::is_valid_utf8("\xff"));
  EXPECT_FALSE(unicode::is_valid_utf8("\xc0\xaf"));        // overlong
  EXPECT_FALSE(unicode::is_valid_utf8("\xed\xa0\x80"));    // surrogate
  EXPECT_EQ(unicode::codepoint_count("راكونتير"), 8u);
  EXPECT_THROW(unicode::to_codepoints("a\xff"), Error);
}

TEST(Utf8, EncodeDecodeRoundTrip) {
  for (char32_t cp : {0x41u, 0x7FFu, 0x800u, 0xFFFFu, 0x10000u, 0x10FFFFu}) {
    const std::string s = unicode::to_utf8(cp);
    ASSERT_EQ(unicode::to_codepoints(s), std::vector<char32_t>{cp});
  }
}

TEST(Unicode, CharacterClasses) {
  EXPECT_TRUE(unicode::is_combining_mark(0x0303));
  EXPECT_TRUE(unicode::is_combining_mark(0x064E));  // fatha
  EXPECT_TRUE(unicode::is_whitespace(0x00A0));
  EXPECT_TRUE(unicode::is_punct_or_symbol(U'،'));
  EXPECT_FALSE(unicode::is_punct_or_symbol(U'ا'));
  EXPECT_EQ(unicode::format_codepoint(0x627), "U+0627");
  EXPECT_EQ(unicode::to_lower("TV Café"), "tv café");
}

TEST(IpaString, NormalizesLengthMarkAndComposition) {
  EXPECT_EQ(IpaString::parse("yː").str(), "y:");
  EXPECT_EQ(IpaString::parse("y:").str(), "y:");
  // Decomposed e + combining acute composes to é.
  EXPECT_EQ(IpaString::parse("e\xcc\x81").str(), "\xc3\xa9");
  EXPECT_TRUE(IpaString::parse("ʁa.kɔ̃").has_markers());
  EXPECT_FALSE(IpaString::parse("omlɛt").has_markers());
}

TEST(IpaString, RejectsInvalidInput) {
  for (const char* bad : {"", "a..b", ".ab", "ab.", "a b", "AB", "ˈa", "a1",
                          "\xff"}) {
    EXPECT_THROW(IpaString::parse(bad), ValidationError) << bad;
  }
}

TEST(Segments, AbsorbMarksAndLength) {
  EXPECT_EQ(split_segments("kɔ̃"), (std::vector<std::string>{"k", "ɔ̃"}));
  EXPECT_EQ(split_segments("ky:"), (std::vector<std::string>{"k", "y:"}));
  EXPECT_EQ(split_segments("tʃa"), (std::vector<std::string>{"t", "ʃ", "a"}));
  EXPECT_EQ(split_segments(""), std::vector<std::string>{});
  EXPECT_EQ(segment_base("ɔ̃"), "ɔ");
  EXPECT_EQ(segment_base("y:"), "y");
  EXPECT_EQ(segment_base("é"), "e");
}

TEST(SegmentSet, MatchesVerbatimOrByBaseLetter) {
  const SegmentSet set({"a", "ɔ", "y:"});
  EXPECT_TRUE(set.contains("a"));
  EXPECT_TRUE(set.contains("ɔ̃"));
  EXPECT_TRUE(set.contains("ɔ:"));
  EXPECT_TRUE(set.contains("y:"));
  EXPECT_FALSE(set.contains("y"));
  EXPECT_FALSE(set.contains("k"));
}

}  // namespace
}  // namespace loanlex
