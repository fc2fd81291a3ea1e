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

#include <set>

#include "loanlex/error.hpp"
#include "loanlex/script_codec.hpp"
#include "loanlex/unicode.hpp"
#include "test_support.hpp"

namespace loanlex {
namespace {

using testing::default_table;
using testing::Gen;

ArabicString ar(const char* s) { return ArabicString(s); }

TEST(BwToArabic, GoldenWords) {
  EXPECT_EQ(bw_to_arabic("rAkwntyr", default_table()), ar("راكونتير"));
  EXPECT_EQ(bw_to_arabic("bwrjwAzy", default_table()), ar("بورجوازي"));
  EXPECT_EQ(bw_to_arabic("Awmlyt", default_table()), ar("اومليت"));
  EXPECT_EQ(bw_to_arabic("", default_table()), ar(""));
}

TEST(ArabicToBw, GoldenWords) {
  EXPECT_EQ(arabic_to_bw(ar("راكونتير"), default_table()), "rAkwntyr");
  EXPECT_EQ(arabic_to_bw(ar("اومليت"), default_table()), "Awmlyt");
  EXPECT_EQ(arabic_to_bw(ar(""), default_table()), "");
}

TEST(Codec, XmlSafeLetters) {
  // Hamza forms use letters instead of the classic punctuation symbols.
  EXPECT_EQ(bw_to_arabic("C", default_table()), ar("ء"));
  EXPECT_EQ(bw_to_arabic("O", default_table()), ar("أ"));
  EXPECT_EQ(bw_to_arabic("I", default_table()), ar("إ"));
  EXPECT_EQ(bw_to_arabic("M", default_table()), ar("آ"));
  EXPECT_EQ(bw_to_arabic("c", default_table()), ar("ش"));
  const std::string domain = default_table().domain();
  for (char bad : std::string("'|><&}*$`{")) {
    EXPECT_EQ(domain.find(bad), std::string::npos) << bad;
  }
}

TEST(Codec, UnknownCharactersAreReported) {
  try {
    bw_to_arabic("ab$", default_table());
    FAIL();
  } catch (const UnknownRomanizationChar& e) {
    EXPECT_EQ(e.position(), 2u);
    EXPECT_EQ(e.character(), '$');
  }
  try {
    arabic_to_bw(ar("بڤ"), default_table());
    FAIL();
  } catch (const UnknownArabicChar& e) {
    EXPECT_EQ(e.position(), 1u);
    EXPECT_EQ(e.codepoint(), U'ڤ');
  }
}

TEST(MergeSyllables, ConcatenatesAndStrips) {
  const std::vector<ArabicString> parts = {ar("را"), ar("كون"), ar("تير")};
  EXPECT_EQ(merge_syllables(parts, false, default_table()), ar("راكونتير"));
  const std::vector<ArabicString> one = {ar("كَ")};
  EXPECT_EQ(merge_syllables(one, true, default_table()), ar("كَ"));
  const std::vector<ArabicString> fatha = {bw_to_arabic("ka", default_table()),
                                           bw_to_arabic("fy", default_table())};
  EXPECT_EQ(merge_syllables(fatha, false, default_table()), ar("كفي"));
  EXPECT_EQ(merge_syllables(fatha, true, default_table()), ar("كَفي"));
}

TEST(BuckwalterTable, RejectsNonBijection) {
  EXPECT_THROW(parse_buckwalter_table("A\tU+0627\tletter\nB\tU+0627\tletter\n"),
               ValidationError);
  EXPECT_THROW(parse_buckwalter_table("A\tU+0627\tletter\nA\tU+0628\tletter\n"),
               ValidationError);
  EXPECT_THROW(parse_buckwalter_table("A\t0627\tletter\n"), SyntaxError);
  EXPECT_THROW(parse_buckwalter_table("A\tU+0627\tvowel\n"), SyntaxError);
}

TEST(BuckwalterTable, ShippedTableShape) {
  const BuckwalterTable& t = default_table();
  std::set<char32_t> seen;
  for (const auto& p : t.pairs()) {
    EXPECT_TRUE(seen.insert(p.codepoint).second);
    EXPECT_EQ(t.to_romanization(p.codepoint), p.romanization);
  }
  for (char d : std::string("FNKauio~")) EXPECT_TRUE(t.is_diacritic_char(d)) << d;
  EXPECT_FALSE(t.is_diacritic_char('A'));
}

TEST(CodecProperty, RoundTripOverDomain) {
  const std::string domain = default_table().domain();
  Gen gen(6);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::string s = gen.string_over(domain, gen.between(0, 24));
    const ArabicString a = bw_to_arabic(s, default_table());
    ASSERT_EQ(arabic_to_bw(a, default_table()), s);
    ASSERT_EQ(unicode::codepoint_count(a.str()), s.size());
  }
}

TEST(CodecProperty, KeptMergeLengthIsSumOfParts) {
  const std::string domain = default_table().domain();
  Gen gen(7);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<ArabicString> parts;
    std::size_t total = 0;
    for (std::size_t i = 0, n = gen.between(1, 5); i < n; ++i) {
      const std::string s = gen.string_over(domain, gen.between(1, 6));
      total += s.size();
      parts.push_back(bw_to_arabic(s, default_table()));
    }
    const ArabicString merged = merge_syllables(parts, true, default_table());
    ASSERT_EQ(unicode::codepoint_count(merged.str()), total);
    const ArabicString stripped = merge_syllables(parts, false, default_table());
    for (char c : arabic_to_bw(stripped, default_table())) {
      ASSERT_FALSE(default_table().is_diacritic_char(c));
    }
  }
}

}  // namespace
}  // namespace loanlex
