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

#include <sstream>

#include "loanlex/error.hpp"
#include "loanlex/lexicon.hpp"
#include "test_support.hpp"

namespace loanlex {
namespace {

using testing::Gen;

ArabicString ar(const std::string& s) { return ArabicString(s); }

CandidateLoanword candidate(const std::string& arabic,
                            std::vector<std::pair<std::string, std::vector<std::string>>>
                                sources) {
  CandidateLoanword c{ar(arabic), {}};
  for (auto& [headword, glosses] : sources) {
    c.sources.push_back(
        Provenance{"x", headword, IpaString::parse("a"), std::move(glosses)});
  }
  return c;
}

TEST(NormalizeGloss, LowercasesAndTrims) {
  EXPECT_EQ(normalize_gloss("  Omelette. "), "omelette");
  EXPECT_EQ(normalize_gloss("(TV)"), "tv");
  EXPECT_EQ(normalize_gloss("Middle-Class"), "middle-class");
  EXPECT_EQ(normalize_gloss("..."), "");
}

TEST(BuildLexicon, AttestedCandidateWithGloss) {
  const std::vector<CandidateLoanword> cands = {
      candidate("اومليت", {{"omelette", {"omelette"}}})};
  const std::vector<MatchReport> reports = {{ar("اومليت"), 7, {}}};
  const Lexicon lex = build_lexicon(reports, cands);
  ASSERT_EQ(lex.entries.size(), 1u);
  EXPECT_EQ(lex.entries[0],
            (LexiconEntry{ar("اومليت"), {"omelette"}, "omelette", 7}));
}

TEST(BuildLexicon, UnattestedAndGlosslessAreExcluded) {
  const std::vector<CandidateLoanword> cands = {
      candidate("اومليت", {{"omelette", {"omelette"}}}),
      candidate("كافي", {{"café", {}}}),
      candidate("بيرو", {{"bureau", {"desk"}}})};
  const std::vector<MatchReport> reports = {{ar("اومليت"), 2, {}},
                                            {ar("كافي"), 9, {}}};
  const Lexicon lex = build_lexicon(reports, cands);
  ASSERT_EQ(lex.entries.size(), 1u);
  EXPECT_EQ(lex.entries[0].arabic, ar("اومليت"));
  EXPECT_EQ(lex.excluded_without_gloss, 1u);
}

TEST(BuildLexicon, MergesGlossesAndSorts) {
  const std::vector<CandidateLoanword> cands = {
      candidate("كافي", {{"café", {"Coffee", "café"}}, {"cafe", {"coffee!", "bar"}}}),
      candidate("بيرو", {{"bureau", {"desk"}}}),
      candidate("اومليت", {{"omelette", {"omelette"}}})};
  const std::vector<MatchReport> reports = {
      {ar("كافي"), 5, {}}, {ar("بيرو"), 5, {}}, {ar("اومليت"), 9, {}}};
  const Lexicon lex = build_lexicon(reports, cands);
  ASSERT_EQ(lex.entries.size(), 3u);
  EXPECT_EQ(lex.entries[0].arabic, ar("اومليت"));
  EXPECT_EQ(lex.entries[1].arabic, ar("بيرو"));  // ties broken by codepoints
  EXPECT_EQ(lex.entries[2].arabic, ar("كافي"));
  EXPECT_EQ(lex.entries[2].english_glosses,
            (std::vector<std::string>{"coffee", "café", "bar"}));
  EXPECT_EQ(lex.entries[2].donor_headword, "café");
}

TEST(EmitParallel, Modes) {
  const std::vector<LexiconEntry> one = {{ar("بيرو"), {"desk"}, "bureau", 1}};
  for (GlossMode m : {GlossMode::kFirst, GlossMode::kAll}) {
    const ParallelText t = emit_parallel(one, m);
    EXPECT_EQ(t.source, std::vector<std::string>{"بيرو"});
    EXPECT_EQ(t.target, std::vector<std::string>{"desk"});
  }
  const std::vector<LexiconEntry> three = {
      {ar("كافي"), {"coffee", "café", "bar"}, "café", 2}};
  const ParallelText all = emit_parallel(three, GlossMode::kAll);
  EXPECT_EQ(all.source, std::vector<std::string>(3, "كافي"));
  EXPECT_EQ(all.target, (std::vector<std::string>{"coffee", "café", "bar"}));
  EXPECT_EQ(emit_parallel(three, GlossMode::kFirst).target,
            std::vector<std::string>{"coffee"});
  try {
    emit_parallel({}, GlossMode::kAll);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_STREQ(e.what(), "nothing to emit");
  }
  EXPECT_EQ(parse_gloss_mode("first"), GlossMode::kFirst);
  EXPECT_THROW(parse_gloss_mode("some"), Error);
}

TEST(EmitTsv, FieldMappingAndSanitation) {
  const std::vector<LexiconEntry> lex = {
      {ar("بورجوازي"), {"bourgeoisie"}, "bourgeoisie", 12},
      {ar("كافي"), {"a\tb", "c\nd"}, "café", 3}};
  std::ostringstream out;
  emit_tsv(out, lex);
  EXPECT_EQ(out.str(),
            "بورجوازي\tbourgeoisie\tbourgeoisie\t12\n"
            "كافي\ta b; c d\tcafé\t3\n");
  std::istringstream in(out.str());
  const auto parsed = parse_lexicon_tsv(in);
  ASSERT_EQ(parsed.size(), 2u);
  EXPECT_EQ(parsed[0], lex[0]);
}

TEST(LexiconProperty, InvariantsOnRandomInput) {
  const std::vector<std::string> words = {"كافي", "بيرو", "اومليت", "كاراج",
                                          "بيس", "راكونتير"};
  const std::vector<std::string> glosses = {"coffee", "Desk", "bar;", "", "a\tb",
                                            "the office"};
  Gen gen(9);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<CandidateLoanword> cands;
    std::vector<MatchReport> reports;
    for (const auto& w : words) {
      if (gen.chance(0.3)) continue;
      std::vector<std::pair<std::string, std::vector<std::string>>> sources;
      for (std::size_t s = 0, n = gen.between(1, 2); s < n; ++s) {
        std::vector<std::string> g;
        for (std::size_t k = 0, m = gen.between(0, 3); k < m; ++k) {
          g.push_back(gen.pick(glosses));
        }
        sources.emplace_back("h" + std::to_string(s), std::move(g));
      }
      cands.push_back(candidate(w, std::move(sources)));
      if (gen.chance(0.7)) reports.push_back({ar(w), gen.between(1, 50), {}});
    }
    const Lexicon lex = build_lexicon(reports, cands);
    ASSERT_LE(lex.entries.size(), reports.size());
    ASSERT_EQ(lex.entries.size() + lex.excluded_without_gloss, reports.size());
    std::size_t gloss_total = 0;
    for (const auto& e : lex.entries) {
      ASSERT_GE(e.corpus_frequency, 1u);
      ASSERT_FALSE(e.english_glosses.empty());
      for (const auto& g : e.english_glosses) ASSERT_FALSE(g.empty());
      gloss_total += e.english_glosses.size();
    }
    if (lex.entries.empty()) continue;
    const ParallelText all = emit_parallel(lex.entries, GlossMode::kAll);
    ASSERT_EQ(all.source.size(), gloss_total);
    ASSERT_EQ(all.source.size(), all.target.size());
    const ParallelText first = emit_parallel(lex.entries, GlossMode::kFirst);
    ASSERT_EQ(first.source.size(), lex.entries.size());

    std::ostringstream out;
    emit_tsv(out, lex.entries);
    std::istringstream in(out.str());
    const auto parsed = parse_lexicon_tsv(in);
    ASSERT_EQ(parsed.size(), lex.entries.size());
    for (std::size_t i = 0; i < parsed.size(); ++i) {
      ASSERT_EQ(parsed[i].arabic, lex.entries[i].arabic);
      ASSERT_EQ(parsed[i].donor_headword, lex.entries[i].donor_headword);
      ASSERT_EQ(parsed[i].corpus_frequency, lex.entries[i].corpus_frequency);
    }
  }
}

}  // namespace
}  // namespace loanlex
