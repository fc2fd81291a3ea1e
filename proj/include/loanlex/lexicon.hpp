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

#ifndef LOANLEX_LEXICON_HPP_
#define LOANLEX_LEXICON_HPP_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "loanlex/corpus_match.hpp"
#include "loanlex/pipeline.hpp"
#include "loanlex/script_codec.hpp"

namespace loanlex {

// Invariants: corpus_frequency >= 1, english_glosses non-empty.
struct LexiconEntry {
  ArabicString arabic;
  std::vector<std::string> english_glosses;
  std::string donor_headword;
  std::uint64_t corpus_frequency = 0;

  friend bool operator==(const LexiconEntry&, const LexiconEntry&) = default;
};

struct Lexicon {
  std::vector<LexiconEntry> entries;  // frequency desc, then arabic
  std::size_t excluded_without_gloss = 0;
  std::size_t unattested_reports = 0;  // reports naming no known candidate
};

// Lowercases and trims surrounding whitespace, punctuation and symbols.
std::string normalize_gloss(std::string_view gloss);

Lexicon build_lexicon(std::span<const MatchReport> reports,
                      std::span<const CandidateLoanword> candidates);

enum class GlossMode { kFirst, kAll };

GlossMode parse_gloss_mode(std::string_view text);  // "first" | "all"
std::string_view to_string(GlossMode mode);

struct ParallelText {
  std::vector<std::string> source;  // Arabic side
  std::vector<std::string> target;  // English side, aligned by index
};

// Throws ValidationError("nothing to emit") for an empty lexicon.
ParallelText emit_parallel(std::span<const LexiconEntry> lexicon, GlossMode mode);
void write_lines(std::ostream& out, std::span<const std::string> lines);

// `arabic<TAB>glosses joined by "; "<TAB>donor<TAB>frequency`. Tabs and line
// breaks inside a field become single spaces.
void emit_tsv(std::ostream& out, std::span<const LexiconEntry> lexicon);
// Throws SyntaxError.
std::vector<LexiconEntry> parse_lexicon_tsv(std::istream& in);

}  // namespace loanlex

#endif  // LOANLEX_LEXICON_HPP_
