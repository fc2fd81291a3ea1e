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

#ifndef LOANLEX_PIPELINE_HPP_
#define LOANLEX_PIPELINE_HPP_

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "loanlex/dict_extract.hpp"
#include "loanlex/ipa.hpp"
#include "loanlex/rules.hpp"
#include "loanlex/script_codec.hpp"
#include "loanlex/syllabify.hpp"

namespace loanlex {

// Where a candidate came from. `romanization` is the full Buckwalter string
// before diacritic stripping.
struct Provenance {
  std::string romanization;
  std::string headword;
  IpaString ipa;
  std::vector<std::string> glosses;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

// A generated borrowing-language spelling. Donor entries that collide on the
// same Arabic string share one candidate with several provenance records.
struct CandidateLoanword {
  ArabicString arabic;
  std::vector<Provenance> sources;

  const std::string& romanization() const { return sources.front().romanization; }

  friend bool operator==(const CandidateLoanword&,
                         const CandidateLoanword&) = default;
};

// Bundles everything needed to turn a pronunciation into a candidate.
class Transliterator {
 public:
  Transliterator(RuleSet rules, BuckwalterTable table, bool keep_diacritics);

  const RuleSet& rules() const noexcept { return rules_; }
  const BuckwalterTable& table() const noexcept { return table_; }
  const SyllabifierConfig& syllabifier() const noexcept { return syllabifier_; }
  bool keep_diacritics() const noexcept { return keep_diacritics_; }

 private:
  RuleSet rules_;
  BuckwalterTable table_;
  SyllabifierConfig syllabifier_;
  bool keep_diacritics_;
};

// Every intermediate stage of one pronunciation's conversion.
struct CandidateTrace {
  std::vector<Syllable> syllables;
  std::vector<SyllableTrace> stages;          // per syllable
  std::vector<ArabicString> syllable_arabic;  // per syllable, unstripped
  std::string romanization;                   // concatenated stage output
  ArabicString arabic;                        // merged, policy applied
};

// Throws NoNucleusError, UnmappedSegmentError, UnknownRomanizationChar or
// ValidationError (empty result).
CandidateTrace trace_candidate(const IpaString& ipa, const Transliterator& tr);

CandidateLoanword generate_candidate(const DictEntry& entry,
                                     std::size_t pron_index,
                                     const Transliterator& tr);

struct CandidateSkip {
  std::string headword;
  std::string ipa;
  std::string category;
  std::string detail;
};

struct GenerationStats {
  std::size_t pairs = 0;  // (entry, pronunciation) pairs seen
  std::size_t skipped = 0;
  std::size_t unique_candidates = 0;
  // Unique counts under each diacritic policy, independent of the active one.
  std::size_t unique_stripped = 0;
  std::size_t unique_with_diacritics = 0;
};

struct GenerationResult {
  std::vector<CandidateLoanword> candidates;  // sorted by Arabic codepoints
  std::vector<CandidateSkip> skips;           // input order
  GenerationStats stats;
};

GenerationResult generate_all(std::span<const DictEntry> entries,
                              const Transliterator& tr,
                              std::size_t workers = 1);

// `arabic<TAB>romanization<TAB>headword<TAB>ipa<TAB>glosses`, one line per
// provenance record.
void write_candidates_tsv(std::ostream& out,
                          std::span<const CandidateLoanword> candidates);
// Groups lines sharing an Arabic string. Throws SyntaxError.
std::vector<CandidateLoanword> read_candidates_tsv(std::istream& in);

void write_candidate_skips_jsonl(std::ostream& out,
                                 std::span<const CandidateSkip> skips);

}  // namespace loanlex

#endif  // LOANLEX_PIPELINE_HPP_
