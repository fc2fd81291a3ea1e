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

#ifndef LOANLEX_CORPUS_MATCH_HPP_
#define LOANLEX_CORPUS_MATCH_HPP_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "loanlex/script_codec.hpp"

namespace loanlex {

struct NormalizeOptions {
  bool strip_tatweel = false;
  bool unify_alef = false;  // أ إ آ -> ا
  bool unify_ya = false;    // ى -> ي

  // Accepts none, alef, tatweel, ya, all, or a comma-separated combination.
  // Throws Error(kConfig) on an unknown name.
  static NormalizeOptions parse(std::string_view names);
  std::string name() const;
  bool any() const { return strip_tatweel || unify_alef || unify_ya; }

  friend bool operator==(const NormalizeOptions&,
                         const NormalizeOptions&) = default;
};

std::string normalize_token(std::string_view token,
                            const NormalizeOptions& options);

// Splits on Unicode whitespace, strips leading/trailing punctuation and
// symbols, applies normalization and drops empty tokens.
std::vector<std::string> tokenize(std::string_view line,
                                  const NormalizeOptions& options = {});

// 1-based line, 0-based token index within the line's tokenization.
struct Location {
  std::uint64_t line = 0;
  std::uint32_t token = 0;

  friend auto operator<=>(const Location&, const Location&) = default;
};

struct MatchReport {
  ArabicString candidate;
  std::uint64_t instance_count = 0;
  std::vector<Location> locations;  // empty unless retained

  friend bool operator==(const MatchReport&, const MatchReport&) = default;
};

struct FilterStage {
  std::string stage;
  std::uint64_t types = 0;
  std::uint64_t instances = 0;
};

struct CorpusStats {
  std::uint64_t lines = 0;
  std::uint64_t skipped_lines = 0;  // ill-formed UTF-8
  std::uint64_t total_tokens = 0;
  std::uint64_t candidate_types_found = 0;
  std::uint64_t candidate_instances = 0;
  std::vector<FilterStage> stages;  // "found", then one per filter

  nlohmann::ordered_json to_json() const;
};

struct ScanOptions {
  NormalizeOptions normalize;
  bool retain_locations = false;
  std::size_t workers = 1;
  std::size_t block_lines = 8192;
};

struct ScanResult {
  std::vector<MatchReport> reports;  // found candidates, sorted by codepoints
  CorpusStats stats;
};

// One pass over the corpus. Token and candidate are compared after the same
// normalization. Results do not depend on worker count or block size.
// Throws ValidationError for an empty candidate set.
ScanResult scan(std::istream& corpus, std::span<const ArabicString> candidates,
                const ScanOptions& options);

// Codepoints that are not combining marks.
std::size_t arabic_letter_count(std::string_view text);
bool meets_min_letters(const ArabicString& candidate, std::size_t min_letters);

std::vector<ArabicString> filter_length(std::span<const ArabicString> candidates,
                                        std::size_t min_letters = 4);

class Stoplist {
 public:
  Stoplist() = default;
  explicit Stoplist(std::vector<std::string> words);
  // One word per line; blank lines and `#` comments ignored.
  static Stoplist parse(std::istream& in);

  bool contains(const ArabicString& word) const {
    return words_.contains(word.str());
  }
  std::size_t size() const { return words_.size(); }

 private:
  std::set<std::string> words_;
};

std::vector<ArabicString> filter_stopwords(
    std::span<const ArabicString> candidates, const Stoplist& stoplist);

// Applies the length filter then the stoplist to scan reports, appending a
// FilterStage per step to `stats`.
std::vector<MatchReport> filter_reports(std::vector<MatchReport> reports,
                                        std::size_t min_letters,
                                        const Stoplist& stoplist,
                                        CorpusStats& stats);

// Sampler randomness: std::mt19937_64 seeded with the run seed. A draw below
// `bound` takes 64-bit words, rejects any word w < (2^64 mod bound) and
// returns w mod bound.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

enum class OriginLabel { kUnlabeled, kArabic, kFrench, kUnsure };

std::string_view to_string(OriginLabel label);  // "", "A", "F", "U"
OriginLabel parse_origin_label(std::string_view text);

struct SampleRow {
  ArabicString candidate;
  std::uint64_t line = 0;
  std::uint32_t token_index = 0;
  std::string context;
  OriginLabel label = OriginLabel::kUnlabeled;

  friend bool operator==(const SampleRow&, const SampleRow&) = default;
};

struct AnnotationSample {
  std::vector<SampleRow> rows;  // sorted by (line, token_index, candidate)
};

// Uniform sample without replacement over every retained location. The
// instances are ordered by (line, token, candidate), then a partial
// Fisher-Yates shuffle driven by SampleRng picks the first n.
// Throws Error(kSample) when n exceeds the available instances.
AnnotationSample sample_instances(std::span<const MatchReport> reports,
                                  std::size_t n, std::uint64_t seed);

// Second corpus pass filling each row's context: the raw tokens within
// `window` positions on either side, joined by spaces.
void attach_context(std::istream& corpus, AnnotationSample& sample,
                    std::size_t window = 5);

// Header `candidate,line,token_index,context,label`, RFC 4180 quoting.
void write_sample_csv(std::ostream& out, const AnnotationSample& sample);

// `arabic<TAB>instance_count`.
void write_match_tsv(std::ostream& out, std::span<const MatchReport> reports);
std::vector<MatchReport> read_match_tsv(std::istream& in);

}  // namespace loanlex

#endif  // LOANLEX_CORPUS_MATCH_HPP_
