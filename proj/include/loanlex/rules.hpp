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

#ifndef LOANLEX_RULES_HPP_
#define LOANLEX_RULES_HPP_

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "loanlex/ipa.hpp"
#include "loanlex/syllabify.hpp"

// Staged rewrite rules turning one IPA syllable into modified Buckwalter:
// contextual pre-adjustments over IPA, greedy table mapping, then contextual
// post-adjustments over the romanization.
//
// Rule file grammar (UTF-8, one statement per line):
//
//   # comment
//   class V = a e i o u
//   [pre]
//   a -> A / C _ C          pattern -> replacement [/ left _ right]
//   [map]
//   y: -> iy                ipa_segment -> romanization
//   [post]
//   a -> aA / _ #
//
// A context is a declared class name, `#` (syllable boundary), a literal, or
// omitted. Declared class names shadow literals. `0` is the empty string.
namespace loanlex {

enum class RuleStage { kPre, kPost };

struct RuleContext {
  enum class Kind { kAny, kBoundary, kClass, kLiteral };

  Kind kind = Kind::kAny;
  std::string value;  // class name or literal text

  static RuleContext any() { return {}; }
  static RuleContext boundary() { return {Kind::kBoundary, {}}; }
  static RuleContext of_class(std::string name) {
    return {Kind::kClass, std::move(name)};
  }
  static RuleContext literal(std::string text) {
    return {Kind::kLiteral, std::move(text)};
  }

  friend bool operator==(const RuleContext&, const RuleContext&) = default;
};

struct RewriteRule {
  std::string pattern;
  std::string replacement;
  RuleContext left;
  RuleContext right;
  RuleStage stage = RuleStage::kPre;

  friend bool operator==(const RewriteRule&, const RewriteRule&) = default;
};

struct MapEntry {
  std::string ipa_segment;
  std::string romanization;

  friend bool operator==(const MapEntry&, const MapEntry&) = default;
};

class ClassTable {
 public:
  // Returns false if the name is already declared.
  bool declare(std::string name, SegmentSet members);
  const SegmentSet* find(std::string_view name) const;
  const std::vector<std::pair<std::string, SegmentSet>>& entries() const {
    return classes_;
  }

  friend bool operator==(const ClassTable& a, const ClassTable& b) {
    return a.classes_ == b.classes_;
  }

 private:
  std::vector<std::pair<std::string, SegmentSet>> classes_;
};

class MapTable {
 public:
  // Returns false if the segment already has an entry.
  bool add(MapEntry entry);
  const std::string* find(std::string_view ipa_segment) const;
  const std::vector<MapEntry>& entries() const { return entries_; }
  std::size_t max_key_codepoints() const { return max_key_codepoints_; }

  friend bool operator==(const MapTable& a, const MapTable& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<MapEntry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t max_key_codepoints_ = 0;
};

struct RuleSet {
  ClassTable classes;
  std::vector<RewriteRule> pre_rules;
  MapTable map_table;
  std::vector<RewriteRule> post_rules;

  // Vowels from class V; obstruents/liquids from classes Obs/Liq when
  // declared, otherwise the built-in defaults.
  SyllabifierConfig syllabifier_config() const;

  friend bool operator==(const RuleSet&, const RuleSet&) = default;
};

// Characters allowed in romanizations and post-stage rules.
bool is_buckwalter_safe_char(char c);

// Throws SyntaxError, UndeclaredClassError, DuplicateMapEntryError or
// ValidationError (missing/overlapping C and V).
RuleSet parse_rules(std::istream& source);
RuleSet parse_rules(std::string_view text);

// Canonical serialization; parse_rules(emit_rules(rs)) == rs.
std::string emit_rules(const RuleSet& rules);

// Applies rules in order. Each rule makes one left-to-right pass, rewriting
// non-overlapping matches; contexts are tested against the string as
// rewritten so far, and scanning resumes after the inserted replacement.
std::string apply_contextual(std::string_view input,
                             std::span<const RewriteRule> rules,
                             const ClassTable& classes);

// Greedy longest-match conversion; throws UnmappedSegmentError with the
// codepoint position when nothing matches.
std::string map_segments(std::string_view syllable, const MapTable& table);

struct SyllableTrace {
  std::string input;
  std::string after_pre;
  std::string after_map;
  std::string after_post;
};

SyllableTrace trace_syllable(std::string_view syllable, const RuleSet& rules);

std::string transliterate_syllable(std::string_view syllable,
                                   const RuleSet& rules);
std::string transliterate_syllable(const Syllable& syllable,
                                   const RuleSet& rules);

}  // namespace loanlex

#endif  // LOANLEX_RULES_HPP_
