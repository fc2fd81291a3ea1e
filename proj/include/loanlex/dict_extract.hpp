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

#ifndef LOANLEX_DICT_EXTRACT_HPP_
#define LOANLEX_DICT_EXTRACT_HPP_

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "loanlex/ipa.hpp"

namespace loanlex {

// One donor-language headword with its pronunciations and bridge-language
// glosses. Pronunciations and glosses are unique and keep first-seen order.
struct DictEntry {
  std::string headword;
  std::vector<IpaString> pronunciations;
  std::vector<std::string> glosses;

  // Appends the other entry's pronunciations and glosses not yet present.
  void merge(const DictEntry& other);

  friend bool operator==(const DictEntry&, const DictEntry&) = default;
};

// Trims and NFC-normalizes a headword; throws ValidationError when it is
// empty or contains a tab or line break.
std::string normalize_headword(std::string_view raw);

struct SkipRecord {
  std::string title;
  std::string reason;
};

// One JSON object per line: {"title": ..., "reason": ...}.
void write_skip_jsonl(std::ostream& out, std::span<const SkipRecord> records);

struct DumpOptions {
  std::string language = "French";
  // Matched with a case-insensitive first letter, as MediaWiki does.
  std::vector<std::string> pronunciation_templates = {"IPA", "IPA-lite",
                                                      "fr-IPA"};
  std::size_t workers = 1;
};

struct DumpStats {
  std::size_t pages = 0;
  std::size_t non_article_pages = 0;
  std::size_t without_language = 0;
  std::size_t skipped = 0;  // language section present, no usable entry
  std::size_t entries = 0;
};

// Streams a MediaWiki XML export. Entries and skips are delivered in dump
// page order whatever the worker count. Throws XmlParseError (with the byte
// offset) on malformed XML; per-page extraction failures become skips.
DumpStats parse_dump(std::istream& source, const DumpOptions& options,
                     const std::function<void(DictEntry&&)>& on_entry,
                     const std::function<void(const SkipRecord&)>& on_skip);

enum class PageOutcome { kEntry, kNoLanguage, kSkipped };

struct PageResult {
  PageOutcome outcome = PageOutcome::kNoLanguage;
  DictEntry entry;
  SkipRecord skip;
};

// Pure page-level extraction used by parse_dump.
PageResult extract_page(std::string_view title, std::string_view wikitext,
                        const DumpOptions& options);

// Body of the level-2 section for `language`, or nullopt.
std::optional<std::string_view> find_language_section(std::string_view wikitext,
                                                      std::string_view language);

// IPA strings from pronunciation templates, delimiters stripped, NFC,
// in order of appearance. Each template contributes its first slash- or
// bracket-delimited argument.
std::vector<std::string> extract_ipa(
    std::string_view wikitext, std::span<const std::string> template_names);
std::vector<std::string> extract_ipa(std::string_view wikitext);

// Drops stress and liaison marks and parenthesized optional segments.
std::string clean_pronunciation(std::string_view ipa);

// Definition lines (`#`, `##`, not `#:`/`#*`) rendered to plain text.
std::vector<std::string> extract_glosses(std::string_view section);

// Renders wikitext to plain text: link labels, the linked word of
// l/m/w-style templates, other templates removed, HTML and emphasis removed.
std::string strip_wiki_markup(std::string_view wikitext);

struct TsvError {
  std::size_t line;
  std::string message;
};

struct TsvParseResult {
  std::vector<DictEntry> entries;  // first-seen headword order
  std::vector<TsvError> errors;
};

// `headword<TAB>ipa[<TAB>gloss1; gloss2; ...]`; `#` comment lines.
TsvParseResult parse_tsv(std::istream& source);

// Joins glosses with "; ", backslash-escaping `\`, `;`, tab and newline.
std::string join_glosses(std::span<const std::string> glosses);
// Inverse of join_glosses; empty pieces are dropped.
std::vector<std::string> split_glosses(std::string_view field);

// One line per (headword, pronunciation); glosses escape `\`, `;`, tab and
// newline with a backslash so parse_tsv(emit_tsv(x)) == x.
void emit_tsv(std::ostream& out, std::span<const DictEntry> entries);

}  // namespace loanlex

#endif  // LOANLEX_DICT_EXTRACT_HPP_
