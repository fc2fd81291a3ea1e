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

#include "loanlex/lexicon.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <unordered_map>

#include "loanlex/error.hpp"
#include "loanlex/unicode.hpp"

namespace loanlex {

namespace {

std::string sanitize_field(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char c : text) {
    if (c == '\t' || c == '\n' || c == '\r') {
      pending_space = true;
      continue;
    }
    if (pending_space) {
      if (out.empty() || out.back() != ' ') out += ' ';
      pending_space = false;
    }
    if (c == ' ' && !out.empty() && out.back() == ' ') continue;
    out += c;
  }
  if (pending_space && !out.empty() && out.back() != ' ') out += ' ';
  return out;
}

}  // namespace

std::string normalize_gloss(std::string_view gloss) {
  const std::vector<char32_t> cps = unicode::to_codepoints(gloss);
  auto drop = [](char32_t cp) {
    return unicode::is_whitespace(cp) || unicode::is_punct_or_symbol(cp);
  };
  std::size_t begin = 0;
  std::size_t end = cps.size();
  while (begin < end && drop(cps[begin])) ++begin;
  while (end > begin && drop(cps[end - 1])) --end;
  std::string trimmed;
  for (std::size_t i = begin; i < end; ++i) unicode::append_utf8(trimmed, cps[i]);
  return unicode::to_lower(trimmed);
}

Lexicon build_lexicon(std::span<const MatchReport> reports,
                      std::span<const CandidateLoanword> candidates) {
  std::unordered_map<std::string, const CandidateLoanword*> by_arabic;
  for (const auto& c : candidates) by_arabic.emplace(c.arabic.str(), &c);

  Lexicon lexicon;
  for (const auto& report : reports) {
    if (report.instance_count == 0) continue;
    const auto it = by_arabic.find(report.candidate.str());
    if (it == by_arabic.end()) {
      ++lexicon.unattested_reports;
      continue;
    }
    const CandidateLoanword& candidate = *it->second;
    LexiconEntry entry;
    entry.arabic = candidate.arabic;
    entry.donor_headword = candidate.sources.front().headword;
    entry.corpus_frequency = report.instance_count;
    for (const auto& src : candidate.sources) {
      for (const auto& raw : src.glosses) {
        std::string gloss = sanitize_field(normalize_gloss(raw));
        if (gloss.empty()) continue;
        if (std::find(entry.english_glosses.begin(), entry.english_glosses.end(),
                      gloss) == entry.english_glosses.end()) {
          entry.english_glosses.push_back(std::move(gloss));
        }
      }
    }
    if (entry.english_glosses.empty()) {
      ++lexicon.excluded_without_gloss;
      continue;
    }
    lexicon.entries.push_back(std::move(entry));
  }
  std::sort(lexicon.entries.begin(), lexicon.entries.end(),
            [](const LexiconEntry& a, const LexiconEntry& b) {
              if (a.corpus_frequency != b.corpus_frequency) {
                return a.corpus_frequency > b.corpus_frequency;
              }
              return a.arabic < b.arabic;
            });
  return lexicon;
}

GlossMode parse_gloss_mode(std::string_view text) {
  if (text == "first") return GlossMode::kFirst;
  if (text == "all") return GlossMode::kAll;
  throw Error(ErrorKind::kConfig,
              "gloss mode must be 'first' or 'all', got '" + std::string(text) +
                  "'");
}

std::string_view to_string(GlossMode mode) {
  return mode == GlossMode::kFirst ? "first" : "all";
}

ParallelText emit_parallel(std::span<const LexiconEntry> lexicon,
                           GlossMode mode) {
  if (lexicon.empty()) throw ValidationError("nothing to emit");
  ParallelText text;
  for (const auto& entry : lexicon) {
    const std::size_t n =
        mode == GlossMode::kFirst ? 1 : entry.english_glosses.size();
    for (std::size_t i = 0; i < n; ++i) {
      text.source.push_back(sanitize_field(entry.arabic.str()));
      text.target.push_back(sanitize_field(entry.english_glosses[i]));
    }
  }
  return text;
}

void write_lines(std::ostream& out, std::span<const std::string> lines) {
  for (const auto& line : lines) out << line << '\n';
}

void emit_tsv(std::ostream& out, std::span<const LexiconEntry> lexicon) {
  for (const auto& entry : lexicon) {
    std::string glosses;
    for (const auto& g : entry.english_glosses) {
      if (!glosses.empty()) glosses += "; ";
      glosses += sanitize_field(g);
    }
    out << sanitize_field(entry.arabic.str()) << '\t' << glosses << '\t'
        << sanitize_field(entry.donor_headword) << '\t'
        << entry.corpus_frequency << '\n';
  }
}

std::vector<LexiconEntry> parse_lexicon_tsv(std::istream& in) {
  std::vector<LexiconEntry> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string_view> fields;
    std::string_view rest = line;
    while (true) {
      const auto tab = rest.find('\t');
      fields.push_back(rest.substr(0, tab));
      if (tab == std::string_view::npos) break;
      rest.remove_prefix(tab + 1);
    }
    if (fields.size() != 4) {
      throw SyntaxError(line_no, 1, "lexicon line needs 4 fields");
    }
    LexiconEntry entry;
    entry.arabic = ArabicString(std::string(fields[0]));
    std::string_view glosses = fields[1];
    while (!glosses.empty()) {
      const auto sep = glosses.find("; ");
      entry.english_glosses.emplace_back(glosses.substr(0, sep));
      if (sep == std::string_view::npos) break;
      glosses.remove_prefix(sep + 2);
    }
    entry.donor_headword = std::string(fields[2]);
    const std::string_view freq = fields[3];
    const auto [ptr, ec] = std::from_chars(
        freq.data(), freq.data() + freq.size(), entry.corpus_frequency);
    if (ec != std::errc() || ptr != freq.data() + freq.size() ||
        entry.corpus_frequency == 0) {
      throw SyntaxError(line_no, 1, "frequency must be a positive integer");
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace loanlex
