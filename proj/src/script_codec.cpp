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

#include "loanlex/script_codec.hpp"

#include <charconv>
#include <istream>
#include <sstream>

#include "loanlex/error.hpp"
#include "loanlex/unicode.hpp"

namespace loanlex {

BuckwalterTable::BuckwalterTable(std::vector<Pair> pairs)
    : pairs_(std::move(pairs)) {
  forward_.fill(-1);
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    const Pair& p = pairs_[i];
    const auto c = static_cast<unsigned char>(p.romanization);
    if (c >= 128 || c <= 32) {
      throw ValidationError("romanization character " + std::to_string(c) +
                            " is not printable ASCII");
    }
    if (forward_[c] != -1) {
      throw ValidationError(std::string("romanization character '") +
                            p.romanization + "' mapped twice");
    }
    if (!backward_.emplace(p.codepoint, i).second) {
      throw ValidationError("codepoint " + unicode::format_codepoint(p.codepoint) +
                            " mapped twice");
    }
    forward_[c] = static_cast<int>(i);
  }
}

std::optional<char32_t> BuckwalterTable::to_arabic(char romanization) const {
  const auto c = static_cast<unsigned char>(romanization);
  if (c >= 128 || forward_[c] < 0) return std::nullopt;
  return pairs_[static_cast<std::size_t>(forward_[c])].codepoint;
}

std::optional<char> BuckwalterTable::to_romanization(char32_t codepoint) const {
  const auto it = backward_.find(codepoint);
  if (it == backward_.end()) return std::nullopt;
  return pairs_[it->second].romanization;
}

bool BuckwalterTable::is_diacritic(char32_t codepoint) const {
  const auto it = backward_.find(codepoint);
  return it != backward_.end() && pairs_[it->second].kind == GlyphKind::kDiacritic;
}

bool BuckwalterTable::is_diacritic_char(char romanization) const {
  const auto c = static_cast<unsigned char>(romanization);
  return c < 128 && forward_[c] >= 0 &&
         pairs_[static_cast<std::size_t>(forward_[c])].kind ==
             GlyphKind::kDiacritic;
}

std::string BuckwalterTable::domain() const {
  std::string out;
  for (const auto& p : pairs_) out.push_back(p.romanization);
  return out;
}

BuckwalterTable parse_buckwalter_table(std::istream& source) {
  std::vector<BuckwalterTable::Pair> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(source, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;

    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const auto tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (fields.size() != 3) {
      throw SyntaxError(line_no, 1, "expected 3 tab-separated fields");
    }
    if (fields[0].size() != 1) {
      throw SyntaxError(line_no, 1, "romanization must be one character");
    }
    const std::string& cp_text = fields[1];
    unsigned value = 0;
    if (cp_text.size() < 3 || cp_text.compare(0, 2, "U+") != 0 ||
        std::from_chars(cp_text.data() + 2, cp_text.data() + cp_text.size(),
                        value, 16)
                .ptr != cp_text.data() + cp_text.size()) {
      throw SyntaxError(line_no, 3, "codepoint must look like U+XXXX");
    }
    GlyphKind kind;
    if (fields[2] == "letter") {
      kind = GlyphKind::kLetter;
    } else if (fields[2] == "diacritic") {
      kind = GlyphKind::kDiacritic;
    } else {
      throw SyntaxError(line_no, fields[0].size() + cp_text.size() + 3,
                        "kind must be 'letter' or 'diacritic'");
    }
    pairs.push_back({fields[0][0], static_cast<char32_t>(value), kind});
  }
  return BuckwalterTable(std::move(pairs));
}

BuckwalterTable parse_buckwalter_table(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_buckwalter_table(in);
}

ArabicString bw_to_arabic(std::string_view romanization,
                          const BuckwalterTable& table) {
  std::string out;
  out.reserve(romanization.size() * 2);
  for (std::size_t i = 0; i < romanization.size(); ++i) {
    const auto cp = table.to_arabic(romanization[i]);
    if (!cp) throw UnknownRomanizationChar(i, romanization[i]);
    unicode::append_utf8(out, *cp);
  }
  return ArabicString(std::move(out));
}

std::string arabic_to_bw(const ArabicString& arabic,
                         const BuckwalterTable& table) {
  const std::string& s = arabic.str();
  std::string out;
  std::size_t pos = 0;
  std::size_t index = 0;
  while (pos < s.size()) {
    char32_t cp;
    if (!unicode::decode_next(s, pos, cp)) cp = unicode::kReplacement;
    const auto c = table.to_romanization(cp);
    if (!c) throw UnknownArabicChar(index, cp);
    out.push_back(*c);
    ++index;
  }
  return out;
}

ArabicString strip_diacritics(const ArabicString& s,
                              const BuckwalterTable& table) {
  const std::string& text = s.str();
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t start = pos;
    char32_t cp;
    if (unicode::decode_next(text, pos, cp) && table.is_diacritic(cp)) continue;
    out.append(text, start, pos - start);
  }
  return ArabicString(std::move(out));
}

ArabicString merge_syllables(std::span<const ArabicString> parts,
                             bool keep_diacritics,
                             const BuckwalterTable& table) {
  std::string joined;
  for (const auto& p : parts) joined += p.str();
  ArabicString merged(std::move(joined));
  return keep_diacritics ? merged : strip_diacritics(merged, table);
}

}  // namespace loanlex
