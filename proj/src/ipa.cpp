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

#include "loanlex/ipa.hpp"

#include "loanlex/error.hpp"
#include "loanlex/unicode.hpp"

namespace loanlex {

bool is_ipa_codepoint(char32_t cp) {
  if (cp == U'.' || cp == U':') return true;
  if (cp == 0x02C8 || cp == 0x02CC) return false;  // stress marks
  if (cp >= 0x0250 && cp <= 0x02FF) return true;  // IPA ext + modifiers
  if (cp >= 0x0300 && cp <= 0x036F) return true;  // combining diacritics
  if (cp >= 0x1DC0 && cp <= 0x1DFF) return true;
  if (!unicode::is_lowercase_letter(cp)) return false;
  return cp < 0x0250 || (cp >= 0x0370 && cp <= 0x03FF) ||
         (cp >= 0x1D00 && cp <= 0x1DBF) || (cp >= 0x1E00 && cp <= 0x1EFF);
}

IpaString IpaString::parse(std::string_view text) {
  const std::string normalized = unicode::nfc(text);
  if (normalized.empty()) {
    throw ValidationError("empty IPA string");
  }
  std::string out;
  out.reserve(normalized.size());
  std::size_t pos = 0;
  std::size_t index = 0;
  char32_t prev = 0;
  while (pos < normalized.size()) {
    char32_t cp;
    if (!unicode::decode_next(normalized, pos, cp)) {
      throw ValidationError("ill-formed UTF-8 in IPA '" + normalized + "'");
    }
    if (cp == kIpaLengthMark) cp = U':';
    if (!is_ipa_codepoint(cp)) {
      throw ValidationError("codepoint " + unicode::format_codepoint(cp) +
                            " at position " + std::to_string(index) +
                            " is outside the IPA inventory in '" + normalized +
                            "'");
    }
    if (cp == U'.' && (index == 0 || prev == U'.')) {
      throw ValidationError("misplaced syllable marker in '" + normalized + "'");
    }
    unicode::append_utf8(out, cp);
    prev = cp;
    ++index;
  }
  if (prev == U'.') {
    throw ValidationError("trailing syllable marker in '" + normalized + "'");
  }
  return IpaString(std::move(out));
}

bool IpaString::has_markers() const noexcept {
  return text_.find(kSyllableMarker) != std::string::npos;
}

namespace {

bool attaches_to_previous(char32_t cp) {
  return cp == U':' || cp == kIpaLengthMark ||
         unicode::is_combining_mark(cp) || unicode::is_modifier_letter(cp);
}

}  // namespace

std::vector<std::string> split_segments(std::string_view text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t start = pos;
    char32_t cp;
    if (!unicode::decode_next(text, pos, cp)) cp = unicode::kReplacement;
    if (!out.empty() && cp != U'.' && attaches_to_previous(cp) &&
        out.back() != ".") {
      out.back().append(text.substr(start, pos - start));
    } else {
      out.emplace_back(text.substr(start, pos - start));
    }
  }
  return out;
}

std::string segment_base(std::string_view segment) {
  if (segment.empty()) return {};
  if (static_cast<unsigned char>(segment[0]) < 0x80) {
    return std::string(1, segment[0]);
  }
  const std::string decomposed = unicode::nfd(segment);
  std::size_t pos = 0;
  char32_t cp;
  if (!unicode::decode_next(decomposed, pos, cp)) return std::string(segment);
  return decomposed.substr(0, pos);
}

SegmentSet::SegmentSet(std::vector<std::string> members)
    : members_(std::move(members)), lookup_(members_.begin(), members_.end()) {}

bool SegmentSet::contains(std::string_view segment) const {
  if (lookup_.contains(segment)) return true;
  const std::string base = segment_base(segment);
  return base != segment && lookup_.contains(base);
}

}  // namespace loanlex
