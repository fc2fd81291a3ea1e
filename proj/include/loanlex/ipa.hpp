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

#ifndef LOANLEX_IPA_HPP_
#define LOANLEX_IPA_HPP_

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace loanlex {

inline constexpr char kSyllableMarker = '.';
inline constexpr char kLengthMark = ':';
inline constexpr char32_t kIpaLengthMark = 0x02D0;  // ː

// True for codepoints of the accepted pronunciation inventory: lowercase
// Latin/Greek/IPA letters, combining diacritics, modifier letters (minus
// stress marks), the syllable marker and the length mark.
bool is_ipa_codepoint(char32_t cp);

// A validated, NFC-normalized pronunciation. `ː` is stored as ASCII `:`.
class IpaString {
 public:
  // Throws ValidationError when the text is empty, contains whitespace or
  // codepoints outside the inventory, or has leading/trailing/doubled markers.
  static IpaString parse(std::string_view text);

  const std::string& str() const noexcept { return text_; }
  bool has_markers() const noexcept;

  friend auto operator<=>(const IpaString&, const IpaString&) = default;

 private:
  explicit IpaString(std::string text) : text_(std::move(text)) {}
  std::string text_;
};

// Splits text into segments: each starts at a base codepoint and absorbs the
// combining marks, modifier letters and length marks that follow it, so
// "ɔ̃" and "y:" are single segments.
std::vector<std::string> split_segments(std::string_view text);

// Base letter of a segment: the first codepoint of its canonical
// decomposition ("ɔ̃" -> "ɔ", "y:" -> "y", "ã" -> "a").
std::string segment_base(std::string_view segment);

// Named set of segments. A segment is a member when it is listed verbatim or
// when its base letter is listed, so declaring `ɔ` covers `ɔ̃` and `ɔ:`.
class SegmentSet {
 public:
  SegmentSet() = default;
  explicit SegmentSet(std::vector<std::string> members);

  bool contains(std::string_view segment) const;
  const std::vector<std::string>& members() const noexcept { return members_; }
  bool empty() const noexcept { return members_.empty(); }

  friend bool operator==(const SegmentSet& a, const SegmentSet& b) {
    return a.members_ == b.members_;
  }

 private:
  std::vector<std::string> members_;  // declaration order
  std::set<std::string, std::less<>> lookup_;
};

}  // namespace loanlex

#endif  // LOANLEX_IPA_HPP_
