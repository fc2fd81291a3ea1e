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

#ifndef LOANLEX_SCRIPT_CODEC_HPP_
#define LOANLEX_SCRIPT_CODEC_HPP_

#include <array>
#include <compare>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace loanlex {

// Arabic-script text in logical (codepoint) order, UTF-8 encoded.
class ArabicString {
 public:
  ArabicString() = default;
  explicit ArabicString(std::string utf8) : text_(std::move(utf8)) {}

  const std::string& str() const noexcept { return text_; }
  bool empty() const noexcept { return text_.empty(); }

  friend auto operator<=>(const ArabicString&, const ArabicString&) = default;

 private:
  std::string text_;
};

enum class GlyphKind { kLetter, kDiacritic };

// Bijection between single romanization characters and Arabic codepoints.
class BuckwalterTable {
 public:
  struct Pair {
    char romanization;
    char32_t codepoint;
    GlyphKind kind;
  };

  // Throws ValidationError when the pairs are not a bijection.
  explicit BuckwalterTable(std::vector<Pair> pairs);

  std::optional<char32_t> to_arabic(char romanization) const;
  std::optional<char> to_romanization(char32_t codepoint) const;
  bool is_diacritic(char32_t codepoint) const;
  bool is_diacritic_char(char romanization) const;

  const std::vector<Pair>& pairs() const noexcept { return pairs_; }
  // Romanization characters in table order.
  std::string domain() const;

 private:
  std::vector<Pair> pairs_;
  std::array<int, 128> forward_{};  // romanization -> pair index, -1 if none
  std::unordered_map<char32_t, std::size_t> backward_;
};

// Table file: `romanization_char<TAB>U+XXXX<TAB>letter|diacritic`, `#`
// comments. Throws SyntaxError or ValidationError.
BuckwalterTable parse_buckwalter_table(std::istream& source);
BuckwalterTable parse_buckwalter_table(std::string_view text);

ArabicString bw_to_arabic(std::string_view romanization,
                          const BuckwalterTable& table);
std::string arabic_to_bw(const ArabicString& arabic,
                         const BuckwalterTable& table);

// Concatenates parts; when keep_diacritics is false, the table's diacritic
// codepoints are removed from the result.
ArabicString merge_syllables(std::span<const ArabicString> parts,
                             bool keep_diacritics,
                             const BuckwalterTable& table);

ArabicString strip_diacritics(const ArabicString& s,
                              const BuckwalterTable& table);

}  // namespace loanlex

template <>
struct std::hash<loanlex::ArabicString> {
  std::size_t operator()(const loanlex::ArabicString& s) const noexcept {
    return std::hash<std::string>{}(s.str());
  }
};

#endif  // LOANLEX_SCRIPT_CODEC_HPP_
