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

#ifndef LOANLEX_UNICODE_HPP_
#define LOANLEX_UNICODE_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

// Thin UTF-8 helpers. Character properties and normalization come from ICU.
namespace loanlex::unicode {

inline constexpr char32_t kReplacement = 0xFFFD;

// Decodes the codepoint at `pos` and advances it. Returns false (leaving
// `pos` one byte further) on an ill-formed sequence.
bool decode_next(std::string_view s, std::size_t& pos, char32_t& cp);

bool is_valid_utf8(std::string_view s);

// Throws ValidationError on ill-formed input.
std::vector<char32_t> to_codepoints(std::string_view s);

void append_utf8(std::string& out, char32_t cp);
std::string to_utf8(char32_t cp);
std::string to_utf8(const std::vector<char32_t>& cps);

std::size_t codepoint_count(std::string_view s);

std::string nfc(std::string_view s);
std::string nfd(std::string_view s);
std::string to_lower(std::string_view s);

// "U+0627" style, uppercase hex, at least four digits.
std::string format_codepoint(char32_t cp);

bool is_combining_mark(char32_t cp);   // Mn, Me
bool is_modifier_letter(char32_t cp);  // Lm
bool is_whitespace(char32_t cp);
bool is_punct_or_symbol(char32_t cp);  // P*, S*
bool is_lowercase_letter(char32_t cp);

// Trims Unicode whitespace from both ends.
std::string trim(std::string_view s);

}  // namespace loanlex::unicode

#endif  // LOANLEX_UNICODE_HPP_
