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

#include "loanlex/error.hpp"

#include "loanlex/unicode.hpp"

namespace loanlex {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kConfig:
      return "config";
    case ErrorKind::kIo:
      return "io";
    case ErrorKind::kParse:
      return "parse";
    case ErrorKind::kValidation:
      return "validation";
    case ErrorKind::kTransliteration:
      return "transliteration";
    case ErrorKind::kSample:
      return "sample";
    case ErrorKind::kInternal:
      return "internal";
  }
  return "internal";
}

UnknownArabicChar::UnknownArabicChar(std::size_t position, char32_t codepoint)
    : Error(ErrorKind::kTransliteration,
            "unknown Arabic character " + unicode::format_codepoint(codepoint) +
                " at position " + std::to_string(position)),
      position_(position),
      codepoint_(codepoint) {}

}  // namespace loanlex
