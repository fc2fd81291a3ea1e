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

#ifndef LOANLEX_ERROR_HPP_
#define LOANLEX_ERROR_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace loanlex {

// Coarse category carried by every error; the CLI prints it as the
// machine-readable part of its failure line.
enum class ErrorKind {
  kConfig,
  kIo,
  kParse,
  kValidation,
  kTransliteration,
  kSample,
  kInternal,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& message)
      : Error(ErrorKind::kValidation, message) {}
};

class NoNucleusError : public Error {
 public:
  explicit NoNucleusError(const std::string& ipa)
      : Error(ErrorKind::kTransliteration, "no vowel nucleus in '" + ipa + "'"),
        ipa_(ipa) {}
  const std::string& ipa() const noexcept { return ipa_; }

 private:
  std::string ipa_;
};

// Raised by map_segments when no table entry matches at a position.
class UnmappedSegmentError : public Error {
 public:
  UnmappedSegmentError(std::size_t position, const std::string& remainder)
      : Error(ErrorKind::kTransliteration,
              "unmapped segment at position " + std::to_string(position) +
                  ": '" + remainder + "'"),
        position_(position),
        remainder_(remainder) {}
  std::size_t position() const noexcept { return position_; }
  const std::string& remainder() const noexcept { return remainder_; }

 private:
  std::size_t position_;
  std::string remainder_;
};

class UnknownRomanizationChar : public Error {
 public:
  UnknownRomanizationChar(std::size_t position, char ch)
      : Error(ErrorKind::kTransliteration,
              "unknown romanization character '" + std::string(1, ch) +
                  "' at position " + std::to_string(position)),
        position_(position),
        ch_(ch) {}
  std::size_t position() const noexcept { return position_; }
  char character() const noexcept { return ch_; }

 private:
  std::size_t position_;
  char ch_;
};

class UnknownArabicChar : public Error {
 public:
  UnknownArabicChar(std::size_t position, char32_t codepoint);
  std::size_t position() const noexcept { return position_; }
  char32_t codepoint() const noexcept { return codepoint_; }

 private:
  std::size_t position_;
  char32_t codepoint_;
};

// Syntax error in a line-oriented input file; line and column are 1-based.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& message)
      : Error(ErrorKind::kParse, "line " + std::to_string(line) + ", column " +
                                     std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class UndeclaredClassError : public Error {
 public:
  UndeclaredClassError(std::size_t line, const std::string& name)
      : Error(ErrorKind::kParse, "line " + std::to_string(line) +
                                     ": undeclared class '" + name + "'"),
        line_(line),
        name_(name) {}
  std::size_t line() const noexcept { return line_; }
  const std::string& name() const noexcept { return name_; }

 private:
  std::size_t line_;
  std::string name_;
};

class DuplicateMapEntryError : public Error {
 public:
  DuplicateMapEntryError(std::size_t line, const std::string& segment)
      : Error(ErrorKind::kParse, "line " + std::to_string(line) +
                                     ": duplicate map entry for '" + segment +
                                     "'"),
        segment_(segment) {}
  const std::string& segment() const noexcept { return segment_; }

 private:
  std::string segment_;
};

class XmlParseError : public Error {
 public:
  XmlParseError(std::int64_t byte_offset, const std::string& message)
      : Error(ErrorKind::kParse, "malformed XML at byte " +
                                     std::to_string(byte_offset) + ": " +
                                     message),
        byte_offset_(byte_offset) {}
  std::int64_t byte_offset() const noexcept { return byte_offset_; }

 private:
  std::int64_t byte_offset_;
};

}  // namespace loanlex

#endif  // LOANLEX_ERROR_HPP_
