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

#include "loanlex/rules.hpp"

#include <cctype>
#include <istream>
#include <sstream>

#include "loanlex/error.hpp"
#include "loanlex/unicode.hpp"

namespace loanlex {

bool ClassTable::declare(std::string name, SegmentSet members) {
  if (find(name) != nullptr) return false;
  classes_.emplace_back(std::move(name), std::move(members));
  return true;
}

const SegmentSet* ClassTable::find(std::string_view name) const {
  for (const auto& [n, set] : classes_) {
    if (n == name) return &set;
  }
  return nullptr;
}

bool MapTable::add(MapEntry entry) {
  if (index_.contains(entry.ipa_segment)) return false;
  max_key_codepoints_ = std::max(max_key_codepoints_,
                                 unicode::codepoint_count(entry.ipa_segment));
  index_.emplace(entry.ipa_segment, entries_.size());
  entries_.push_back(std::move(entry));
  return true;
}

const std::string* MapTable::find(std::string_view ipa_segment) const {
  const auto it = index_.find(std::string(ipa_segment));
  return it == index_.end() ? nullptr : &entries_[it->second].romanization;
}

SyllabifierConfig RuleSet::syllabifier_config() const {
  SyllabifierConfig config = SyllabifierConfig::defaults();
  if (const auto* v = classes.find("V")) config.vowels = *v;
  if (const auto* obs = classes.find("Obs")) config.obstruents = *obs;
  if (const auto* liq = classes.find("Liq")) config.liquids = *liq;
  return config;
}

bool is_buckwalter_safe_char(char c) {
  const auto u = static_cast<unsigned char>(c);
  return std::isalnum(u) != 0 || c == '~' || c == '_';
}

namespace {

constexpr std::string_view kEmptyToken = "0";

struct Token {
  std::string text;
  std::size_t column;  // 1-based, in codepoints
};

std::vector<Token> tokenize_line(std::string_view line) {
  std::vector<Token> out;
  std::size_t pos = 0;
  std::size_t column = 1;
  std::string current;
  std::size_t current_column = 0;
  while (pos < line.size()) {
    const std::size_t start = pos;
    char32_t cp;
    if (!unicode::decode_next(line, pos, cp)) cp = unicode::kReplacement;
    if (unicode::is_whitespace(cp)) {
      if (!current.empty()) out.push_back({std::move(current), current_column});
      current.clear();
    } else {
      if (current.empty()) current_column = column;
      current.append(line.substr(start, pos - start));
    }
    ++column;
  }
  if (!current.empty()) out.push_back({std::move(current), current_column});
  return out;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || std::isalpha(static_cast<unsigned char>(s[0])) == 0) {
    return false;
  }
  for (char c : s) {
    if (std::isalnum(static_cast<unsigned char>(c)) == 0 && c != '_') {
      return false;
    }
  }
  return true;
}

bool all_ipa(std::string_view s) {
  std::size_t pos = 0;
  while (pos < s.size()) {
    char32_t cp;
    if (!unicode::decode_next(s, pos, cp)) return false;
    if (cp != kIpaLengthMark && !is_ipa_codepoint(cp)) return false;
  }
  return true;
}

bool all_buckwalter(std::string_view s) {
  for (char c : s) {
    if (!is_buckwalter_safe_char(c)) return false;
  }
  return true;
}

bool fits_stage(std::string_view s, RuleStage stage) {
  return stage == RuleStage::kPre ? all_ipa(s) : all_buckwalter(s);
}

std::string_view stage_alphabet(RuleStage stage) {
  return stage == RuleStage::kPre ? "IPA" : "Buckwalter";
}

// Rule text normalizes like pronunciations do: NFC, `ː` as `:`.
std::string normalize_symbol(std::string_view s) {
  std::string out;
  const std::string n = unicode::nfc(s);
  std::size_t pos = 0;
  while (pos < n.size()) {
    char32_t cp;
    const std::size_t start = pos;
    if (!unicode::decode_next(n, pos, cp)) {
      out.append(n.substr(start, pos - start));
      continue;
    }
    unicode::append_utf8(out, cp == kIpaLengthMark ? U':' : cp);
  }
  return out;
}

struct PendingRule {
  RewriteRule rule;
  Token left;
  Token right;
  std::size_t line;
};

class RuleParser {
 public:
  RuleSet parse(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!unicode::is_valid_utf8(line)) {
        throw SyntaxError(line_no, 1, "ill-formed UTF-8");
      }
      const std::string trimmed = unicode::trim(line);
      if (trimmed.empty() || trimmed[0] == '#') continue;
      parse_line(tokenize_line(line), line_no);
    }
    for (auto& pending : pending_) resolve(pending);
    validate();
    return std::move(rules_);
  }

 private:
  enum class Section { kNone, kPre, kMap, kPost };

  void parse_line(const std::vector<Token>& tokens, std::size_t line_no) {
    const std::string& head = tokens[0].text;
    if (head == "class") {
      parse_class(tokens, line_no);
      return;
    }
    if (head.front() == '[') {
      if (tokens.size() != 1) {
        throw SyntaxError(line_no, tokens[1].column,
                          "unexpected text after section header");
      }
      if (head == "[pre]") {
        section_ = Section::kPre;
      } else if (head == "[map]") {
        section_ = Section::kMap;
      } else if (head == "[post]") {
        section_ = Section::kPost;
      } else {
        throw SyntaxError(line_no, tokens[0].column,
                          "unknown section '" + head + "'");
      }
      return;
    }
    switch (section_) {
      case Section::kNone:
        throw SyntaxError(line_no, tokens[0].column,
                          "statement outside of a section");
      case Section::kMap:
        parse_map(tokens, line_no);
        return;
      case Section::kPre:
        parse_rule(tokens, line_no, RuleStage::kPre);
        return;
      case Section::kPost:
        parse_rule(tokens, line_no, RuleStage::kPost);
        return;
    }
  }

  void parse_class(const std::vector<Token>& tokens, std::size_t line_no) {
    if (tokens.size() < 4 || tokens[2].text != "=") {
      throw SyntaxError(line_no, tokens[0].column,
                        "expected 'class <Name> = seg1 seg2 ...'");
    }
    if (!is_identifier(tokens[1].text)) {
      throw SyntaxError(line_no, tokens[1].column,
                        "invalid class name '" + tokens[1].text + "'");
    }
    std::vector<std::string> members;
    for (std::size_t i = 3; i < tokens.size(); ++i) {
      members.push_back(normalize_symbol(tokens[i].text));
    }
    if (!rules_.classes.declare(tokens[1].text, SegmentSet(std::move(members)))) {
      throw SyntaxError(line_no, tokens[1].column,
                        "class '" + tokens[1].text + "' declared twice");
    }
  }

  void parse_map(const std::vector<Token>& tokens, std::size_t line_no) {
    if (tokens.size() != 3 || tokens[1].text != "->") {
      throw SyntaxError(line_no, tokens[0].column,
                        "expected '<ipa_segment> -> <romanization>'");
    }
    const std::string segment = normalize_symbol(tokens[0].text);
    const std::string romanization =
        tokens[2].text == kEmptyToken ? std::string() : tokens[2].text;
    if (!all_buckwalter(romanization)) {
      throw SyntaxError(line_no, tokens[2].column,
                        "romanization '" + romanization +
                            "' is outside the Buckwalter alphabet");
    }
    if (!rules_.map_table.add(MapEntry{segment, romanization})) {
      throw DuplicateMapEntryError(line_no, segment);
    }
  }

  void parse_rule(const std::vector<Token>& tokens, std::size_t line_no,
                  RuleStage stage) {
    if (tokens.size() < 3 || tokens[1].text != "->") {
      throw SyntaxError(line_no, tokens[0].column,
                        "expected '<pattern> -> <replacement> [/ <left> _ "
                        "<right>]'");
    }
    PendingRule pending;
    pending.line = line_no;
    pending.rule.stage = stage;
    pending.rule.pattern = normalize_symbol(tokens[0].text);
    if (pending.rule.pattern == kEmptyToken) {
      throw SyntaxError(line_no, tokens[0].column, "empty pattern");
    }
    if (!fits_stage(pending.rule.pattern, stage)) {
      throw SyntaxError(line_no, tokens[0].column,
                        "pattern '" + pending.rule.pattern +
                            "' is outside the " +
                            std::string(stage_alphabet(stage)) + " alphabet");
    }
    pending.rule.replacement =
        tokens[2].text == kEmptyToken ? std::string()
                                      : normalize_symbol(tokens[2].text);
    if (stage == RuleStage::kPost &&
        !fits_stage(pending.rule.replacement, stage)) {
      throw SyntaxError(line_no, tokens[2].column,
                        "replacement '" + pending.rule.replacement +
                            "' is outside the Buckwalter alphabet");
    }
    if (tokens.size() > 3) {
      if (tokens[3].text != "/") {
        throw SyntaxError(line_no, tokens[3].column, "expected '/'");
      }
      std::size_t underscore = 0;
      for (std::size_t i = 4; i < tokens.size(); ++i) {
        if (tokens[i].text == "_") {
          if (underscore != 0) {
            throw SyntaxError(line_no, tokens[i].column, "second '_'");
          }
          underscore = i;
        }
      }
      if (underscore == 0) {
        throw SyntaxError(line_no, tokens[3].column,
                          "context needs a '_' placeholder");
      }
      if (underscore - 4 > 1) {
        throw SyntaxError(line_no, tokens[5].column,
                          "at most one left-context token");
      }
      if (tokens.size() - underscore - 1 > 1) {
        throw SyntaxError(line_no, tokens[underscore + 2].column,
                          "at most one right-context token");
      }
      if (underscore == 5) pending.left = tokens[4];
      if (underscore + 1 < tokens.size()) pending.right = tokens[underscore + 1];
    }
    pending_.push_back(std::move(pending));
  }

  RuleContext resolve_context(const Token& token, RuleStage stage,
                              std::size_t line_no) const {
    if (token.text.empty()) return RuleContext::any();
    if (token.text == "#") return RuleContext::boundary();
    if (rules_.classes.find(token.text) != nullptr) {
      return RuleContext::of_class(token.text);
    }
    const std::string literal = normalize_symbol(token.text);
    if (fits_stage(literal, stage)) return RuleContext::literal(literal);
    if (is_identifier(token.text)) {
      throw UndeclaredClassError(line_no, token.text);
    }
    throw SyntaxError(line_no, token.column,
                      "context '" + token.text + "' is outside the " +
                          std::string(stage_alphabet(stage)) + " alphabet");
  }

  void resolve(PendingRule& pending) {
    RewriteRule& rule = pending.rule;
    rule.left = resolve_context(pending.left, rule.stage, pending.line);
    rule.right = resolve_context(pending.right, rule.stage, pending.line);
    auto& target =
        rule.stage == RuleStage::kPre ? rules_.pre_rules : rules_.post_rules;
    target.push_back(std::move(rule));
  }

  void validate() const {
    const SegmentSet* consonants = rules_.classes.find("C");
    const SegmentSet* vowels = rules_.classes.find("V");
    if (consonants == nullptr || vowels == nullptr) {
      throw ValidationError("rule set must declare classes C and V");
    }
    for (const auto& c : consonants->members()) {
      if (vowels->contains(c)) {
        throw ValidationError("classes C and V overlap on '" + c + "'");
      }
    }
    for (const auto& v : vowels->members()) {
      if (consonants->contains(v)) {
        throw ValidationError("classes C and V overlap on '" + v + "'");
      }
    }
  }

  RuleSet rules_;
  Section section_ = Section::kNone;
  std::vector<PendingRule> pending_;
};

std::string emit_context(const RuleContext& ctx) {
  switch (ctx.kind) {
    case RuleContext::Kind::kAny:
      return "";
    case RuleContext::Kind::kBoundary:
      return "#";
    case RuleContext::Kind::kClass:
    case RuleContext::Kind::kLiteral:
      return ctx.value;
  }
  return "";
}

void emit_rule(std::ostream& out, const RewriteRule& rule) {
  out << rule.pattern << " -> "
      << (rule.replacement.empty() ? std::string(kEmptyToken)
                                   : rule.replacement);
  if (rule.left.kind != RuleContext::Kind::kAny ||
      rule.right.kind != RuleContext::Kind::kAny) {
    out << " /";
    if (const auto left = emit_context(rule.left); !left.empty()) {
      out << ' ' << left;
    }
    out << " _";
    if (const auto right = emit_context(rule.right); !right.empty()) {
      out << ' ' << right;
    }
  }
  out << '\n';
}

bool segments_equal(const std::vector<std::string>& segs, std::size_t at,
                    const std::vector<std::string>& needle) {
  if (at + needle.size() > segs.size()) return false;
  for (std::size_t k = 0; k < needle.size(); ++k) {
    if (segs[at + k] != needle[k]) return false;
  }
  return true;
}

struct CompiledRule {
  std::vector<std::string> pattern;
  std::vector<std::string> replacement;
  RuleContext::Kind left_kind;
  RuleContext::Kind right_kind;
  std::vector<std::string> left_literal;
  std::vector<std::string> right_literal;
  const SegmentSet* left_class = nullptr;
  const SegmentSet* right_class = nullptr;
};

CompiledRule compile(const RewriteRule& rule, const ClassTable& classes) {
  CompiledRule c;
  c.pattern = split_segments(rule.pattern);
  c.replacement = split_segments(rule.replacement);
  c.left_kind = rule.left.kind;
  c.right_kind = rule.right.kind;
  auto bind = [&](const RuleContext& ctx, std::vector<std::string>& literal,
                  const SegmentSet*& cls) {
    if (ctx.kind == RuleContext::Kind::kLiteral) {
      literal = split_segments(ctx.value);
    } else if (ctx.kind == RuleContext::Kind::kClass) {
      cls = classes.find(ctx.value);
      if (cls == nullptr) throw UndeclaredClassError(0, ctx.value);
    }
  };
  bind(rule.left, c.left_literal, c.left_class);
  bind(rule.right, c.right_literal, c.right_class);
  return c;
}

bool left_holds(const CompiledRule& r, const std::vector<std::string>& segs,
                std::size_t at) {
  switch (r.left_kind) {
    case RuleContext::Kind::kAny:
      return true;
    case RuleContext::Kind::kBoundary:
      return at == 0;
    case RuleContext::Kind::kClass:
      return at > 0 && r.left_class->contains(segs[at - 1]);
    case RuleContext::Kind::kLiteral:
      return at >= r.left_literal.size() &&
             segments_equal(segs, at - r.left_literal.size(), r.left_literal);
  }
  return false;
}

bool right_holds(const CompiledRule& r, const std::vector<std::string>& segs,
                 std::size_t end) {
  switch (r.right_kind) {
    case RuleContext::Kind::kAny:
      return true;
    case RuleContext::Kind::kBoundary:
      return end == segs.size();
    case RuleContext::Kind::kClass:
      return end < segs.size() && r.right_class->contains(segs[end]);
    case RuleContext::Kind::kLiteral:
      return segments_equal(segs, end, r.right_literal);
  }
  return false;
}

}  // namespace

RuleSet parse_rules(std::istream& source) { return RuleParser().parse(source); }

RuleSet parse_rules(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_rules(in);
}

std::string emit_rules(const RuleSet& rules) {
  std::ostringstream out;
  for (const auto& [name, set] : rules.classes.entries()) {
    out << "class " << name << " =";
    for (const auto& m : set.members()) out << ' ' << m;
    out << '\n';
  }
  out << "[pre]\n";
  for (const auto& r : rules.pre_rules) emit_rule(out, r);
  out << "[map]\n";
  for (const auto& e : rules.map_table.entries()) {
    out << e.ipa_segment << " -> "
        << (e.romanization.empty() ? std::string(kEmptyToken) : e.romanization)
        << '\n';
  }
  out << "[post]\n";
  for (const auto& r : rules.post_rules) emit_rule(out, r);
  return out.str();
}

std::string apply_contextual(std::string_view input,
                             std::span<const RewriteRule> rules,
                             const ClassTable& classes) {
  std::vector<std::string> segs = split_segments(input);
  for (const auto& rule : rules) {
    const CompiledRule r = compile(rule, classes);
    std::size_t i = 0;
    while (i < segs.size()) {
      const std::size_t end = i + r.pattern.size();
      if (segments_equal(segs, i, r.pattern) && left_holds(r, segs, i) &&
          right_holds(r, segs, end)) {
        const auto first = segs.begin() + static_cast<std::ptrdiff_t>(i);
        segs.erase(first, first + static_cast<std::ptrdiff_t>(r.pattern.size()));
        segs.insert(segs.begin() + static_cast<std::ptrdiff_t>(i),
                    r.replacement.begin(), r.replacement.end());
        i += r.replacement.size();
      } else {
        ++i;
      }
    }
  }
  std::string out;
  for (const auto& s : segs) out += s;
  return out;
}

std::string map_segments(std::string_view syllable, const MapTable& table) {
  const std::vector<char32_t> cps = unicode::to_codepoints(syllable);
  std::string out;
  std::size_t p = 0;
  while (p < cps.size()) {
    const std::size_t longest =
        std::min(table.max_key_codepoints(), cps.size() - p);
    bool matched = false;
    for (std::size_t len = longest; len >= 1; --len) {
      const std::string key = unicode::to_utf8(std::vector<char32_t>(
          cps.begin() + static_cast<std::ptrdiff_t>(p),
          cps.begin() + static_cast<std::ptrdiff_t>(p + len)));
      if (const std::string* rom = table.find(key)) {
        out += *rom;
        p += len;
        matched = true;
        break;
      }
    }
    if (!matched) {
      throw UnmappedSegmentError(
          p, unicode::to_utf8(std::vector<char32_t>(
                 cps.begin() + static_cast<std::ptrdiff_t>(p), cps.end())));
    }
  }
  return out;
}

SyllableTrace trace_syllable(std::string_view syllable, const RuleSet& rules) {
  SyllableTrace trace;
  trace.input = std::string(syllable);
  trace.after_pre = apply_contextual(syllable, rules.pre_rules, rules.classes);
  trace.after_map = map_segments(trace.after_pre, rules.map_table);
  trace.after_post =
      apply_contextual(trace.after_map, rules.post_rules, rules.classes);
  return trace;
}

std::string transliterate_syllable(std::string_view syllable,
                                   const RuleSet& rules) {
  return trace_syllable(syllable, rules).after_post;
}

std::string transliterate_syllable(const Syllable& syllable,
                                   const RuleSet& rules) {
  return transliterate_syllable(syllable.text(), rules);
}

}  // namespace loanlex
