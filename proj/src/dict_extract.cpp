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

#include "loanlex/dict_extract.hpp"

#include <expat.h>

#include <algorithm>
#include <cctype>
#include <exception>
#include <istream>
#include <ostream>
#include <regex>
#include <thread>
#include <unordered_map>

#include "json.hpp"
#include "loanlex/error.hpp"
#include "loanlex/unicode.hpp"

namespace loanlex {

namespace {

template <typename T>
void append_unique(std::vector<T>& into, const T& value) {
  if (std::find(into.begin(), into.end(), value) == into.end()) {
    into.push_back(value);
  }
}

bool starts_with_at(std::string_view text, std::size_t pos,
                    std::string_view prefix) {
  return text.substr(pos, prefix.size()) == prefix;
}

// Index of the `}}` closing the `{{` at `open`, or npos.
std::size_t find_template_close(std::string_view text, std::size_t open) {
  int depth = 0;
  for (std::size_t i = open; i + 1 < text.size();) {
    if (text[i] == '{' && text[i + 1] == '{') {
      ++depth;
      i += 2;
    } else if (text[i] == '}' && text[i + 1] == '}') {
      if (--depth == 0) return i;
      i += 2;
    } else {
      ++i;
    }
  }
  return std::string_view::npos;
}

std::size_t find_link_close(std::string_view text, std::size_t open) {
  int depth = 0;
  for (std::size_t i = open; i + 1 < text.size();) {
    if (text[i] == '[' && text[i + 1] == '[') {
      ++depth;
      i += 2;
    } else if (text[i] == ']' && text[i + 1] == ']') {
      if (--depth == 0) return i;
      i += 2;
    } else {
      ++i;
    }
  }
  return std::string_view::npos;
}

// Splits template or link contents on top-level `|`.
std::vector<std::string_view> split_args(std::string_view inner) {
  std::vector<std::string_view> out;
  int braces = 0;
  int brackets = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (i + 1 < inner.size()) {
      const std::string_view two = inner.substr(i, 2);
      if (two == "{{") {
        ++braces;
        ++i;
        continue;
      }
      if (two == "}}") {
        --braces;
        ++i;
        continue;
      }
      if (two == "[[") {
        ++brackets;
        ++i;
        continue;
      }
      if (two == "]]") {
        --brackets;
        ++i;
        continue;
      }
    }
    if (inner[i] == '|' && braces == 0 && brackets == 0) {
      out.push_back(inner.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(inner.substr(start));
  return out;
}

bool is_named_arg(std::string_view arg) {
  const auto eq = arg.find('=');
  if (eq == std::string_view::npos || eq == 0) return false;
  for (std::size_t i = 0; i < eq; ++i) {
    const auto c = static_cast<unsigned char>(arg[i]);
    if (std::isalnum(c) == 0 && c != '-' && c != '_' && c != ' ') return false;
  }
  return true;
}

bool template_name_matches(std::string_view name, std::string_view wanted) {
  if (name.size() != wanted.size() || name.empty()) return false;
  if (std::tolower(static_cast<unsigned char>(name[0])) !=
      std::tolower(static_cast<unsigned char>(wanted[0]))) {
    return false;
  }
  return name.substr(1) == wanted.substr(1);
}

std::string render(std::string_view text);

std::string render_template(std::string_view inner) {
  const auto args = split_args(inner);
  const std::string name = unicode::trim(args[0]);
  std::vector<std::string_view> positional;
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (!is_named_arg(args[i])) positional.push_back(args[i]);
  }
  auto arg = [&](std::size_t i) -> std::string {
    return i < positional.size() ? unicode::trim(render(positional[i]))
                                 : std::string();
  };
  if (name == "l" || name == "link" || name == "l-self" || name == "ll" ||
      name == "m" || name == "mention") {
    const std::string alt = arg(2);
    return alt.empty() ? arg(1) : alt;
  }
  if (name == "w" || name == "wp" || name == "pedia") {
    const std::string label = arg(1);
    return label.empty() ? arg(0) : label;
  }
  if (name == "gloss" || name == "gl") return "(" + arg(0) + ")";
  if (name == "non-gloss definition" || name == "n-g" || name == "ngd" ||
      name == "taxlink") {
    return arg(0);
  }
  return {};
}

std::string render_link(std::string_view inner) {
  const auto parts = split_args(inner);
  std::string target = unicode::trim(parts.front());
  std::string lowered = target;
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  for (std::string_view ns : {"category:", "file:", "image:", "media:"}) {
    if (lowered.starts_with(ns)) return {};
  }
  if (parts.size() > 1) return render(parts.back());
  if (!target.empty() && target[0] == ':') target.erase(0, 1);
  if (const auto hash = target.find('#'); hash != std::string::npos) {
    target.erase(hash);
  }
  return target;
}

std::string render(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    if (starts_with_at(text, i, "{{")) {
      const std::size_t close = find_template_close(text, i);
      if (close == std::string_view::npos) {
        i += 2;
        continue;
      }
      out += render_template(text.substr(i + 2, close - i - 2));
      i = close + 2;
    } else if (starts_with_at(text, i, "[[")) {
      const std::size_t close = find_link_close(text, i);
      if (close == std::string_view::npos) {
        i += 2;
        continue;
      }
      out += render_link(text.substr(i + 2, close - i - 2));
      i = close + 2;
    } else if (starts_with_at(text, i, "[http")) {
      const std::size_t close = text.find(']', i);
      if (close == std::string_view::npos) {
        out += text[i++];
        continue;
      }
      const std::string_view inner = text.substr(i + 1, close - i - 1);
      const std::size_t space = inner.find(' ');
      if (space != std::string_view::npos) out += inner.substr(space + 1);
      i = close + 1;
    } else {
      out += text[i++];
    }
  }
  return out;
}

std::string collapse_whitespace(std::string_view text) {
  std::string out;
  bool pending_space = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t start = pos;
    char32_t cp;
    if (unicode::decode_next(text, pos, cp) && unicode::is_whitespace(cp)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out += ' ';
    pending_space = false;
    out.append(text.substr(start, pos - start));
  }
  return out;
}

// A level-N heading line `== Name ==`; returns level 0 for other lines.
int heading_level(std::string_view line, std::string& name) {
  std::string trimmed = unicode::trim(line);
  if (trimmed.size() < 4 || trimmed.front() != '=' || trimmed.back() != '=') {
    return 0;
  }
  std::size_t lead = 0;
  while (lead < trimmed.size() && trimmed[lead] == '=') ++lead;
  std::size_t trail = 0;
  while (trail < trimmed.size() && trimmed[trimmed.size() - 1 - trail] == '=') {
    ++trail;
  }
  const std::size_t level = std::min(lead, trail);
  if (2 * level >= trimmed.size()) return 0;
  name = unicode::trim(
      std::string_view(trimmed).substr(level, trimmed.size() - 2 * level));
  return static_cast<int>(level);
}

}  // namespace

void DictEntry::merge(const DictEntry& other) {
  for (const auto& p : other.pronunciations) append_unique(pronunciations, p);
  for (const auto& g : other.glosses) append_unique(glosses, g);
}

std::string normalize_headword(std::string_view raw) {
  std::string headword = unicode::nfc(unicode::trim(raw));
  if (headword.empty()) throw ValidationError("empty headword");
  if (headword.find_first_of("\t\n\r") != std::string::npos) {
    throw ValidationError("headword contains a tab or line break");
  }
  return headword;
}

void write_skip_jsonl(std::ostream& out, std::span<const SkipRecord> records) {
  for (const auto& r : records) {
    nlohmann::ordered_json j;
    j["title"] = r.title;
    j["reason"] = r.reason;
    out << j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace)
        << '\n';
  }
}

std::optional<std::string_view> find_language_section(
    std::string_view wikitext, std::string_view language) {
  std::size_t pos = 0;
  std::size_t body_start = std::string_view::npos;
  while (pos <= wikitext.size()) {
    std::size_t eol = wikitext.find('\n', pos);
    if (eol == std::string_view::npos) eol = wikitext.size();
    const std::string_view line = wikitext.substr(pos, eol - pos);
    std::string name;
    if (heading_level(line, name) == 2) {
      if (body_start != std::string_view::npos) {
        return wikitext.substr(body_start, pos - body_start);
      }
      if (name == language) body_start = std::min(eol + 1, wikitext.size());
    }
    pos = eol + 1;
  }
  if (body_start == std::string_view::npos) return std::nullopt;
  return wikitext.substr(body_start);
}

std::vector<std::string> extract_ipa(
    std::string_view wikitext, std::span<const std::string> template_names) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while ((i = wikitext.find("{{", i)) != std::string_view::npos) {
    const std::size_t close = find_template_close(wikitext, i);
    if (close == std::string_view::npos) break;
    const auto args = split_args(wikitext.substr(i + 2, close - i - 2));
    const std::string name = unicode::trim(args[0]);
    const bool wanted =
        std::any_of(template_names.begin(), template_names.end(),
                    [&](const std::string& t) { return template_name_matches(name, t); });
    if (!wanted) {
      i += 2;
      continue;
    }
    for (std::size_t k = 1; k < args.size(); ++k) {
      if (is_named_arg(args[k])) continue;
      const std::string a = unicode::trim(args[k]);
      if (a.size() >= 2 && ((a.front() == '/' && a.back() == '/') ||
                             (a.front() == '[' && a.back() == ']'))) {
        out.push_back(unicode::nfc(
            unicode::trim(std::string_view(a).substr(1, a.size() - 2))));
        break;
      }
    }
    i = close + 2;
  }
  return out;
}

std::vector<std::string> extract_ipa(std::string_view wikitext) {
  return extract_ipa(wikitext, DumpOptions{}.pronunciation_templates);
}

std::string clean_pronunciation(std::string_view ipa) {
  std::string out;
  int paren_depth = 0;
  std::size_t pos = 0;
  while (pos < ipa.size()) {
    const std::size_t start = pos;
    char32_t cp;
    if (!unicode::decode_next(ipa, pos, cp)) {
      out.append(ipa.substr(start, pos - start));
      continue;
    }
    if (cp == U'(') {
      ++paren_depth;
    } else if (cp == U')') {
      paren_depth = std::max(0, paren_depth - 1);
    } else if (paren_depth == 0 && cp != 0x02C8 && cp != 0x02CC &&
               cp != 0x203F) {
      out.append(ipa.substr(start, pos - start));
    }
  }
  return unicode::trim(out);
}

std::string strip_wiki_markup(std::string_view wikitext) {
  static const std::regex kComment("<!--[\\s\\S]*?-->");
  static const std::regex kRef(
      "<ref[^>/]*/>|<ref[^>]*>[\\s\\S]*?</ref>",
      std::regex::icase);
  static const std::regex kTag("</?[A-Za-z][^<>]*>");
  std::string text(wikitext);
  text = std::regex_replace(text, kComment, "");
  text = std::regex_replace(text, kRef, "");
  text = render(text);
  text = std::regex_replace(text, kTag, "");
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\'' && i + 1 < text.size() && text[i + 1] == '\'') {
      while (i + 1 < text.size() && text[i + 1] == '\'') ++i;
      continue;
    }
    out += text[i];
  }
  return collapse_whitespace(out);
}

std::vector<std::string> extract_glosses(std::string_view section) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < section.size()) {
    std::size_t eol = section.find('\n', pos);
    if (eol == std::string_view::npos) eol = section.size();
    const std::string_view line = section.substr(pos, eol - pos);
    pos = eol + 1;
    if (line.empty() || line[0] != '#') continue;
    std::size_t hashes = 0;
    while (hashes < line.size() && line[hashes] == '#') ++hashes;
    if (hashes < line.size() && (line[hashes] == ':' || line[hashes] == '*')) {
      continue;
    }
    std::string gloss = unicode::nfc(strip_wiki_markup(line.substr(hashes)));
    gloss = unicode::trim(gloss);
    if (!gloss.empty()) append_unique(out, gloss);
  }
  return out;
}

PageResult extract_page(std::string_view title, std::string_view wikitext,
                        const DumpOptions& options) {
  PageResult result;
  const auto section = find_language_section(wikitext, options.language);
  if (!section) {
    result.outcome = PageOutcome::kNoLanguage;
    return result;
  }
  result.outcome = PageOutcome::kSkipped;
  result.skip.title = std::string(title);
  try {
    result.entry.headword = normalize_headword(title);
  } catch (const ValidationError& e) {
    result.skip.reason = std::string("invalid title: ") + e.what();
    return result;
  }

  const auto raw = extract_ipa(*section, options.pronunciation_templates);
  if (raw.empty()) {
    result.skip.reason = "no pronunciation";
    return result;
  }
  std::string first_error;
  for (const auto& r : raw) {
    try {
      append_unique(result.entry.pronunciations,
                    IpaString::parse(clean_pronunciation(r)));
    } catch (const ValidationError& e) {
      if (first_error.empty()) first_error = e.what();
    }
  }
  if (result.entry.pronunciations.empty()) {
    result.skip.reason = "invalid pronunciation: " + first_error;
    return result;
  }
  result.entry.glosses = extract_glosses(*section);
  result.outcome = PageOutcome::kEntry;
  return result;
}

namespace {

struct RawPage {
  std::string title;
  std::string ns;
  std::string text;
};

class DumpReader {
 public:
  DumpReader(const DumpOptions& options,
             const std::function<void(DictEntry&&)>& on_entry,
             const std::function<void(const SkipRecord&)>& on_skip)
      : options_(options),
        on_entry_(on_entry),
        on_skip_(on_skip),
        batch_limit_(options.workers <= 1 ? 1 : options.workers * 16),
        parser_(XML_ParserCreate("UTF-8")) {
    if (parser_ == nullptr) {
      throw Error(ErrorKind::kInternal, "cannot create XML parser");
    }
    XML_SetUserData(parser_, this);
    XML_SetElementHandler(parser_, &DumpReader::on_start, &DumpReader::on_end);
    XML_SetCharacterDataHandler(parser_, &DumpReader::on_chars);
  }
  ~DumpReader() { XML_ParserFree(parser_); }
  DumpReader(const DumpReader&) = delete;
  DumpReader& operator=(const DumpReader&) = delete;

  DumpStats run(std::istream& source) {
    std::vector<char> buffer(1 << 20);
    while (true) {
      source.read(buffer.data(), static_cast<std::streamsize>(buffer.size()));
      const auto got = static_cast<int>(source.gcount());
      const bool last = got == 0 || source.eof();
      if (XML_Parse(parser_, buffer.data(), got, last ? 1 : 0) ==
          XML_STATUS_ERROR) {
        if (pending_error_) std::rethrow_exception(pending_error_);
        throw XmlParseError(
            static_cast<std::int64_t>(XML_GetCurrentByteIndex(parser_)),
            XML_ErrorString(XML_GetErrorCode(parser_)));
      }
      if (last) break;
    }
    flush();
    return stats_;
  }

 private:
  static void on_start(void* data, const XML_Char* name, const XML_Char**) {
    auto* self = static_cast<DumpReader*>(data);
    const std::string_view tag(name);
    if (tag == "page") {
      self->in_page_ = true;
      self->page_ = RawPage{};
    } else if (!self->in_page_) {
      return;
    } else if (tag == "revision") {
      ++self->revision_depth_;
    } else if (tag == "title" && self->revision_depth_ == 0) {
      self->capture_ = &self->page_.title;
    } else if (tag == "ns" && self->revision_depth_ == 0) {
      self->capture_ = &self->page_.ns;
    } else if (tag == "text" && self->revision_depth_ > 0) {
      self->page_.text.clear();  // last revision wins
      self->capture_ = &self->page_.text;
    }
  }

  static void on_end(void* data, const XML_Char* name) {
    auto* self = static_cast<DumpReader*>(data);
    const std::string_view tag(name);
    self->capture_ = nullptr;
    if (tag == "revision" && self->revision_depth_ > 0) {
      --self->revision_depth_;
    } else if (tag == "page" && self->in_page_) {
      self->in_page_ = false;
      self->batch_.push_back(std::move(self->page_));
      if (self->batch_.size() >= self->batch_limit_) {
        try {
          self->flush();
        } catch (...) {
          self->pending_error_ = std::current_exception();
          XML_StopParser(self->parser_, XML_FALSE);
        }
      }
    }
  }

  static void on_chars(void* data, const XML_Char* s, int len) {
    auto* self = static_cast<DumpReader*>(data);
    if (self->capture_ != nullptr) {
      self->capture_->append(s, static_cast<std::size_t>(len));
    }
  }

  void flush() {
    std::vector<PageResult> results(batch_.size());
    auto work = [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        const RawPage& p = batch_[i];
        if (!p.ns.empty() && unicode::trim(p.ns) != "0") continue;
        results[i] = extract_page(p.title, p.text, options_);
      }
    };
    const std::size_t workers = std::min(options_.workers, batch_.size());
    if (workers <= 1) {
      work(0, batch_.size());
    } else {
      std::vector<std::jthread> threads;
      const std::size_t chunk = (batch_.size() + workers - 1) / workers;
      for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(batch_.size(), begin + chunk);
        if (begin < end) threads.emplace_back(work, begin, end);
      }
    }
    for (std::size_t i = 0; i < batch_.size(); ++i) {
      ++stats_.pages;
      if (!batch_[i].ns.empty() && unicode::trim(batch_[i].ns) != "0") {
        ++stats_.non_article_pages;
        continue;
      }
      switch (results[i].outcome) {
        case PageOutcome::kNoLanguage:
          ++stats_.without_language;
          break;
        case PageOutcome::kSkipped:
          ++stats_.skipped;
          on_skip_(results[i].skip);
          break;
        case PageOutcome::kEntry:
          ++stats_.entries;
          on_entry_(std::move(results[i].entry));
          break;
      }
    }
    batch_.clear();
  }

  const DumpOptions& options_;
  const std::function<void(DictEntry&&)>& on_entry_;
  const std::function<void(const SkipRecord&)>& on_skip_;
  std::size_t batch_limit_;
  XML_Parser parser_;
  bool in_page_ = false;
  int revision_depth_ = 0;
  std::string* capture_ = nullptr;
  RawPage page_;
  std::vector<RawPage> batch_;
  DumpStats stats_;
  std::exception_ptr pending_error_;
};

std::string escape_gloss(std::string_view gloss) {
  std::string out;
  for (char c : gloss) {
    switch (c) {
      case '\\':
        out += "\\\\";
        break;
      case ';':
        out += "\\;";
        break;
      case '\t':
        out += "\\t";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\r':
        out += "\\r";
        break;
      default:
        out += c;
    }
  }
  return out;
}

}  // namespace

std::string join_glosses(std::span<const std::string> glosses) {
  std::string out;
  for (std::size_t i = 0; i < glosses.size(); ++i) {
    if (i > 0) out += "; ";
    out += escape_gloss(glosses[i]);
  }
  return out;
}

std::vector<std::string> split_glosses(std::string_view field) {
  std::vector<std::string> out;
  std::string current;
  auto finish = [&] {
    std::string g = unicode::trim(current);
    if (!g.empty()) append_unique(out, g);
    current.clear();
  };
  for (std::size_t i = 0; i < field.size(); ++i) {
    const char c = field[i];
    if (c == '\\' && i + 1 < field.size()) {
      const char n = field[++i];
      current += n == 't' ? '\t' : n == 'n' ? '\n' : n == 'r' ? '\r' : n;
    } else if (c == ';') {
      finish();
    } else {
      current += c;
    }
  }
  finish();
  return out;
}

DumpStats parse_dump(std::istream& source, const DumpOptions& options,
                     const std::function<void(DictEntry&&)>& on_entry,
                     const std::function<void(const SkipRecord&)>& on_skip) {
  DumpReader reader(options, on_entry, on_skip);
  return reader.run(source);
}

TsvParseResult parse_tsv(std::istream& source) {
  TsvParseResult result;
  std::unordered_map<std::string, std::size_t> index;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(source, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!unicode::is_valid_utf8(line)) {
      result.errors.push_back({line_no, "ill-formed UTF-8"});
      continue;
    }
    std::vector<std::string_view> fields;
    std::string_view rest(line);
    while (true) {
      const auto tab = rest.find('\t');
      fields.push_back(rest.substr(0, tab));
      if (tab == std::string_view::npos) break;
      rest.remove_prefix(tab + 1);
    }
    if (fields.size() < 2) {
      result.errors.push_back({line_no, "expected at least 2 tab-separated fields"});
      continue;
    }
    if (fields.size() > 3) {
      result.errors.push_back({line_no, "expected at most 3 tab-separated fields"});
      continue;
    }
    DictEntry entry;
    try {
      entry.headword = normalize_headword(fields[0]);
      entry.pronunciations.push_back(IpaString::parse(unicode::trim(fields[1])));
    } catch (const ValidationError& e) {
      result.errors.push_back({line_no, e.what()});
      continue;
    }
    if (fields.size() == 3) {
      for (auto& g : split_glosses(fields[2])) {
        entry.glosses.push_back(unicode::nfc(g));
      }
    }
    const auto [it, inserted] =
        index.try_emplace(entry.headword, result.entries.size());
    if (inserted) {
      result.entries.push_back(std::move(entry));
    } else {
      result.entries[it->second].merge(entry);
    }
  }
  return result;
}

void emit_tsv(std::ostream& out, std::span<const DictEntry> entries) {
  for (const auto& e : entries) {
    const std::string glosses = join_glosses(e.glosses);
    for (const auto& p : e.pronunciations) {
      out << e.headword << '\t' << p.str() << '\t' << glosses << '\n';
    }
  }
}

}  // namespace loanlex
