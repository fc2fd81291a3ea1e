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

#include "loanlex/corpus_match.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <limits>
#include <ostream>
#include <thread>
#include <unordered_map>

#include "loanlex/error.hpp"
#include "loanlex/unicode.hpp"

namespace loanlex {

namespace {

constexpr char32_t kTatweel = 0x0640;
constexpr char32_t kAlef = 0x0627;
constexpr char32_t kYa = 0x064A;
constexpr char32_t kAlefMaqsura = 0x0649;

bool is_alef_variant(char32_t cp) {
  return cp == 0x0622 || cp == 0x0623 || cp == 0x0625;
}

// Raw token boundaries of a line, punctuation trimmed, empties dropped.
template <typename Fn>
void for_each_raw_token(std::string_view line, Fn&& fn) {
  std::size_t pos = 0;
  while (pos < line.size()) {
    // Skip whitespace.
    std::size_t start = pos;
    char32_t cp = 0;
    while (pos < line.size()) {
      start = pos;
      if (!unicode::decode_next(line, pos, cp)) cp = unicode::kReplacement;
      if (!unicode::is_whitespace(cp)) break;
      start = pos;
    }
    if (start >= line.size()) break;
    // Token runs to the next whitespace; track the last non-punct codepoint.
    std::size_t first_kept = std::string_view::npos;
    std::size_t last_kept_end = start;
    std::size_t cursor = start;
    while (cursor < line.size()) {
      const std::size_t at = cursor;
      if (!unicode::decode_next(line, cursor, cp)) cp = unicode::kReplacement;
      if (unicode::is_whitespace(cp)) {
        cursor = at;
        break;
      }
      if (!unicode::is_punct_or_symbol(cp)) {
        if (first_kept == std::string_view::npos) first_kept = at;
        last_kept_end = cursor;
      }
    }
    if (first_kept != std::string_view::npos) {
      fn(line.substr(first_kept, last_kept_end - first_kept));
    }
    pos = cursor;
  }
}

struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const noexcept {
    return std::hash<std::string_view>{}(s);
  }
};

using CandidateIndex = std::unordered_map<std::string, std::vector<std::uint32_t>,
                                          StringHash, std::equal_to<>>;

struct WorkerState {
  std::vector<std::uint64_t> counts;
  std::vector<std::pair<std::uint32_t, Location>> hits;  // block-local
  std::uint64_t tokens = 0;
  std::uint64_t skipped = 0;
  std::string scratch;
};

void scan_lines(std::span<const std::string> lines, std::uint64_t first_line_no,
                const CandidateIndex& index, const ScanOptions& options,
                WorkerState& state) {
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (!unicode::is_valid_utf8(line)) {
      ++state.skipped;
      continue;
    }
    std::uint32_t token_index = 0;
    for_each_raw_token(line, [&](std::string_view token) {
      std::string_view key = token;
      if (options.normalize.any()) {
        state.scratch = normalize_token(token, options.normalize);
        key = state.scratch;
      }
      if (const auto it = index.find(key); it != index.end()) {
        for (std::uint32_t c : it->second) {
          ++state.counts[c];
          if (options.retain_locations) {
            state.hits.emplace_back(c, Location{first_line_no + i, token_index});
          }
        }
      }
      ++token_index;
    });
    state.tokens += token_index;
  }
}

}  // namespace

NormalizeOptions NormalizeOptions::parse(std::string_view names) {
  NormalizeOptions options;
  std::size_t start = 0;
  while (start <= names.size()) {
    std::size_t comma = names.find(',', start);
    if (comma == std::string_view::npos) comma = names.size();
    const std::string_view part = names.substr(start, comma - start);
    if (part == "none" || part.empty()) {
    } else if (part == "alef") {
      options.unify_alef = true;
    } else if (part == "tatweel") {
      options.strip_tatweel = true;
    } else if (part == "ya") {
      options.unify_ya = true;
    } else if (part == "all") {
      options = {true, true, true};
    } else {
      throw Error(ErrorKind::kConfig,
                  "unknown normalization '" + std::string(part) + "'");
    }
    start = comma + 1;
  }
  return options;
}

std::string NormalizeOptions::name() const {
  if (strip_tatweel && unify_alef && unify_ya) return "all";
  std::string out;
  auto add = [&](const char* n) {
    if (!out.empty()) out += ',';
    out += n;
  };
  if (unify_alef) add("alef");
  if (strip_tatweel) add("tatweel");
  if (unify_ya) add("ya");
  return out.empty() ? "none" : out;
}

std::string normalize_token(std::string_view token,
                            const NormalizeOptions& options) {
  if (!options.any()) return std::string(token);
  std::string out;
  out.reserve(token.size());
  std::size_t pos = 0;
  while (pos < token.size()) {
    const std::size_t start = pos;
    char32_t cp;
    if (!unicode::decode_next(token, pos, cp)) {
      out.append(token.substr(start, pos - start));
      continue;
    }
    if (options.strip_tatweel && cp == kTatweel) continue;
    if (options.unify_alef && is_alef_variant(cp)) cp = kAlef;
    if (options.unify_ya && cp == kAlefMaqsura) cp = kYa;
    unicode::append_utf8(out, cp);
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view line,
                                  const NormalizeOptions& options) {
  std::vector<std::string> out;
  for_each_raw_token(line, [&](std::string_view token) {
    std::string t = normalize_token(token, options);
    if (!t.empty()) out.push_back(std::move(t));
  });
  return out;
}

nlohmann::ordered_json CorpusStats::to_json() const {
  nlohmann::ordered_json j;
  j["lines"] = lines;
  j["skipped_lines"] = skipped_lines;
  j["total_tokens"] = total_tokens;
  j["candidate_types_found"] = candidate_types_found;
  j["candidate_instances"] = candidate_instances;
  j["filter_stages"] = nlohmann::ordered_json::array();
  for (const auto& s : stages) {
    nlohmann::ordered_json stage;
    stage["stage"] = s.stage;
    stage["types"] = s.types;
    stage["instances"] = s.instances;
    j["filter_stages"].push_back(stage);
  }
  return j;
}

ScanResult scan(std::istream& corpus, std::span<const ArabicString> candidates,
                const ScanOptions& options) {
  if (candidates.empty()) {
    throw ValidationError("candidate set is empty");
  }
  CandidateIndex index;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    index[normalize_token(candidates[c].str(), options.normalize)].push_back(
        static_cast<std::uint32_t>(c));
  }

  const std::size_t workers = std::max<std::size_t>(1, options.workers);
  std::vector<WorkerState> states(workers);
  for (auto& s : states) s.counts.assign(candidates.size(), 0);
  std::vector<std::vector<Location>> locations(
      options.retain_locations ? candidates.size() : 0);

  ScanResult result;
  std::vector<std::string> block;
  block.reserve(options.block_lines);
  std::uint64_t next_line_no = 1;
  std::string line;
  bool more = true;
  while (more) {
    block.clear();
    while (block.size() < options.block_lines && std::getline(corpus, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      block.push_back(std::move(line));
    }
    more = block.size() == options.block_lines;
    if (block.empty()) break;

    const std::size_t active = std::min(workers, block.size());
    const std::size_t chunk = (block.size() + active - 1) / active;
    auto run = [&](std::size_t w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(block.size(), begin + chunk);
      if (begin >= end) return;
      scan_lines(std::span<const std::string>(block).subspan(begin, end - begin),
                 next_line_no + begin, index, options, states[w]);
    };
    if (active == 1) {
      run(0);
    } else {
      std::vector<std::jthread> threads;
      for (std::size_t w = 0; w < active; ++w) threads.emplace_back(run, w);
    }
    // Worker ranges are contiguous and ascending, so appending in worker
    // order keeps every candidate's locations sorted.
    for (std::size_t w = 0; w < active; ++w) {
      for (const auto& [c, loc] : states[w].hits) locations[c].push_back(loc);
      states[w].hits.clear();
    }
    result.stats.lines += block.size();
    next_line_no += block.size();
  }

  std::vector<std::uint64_t> counts(candidates.size(), 0);
  for (const auto& s : states) {
    for (std::size_t c = 0; c < counts.size(); ++c) counts[c] += s.counts[c];
    result.stats.total_tokens += s.tokens;
    result.stats.skipped_lines += s.skipped;
  }

  std::vector<std::size_t> order(candidates.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return candidates[a] < candidates[b];
  });
  for (std::size_t c : order) {
    if (counts[c] == 0) continue;
    MatchReport report{candidates[c], counts[c], {}};
    if (options.retain_locations) report.locations = std::move(locations[c]);
    result.stats.candidate_instances += counts[c];
    result.reports.push_back(std::move(report));
  }
  result.stats.candidate_types_found = result.reports.size();
  result.stats.stages.push_back(
      {"found", result.stats.candidate_types_found,
       result.stats.candidate_instances});
  return result;
}

std::size_t arabic_letter_count(std::string_view text) {
  std::size_t n = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    char32_t cp;
    if (!unicode::decode_next(text, pos, cp) || !unicode::is_combining_mark(cp)) {
      ++n;
    }
  }
  return n;
}

bool meets_min_letters(const ArabicString& candidate, std::size_t min_letters) {
  return arabic_letter_count(candidate.str()) >= min_letters;
}

std::vector<ArabicString> filter_length(std::span<const ArabicString> candidates,
                                        std::size_t min_letters) {
  std::vector<ArabicString> out;
  for (const auto& c : candidates) {
    if (meets_min_letters(c, min_letters)) out.push_back(c);
  }
  return out;
}

Stoplist::Stoplist(std::vector<std::string> words)
    : words_(words.begin(), words.end()) {}

Stoplist Stoplist::parse(std::istream& in) {
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    const std::string word = unicode::trim(line);
    if (word.empty() || word[0] == '#') continue;
    words.push_back(unicode::nfc(word));
  }
  return Stoplist(std::move(words));
}

std::vector<ArabicString> filter_stopwords(
    std::span<const ArabicString> candidates, const Stoplist& stoplist) {
  std::vector<ArabicString> out;
  for (const auto& c : candidates) {
    if (!stoplist.contains(c)) out.push_back(c);
  }
  return out;
}

std::vector<MatchReport> filter_reports(std::vector<MatchReport> reports,
                                        std::size_t min_letters,
                                        const Stoplist& stoplist,
                                        CorpusStats& stats) {
  auto record = [&](const char* name) {
    FilterStage stage{name, reports.size(), 0};
    for (const auto& r : reports) stage.instances += r.instance_count;
    stats.stages.push_back(stage);
  };
  std::erase_if(reports, [&](const MatchReport& r) {
    return !meets_min_letters(r.candidate, min_letters);
  });
  record("min_letters");
  std::erase_if(reports, [&](const MatchReport& r) {
    return stoplist.contains(r.candidate);
  });
  record("stopwords");
  return reports;
}

std::uint64_t SampleRng::below(std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorKind::kInternal, "empty sampling range");
  const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  while (true) {
    const std::uint64_t word = engine_();
    if (word >= threshold) return word % bound;
  }
}

std::string_view to_string(OriginLabel label) {
  switch (label) {
    case OriginLabel::kUnlabeled:
      return "";
    case OriginLabel::kArabic:
      return "A";
    case OriginLabel::kFrench:
      return "F";
    case OriginLabel::kUnsure:
      return "U";
  }
  return "";
}

OriginLabel parse_origin_label(std::string_view text) {
  if (text.empty()) return OriginLabel::kUnlabeled;
  if (text == "A") return OriginLabel::kArabic;
  if (text == "F") return OriginLabel::kFrench;
  if (text == "U") return OriginLabel::kUnsure;
  throw ValidationError("label must be A, F, U or empty, got '" +
                        std::string(text) + "'");
}

AnnotationSample sample_instances(std::span<const MatchReport> reports,
                                  std::size_t n, std::uint64_t seed) {
  struct Instance {
    Location loc;
    std::size_t report;
  };
  std::vector<Instance> instances;
  for (std::size_t r = 0; r < reports.size(); ++r) {
    for (const auto& loc : reports[r].locations) instances.push_back({loc, r});
  }
  if (n > instances.size()) {
    throw Error(ErrorKind::kSample,
                "sample size " + std::to_string(n) + " exceeds the " +
                    std::to_string(instances.size()) + " available instances");
  }
  auto before = [&](const Instance& a, const Instance& b) {
    if (a.loc != b.loc) return a.loc < b.loc;
    return reports[a.report].candidate < reports[b.report].candidate;
  };
  std::sort(instances.begin(), instances.end(), before);

  SampleRng rng(seed);
  const std::size_t total = instances.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(total - i));
    std::swap(instances[i], instances[j]);
  }
  instances.resize(n);
  std::sort(instances.begin(), instances.end(), before);

  AnnotationSample sample;
  sample.rows.reserve(n);
  for (const auto& inst : instances) {
    sample.rows.push_back(SampleRow{reports[inst.report].candidate,
                                    inst.loc.line, inst.loc.token, {},
                                    OriginLabel::kUnlabeled});
  }
  return sample;
}

void attach_context(std::istream& corpus, AnnotationSample& sample,
                    std::size_t window) {
  std::size_t next = 0;
  std::uint64_t line_no = 0;
  std::string line;
  while (next < sample.rows.size() && std::getline(corpus, line)) {
    ++line_no;
    if (sample.rows[next].line != line_no) continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::vector<std::string> tokens = tokenize(line);
    for (; next < sample.rows.size() && sample.rows[next].line == line_no;
         ++next) {
      SampleRow& row = sample.rows[next];
      const std::size_t t = row.token_index;
      const std::size_t begin = t >= window ? t - window : 0;
      const std::size_t end = std::min(tokens.size(), t + window + 1);
      row.context.clear();
      for (std::size_t k = begin; k < end; ++k) {
        if (!row.context.empty()) row.context += ' ';
        row.context += tokens[k];
      }
    }
  }
}

namespace {

void write_csv_field(std::ostream& out, std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    out << field;
    return;
  }
  out << '"';
  for (char c : field) {
    if (c == '"') out << '"';
    out << c;
  }
  out << '"';
}

}  // namespace

void write_sample_csv(std::ostream& out, const AnnotationSample& sample) {
  out << "candidate,line,token_index,context,label\n";
  for (const auto& row : sample.rows) {
    write_csv_field(out, row.candidate.str());
    out << ',' << row.line << ',' << row.token_index << ',';
    write_csv_field(out, row.context);
    out << ',' << to_string(row.label) << '\n';
  }
}

void write_match_tsv(std::ostream& out, std::span<const MatchReport> reports) {
  for (const auto& r : reports) {
    out << r.candidate.str() << '\t' << r.instance_count << '\n';
  }
}

std::vector<MatchReport> read_match_tsv(std::istream& in) {
  std::vector<MatchReport> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    std::uint64_t count = 0;
    const char* first = line.data() + (tab == std::string::npos ? 0 : tab + 1);
    const char* last = line.data() + line.size();
    if (tab == std::string::npos || tab == 0 ||
        std::from_chars(first, last, count).ptr != last) {
      throw SyntaxError(line_no, 1, "expected 'arabic<TAB>count'");
    }
    out.push_back(MatchReport{ArabicString(line.substr(0, tab)), count, {}});
  }
  return out;
}

}  // namespace loanlex
