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

#include "loanlex/pipeline.hpp"

#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <thread>

#include "json.hpp"
#include "loanlex/error.hpp"

namespace loanlex {

Transliterator::Transliterator(RuleSet rules, BuckwalterTable table,
                               bool keep_diacritics)
    : rules_(std::move(rules)),
      table_(std::move(table)),
      syllabifier_(rules_.syllabifier_config()),
      keep_diacritics_(keep_diacritics) {}

CandidateTrace trace_candidate(const IpaString& ipa, const Transliterator& tr) {
  CandidateTrace trace;
  trace.syllables = syllabify(ipa, tr.syllabifier());
  for (const auto& syl : trace.syllables) {
    trace.stages.push_back(trace_syllable(syl.text(), tr.rules()));
    trace.syllable_arabic.push_back(
        bw_to_arabic(trace.stages.back().after_post, tr.table()));
    trace.romanization += trace.stages.back().after_post;
  }
  trace.arabic =
      merge_syllables(trace.syllable_arabic, tr.keep_diacritics(), tr.table());
  if (trace.arabic.empty()) {
    throw ValidationError("empty candidate for '" + ipa.str() + "'");
  }
  return trace;
}

CandidateLoanword generate_candidate(const DictEntry& entry,
                                     std::size_t pron_index,
                                     const Transliterator& tr) {
  if (pron_index >= entry.pronunciations.size()) {
    throw ValidationError("pronunciation index " + std::to_string(pron_index) +
                          " out of range for '" + entry.headword + "'");
  }
  const IpaString& ipa = entry.pronunciations[pron_index];
  CandidateTrace trace = trace_candidate(ipa, tr);
  CandidateLoanword candidate;
  candidate.arabic = std::move(trace.arabic);
  candidate.sources.push_back(Provenance{std::move(trace.romanization),
                                         entry.headword, ipa, entry.glosses});
  return candidate;
}

namespace {

struct PairOutcome {
  std::optional<CandidateLoanword> candidate;
  CandidateSkip skip;
};

std::string skip_category(const std::exception& e) {
  if (dynamic_cast<const NoNucleusError*>(&e)) return "no_nucleus";
  if (dynamic_cast<const UnmappedSegmentError*>(&e)) return "unmapped_segment";
  if (dynamic_cast<const UnknownRomanizationChar*>(&e)) {
    return "unknown_romanization";
  }
  if (dynamic_cast<const ValidationError*>(&e)) return "validation";
  return "error";
}

}  // namespace

GenerationResult generate_all(std::span<const DictEntry> entries,
                              const Transliterator& tr, std::size_t workers) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t e = 0; e < entries.size(); ++e) {
    for (std::size_t p = 0; p < entries[e].pronunciations.size(); ++p) {
      pairs.emplace_back(e, p);
    }
  }

  std::vector<PairOutcome> outcomes(pairs.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const auto [e, p] = pairs[i];
      try {
        outcomes[i].candidate = generate_candidate(entries[e], p, tr);
      } catch (const Error& err) {
        outcomes[i].skip = CandidateSkip{entries[e].headword,
                                         entries[e].pronunciations[p].str(),
                                         skip_category(err), err.what()};
      }
    }
  };
  workers = std::max<std::size_t>(1, std::min(workers, pairs.size()));
  if (workers == 1) {
    work(0, pairs.size());
  } else {
    std::vector<std::jthread> threads;
    const std::size_t chunk = (pairs.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(pairs.size(), begin + chunk);
      if (begin < end) threads.emplace_back(work, begin, end);
    }
  }

  GenerationResult result;
  result.stats.pairs = pairs.size();
  std::map<std::string, CandidateLoanword> by_arabic;
  std::set<std::string> stripped;
  std::set<std::string> with_diacritics;
  for (auto& outcome : outcomes) {
    if (!outcome.candidate) {
      result.skips.push_back(std::move(outcome.skip));
      continue;
    }
    CandidateLoanword& c = *outcome.candidate;
    const ArabicString full = bw_to_arabic(c.romanization(), tr.table());
    with_diacritics.insert(full.str());
    stripped.insert(strip_diacritics(full, tr.table()).str());
    auto [it, inserted] = by_arabic.try_emplace(c.arabic.str(), c);
    if (!inserted) {
      for (auto& src : c.sources) it->second.sources.push_back(std::move(src));
    }
  }
  result.stats.skipped = result.skips.size();
  result.stats.unique_candidates = by_arabic.size();
  result.stats.unique_stripped = stripped.size();
  result.stats.unique_with_diacritics = with_diacritics.size();
  result.candidates.reserve(by_arabic.size());
  for (auto& [key, c] : by_arabic) result.candidates.push_back(std::move(c));
  return result;
}

void write_candidates_tsv(std::ostream& out,
                          std::span<const CandidateLoanword> candidates) {
  for (const auto& c : candidates) {
    for (const auto& src : c.sources) {
      out << c.arabic.str() << '\t' << src.romanization << '\t' << src.headword
          << '\t' << src.ipa.str() << '\t' << join_glosses(src.glosses) << '\n';
    }
  }
}

std::vector<CandidateLoanword> read_candidates_tsv(std::istream& in) {
  std::vector<CandidateLoanword> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const auto tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (fields.size() != 5) {
      throw SyntaxError(line_no, 1, "candidate line needs 5 fields");
    }
    if (fields[0].empty()) throw SyntaxError(line_no, 1, "empty candidate");
    std::optional<IpaString> ipa;
    try {
      ipa = IpaString::parse(fields[3]);
    } catch (const ValidationError& e) {
      throw SyntaxError(line_no, 1, e.what());
    }
    Provenance src{fields[1], fields[2], *ipa, split_glosses(fields[4])};
    if (out.empty() || out.back().arabic.str() != fields[0]) {
      out.push_back(CandidateLoanword{ArabicString(fields[0]), {}});
    }
    out.back().sources.push_back(std::move(src));
  }
  return out;
}

void write_candidate_skips_jsonl(std::ostream& out,
                                 std::span<const CandidateSkip> skips) {
  for (const auto& s : skips) {
    nlohmann::ordered_json j;
    j["headword"] = s.headword;
    j["ipa"] = s.ipa;
    j["category"] = s.category;
    j["detail"] = s.detail;
    out << j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace)
        << '\n';
  }
}

}  // namespace loanlex
