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

#include "loanlex/syllabify.hpp"

#include "loanlex/error.hpp"

namespace loanlex {

std::string Syllable::text() const {
  std::string out;
  for (const auto& seg : segments) out += seg;
  return out;
}

bool SyllabifierConfig::is_legal_onset(
    std::span<const std::string> cluster) const {
  if (cluster.empty()) return true;
  if (cluster.size() == 1) return !is_vowel(cluster[0]);
  if (cluster.size() == 2 && obstruents.contains(cluster[0]) &&
      liquids.contains(cluster[1])) {
    return true;
  }
  return extra_onsets.contains(
      std::vector<std::string>(cluster.begin(), cluster.end()));
}

SyllabifierConfig SyllabifierConfig::defaults() {
  SyllabifierConfig config;
  config.vowels = SegmentSet({"a", "e", "i", "o", "u", "y", "ɑ", "ɛ", "ɔ", "ə",
                              "œ", "ø", "ɪ", "ʊ", "æ", "ɐ", "ɒ", "ʌ", "ɜ"});
  config.obstruents =
      SegmentSet({"p", "b", "t", "d", "k", "g", "ɡ", "f", "v", "s", "z", "ʃ",
                  "ʒ"});
  config.liquids = SegmentSet({"l", "r", "ʁ"});
  return config;
}

std::vector<Syllable> split_marked(const IpaString& ipa) {
  std::vector<Syllable> out(1);
  for (auto& seg : split_segments(ipa.str())) {
    if (seg == ".") {
      out.emplace_back();
    } else {
      out.back().segments.push_back(std::move(seg));
    }
  }
  for (const auto& syl : out) {
    if (syl.segments.empty()) {
      throw ValidationError("empty syllable in '" + ipa.str() + "'");
    }
  }
  return out;
}

std::vector<Syllable> auto_syllabify(const IpaString& ipa,
                                     const SyllabifierConfig& config) {
  const std::vector<std::string> segs = split_segments(ipa.str());

  // Nuclei as [begin, end) runs of vowel segments.
  std::vector<std::pair<std::size_t, std::size_t>> nuclei;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (segs[i] == ".") {
      throw ValidationError("auto_syllabify expects unmarked input: '" +
                            ipa.str() + "'");
    }
    if (!config.is_vowel(segs[i])) continue;
    if (!nuclei.empty() && nuclei.back().second == i) {
      nuclei.back().second = i + 1;
    } else {
      nuclei.emplace_back(i, i + 1);
    }
  }
  if (nuclei.empty()) throw NoNucleusError(ipa.str());

  // Syllable k starts at starts[k]. The first absorbs any leading consonants;
  // later ones take the longest legal onset from the preceding cluster.
  std::vector<std::size_t> starts{0};
  for (std::size_t k = 1; k < nuclei.size(); ++k) {
    const std::size_t cluster_begin = nuclei[k - 1].second;
    const std::size_t cluster_end = nuclei[k].first;
    std::size_t onset_begin = cluster_end;
    for (std::size_t b = cluster_begin; b < cluster_end; ++b) {
      const std::span<const std::string> cluster(segs.data() + b,
                                                 cluster_end - b);
      if (config.is_legal_onset(cluster)) {
        onset_begin = b;
        break;
      }
    }
    starts.push_back(onset_begin);
  }

  std::vector<Syllable> out;
  out.reserve(starts.size());
  for (std::size_t k = 0; k < starts.size(); ++k) {
    const std::size_t end = k + 1 < starts.size() ? starts[k + 1] : segs.size();
    out.push_back(Syllable{std::vector<std::string>(
        segs.begin() + static_cast<std::ptrdiff_t>(starts[k]),
        segs.begin() + static_cast<std::ptrdiff_t>(end))});
  }
  return out;
}

std::vector<Syllable> syllabify(const IpaString& ipa,
                                const SyllabifierConfig& config) {
  return ipa.has_markers() ? split_marked(ipa) : auto_syllabify(ipa, config);
}

std::string join_syllables(const std::vector<Syllable>& syllables,
                           std::string_view separator) {
  std::string out;
  for (std::size_t i = 0; i < syllables.size(); ++i) {
    if (i > 0) out += separator;
    out += syllables[i].text();
  }
  return out;
}

}  // namespace loanlex
