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

#ifndef LOANLEX_SYLLABIFY_HPP_
#define LOANLEX_SYLLABIFY_HPP_

#include <set>
#include <span>
#include <string>
#include <vector>

#include "loanlex/ipa.hpp"

namespace loanlex {

struct Syllable {
  std::vector<std::string> segments;

  std::string text() const;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

// Inventory and onset policy for automatic syllabification. Anything that
// is not a vowel counts as a consonant.
struct SyllabifierConfig {
  SegmentSet vowels;
  // Two-consonant onsets are legal when the first segment is an obstruent and
  // the second a liquid.
  SegmentSet obstruents;
  SegmentSet liquids;
  // Additional legal multi-consonant onsets, written as segment sequences.
  std::set<std::vector<std::string>> extra_onsets;

  bool is_vowel(const std::string& segment) const {
    return vowels.contains(segment);
  }
  bool is_legal_onset(std::span<const std::string> cluster) const;

  // French-oriented defaults, used when a rule file declares no inventory.
  static SyllabifierConfig defaults();
};

// Splits on explicit `.` markers. Requires at least one marker.
std::vector<Syllable> split_marked(const IpaString& ipa);

// Onset-maximizing segmentation of unmarked input. A maximal run of vowel
// segments forms one nucleus; throws NoNucleusError when there is none.
std::vector<Syllable> auto_syllabify(const IpaString& ipa,
                                     const SyllabifierConfig& config);

// split_marked when the input carries markers, auto_syllabify otherwise.
std::vector<Syllable> syllabify(const IpaString& ipa,
                                const SyllabifierConfig& config);

std::string join_syllables(const std::vector<Syllable>& syllables,
                           std::string_view separator = ".");

}  // namespace loanlex

#endif  // LOANLEX_SYLLABIFY_HPP_
