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

#ifndef LOANLEX_CLI_COMMANDS_HPP_
#define LOANLEX_CLI_COMMANDS_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "loanlex/cli/config.hpp"
#include "loanlex/error.hpp"

namespace loanlex::cli {

// Stages read earlier artifacts from out_dir and write their own there:
//   extract     dict.tsv, extract_skips.jsonl, extract_stats.json
//   candidates  candidates.tsv, candidates_skips.jsonl, candidates_stats.json
//   match       matches.tsv, matches_filtered.tsv, match_stats.json
//   sample      annotation_sample.csv
//   lexicon     lexicon.tsv, lexicon.src, lexicon.tgt, lexicon_stats.json
// Each also writes manifest.<stage>.json.
enum class Stage { kExtract, kCandidates, kMatch, kSample, kLexicon };

std::string_view stage_name(Stage stage);

void run_stage(Stage stage, const RunConfig& config, std::ostream& log);

// extract, candidates, match, sample (when sample_n > 0), lexicon.
void run_pipeline(const RunConfig& config, std::ostream& log);

// Parses and round-trips a rule file and checks that every romanization
// character it can produce is in the Buckwalter table. Returns diagnostics.
std::vector<std::string> check_rules(const RunConfig& config);

int exit_code(ErrorKind kind);

// Entry point. `args` excludes the program name. Failures print a single
// `loanlex: error[<category>]: <detail>` line to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err, const EnvLookup& env = process_env());

}  // namespace loanlex::cli

#endif  // LOANLEX_CLI_COMMANDS_HPP_
