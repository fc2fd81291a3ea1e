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

#ifndef LOANLEX_CLI_CONFIG_HPP_
#define LOANLEX_CLI_CONFIG_HPP_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "loanlex/corpus_match.hpp"
#include "loanlex/lexicon.hpp"

namespace loanlex::cli {

namespace fs = std::filesystem;

enum class DictFormat { kXml, kTsv };

// Unset optional paths fall back to the built-in data files.
struct RunConfig {
  std::optional<fs::path> dict;
  std::optional<DictFormat> dict_format;  // unset: inferred from extension
  std::string language = "French";
  std::optional<fs::path> rules;
  std::optional<fs::path> bw_table;
  std::optional<fs::path> corpus;
  std::optional<fs::path> stoplist;
  fs::path out_dir = "loanlex_out";
  bool keep_diacritics = false;
  std::size_t min_letters = 4;
  NormalizeOptions normalize;
  std::size_t sample_n = 0;
  std::uint64_t seed = 0;
  GlossMode gloss_mode = GlossMode::kAll;
  std::size_t workers = 1;

  DictFormat effective_dict_format() const;

  // Settings that can change outputs. Omits out_dir and workers.
  nlohmann::ordered_json to_json() const;
};

// key -> raw value, keys being flag names without the leading dashes.
using Settings = std::map<std::string, std::string>;
using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

inline constexpr const char* kEnvPrefix = "LOANLEX_";

// Every key accepted from flags, environment and config files.
const std::vector<std::string>& setting_keys();
bool is_path_key(const std::string& key);

// `LOANLEX_` + key uppercased with '-' as '_'.
std::string env_name(const std::string& key);

EnvLookup process_env();
Settings settings_from_env(const EnvLookup& env);

// Flat `key = value` lines; `#` comments and blank lines ignored. Relative
// path values are resolved against the file's directory.
// Throws Error(kConfig) or Error(kIo).
Settings parse_config_file(const fs::path& path);

// Layers settings so that later layers win, then converts and validates
// values. Throws Error(kConfig).
RunConfig resolve_config(const Settings& file, const Settings& env,
                         const Settings& flags);

// Throws Error(kConfig) when `path` is unset or does not name a regular file.
void require_file(const std::optional<fs::path>& path, const std::string& key);
// Throws Error(kConfig) when `path` is set but does not name a regular file.
void check_optional_file(const std::optional<fs::path>& path,
                         const std::string& key);

}  // namespace loanlex::cli

#endif  // LOANLEX_CLI_CONFIG_HPP_
