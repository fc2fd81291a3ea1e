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

#include "loanlex/cli/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <thread>

#include "loanlex/error.hpp"
#include "loanlex/unicode.hpp"

namespace loanlex::cli {

namespace {

Error config_error(const std::string& message) {
  return Error(ErrorKind::kConfig, message);
}

std::uint64_t parse_unsigned(const std::string& key, const std::string& value) {
  std::uint64_t out = 0;
  const char* first = value.data();
  const char* last = value.data() + value.size();
  if (!value.empty() && value[0] == '-') {
    throw config_error(key + " must be non-negative, got '" + value + "'");
  }
  const auto [ptr, ec] = std::from_chars(first, last, out);
  if (value.empty() || ec != std::errc() || ptr != last) {
    throw config_error(key + " must be an integer, got '" + value + "'");
  }
  return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
  std::string v = value;
  std::transform(v.begin(), v.end(), v.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw config_error(key + " must be true or false, got '" + value + "'");
}

}  // namespace

DictFormat RunConfig::effective_dict_format() const {
  if (dict_format) return *dict_format;
  return dict && dict->extension() == ".xml" ? DictFormat::kXml
                                             : DictFormat::kTsv;
}

nlohmann::ordered_json RunConfig::to_json() const {
  nlohmann::ordered_json j;
  j["dict_format"] =
      effective_dict_format() == DictFormat::kXml ? "xml" : "tsv";
  j["language"] = language;
  j["keep_diacritics"] = keep_diacritics;
  j["min_letters"] = min_letters;
  j["normalize"] = normalize.name();
  j["sample_n"] = sample_n;
  j["seed"] = seed;
  j["gloss_mode"] = std::string(to_string(gloss_mode));
  return j;
}

const std::vector<std::string>& setting_keys() {
  static const std::vector<std::string> keys = {
      "dict",      "dict-format", "language",        "rules",
      "bw-table",  "corpus",      "stoplist",        "min-letters",
      "keep-diacritics", "normalize", "sample-n",    "seed",
      "gloss-mode", "out-dir",    "workers"};
  return keys;
}

bool is_path_key(const std::string& key) {
  return key == "dict" || key == "rules" || key == "bw-table" ||
         key == "corpus" || key == "stoplist" || key == "out-dir";
}

std::string env_name(const std::string& key) {
  std::string name = kEnvPrefix;
  for (char c : key) {
    name += c == '-' ? '_' : static_cast<char>(std::toupper(
                                 static_cast<unsigned char>(c)));
  }
  return name;
}

EnvLookup process_env() {
  return [](const std::string& name) -> std::optional<std::string> {
    if (const char* v = std::getenv(name.c_str())) return std::string(v);
    return std::nullopt;
  };
}

Settings settings_from_env(const EnvLookup& env) {
  Settings out;
  for (const auto& key : setting_keys()) {
    if (auto v = env(env_name(key))) out[key] = *v;
  }
  return out;
}

Settings parse_config_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::kIo, "cannot open config file " + path.string());
  }
  const std::vector<std::string>& keys = setting_keys();
  Settings out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string trimmed = unicode::trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    const auto eq = trimmed.find('=');
    const std::string where = path.string() + ":" + std::to_string(line_no);
    if (eq == std::string::npos) {
      throw config_error(where + ": expected 'key = value'");
    }
    const std::string key = unicode::trim(trimmed.substr(0, eq));
    std::string value = unicode::trim(trimmed.substr(eq + 1));
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw config_error(where + ": unknown key '" + key + "'");
    }
    if (is_path_key(key) && !value.empty() && fs::path(value).is_relative()) {
      value = (path.parent_path() / value).lexically_normal().string();
    }
    out[key] = value;
  }
  return out;
}

RunConfig resolve_config(const Settings& file, const Settings& env,
                         const Settings& flags) {
  Settings merged = file;
  for (const auto& [k, v] : env) merged[k] = v;
  for (const auto& [k, v] : flags) merged[k] = v;

  RunConfig config;
  config.workers = std::max(1u, std::thread::hardware_concurrency());
  for (const auto& [key, value] : merged) {
    if (key == "dict") {
      config.dict = value;
    } else if (key == "dict-format") {
      if (value == "xml") {
        config.dict_format = DictFormat::kXml;
      } else if (value == "tsv") {
        config.dict_format = DictFormat::kTsv;
      } else {
        throw config_error("dict-format must be xml or tsv, got '" + value +
                           "'");
      }
    } else if (key == "language") {
      if (value.empty()) throw config_error("language must not be empty");
      config.language = value;
    } else if (key == "rules") {
      config.rules = value;
    } else if (key == "bw-table") {
      config.bw_table = value;
    } else if (key == "corpus") {
      config.corpus = value;
    } else if (key == "stoplist") {
      config.stoplist = value;
    } else if (key == "out-dir") {
      if (value.empty()) throw config_error("out-dir must not be empty");
      config.out_dir = value;
    } else if (key == "keep-diacritics") {
      config.keep_diacritics = parse_bool(key, value);
    } else if (key == "min-letters") {
      config.min_letters = parse_unsigned(key, value);
    } else if (key == "normalize") {
      config.normalize = NormalizeOptions::parse(value);
    } else if (key == "sample-n") {
      config.sample_n = parse_unsigned(key, value);
    } else if (key == "seed") {
      config.seed = parse_unsigned(key, value);
    } else if (key == "gloss-mode") {
      config.gloss_mode = parse_gloss_mode(value);
    } else if (key == "workers") {
      config.workers = parse_unsigned(key, value);
      if (config.workers == 0) throw config_error("workers must be positive");
    } else {
      throw config_error("unknown setting '" + key + "'");
    }
  }
  return config;
}

void require_file(const std::optional<fs::path>& path, const std::string& key) {
  if (!path) throw config_error("--" + key + " is required");
  check_optional_file(path, key);
}

void check_optional_file(const std::optional<fs::path>& path,
                         const std::string& key) {
  if (!path) return;
  std::error_code ec;
  if (!fs::is_regular_file(*path, ec)) {
    throw config_error(key + " path does not exist: " + path->string());
  }
}

}  // namespace loanlex::cli
