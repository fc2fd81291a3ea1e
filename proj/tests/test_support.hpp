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

#ifndef LOANLEX_TESTS_TEST_SUPPORT_HPP_
#define LOANLEX_TESTS_TEST_SUPPORT_HPP_

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <unistd.h>
#include <sstream>
#include <string>
#include <vector>

#include "loanlex/embedded_data.hpp"
#include "loanlex/rules.hpp"
#include "loanlex/script_codec.hpp"

namespace loanlex::testing {

namespace fs = std::filesystem;

inline fs::path test_data_dir() { return LOANLEX_TEST_DATA_DIR; }
inline fs::path fixture(const std::string& name) {
  return test_data_dir() / "fixtures" / name;
}
inline fs::path golden_dir() { return test_data_dir() / "golden"; }

inline std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
}

inline const RuleSet& default_rules() {
  static const RuleSet rules = parse_rules(embedded::default_rules());
  return rules;
}

inline const BuckwalterTable& default_table() {
  static const BuckwalterTable table =
      parse_buckwalter_table(embedded::default_buckwalter_table());
  return table;
}

// Fresh scratch directory under the build tree, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static std::uint64_t counter = 0;
    path_ = fs::temp_directory_path() /
            ("loanlex_" + tag + "_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter++));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

// Small hand-rolled generators for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::size_t index(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
  }
  std::size_t between(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

  template <typename T>
  const T& pick(const std::vector<T>& items) {
    return items[index(items.size())];
  }

  std::string string_over(const std::string& alphabet, std::size_t len) {
    std::string s;
    for (std::size_t i = 0; i < len; ++i) s += alphabet[index(alphabet.size())];
    return s;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace loanlex::testing

#endif  // LOANLEX_TESTS_TEST_SUPPORT_HPP_
