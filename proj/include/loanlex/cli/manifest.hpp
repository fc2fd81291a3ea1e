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

#ifndef LOANLEX_CLI_MANIFEST_HPP_
#define LOANLEX_CLI_MANIFEST_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "loanlex/cli/config.hpp"

namespace loanlex::cli {

std::string tool_version();

std::string sha256_hex(std::string_view data);
// Streams the file. Throws Error(kIo).
std::string sha256_file(const fs::path& path);

struct Digest {
  std::string role;    // e.g. "corpus", "dict.tsv"
  std::string source;  // path as configured, or "builtin:<name>"
  std::string sha256;
  std::uint64_t bytes = 0;
};

Digest digest_file(std::string role, const fs::path& path);
Digest digest_text(std::string role, std::string source, std::string_view text);

// {"tool", "version", "stage", "config", "inputs", "outputs"}. Outputs are
// hashed from disk, so write them first. No timestamps.
nlohmann::ordered_json build_manifest(std::string_view stage,
                                      const RunConfig& config,
                                      const std::vector<Digest>& inputs,
                                      const std::vector<fs::path>& outputs);

}  // namespace loanlex::cli

#endif  // LOANLEX_CLI_MANIFEST_HPP_
