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

#include "loanlex/cli/manifest.hpp"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <memory>

#include "loanlex/error.hpp"

namespace loanlex::cli {

namespace {

class Sha256 {
 public:
  Sha256() : ctx_(EVP_MD_CTX_new(), &EVP_MD_CTX_free) {
    if (!ctx_ || EVP_DigestInit_ex(ctx_.get(), EVP_sha256(), nullptr) != 1) {
      throw Error(ErrorKind::kInternal, "SHA-256 initialization failed");
    }
  }

  void update(const void* data, std::size_t size) {
    if (EVP_DigestUpdate(ctx_.get(), data, size) != 1) {
      throw Error(ErrorKind::kInternal, "SHA-256 update failed");
    }
  }

  std::string hex() {
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    if (EVP_DigestFinal_ex(ctx_.get(), md.data(), &len) != 1) {
      throw Error(ErrorKind::kInternal, "SHA-256 finalization failed");
    }
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
      out += kHex[md[i] >> 4];
      out += kHex[md[i] & 0xF];
    }
    return out;
  }

 private:
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx_;
};

}  // namespace

std::string tool_version() { return LOANLEX_VERSION; }

std::string sha256_hex(std::string_view data) {
  Sha256 h;
  h.update(data.data(), data.size());
  return h.hex();
}

std::string sha256_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path.string());
  Sha256 h;
  std::array<char, 1 << 16> buf{};
  while (in) {
    in.read(buf.data(), buf.size());
    h.update(buf.data(), static_cast<std::size_t>(in.gcount()));
  }
  if (in.bad()) throw Error(ErrorKind::kIo, "read failed: " + path.string());
  return h.hex();
}

Digest digest_file(std::string role, const fs::path& path) {
  std::error_code ec;
  const auto size = fs::file_size(path, ec);
  if (ec) throw Error(ErrorKind::kIo, "cannot stat " + path.string());
  return Digest{std::move(role), path.string(), sha256_file(path), size};
}

Digest digest_text(std::string role, std::string source, std::string_view text) {
  return Digest{std::move(role), std::move(source), sha256_hex(text),
                text.size()};
}

nlohmann::ordered_json build_manifest(std::string_view stage,
                                      const RunConfig& config,
                                      const std::vector<Digest>& inputs,
                                      const std::vector<fs::path>& outputs) {
  nlohmann::ordered_json j;
  j["tool"] = "loanlex";
  j["version"] = tool_version();
  j["stage"] = std::string(stage);
  j["config"] = config.to_json();
  j["inputs"] = nlohmann::ordered_json::array();
  for (const auto& d : inputs) {
    nlohmann::ordered_json in;
    in["role"] = d.role;
    in["source"] = d.source;
    in["sha256"] = d.sha256;
    in["bytes"] = d.bytes;
    j["inputs"].push_back(in);
  }
  j["outputs"] = nlohmann::ordered_json::array();
  for (const auto& path : outputs) {
    nlohmann::ordered_json out;
    out["file"] = path.filename().string();
    out["sha256"] = sha256_file(path);
    j["outputs"].push_back(out);
  }
  return j;
}

}  // namespace loanlex::cli
