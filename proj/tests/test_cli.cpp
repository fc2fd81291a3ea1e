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

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "loanlex/cli/commands.hpp"
#include "loanlex/cli/config.hpp"
#include "loanlex/cli/manifest.hpp"
#include "test_support.hpp"

namespace loanlex::cli {
namespace {

using loanlex::testing::golden_dir;
using loanlex::testing::slurp;
using loanlex::testing::TempDir;
using loanlex::testing::test_data_dir;

const std::vector<std::string> kArtifacts = {
    "dict.tsv",           "extract_skips.jsonl",   "extract_stats.json",
    "candidates.tsv",     "candidates_skips.jsonl", "candidates_stats.json",
    "matches.tsv",        "matches_filtered.tsv",  "match_stats.json",
    "annotation_sample.csv", "lexicon.tsv",        "lexicon.src",
    "lexicon.tgt",        "lexicon_stats.json",    "manifest.extract.json",
    "manifest.candidates.json", "manifest.match.json", "manifest.sample.json",
    "manifest.lexicon.json"};

EnvLookup no_env() {
  return [](const std::string&) { return std::optional<std::string>(); };
}

EnvLookup env_of(std::map<std::string, std::string> vars) {
  return [vars](const std::string& k) -> std::optional<std::string> {
    const auto it = vars.find(k);
    if (it == vars.end()) return std::nullopt;
    return it->second;
  };
}

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args, const EnvLookup& env = no_env()) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err, env);
  return {code, out.str(), err.str()};
}

// Runs with the tests directory as working directory so that fixture paths,
// and therefore manifests, are checkout independent.
class InTestDir {
 public:
  InTestDir() : saved_(fs::current_path()) { fs::current_path(test_data_dir()); }
  ~InTestDir() { fs::current_path(saved_); }

 private:
  fs::path saved_;
};

std::vector<std::string> fixture_args(const fs::path& out_dir) {
  return {"--dict",     "fixtures/dict_10.tsv", "--corpus",
          "fixtures/corpus_1000.txt", "--sample-n", "20",
          "--seed",     "7",          "--out-dir",  out_dir.string()};
}

std::vector<std::string> with(std::string command, std::vector<std::string> args,
                              std::vector<std::string> extra = {}) {
  args.insert(args.begin(), std::move(command));
  args.insert(args.end(), extra.begin(), extra.end());
  return args;
}

TEST(Config, PrecedenceIsFlagsThenEnvThenFile) {
  const Settings file = {{"seed", "1"}, {"min-letters", "5"}, {"gloss-mode", "first"}};
  const Settings env = {{"seed", "2"}, {"min-letters", "6"}};
  const Settings flags = {{"seed", "3"}};
  const RunConfig c = resolve_config(file, env, flags);
  EXPECT_EQ(c.seed, 3u);
  EXPECT_EQ(c.min_letters, 6u);
  EXPECT_EQ(c.gloss_mode, GlossMode::kFirst);
}

TEST(Config, ValuesAreValidated) {
  EXPECT_THROW(resolve_config({}, {}, {{"seed", "-1"}}), Error);
  EXPECT_THROW(resolve_config({}, {}, {{"sample-n", "x"}}), Error);
  EXPECT_THROW(resolve_config({}, {}, {{"dict-format", "csv"}}), Error);
  EXPECT_THROW(resolve_config({}, {}, {{"normalize", "nfc"}}), Error);
  EXPECT_THROW(resolve_config({}, {}, {{"workers", "0"}}), Error);
  EXPECT_THROW(resolve_config({}, {}, {{"keep-diacritics", "maybe"}}), Error);
  const RunConfig c = resolve_config({}, {}, {{"keep-diacritics", "yes"}});
  EXPECT_TRUE(c.keep_diacritics);
}

TEST(Config, EnvNamesAndFile) {
  EXPECT_EQ(env_name("bw-table"), "LOANLEX_BW_TABLE");
  const Settings env = settings_from_env(env_of({{"LOANLEX_SEED", "9"}}));
  EXPECT_EQ(env.at("seed"), "9");

  TempDir dir("config");
  const fs::path cfg = dir.path() / "run.conf";
  std::ofstream(cfg) << "# comment\nseed = 11\ncorpus = data/c.txt\n\n";
  const Settings s = parse_config_file(cfg);
  EXPECT_EQ(s.at("seed"), "11");
  EXPECT_EQ(fs::path(s.at("corpus")), dir.path() / "data/c.txt");

  std::ofstream(cfg) << "colour = blue\n";
  EXPECT_THROW(parse_config_file(cfg), Error);
  std::ofstream(cfg) << "no equals sign\n";
  EXPECT_THROW(parse_config_file(cfg), Error);
}

TEST(Cli, MissingCorpusIsConfigError) {
  TempDir dir("cli");
  const CliResult r = run({"match", "--corpus", (dir.path() / "nope.txt").string(),
                           "--out-dir", dir.path().string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.err.rfind("loanlex: error[config]: ", 0), 0u) << r.err;
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
}

TEST(Cli, RulesCheckOnDefaults) {
  const CliResult r = run({"rules", "check"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "rules ok\n");
}

TEST(Cli, RulesCheckReportsParseErrors) {
  TempDir dir("rules");
  const fs::path bad = dir.path() / "bad.rules";
  std::ofstream(bad) << "class V = a\nclass C = k\n[pre]\na -> A / X _\n";
  const CliResult r = run({"rules", "check", "--rules", bad.string()});
  EXPECT_EQ(r.code, 4);
  EXPECT_NE(r.err.find("error[parse]"), std::string::npos) << r.err;
}

TEST(Cli, StageWithoutEarlierArtifactsIsIoError) {
  TempDir dir("cli");
  const CliResult r = run({"lexicon", "--out-dir", dir.path().string()});
  EXPECT_EQ(r.code, 3) << r.err;
  EXPECT_NE(r.err.find("error[io]"), std::string::npos);
}

TEST(Cli, UnknownFlagIsConfigError) {
  const CliResult r = run({"extract", "--frobnicate"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.err.rfind("loanlex: error[config]: ", 0), 0u);
}

TEST(Cli, EnvironmentSuppliesSettings) {
  InTestDir cwd;
  TempDir dir("cli_env");
  const CliResult r = run({"extract"}, env_of({{"LOANLEX_DICT", "fixtures/dict_10.tsv"},
                                               {"LOANLEX_OUT_DIR", dir.path().string()}}));
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(dir.path() / "dict.tsv"));
}

TEST(Cli, SyllabifyTrace) {
  const CliResult r = run({"syllabify", "--trace", "ʁa.kɔ̃.tœʁ", "omlɛt"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("ʁa.kɔ̃.tœʁ\tʁa.kɔ̃.tœʁ\n"), std::string::npos);
  EXPECT_NE(r.out.find("omlɛt\tom.lɛt\n"), std::string::npos);
  EXPECT_NE(r.out.find("=> rAkwntyr\tراكونتير"), std::string::npos) << r.out;
}

TEST(Cli, OversizedSampleIsSampleError) {
  InTestDir cwd;
  TempDir dir("cli_sample");
  auto args = fixture_args(dir.path());
  ASSERT_EQ(run(with("pipeline", args)).code, 0);
  args[5] = "100000";
  const CliResult r = run(with("sample", args));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("error[sample]"), std::string::npos) << r.err;
}

TEST(Manifest, Sha256KnownAnswer) {
  EXPECT_EQ(sha256_hex(""),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(sha256_hex("abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

void expect_same_artifacts(const fs::path& a, const fs::path& b) {
  for (const auto& name : kArtifacts) {
    ASSERT_TRUE(fs::exists(a / name)) << name;
    ASSERT_TRUE(fs::exists(b / name)) << name;
    EXPECT_EQ(slurp(a / name), slurp(b / name)) << name;
  }
}

TEST(EndToEnd, PipelineEqualsStageSequence) {
  InTestDir cwd;
  TempDir piped("e2e_pipe");
  TempDir staged("e2e_stage");
  ASSERT_EQ(run(with("pipeline", fixture_args(piped.path()))).code, 0);
  for (const char* stage : {"extract", "candidates", "match", "sample", "lexicon"}) {
    const CliResult r = run(with(stage, fixture_args(staged.path())));
    ASSERT_EQ(r.code, 0) << stage << ": " << r.err;
  }
  expect_same_artifacts(piped.path(), staged.path());
}

TEST(EndToEnd, DeterministicAcrossRunsAndWorkers) {
  InTestDir cwd;
  TempDir a("e2e_a");
  TempDir b("e2e_b");
  ASSERT_EQ(run(with("pipeline", fixture_args(a.path()), {"--workers", "1"})).code, 0);
  ASSERT_EQ(run(with("pipeline", fixture_args(b.path()), {"--workers", "4"})).code, 0);
  expect_same_artifacts(a.path(), b.path());
  ASSERT_EQ(run(with("pipeline", fixture_args(a.path()), {"--workers", "2"})).code, 0);
  expect_same_artifacts(a.path(), b.path());
}

TEST(EndToEnd, MatchesGoldenFiles) {
  InTestDir cwd;
  TempDir dir("e2e_golden");
  const CliResult r = run(with("pipeline", fixture_args(dir.path())));
  ASSERT_EQ(r.code, 0) << r.err;
  const bool update = std::getenv("LOANLEX_UPDATE_GOLDEN") != nullptr;
  for (const auto& name : kArtifacts) {
    if (update) fs::copy_file(dir.path() / name, golden_dir() / name,
                              fs::copy_options::overwrite_existing);
    EXPECT_EQ(slurp(dir.path() / name), slurp(golden_dir() / name)) << name;
  }
}

TEST(EndToEnd, XmlDictionary) {
  InTestDir cwd;
  TempDir dir("e2e_xml");
  const CliResult r = run({"extract", "--dict", "fixtures/wiktionary_sample.xml",
                           "--out-dir", dir.path().string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(slurp(dir.path() / "dict.tsv"),
            "raconteur\tʁa.kɔ̃.tœʁ\tstoryteller\n"
            "camion\tka.mjɔ̃\ttruck, lorry; bus\n"
            "camion\tkamjɔ̃\ttruck, lorry; bus\n");
  EXPECT_EQ(slurp(dir.path() / "extract_skips.jsonl"),
            "{\"title\":\"quoi\",\"reason\":\"no pronunciation\"}\n");
}

}  // namespace
}  // namespace loanlex::cli
