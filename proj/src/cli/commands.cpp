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

#include "loanlex/cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "CLI11.hpp"
#include "loanlex/cli/manifest.hpp"
#include "loanlex/corpus_match.hpp"
#include "loanlex/dict_extract.hpp"
#include "loanlex/embedded_data.hpp"
#include "loanlex/lexicon.hpp"
#include "loanlex/pipeline.hpp"
#include "loanlex/rules.hpp"
#include "loanlex/script_codec.hpp"

namespace loanlex::cli {

namespace {

constexpr const char* kDictTsv = "dict.tsv";
constexpr const char* kCandidatesTsv = "candidates.tsv";
constexpr const char* kMatchesFiltered = "matches_filtered.tsv";

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorKind::kIo, "read failed: " + path.string());
  return text;
}

std::ifstream open_input(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path.string());
  return in;
}

// Written to a temporary name and renamed on commit.
class OutputFile {
 public:
  explicit OutputFile(fs::path path)
      : path_(std::move(path)), tmp_(path_.string() + ".tmp") {
    out_.open(tmp_, std::ios::binary | std::ios::trunc);
    if (!out_) throw Error(ErrorKind::kIo, "cannot write " + tmp_.string());
  }
  ~OutputFile() {
    if (!committed_) {
      out_.close();
      std::error_code ec;
      fs::remove(tmp_, ec);
    }
  }
  OutputFile(const OutputFile&) = delete;
  OutputFile& operator=(const OutputFile&) = delete;

  std::ostream& stream() { return out_; }

  const fs::path& commit() {
    out_.close();
    if (!out_) throw Error(ErrorKind::kIo, "write failed: " + tmp_.string());
    std::error_code ec;
    fs::rename(tmp_, path_, ec);
    if (ec) throw Error(ErrorKind::kIo, "cannot rename to " + path_.string());
    committed_ = true;
    return path_;
  }

 private:
  fs::path path_;
  fs::path tmp_;
  std::ofstream out_;
  bool committed_ = false;
};

void write_json(OutputFile& file, const nlohmann::ordered_json& j) {
  file.stream() << j.dump(2) << '\n';
}

void ensure_out_dir(const RunConfig& config) {
  std::error_code ec;
  fs::create_directories(config.out_dir, ec);
  if (ec || !fs::is_directory(config.out_dir)) {
    throw Error(ErrorKind::kIo,
                "cannot create output directory " + config.out_dir.string());
  }
}

fs::path artifact(const RunConfig& config, const std::string& name) {
  return config.out_dir / name;
}

// An artifact produced by an earlier stage.
fs::path require_artifact(const RunConfig& config, const std::string& name,
                          std::string_view producer) {
  fs::path path = artifact(config, name);
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) {
    throw Error(ErrorKind::kIo, path.string() + " not found; run `" +
                                    std::string(producer) + "` first");
  }
  return path;
}

struct Loaded {
  std::string text;
  Digest digest;
};

Loaded load_or_builtin(const std::optional<fs::path>& path,
                       const std::string& role, std::string_view builtin,
                       const std::string& builtin_name) {
  if (path) {
    Loaded l{read_file(*path), {}};
    l.digest = digest_text(role, path->string(), l.text);
    return l;
  }
  return Loaded{std::string(builtin),
                digest_text(role, "builtin:" + builtin_name, builtin)};
}

Loaded load_rules_text(const RunConfig& config) {
  return load_or_builtin(config.rules, "rules", embedded::default_rules(),
                         "fr_darija.rules");
}

Loaded load_table_text(const RunConfig& config) {
  return load_or_builtin(config.bw_table, "bw-table",
                         embedded::default_buckwalter_table(),
                         "buckwalter_safe.tsv");
}

Loaded load_stoplist_text(const RunConfig& config) {
  return load_or_builtin(config.stoplist, "stoplist",
                         embedded::default_stoplist(), "stopwords_ar.txt");
}

Transliterator make_transliterator(const RunConfig& config,
                                   std::vector<Digest>& inputs) {
  Loaded rules = load_rules_text(config);
  Loaded table = load_table_text(config);
  inputs.push_back(rules.digest);
  inputs.push_back(table.digest);
  return Transliterator(parse_rules(rules.text),
                        parse_buckwalter_table(table.text),
                        config.keep_diacritics);
}

Stoplist load_stoplist(const RunConfig& config, std::vector<Digest>& inputs) {
  Loaded stop = load_stoplist_text(config);
  inputs.push_back(stop.digest);
  std::istringstream in(stop.text);
  return Stoplist::parse(in);
}

// Earlier-stage artifacts are recorded by name so manifests do not depend on
// the output directory.
Digest digest_artifact(const std::string& name, const fs::path& path) {
  Digest d = digest_file(name, path);
  d.source = name;
  return d;
}

std::vector<ArabicString> load_candidate_strings(const RunConfig& config,
                                                 std::vector<Digest>& inputs) {
  const fs::path path = require_artifact(config, kCandidatesTsv, "candidates");
  inputs.push_back(digest_artifact(kCandidatesTsv, path));
  std::ifstream in = open_input(path);
  std::vector<ArabicString> out;
  for (auto& c : read_candidates_tsv(in)) out.push_back(std::move(c.arabic));
  return out;
}

void write_manifest(const RunConfig& config, Stage stage,
                    const std::vector<Digest>& inputs,
                    const std::vector<fs::path>& outputs) {
  OutputFile file(artifact(config, "manifest." +
                                       std::string(stage_name(stage)) +
                                       ".json"));
  write_json(file, build_manifest(stage_name(stage), config, inputs, outputs));
  file.commit();
}

void run_extract(const RunConfig& config, std::ostream& log) {
  require_file(config.dict, "dict");
  std::vector<Digest> inputs{digest_file("dict", *config.dict)};
  std::vector<DictEntry> entries;
  std::vector<SkipRecord> skips;
  nlohmann::ordered_json stats;

  if (config.effective_dict_format() == DictFormat::kXml) {
    DumpOptions options;
    options.language = config.language;
    options.workers = config.workers;
    std::unordered_map<std::string, std::size_t> index;
    std::ifstream in = open_input(*config.dict);
    const DumpStats ds = parse_dump(
        in, options,
        [&](DictEntry&& e) {
          const auto [it, inserted] = index.emplace(e.headword, entries.size());
          if (inserted) {
            entries.push_back(std::move(e));
          } else {
            entries[it->second].merge(e);
          }
        },
        [&](const SkipRecord& s) { skips.push_back(s); });
    stats["format"] = "xml";
    stats["language"] = config.language;
    stats["pages"] = ds.pages;
    stats["non_article_pages"] = ds.non_article_pages;
    stats["without_language"] = ds.without_language;
    stats["skipped"] = ds.skipped;
  } else {
    std::ifstream in = open_input(*config.dict);
    TsvParseResult parsed = parse_tsv(in);
    entries = std::move(parsed.entries);
    for (const auto& e : parsed.errors) {
      skips.push_back({"line " + std::to_string(e.line), e.message});
    }
    stats["format"] = "tsv";
    stats["skipped"] = skips.size();
  }
  std::size_t pronunciations = 0;
  for (const auto& e : entries) pronunciations += e.pronunciations.size();
  stats["entries"] = entries.size();
  stats["pronunciations"] = pronunciations;

  OutputFile dict(artifact(config, kDictTsv));
  emit_tsv(dict.stream(), entries);
  OutputFile skip_file(artifact(config, "extract_skips.jsonl"));
  write_skip_jsonl(skip_file.stream(), skips);
  OutputFile stats_file(artifact(config, "extract_stats.json"));
  write_json(stats_file, stats);
  const std::vector<fs::path> outputs{dict.commit(), skip_file.commit(),
                                      stats_file.commit()};
  write_manifest(config, Stage::kExtract, inputs, outputs);
  log << "extract: " << entries.size() << " entries, " << skips.size()
      << " skipped\n";
}

void run_candidates(const RunConfig& config, std::ostream& log) {
  const fs::path dict_path = require_artifact(config, kDictTsv, "extract");
  std::vector<Digest> inputs{digest_artifact(kDictTsv, dict_path)};
  const Transliterator tr = make_transliterator(config, inputs);

  std::ifstream in = open_input(dict_path);
  TsvParseResult parsed = parse_tsv(in);
  if (!parsed.errors.empty()) {
    const TsvError& e = parsed.errors.front();
    throw SyntaxError(e.line, 1, dict_path.string() + ": " + e.message);
  }
  const GenerationResult result =
      generate_all(parsed.entries, tr, config.workers);

  nlohmann::ordered_json stats;
  stats["pairs"] = result.stats.pairs;
  stats["skipped"] = result.stats.skipped;
  stats["candidates"] = result.stats.unique_candidates;
  stats["keep_diacritics"] = config.keep_diacritics;
  stats["unique_stripped"] = result.stats.unique_stripped;
  stats["unique_with_diacritics"] = result.stats.unique_with_diacritics;

  OutputFile cands(artifact(config, kCandidatesTsv));
  write_candidates_tsv(cands.stream(), result.candidates);
  OutputFile skips(artifact(config, "candidates_skips.jsonl"));
  write_candidate_skips_jsonl(skips.stream(), result.skips);
  OutputFile stats_file(artifact(config, "candidates_stats.json"));
  write_json(stats_file, stats);
  const std::vector<fs::path> outputs{cands.commit(), skips.commit(),
                                      stats_file.commit()};
  write_manifest(config, Stage::kCandidates, inputs, outputs);
  log << "candidates: " << result.stats.unique_candidates << " candidates, "
      << result.stats.skipped << " skipped\n";
}

struct FilteredScan {
  ScanResult scan;
  std::vector<MatchReport> filtered;
};

FilteredScan scan_and_filter(const RunConfig& config, bool retain_locations,
                             std::vector<Digest>& inputs) {
  require_file(config.corpus, "corpus");
  check_optional_file(config.stoplist, "stoplist");
  const std::vector<ArabicString> candidates =
      load_candidate_strings(config, inputs);
  inputs.push_back(digest_file("corpus", *config.corpus));
  const Stoplist stoplist = load_stoplist(config, inputs);

  ScanOptions options;
  options.normalize = config.normalize;
  options.retain_locations = retain_locations;
  options.workers = config.workers;
  std::ifstream corpus = open_input(*config.corpus);
  FilteredScan out{scan(corpus, candidates, options), {}};
  out.filtered = filter_reports(out.scan.reports, config.min_letters, stoplist,
                                out.scan.stats);
  return out;
}

void run_match(const RunConfig& config, std::ostream& log) {
  std::vector<Digest> inputs;
  FilteredScan fs_result = scan_and_filter(config, false, inputs);
  nlohmann::ordered_json stats = fs_result.scan.stats.to_json();
  stats["min_letters"] = config.min_letters;
  stats["normalize"] = config.normalize.name();

  OutputFile all(artifact(config, "matches.tsv"));
  write_match_tsv(all.stream(), fs_result.scan.reports);
  OutputFile filtered(artifact(config, kMatchesFiltered));
  write_match_tsv(filtered.stream(), fs_result.filtered);
  OutputFile stats_file(artifact(config, "match_stats.json"));
  write_json(stats_file, stats);
  const std::vector<fs::path> outputs{all.commit(), filtered.commit(),
                                      stats_file.commit()};
  write_manifest(config, Stage::kMatch, inputs, outputs);
  log << "match: " << fs_result.scan.stats.total_tokens << " tokens, "
      << fs_result.scan.reports.size() << " candidates found, "
      << fs_result.filtered.size() << " after filters\n";
}

void run_sample(const RunConfig& config, std::ostream& log) {
  if (config.sample_n == 0) {
    throw Error(ErrorKind::kConfig, "--sample-n must be positive for sample");
  }
  std::vector<Digest> inputs;
  FilteredScan fs_result = scan_and_filter(config, true, inputs);
  AnnotationSample sample =
      sample_instances(fs_result.filtered, config.sample_n, config.seed);
  std::ifstream corpus = open_input(*config.corpus);
  attach_context(corpus, sample);

  OutputFile csv(artifact(config, "annotation_sample.csv"));
  write_sample_csv(csv.stream(), sample);
  const std::vector<fs::path> outputs{csv.commit()};
  write_manifest(config, Stage::kSample, inputs, outputs);
  log << "sample: " << sample.rows.size() << " instances (seed "
      << config.seed << ")\n";
}

void run_lexicon(const RunConfig& config, std::ostream& log) {
  const fs::path cand_path =
      require_artifact(config, kCandidatesTsv, "candidates");
  const fs::path match_path = require_artifact(config, kMatchesFiltered, "match");
  std::vector<Digest> inputs{digest_artifact(kCandidatesTsv, cand_path),
                             digest_artifact(kMatchesFiltered, match_path)};
  std::ifstream cand_in = open_input(cand_path);
  const std::vector<CandidateLoanword> candidates = read_candidates_tsv(cand_in);
  std::ifstream match_in = open_input(match_path);
  const std::vector<MatchReport> reports = read_match_tsv(match_in);

  const Lexicon lexicon = build_lexicon(reports, candidates);
  const ParallelText parallel = emit_parallel(lexicon.entries, config.gloss_mode);

  nlohmann::ordered_json stats;
  stats["entries"] = lexicon.entries.size();
  stats["excluded_without_gloss"] = lexicon.excluded_without_gloss;
  stats["gloss_mode"] = std::string(to_string(config.gloss_mode));
  stats["parallel_lines"] = parallel.source.size();

  OutputFile tsv(artifact(config, "lexicon.tsv"));
  emit_tsv(tsv.stream(), lexicon.entries);
  OutputFile src(artifact(config, "lexicon.src"));
  write_lines(src.stream(), parallel.source);
  OutputFile tgt(artifact(config, "lexicon.tgt"));
  write_lines(tgt.stream(), parallel.target);
  OutputFile stats_file(artifact(config, "lexicon_stats.json"));
  write_json(stats_file, stats);
  const std::vector<fs::path> outputs{tsv.commit(), src.commit(), tgt.commit(),
                                      stats_file.commit()};
  write_manifest(config, Stage::kLexicon, inputs, outputs);
  log << "lexicon: " << lexicon.entries.size() << " entries, "
      << lexicon.excluded_without_gloss << " without gloss\n";
}

void run_syllabify(const RunConfig& config, const std::vector<std::string>& words,
                   bool trace, std::ostream& out) {
  std::vector<Digest> unused;
  const Transliterator tr = make_transliterator(config, unused);
  for (const auto& word : words) {
    const IpaString ipa = IpaString::parse(word);
    const std::vector<Syllable> syllables = syllabify(ipa, tr.syllabifier());
    out << ipa.str() << '\t' << join_syllables(syllables) << '\n';
    if (!trace) continue;
    const CandidateTrace t = trace_candidate(ipa, tr);
    for (std::size_t i = 0; i < t.stages.size(); ++i) {
      const SyllableTrace& s = t.stages[i];
      out << "  " << s.input << "\tpre=" << s.after_pre << "\tmap="
          << s.after_map << "\tpost=" << s.after_post << '\t'
          << t.syllable_arabic[i].str() << '\n';
    }
    out << "  => " << t.romanization << '\t' << t.arabic.str() << '\n';
  }
}

}  // namespace

std::string_view stage_name(Stage stage) {
  switch (stage) {
    case Stage::kExtract:
      return "extract";
    case Stage::kCandidates:
      return "candidates";
    case Stage::kMatch:
      return "match";
    case Stage::kSample:
      return "sample";
    case Stage::kLexicon:
      return "lexicon";
  }
  return "unknown";
}

void run_stage(Stage stage, const RunConfig& config, std::ostream& log) {
  check_optional_file(config.rules, "rules");
  check_optional_file(config.bw_table, "bw-table");
  ensure_out_dir(config);
  switch (stage) {
    case Stage::kExtract:
      return run_extract(config, log);
    case Stage::kCandidates:
      return run_candidates(config, log);
    case Stage::kMatch:
      return run_match(config, log);
    case Stage::kSample:
      return run_sample(config, log);
    case Stage::kLexicon:
      return run_lexicon(config, log);
  }
}

void run_pipeline(const RunConfig& config, std::ostream& log) {
  require_file(config.dict, "dict");
  require_file(config.corpus, "corpus");
  check_optional_file(config.stoplist, "stoplist");
  run_stage(Stage::kExtract, config, log);
  run_stage(Stage::kCandidates, config, log);
  run_stage(Stage::kMatch, config, log);
  if (config.sample_n > 0) run_stage(Stage::kSample, config, log);
  run_stage(Stage::kLexicon, config, log);
}

std::vector<std::string> check_rules(const RunConfig& config) {
  check_optional_file(config.rules, "rules");
  check_optional_file(config.bw_table, "bw-table");
  const RuleSet rules = parse_rules(load_rules_text(config).text);
  const BuckwalterTable table =
      parse_buckwalter_table(load_table_text(config).text);

  std::vector<std::string> diagnostics;
  const std::string canonical = emit_rules(rules);
  if (!(parse_rules(canonical) == rules)) {
    diagnostics.push_back("canonical form does not parse back to the same rules");
  }
  auto check_romanization = [&](const std::string& text,
                                const std::string& where) {
    for (char c : text) {
      if (!table.to_arabic(c)) {
        diagnostics.push_back(where + ": '" + std::string(1, c) +
                              "' is not in the Buckwalter table");
      }
    }
  };
  for (const auto& e : rules.map_table.entries()) {
    check_romanization(e.romanization, "map entry '" + e.ipa_segment + "'");
  }
  for (const auto& r : rules.post_rules) {
    check_romanization(r.replacement, "post rule '" + r.pattern + "'");
  }
  return diagnostics;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kConfig:
      return 2;
    case ErrorKind::kIo:
      return 3;
    case ErrorKind::kParse:
    case ErrorKind::kValidation:
      return 4;
    default:
      return 1;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err, const EnvLookup& env) {
  CLI::App app{"Loanword candidate generation and lexicon induction",
               "loanlex"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version());

  std::map<std::string, std::string> flag_values;
  std::map<std::string, CLI::Option*> flag_options;
  const std::map<std::string, std::string> help = {
      {"dict", "Donor dictionary (Wiktionary XML export or TSV)"},
      {"dict-format", "xml or tsv; inferred from the extension when unset"},
      {"language", "Donor language section name in the dump"},
      {"rules", "Rule file (default: built-in)"},
      {"bw-table", "Buckwalter table (default: built-in)"},
      {"corpus", "Tokenizable borrowing-language corpus, one line per segment"},
      {"stoplist", "Stopword list (default: built-in)"},
      {"min-letters", "Minimum Arabic letters for a candidate (default 4)"},
      {"normalize", "none, alef, tatweel, ya, all or a comma list"},
      {"sample-n", "Annotation sample size"},
      {"seed", "Sampling seed"},
      {"gloss-mode", "first or all"},
      {"out-dir", "Directory for artifacts"},
      {"workers", "Worker threads (default: hardware concurrency)"}};
  for (const auto& key : setting_keys()) {
    if (key == "keep-diacritics") continue;
    flag_options[key] = app.add_option("--" + key, flag_values[key],
                                       help.at(key));
  }
  bool keep_diacritics = false;
  CLI::Option* keep_opt = app.add_flag(
      "--keep-diacritics", keep_diacritics,
      "Keep short-vowel diacritics in candidates");
  std::string config_path;
  CLI::Option* config_opt =
      app.add_option("--config", config_path, "Flat key = value config file");

  std::vector<std::pair<CLI::App*, Stage>> stage_commands;
  auto add_stage = [&](const char* name, const char* desc, Stage stage) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->fallthrough();
    stage_commands.emplace_back(sub, stage);
  };
  add_stage("extract", "Extract donor entries to dict.tsv", Stage::kExtract);
  add_stage("candidates", "Generate candidate spellings", Stage::kCandidates);
  add_stage("match", "Count candidates in the corpus", Stage::kMatch);
  add_stage("sample", "Draw an annotation sample", Stage::kSample);
  add_stage("lexicon", "Build the translation lexicon", Stage::kLexicon);
  CLI::App* pipeline_cmd =
      app.add_subcommand("pipeline", "Run every stage in order");
  pipeline_cmd->fallthrough();
  CLI::App* rules_cmd = app.add_subcommand("rules", "Rule file utilities");
  rules_cmd->fallthrough();
  rules_cmd->require_subcommand(1);
  CLI::App* check_cmd =
      rules_cmd->add_subcommand("check", "Parse and round-trip a rule file");
  check_cmd->fallthrough();
  CLI::App* syl_cmd =
      app.add_subcommand("syllabify", "Show syllabification of IPA strings");
  syl_cmd->fallthrough();
  std::vector<std::string> words;
  bool trace = false;
  syl_cmd->add_option("ipa", words, "IPA strings")->required();
  syl_cmd->add_flag("--trace", trace, "Show every rule stage");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "loanlex: error[config]: " << e.what() << '\n';
    return exit_code(ErrorKind::kConfig);
  }

  try {
    Settings flags;
    for (const auto& [key, opt] : flag_options) {
      if (opt->count() > 0) flags[key] = flag_values[key];
    }
    if (keep_opt->count() > 0) {
      flags["keep-diacritics"] = keep_diacritics ? "true" : "false";
    }
    Settings file;
    std::optional<std::string> cfg =
        config_opt->count() > 0 ? std::optional(config_path)
                                : env(std::string(kEnvPrefix) + "CONFIG");
    if (cfg) {
      if (!fs::is_regular_file(*cfg)) {
        throw Error(ErrorKind::kConfig, "config path does not exist: " + *cfg);
      }
      file = parse_config_file(*cfg);
    }
    const RunConfig config = resolve_config(file, settings_from_env(env), flags);

    for (const auto& [sub, stage] : stage_commands) {
      if (sub->parsed()) {
        run_stage(stage, config, out);
        return 0;
      }
    }
    if (pipeline_cmd->parsed()) {
      run_pipeline(config, out);
      return 0;
    }
    if (check_cmd->parsed()) {
      const std::vector<std::string> diagnostics = check_rules(config);
      for (const auto& d : diagnostics) out << d << '\n';
      if (!diagnostics.empty()) {
        throw ValidationError(std::to_string(diagnostics.size()) +
                              " rule diagnostics");
      }
      out << "rules ok\n";
      return 0;
    }
    if (syl_cmd->parsed()) {
      run_syllabify(config, words, trace, out);
      return 0;
    }
    throw Error(ErrorKind::kConfig, "no command given");
  } catch (const Error& e) {
    err << "loanlex: error[" << to_string(e.kind()) << "]: " << e.what()
        << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "loanlex: error[internal]: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace loanlex::cli
