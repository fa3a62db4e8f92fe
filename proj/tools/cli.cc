// Copyright 2026 The Loretag Authors
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

#include "cli.h"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>

#include "CLI11.hpp"
#include "json.hpp"
#include "loretag/assoc.h"
#include "loretag/corpus.h"
#include "loretag/error.h"
#include "loretag/eval.h"
#include "loretag/gazetteer.h"
#include "loretag/ingest.h"
#include "loretag/io.h"
#include "loretag/tagger.h"

namespace loretag::cli {

namespace fs = std::filesystem;

namespace {

constexpr const char* kOutDirEnv = "LORETAG_OUT_DIR";

void log_line(std::ostream& log, const std::string& stage,
              const std::string& message) {
  log << "[loretag] " << stage << ": " << message << "\n";
}

// Writes to `path`, or to `out` when no path was given.
void emit(const std::string& path, const std::string& contents,
          std::ostream& out) {
  if (path.empty()) {
    out << contents;
  } else {
    write_file_atomic(path, contents);
  }
}

std::vector<std::string> gather_names(
    const std::vector<fs::path>& lists, const std::optional<fs::path>& infobox,
    const std::string& type_key, const std::set<std::string>& exclude,
    bool case_insensitive, std::ostream& log) {
  std::vector<std::string> merged;
  for (const auto& path : lists) {
    const auto names = load_name_list(path);
    const std::size_t before = merged.size();
    merged = merge_name_lists(merged, names, case_insensitive);
    log_line(log, "names", path.string() + ": " + std::to_string(names.size()) +
                               " names, " +
                               std::to_string(merged.size() - before) + " new");
  }
  if (infobox) {
    const auto records = load_infobox_records(*infobox);
    const auto names = filter_infobox_entities(records, type_key, exclude);
    const std::size_t before = merged.size();
    merged = merge_name_lists(merged, names, case_insensitive);
    log_line(log, "names",
             infobox->string() + ": " + std::to_string(names.size()) + " of " +
                 std::to_string(records.size()) + " records kept, " +
                 std::to_string(merged.size() - before) + " new");
  }
  log_line(log, "names", std::to_string(merged.size()) + " merged names");
  return merged;
}

nlohmann::ordered_json stats_json(const BioCorpus& corpus) {
  return nlohmann::ordered_json::parse(corpus_stats(corpus).to_json());
}

BioCorpus read_corpus(const fs::path& path, std::ostream& log) {
  auto parsed = read_conll(path);
  if (parsed.repairs > 0) {
    log_line(log, "read", path.string() + ": repaired " +
                              std::to_string(parsed.repairs) +
                              " malformed I- tag(s)");
  }
  return std::move(parsed.corpus);
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUsage:
      return kExitUsage;
    case ErrorKind::kData:
      return kExitData;
    case ErrorKind::kIo:
      return kExitIo;
  }
  return kExitData;
}

}  // namespace

PipelineOutputs run_pipeline(const PipelineConfig& config, std::ostream& log) {
  config.validate();

  const LoreCorpus lore = load_lore_corpus(config.lore);
  log_line(log, "ingest", std::to_string(lore.documents.size()) +
                              " lore documents from " + config.lore.string());

  const auto names = gather_names(
      config.names, config.infobox, config.infobox_type_key,
      config.infobox_exclude, config.gazetteer.case_insensitive, log);
  if (names.empty()) throw DataError("no entity names to build a gazetteer");

  const auto ignore = compute_ignore_list(lore, names, config.gazetteer);
  log_line(log, "ignore", std::to_string(ignore.size()) +
                              " names occur in more than " +
                              std::to_string(config.gazetteer.ignore_threshold) +
                              " documents");

  const Gazetteer gazetteer = build_gazetteer(names, ignore, config.gazetteer);
  log_line(log, "gazetteer", std::to_string(gazetteer.size()) + " entries");

  const BioCorpus tagged =
      tag_corpus(lore, gazetteer, config.mode, config.label);
  log_line(log, "tag", std::to_string(tagged.sentence_count()) +
                           " sentences (" + std::string(to_string(config.mode)) +
                           " matching)");

  SplitResult split = split_corpus(tagged, config.split);
  for (const auto& warning : split.warnings) log_line(log, "split", warning);
  log_line(log, "split",
           std::to_string(split.train.sentence_count()) + "/" +
               std::to_string(split.dev.sentence_count()) + "/" +
               std::to_string(split.test.sentence_count()) +
               " train/dev/test sentences");

  nlohmann::ordered_json stats;
  stats["corpus"] = stats_json(tagged);
  stats["train"] = stats_json(split.train);
  stats["dev"] = stats_json(split.dev);
  stats["test"] = stats_json(split.test);
  stats["gazetteer_entries"] = gazetteer.size();
  stats["ignored_names"] = ignore.size();

  const std::vector<std::string> ignore_keys(ignore.begin(), ignore.end());
  PipelineOutputs outputs;
  outputs["gazetteer.txt"] = format_name_list(gazetteer.surfaces());
  outputs["ignore.txt"] = format_name_list(ignore_keys);
  outputs["corpus.conll"] = to_conll(tagged);
  outputs["train.conll"] = to_conll(split.train);
  outputs["dev.conll"] = to_conll(split.dev);
  outputs["test.conll"] = to_conll(split.test);
  outputs["stats.json"] = stats.dump(2) + "\n";
  return outputs;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"loretag: gazetteer-driven NER corpus builder and evaluator",
               "loretag"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::function<void()> action;

  // Options shared by several subcommands.
  std::string lore_path;
  std::vector<std::string> name_paths;
  std::string infobox_path;
  std::string type_key = "type5e";
  std::vector<std::string> exclude;
  bool case_sensitive = false;
  std::size_t threshold = GazetteerConfig{}.ignore_threshold;
  std::string out_path;
  std::string corpus_path;
  std::string mode_name = "word_boundary";
  std::string label = std::string(kDefaultLabel);

  auto add_name_sources = [&](CLI::App* sub) {
    sub->add_option("--names", name_paths, "Name list file (repeatable)");
    sub->add_option("--infobox", infobox_path, "Infobox JSON file")
        ->check(CLI::ExistingFile);
    sub->add_option("--type-key", type_key, "Infobox attribute to filter on")
        ->capture_default_str();
    sub->add_option("--exclude", exclude,
                    "Infobox attribute value to drop (repeatable)");
    sub->add_flag("--case-sensitive", case_sensitive,
                  "Match and deduplicate names case-sensitively");
  };
  auto names_from_flags = [&] {
    std::vector<fs::path> lists(name_paths.begin(), name_paths.end());
    std::optional<fs::path> infobox;
    if (!infobox_path.empty()) infobox = infobox_path;
    if (lists.empty() && !infobox) {
      throw UsageError("give at least one --names file or --infobox");
    }
    return gather_names(lists, infobox, type_key,
                        {exclude.begin(), exclude.end()}, !case_sensitive, err);
  };
  auto gazetteer_config = [&] {
    GazetteerConfig config;
    config.ignore_threshold = threshold;
    config.case_insensitive = !case_sensitive;
    return config;
  };

  // gazetteer
  std::string ignore_path;
  {
    auto* sub = app.add_subcommand(
        "gazetteer", "Merge name lists into a length-ordered gazetteer");
    add_name_sources(sub);
    sub->add_option("--ignore", ignore_path, "Ignore list to subtract")
        ->check(CLI::ExistingFile);
    sub->add_option("--out", out_path, "Output name-per-line file")->required();
    sub->callback([&] {
      action = [&] {
        const auto names = names_from_flags();
        std::set<std::string> ignore;
        if (!ignore_path.empty()) {
          ignore = load_ignore_list(ignore_path, !case_sensitive);
        }
        const auto gazetteer = build_gazetteer(names, ignore, gazetteer_config());
        write_gazetteer(out_path, gazetteer);
        log_line(err, "gazetteer", std::to_string(gazetteer.size()) +
                                       " entries written to " + out_path);
      };
    });
  }

  // ignore
  std::string frequencies_path;
  {
    auto* sub = app.add_subcommand(
        "ignore", "List names found in more than --threshold documents");
    sub->add_option("--lore", lore_path, "Lore JSON file")->required();
    add_name_sources(sub);
    sub->add_option("--threshold", threshold, "Document count threshold")
        ->capture_default_str();
    sub->add_option("--frequencies", frequencies_path,
                    "Also write per-name document counts as JSON");
    sub->add_option("--out", out_path, "Output file (default: stdout)");
    sub->callback([&] {
      action = [&] {
        const auto lore = load_lore_corpus(lore_path);
        const auto names = names_from_flags();
        const auto config = gazetteer_config();
        const auto ignore = compute_ignore_list(lore, names, config);
        const std::vector<std::string> keys(ignore.begin(), ignore.end());
        std::string frequencies;
        if (!frequencies_path.empty()) {
          nlohmann::ordered_json j = nlohmann::ordered_json::object();
          for (const auto& [key, count] :
               document_frequencies(lore, names, config.case_insensitive)) {
            j[key] = count;
          }
          frequencies = j.dump(2) + "\n";
        }
        emit(out_path, format_name_list(keys), out);
        if (!frequencies_path.empty()) {
          write_file_atomic(frequencies_path, frequencies);
        }
        log_line(err, "ignore", std::to_string(ignore.size()) + " of " +
                                    std::to_string(names.size()) +
                                    " names ignored");
      };
    });
  }

  // tag
  std::string gazetteer_path;
  {
    auto* sub = app.add_subcommand("tag", "Tag lore documents into a BIO corpus");
    sub->add_option("--lore", lore_path, "Lore JSON file")->required();
    sub->add_option("--gazetteer", gazetteer_path, "Gazetteer name list")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--ignore", ignore_path, "Ignore list to subtract")
        ->check(CLI::ExistingFile);
    sub->add_option("--mode", mode_name, "substring or word_boundary")
        ->capture_default_str();
    sub->add_option("--label", label, "Entity label")->capture_default_str();
    sub->add_flag("--case-sensitive", case_sensitive,
                  "Match names case-sensitively");
    sub->add_option("--out", out_path, "Output CoNLL file (default: stdout)");
    sub->callback([&] {
      action = [&] {
        const MatchMode mode = parse_match_mode(mode_name);
        const auto lore = load_lore_corpus(lore_path);
        std::set<std::string> ignore;
        if (!ignore_path.empty()) {
          ignore = load_ignore_list(ignore_path, !case_sensitive);
        }
        const auto gazetteer = build_gazetteer(load_name_list(gazetteer_path),
                                               ignore, gazetteer_config());
        const auto tagged = tag_corpus(lore, gazetteer, mode, label);
        emit(out_path, to_conll(tagged), out);
        log_line(err, "tag", std::to_string(tagged.sentence_count()) +
                                 " sentences tagged");
      };
    });
  }

  // split
  std::string ratios_text = "2/3,1/6,1/6";
  std::optional<std::uint64_t> seed;
  std::string out_dir;
  {
    auto* sub = app.add_subcommand(
        "split", "Split a corpus into train/dev/test by whole documents");
    sub->add_option("--corpus", corpus_path, "Input CoNLL file")->required();
    sub->add_option("--ratios", ratios_text, "train,dev,test fractions")
        ->capture_default_str();
    sub->add_option("--seed", seed, "Shuffle documents with this seed");
    sub->add_option("--out-dir", out_dir, "Directory for train/dev/test.conll")
        ->envname(kOutDirEnv)
        ->required();
    sub->callback([&] {
      action = [&] {
        SplitSpec spec;
        spec.ratios = SplitSpec::parse_ratios(ratios_text);
        spec.shuffle_seed = seed;
        spec.validate();
        const auto corpus = read_corpus(corpus_path, err);
        const auto split = split_corpus(corpus, spec);
        for (const auto& w : split.warnings) log_line(err, "split", w);
        const std::string train = to_conll(split.train);
        const std::string dev = to_conll(split.dev);
        const std::string test = to_conll(split.test);
        write_file_atomic(fs::path(out_dir) / "train.conll", train);
        write_file_atomic(fs::path(out_dir) / "dev.conll", dev);
        write_file_atomic(fs::path(out_dir) / "test.conll", test);
        log_line(err, "split",
                 std::to_string(split.train.sentence_count()) + "/" +
                     std::to_string(split.dev.sentence_count()) + "/" +
                     std::to_string(split.test.sentence_count()) +
                     " train/dev/test sentences");
      };
    });
  }

  // stats
  {
    auto* sub = app.add_subcommand("stats", "Corpus statistics as JSON");
    sub->add_option("--corpus", corpus_path, "Input CoNLL file")->required();
    sub->add_option("--out", out_path, "Output file (default: stdout)");
    sub->callback([&] {
      action = [&] {
        emit(out_path, corpus_stats(read_corpus(corpus_path, err)).to_json(),
             out);
      };
    });
  }

  // score
  std::string pred_path;
  std::string gold_path;
  std::vector<std::string> target_labels;
  std::string json_path;
  {
    auto* sub = app.add_subcommand(
        "score", "Exact-match span precision/recall/F1 of predictions");
    sub->add_option("--pred", pred_path, "Predicted CoNLL file")->required();
    sub->add_option("--gold", gold_path, "Gold CoNLL file")->required();
    sub->add_option("--labels", target_labels,
                    "Only score these labels (repeatable)");
    sub->add_option("--json", json_path, "Also write the report as JSON");
    sub->callback([&] {
      action = [&] {
        const auto pred = read_corpus(pred_path, err);
        const auto gold = read_corpus(gold_path, err);
        std::optional<std::set<std::string>> labels;
        if (!target_labels.empty()) {
          labels.emplace(target_labels.begin(), target_labels.end());
        }
        const auto report = score(pred, gold, labels);
        if (!json_path.empty()) write_file_atomic(json_path, report.to_json());
        out << report.summary() << "\n";
      };
    });
  }

  // remap
  std::string map_spec;
  std::string unmapped = "drop";
  {
    auto* sub = app.add_subcommand(
        "remap", "Rename tag labels, e.g. PER=MONS for zero-shot baselines");
    sub->add_option("--corpus", corpus_path, "Input CoNLL file")->required();
    sub->add_option("--map", map_spec, "FROM=TO[,FROM=TO...]")->required();
    sub->add_option("--unmapped", unmapped, "drop (to O) or keep")
        ->capture_default_str();
    sub->add_option("--out", out_path, "Output CoNLL file (default: stdout)");
    sub->callback([&] {
      action = [&] {
        const auto map = LabelMap::parse(map_spec, parse_unmapped_policy(unmapped));
        emit(out_path, to_conll(remap_labels(read_corpus(corpus_path, err), map)),
             out);
      };
    });
  }

  // assoc
  bool include_self = false;
  bool exact_names = false;
  {
    auto* sub = app.add_subcommand(
        "assoc", "Build the mentioned-entity -> lore-owner association map");
    sub->add_option("--corpus", corpus_path, "Tagged CoNLL file with # doc: lines")
        ->required();
    sub->add_flag("--include-self", include_self,
                  "Keep mentions of a document's own entity");
    sub->add_flag("--exact-names", exact_names,
                  "Compare names case-sensitively");
    sub->add_option("--out", out_path, "Output JSON file (default: stdout)");
    sub->callback([&] {
      action = [&] {
        const auto map = build_association_map(
            read_corpus(corpus_path, err),
            exact_names ? NameNormalization::kExact : NameNormalization::kCaseFold,
            include_self);
        emit(out_path, association_map_to_json(map), out);
        log_line(err, "assoc", std::to_string(map.entries.size()) +
                                   " entities, " +
                                   std::to_string(map.pair_count()) + " pairs");
      };
    });
  }

  // diff
  std::string map_a;
  std::string map_b;
  {
    auto* sub = app.add_subcommand("diff", "Compare two association maps");
    sub->add_option("--a", map_a, "First association map JSON")->required();
    sub->add_option("--b", map_b, "Second association map JSON")->required();
    sub->add_flag("--exact-names", exact_names,
                  "Compare names case-sensitively");
    sub->add_option("--out", out_path, "Output JSON file (default: stdout)");
    sub->callback([&] {
      action = [&] {
        const auto diff = diff_maps(
            load_association_map(map_a), load_association_map(map_b),
            exact_names ? NameNormalization::kExact : NameNormalization::kCaseFold);
        emit(out_path, diff.to_json(), out);
      };
    });
  }

  // graph
  std::string map_path;
  {
    auto* sub = app.add_subcommand("graph", "Export an association map as DOT");
    sub->add_option("--map", map_path, "Association map JSON")->required();
    sub->add_option("--out", out_path, "Output DOT file (default: stdout)");
    sub->callback([&] {
      action = [&] { emit(out_path, export_dot(load_association_map(map_path)), out); };
    });
  }

  // pipeline
  {
    auto* sub = app.add_subcommand(
        "pipeline", "gazetteer -> ignore -> tag -> split -> stats in one run");
    PipelineConfig flags;
    auto* config_opt = sub->add_option("--config", "Sectioned config file")
                           ->check(CLI::ExistingFile);
    std::vector<std::pair<CLI::Option*, std::function<void(PipelineConfig&)>>>
        overrides;
    auto* o_lore = sub->add_option("--lore", lore_path, "Lore JSON file");
    overrides.emplace_back(o_lore, [&](PipelineConfig& c) { c.lore = lore_path; });
    auto* o_names = sub->add_option("--names", name_paths, "Name list (repeatable)");
    overrides.emplace_back(o_names, [&](PipelineConfig& c) {
      c.names.assign(name_paths.begin(), name_paths.end());
    });
    auto* o_infobox = sub->add_option("--infobox", infobox_path, "Infobox JSON file");
    overrides.emplace_back(o_infobox,
                           [&](PipelineConfig& c) { c.infobox = infobox_path; });
    auto* o_type = sub->add_option("--type-key", type_key, "Infobox filter key");
    overrides.emplace_back(
        o_type, [&](PipelineConfig& c) { c.infobox_type_key = type_key; });
    auto* o_exclude =
        sub->add_option("--exclude", exclude, "Infobox value to drop (repeatable)");
    overrides.emplace_back(o_exclude, [&](PipelineConfig& c) {
      c.infobox_exclude = {exclude.begin(), exclude.end()};
    });
    auto* o_threshold =
        sub->add_option("--threshold", threshold, "Ignore-list document threshold");
    overrides.emplace_back(o_threshold, [&](PipelineConfig& c) {
      c.gazetteer.ignore_threshold = threshold;
    });
    auto* o_case =
        sub->add_flag("--case-sensitive", case_sensitive, "Case-sensitive names");
    overrides.emplace_back(o_case, [&](PipelineConfig& c) {
      c.gazetteer.case_insensitive = !case_sensitive;
    });
    auto* o_mode = sub->add_option("--mode", mode_name, "substring or word_boundary");
    overrides.emplace_back(
        o_mode, [&](PipelineConfig& c) { c.mode = parse_match_mode(mode_name); });
    auto* o_label = sub->add_option("--label", label, "Entity label");
    overrides.emplace_back(o_label, [&](PipelineConfig& c) { c.label = label; });
    auto* o_ratios = sub->add_option("--ratios", ratios_text, "train,dev,test");
    overrides.emplace_back(o_ratios, [&](PipelineConfig& c) {
      c.split.ratios = SplitSpec::parse_ratios(ratios_text);
    });
    auto* o_seed = sub->add_option("--seed", seed, "Document shuffle seed");
    overrides.emplace_back(o_seed,
                           [&](PipelineConfig& c) { c.split.shuffle_seed = seed; });
    auto* o_out = sub->add_option("--out-dir", out_dir, "Output directory")
                      ->envname(kOutDirEnv);
    overrides.emplace_back(o_out, [&](PipelineConfig& c) { c.out_dir = out_dir; });

    sub->callback([&, config_opt, overrides] {
      action = [&, config_opt, overrides] {
        PipelineConfig config;
        if (config_opt->count() > 0) {
          config = load_pipeline_config(config_opt->as<std::string>());
        }
        for (const auto& [opt, apply] : overrides) {
          if (opt->count() > 0) apply(config);
        }
        const auto outputs = run_pipeline(config, err);
        for (const auto& [name, contents] : outputs) {
          write_file_atomic(config.out_dir / name, contents);
        }
        log_line(err, "pipeline", std::to_string(outputs.size()) +
                                      " files written to " +
                                      config.out_dir.string());
      };
    });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (action) action();
  } catch (const Error& e) {
    err << "loretag: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "loretag: error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitOk;
}

}  // namespace loretag::cli
