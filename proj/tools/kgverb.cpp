// Copyright 2026 The kgverb Authors.
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
//
// Command-line front end. Settings are layered: built-in defaults, then
// the JSON config file, then KGVERB_WORKERS, then flags.

#include <cstdlib>
#include <initializer_list>
#include <iostream>
#include <string>
#include <utility>

#include <CLI11.hpp>

#include "kgverb/pipeline.hpp"

namespace {

using kgverb::PipelineConfig;

constexpr const char* kSubcommands[] = {
    "validate", "align",  "cooc",        "group",   "serialize",
    "score",    "filter", "eval-scorer", "package", "report",
};

// Finds the subcommand and any --config value before CLI11 runs, so the
// config file can be applied first and flags can override it.
struct PreScan {
  std::string subcommand;
  std::string config_path;
};

PreScan pre_scan(int argc, char** argv) {
  PreScan result;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--config" && i + 1 < argc) {
      result.config_path = argv[i + 1];
      ++i;
    } else if (arg.rfind("--config=", 0) == 0) {
      result.config_path = arg.substr(9);
    } else if (result.subcommand.empty()) {
      for (const char* name : kSubcommands)
        if (arg == name) result.subcommand = name;
    }
  }
  return result;
}

int require_paths(
    std::initializer_list<std::pair<const std::string*, const char*>> required) {
  for (const auto& [field, flag] : required) {
    if (field->empty()) {
      std::cerr << "error: " << flag << " is required\n";
      return 2;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  PipelineConfig cfg;
  PreScan scan = pre_scan(argc, argv);

  // serialize and report treat these inputs as opt-in, so their defaults
  // must not make them look requested.
  if (scan.subcommand == "serialize") {
    cfg.aligned_path.clear();
    cfg.groups_path.clear();
  } else if (scan.subcommand == "report") {
    cfg.stats_path.clear();
    cfg.groups_path.clear();
  }

  if (!scan.config_path.empty()) {
    try {
      auto in = kgverb::open_input(scan.config_path);
      kgverb::apply_config_json(cfg, kgverb::json::parse(in));
    } catch (const std::exception& e) {
      std::cerr << "error: config file: " << e.what() << '\n';
      return 2;
    }
  }

  if (const char* env = std::getenv("KGVERB_WORKERS")) {
    char* end = nullptr;
    unsigned long value = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0')
      cfg.workers = static_cast<unsigned>(value);
    else
      std::cerr << "warning: ignoring invalid KGVERB_WORKERS value\n";
  }

  CLI::App app{"knowledge graph verbalization pipeline"};
  app.require_subcommand(1);
  std::string config_sink;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_sink, "JSON config file");
    sub->add_flag("--strict", cfg.strict, "fail the stage on any rejected record");
  };

  CLI::App* validate = app.add_subcommand("validate", "check input files");
  add_common(validate);
  validate->add_option("--entities", cfg.entities_path, "entity records (jsonl)");
  validate->add_option("--triples", cfg.triples_path, "triple records (jsonl)");
  validate->add_option("--pages", cfg.pages_path, "page records (jsonl)");
  validate->add_flag("--repair", cfg.repair, "insert missing canonical aliases");

  CLI::App* align = app.add_subcommand("align", "match triples to page sentences");
  add_common(align);
  align->add_option("--entities", cfg.entities_path, "entity records (jsonl)");
  align->add_option("--triples", cfg.triples_path, "triple records (jsonl)");
  align->add_option("--pages", cfg.pages_path, "page records (jsonl)");
  align->add_option("--aligned", cfg.aligned_path, "output alignment examples (jsonl)");
  align->add_option("--stats", cfg.stats_path, "output alignment statistics (json)");
  align->add_option("--workers", cfg.workers, "worker threads, 0 = all");
  align->add_flag("--repair", cfg.repair, "insert missing canonical aliases");

  CLI::App* cooc = app.add_subcommand("cooc", "count relation co-occurrence");
  add_common(cooc);
  cooc->add_option("--aligned", cfg.aligned_path, "alignment examples (jsonl)");
  cooc->add_option("--cooc", cfg.cooc_path, "output co-occurrence counts (tsv)");

  CLI::App* group = app.add_subcommand("group", "chain triples by co-occurrence");
  add_common(group);
  group->add_option("--entities", cfg.entities_path, "entity records (jsonl)");
  group->add_option("--triples", cfg.triples_path, "triple records (jsonl)");
  group->add_option("--cooc", cfg.cooc_path, "co-occurrence counts (tsv)");
  group->add_option("--groups", cfg.groups_path, "output triple groups (jsonl)");
  group->add_option("--max-depth", cfg.max_depth, "maximum chain length");
  group->add_option("--cutoff", cfg.cutoff, "minimum co-occurrence count");
  group->add_flag("--repair", cfg.repair, "insert missing canonical aliases");

  CLI::App* serialize = app.add_subcommand("serialize", "render text for a generator");
  add_common(serialize);
  serialize->add_option("--entities", cfg.entities_path, "entity records (jsonl)");
  serialize->add_option("--aligned", cfg.aligned_path, "alignment examples (jsonl)");
  serialize->add_option("--groups", cfg.groups_path, "triple groups (jsonl)");
  serialize->add_option("--train", cfg.train_path, "output training pairs (tsv)");
  serialize->add_option("--inputs", cfg.inputs_path, "output generator inputs (txt)");
  serialize->add_flag("--repair", cfg.repair, "insert missing canonical aliases");

  CLI::App* score = app.add_subcommand("score", "score generated sentences");
  add_common(score);
  score->add_option("--entities", cfg.entities_path, "entity records (jsonl)");
  score->add_option("--groups", cfg.groups_path, "triple groups (jsonl)");
  score->add_option("--generated", cfg.generated_path, "generated sentences (tsv)");
  score->add_option("--scores", cfg.scores_path, "output scores (tsv)");
  score->add_option("--workers", cfg.workers, "worker threads, 0 = all");
  score->add_flag("--repair", cfg.repair, "insert missing canonical aliases");

  CLI::App* filter = app.add_subcommand("filter", "drop the lowest-scored sentences");
  add_common(filter);
  filter->add_option("--scores", cfg.scores_path, "scores (tsv)");
  filter->add_option("--generated", cfg.generated_path, "generated sentences (tsv)");
  filter->add_option("--groups", cfg.groups_path, "triple groups (jsonl)");
  filter->add_option("--kept", cfg.kept_path, "output kept sentences (jsonl)");
  filter->add_option("--removed", cfg.removed_path, "output removed sentences (jsonl)");
  filter->add_option("--fraction", cfg.fraction, "fraction to remove, in [0, 1)")
      ->check(CLI::Range(0.0, 1.0));

  CLI::App* eval_scorer = app.add_subcommand("eval-scorer",
                                             "correlate scores against references");
  add_common(eval_scorer);
  eval_scorer->add_option("--predicted", cfg.predicted_path, "predicted scores (tsv)");
  eval_scorer->add_option("--human", cfg.human_path, "reference scores (tsv)");
  eval_scorer->add_option("--format", cfg.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* package = app.add_subcommand("package", "bundle sentences into documents");
  add_common(package);
  package->add_option("--kept", cfg.kept_path, "kept sentences (jsonl)");
  package->add_option("--documents", cfg.documents_path, "output documents (jsonl)");

  CLI::App* report = app.add_subcommand("report", "render pipeline statistics");
  add_common(report);
  report->add_option("--stats", cfg.stats_path, "alignment statistics (json)");
  report->add_option("--groups", cfg.groups_path, "triple groups (jsonl)");
  report->add_option("--format", cfg.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  if (validate->parsed()) {
    if (int rc = require_paths({{&cfg.entities_path, "--entities"}})) return rc;
    return kgverb::run_validate(cfg, std::cout, std::cerr);
  }
  if (align->parsed()) {
    if (int rc = require_paths({{&cfg.entities_path, "--entities"},
                                {&cfg.triples_path, "--triples"},
                                {&cfg.pages_path, "--pages"}}))
      return rc;
    return kgverb::run_align(cfg, std::cout, std::cerr);
  }
  if (cooc->parsed()) {
    if (int rc = require_paths({{&cfg.aligned_path, "--aligned"}})) return rc;
    return kgverb::run_cooc(cfg, std::cout, std::cerr);
  }
  if (group->parsed()) {
    if (int rc = require_paths({{&cfg.entities_path, "--entities"},
                                {&cfg.triples_path, "--triples"},
                                {&cfg.cooc_path, "--cooc"}}))
      return rc;
    return kgverb::run_group(cfg, std::cout, std::cerr);
  }
  if (serialize->parsed()) {
    if (int rc = require_paths({{&cfg.entities_path, "--entities"}})) return rc;
    return kgverb::run_serialize(cfg, std::cout, std::cerr);
  }
  if (score->parsed()) {
    if (int rc = require_paths({{&cfg.entities_path, "--entities"},
                                {&cfg.groups_path, "--groups"},
                                {&cfg.generated_path, "--generated"}}))
      return rc;
    return kgverb::run_score(cfg, std::cout, std::cerr);
  }
  if (filter->parsed()) {
    if (int rc = require_paths({{&cfg.scores_path, "--scores"},
                                {&cfg.generated_path, "--generated"},
                                {&cfg.groups_path, "--groups"}}))
      return rc;
    return kgverb::run_filter(cfg, std::cout, std::cerr);
  }
  if (eval_scorer->parsed()) {
    if (int rc = require_paths({{&cfg.predicted_path, "--predicted"},
                                {&cfg.human_path, "--human"}}))
      return rc;
    return kgverb::run_eval_scorer(cfg, std::cout, std::cerr);
  }
  if (package->parsed()) {
    if (int rc = require_paths({{&cfg.kept_path, "--kept"}})) return rc;
    return kgverb::run_package(cfg, std::cout, std::cerr);
  }
  if (report->parsed()) return kgverb::run_report(cfg, std::cout, std::cerr);

  std::cerr << "error: no subcommand\n";
  return 2;
}
