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
// Stage runners behind the command-line front end. Stages communicate
// only through files, so an external generator (or scorer) slots between
// serialize and score/filter without the toolkit knowing about it. Exit
// codes: 0 success, 1 validation or runtime failure, 2 usage error (the
// front end owns argument errors). A malformed record normally fails just
// that record; --strict fails the stage.

#ifndef KGVERB_PIPELINE_HPP_
#define KGVERB_PIPELINE_HPP_

#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kgverb/aligner.hpp"
#include "kgverb/correlation.hpp"
#include "kgverb/filter.hpp"
#include "kgverb/grouper.hpp"
#include "kgverb/ingest.hpp"
#include "kgverb/io.hpp"
#include "kgverb/parallel.hpp"
#include "kgverb/report.hpp"
#include "kgverb/serializer.hpp"

namespace kgverb {

struct PipelineConfig {
  // Inputs.
  std::string entities_path;
  std::string triples_path;
  std::string pages_path;
  std::string generated_path;
  std::string predicted_path;
  std::string human_path;

  // Stage outputs (inputs to later stages).
  std::string aligned_path = "aligned.jsonl";
  std::string stats_path = "stats.json";
  std::string cooc_path = "cooc.tsv";
  std::string groups_path = "groups.jsonl";
  std::string train_path = "train.tsv";
  std::string inputs_path = "inputs.txt";
  std::string scores_path = "scores.tsv";
  std::string kept_path = "kept.jsonl";
  std::string removed_path = "removed.jsonl";
  std::string documents_path = "documents.jsonl";

  std::size_t max_depth = 5;
  std::uint64_t cutoff = 5;
  double fraction = 0.01;
  bool strict = false;
  bool repair = false;
  unsigned workers = 0;  // 0 = all hardware threads
  std::string format = "text";
};

// Applies config-file values; command-line flags are applied afterwards
// by the front end and therefore win.
inline void apply_config_json(PipelineConfig& cfg, const json& j) {
  auto get_string = [&](const char* key, std::string& field) {
    if (j.contains(key)) field = j.at(key).get<std::string>();
  };
  get_string("entities", cfg.entities_path);
  get_string("triples", cfg.triples_path);
  get_string("pages", cfg.pages_path);
  get_string("generated", cfg.generated_path);
  get_string("predicted", cfg.predicted_path);
  get_string("human", cfg.human_path);
  get_string("aligned", cfg.aligned_path);
  get_string("stats", cfg.stats_path);
  get_string("cooc", cfg.cooc_path);
  get_string("groups", cfg.groups_path);
  get_string("train", cfg.train_path);
  get_string("inputs", cfg.inputs_path);
  get_string("scores", cfg.scores_path);
  get_string("kept", cfg.kept_path);
  get_string("removed", cfg.removed_path);
  get_string("documents", cfg.documents_path);
  get_string("format", cfg.format);
  if (j.contains("max_depth")) cfg.max_depth = j.at("max_depth").get<std::size_t>();
  if (j.contains("cutoff")) cfg.cutoff = j.at("cutoff").get<std::uint64_t>();
  if (j.contains("fraction")) cfg.fraction = j.at("fraction").get<double>();
  if (j.contains("strict")) cfg.strict = j.at("strict").get<bool>();
  if (j.contains("repair")) cfg.repair = j.at("repair").get<bool>();
  if (j.contains("workers")) cfg.workers = j.at("workers").get<unsigned>();
}

namespace detail {

// Prints diagnostics; true means the stage must stop under --strict.
inline bool gate(const PipelineConfig& cfg, const std::string& path,
                 const std::vector<Diagnostic>& diags, std::ostream& err) {
  write_diagnostics(err, path, diags);
  return cfg.strict && !diags.empty();
}

struct LoadedCatalog {
  EntityCatalog catalog;
  std::size_t rejected = 0;
};

// Entities file -> validated catalog. Parse and validation diagnostics
// are reported together under the entities path.
inline std::optional<LoadedCatalog> load_catalog(const PipelineConfig& cfg,
                                                 std::ostream& err) {
  auto in = open_input(cfg.entities_path);
  EntityLoadResult parsed = read_entity_records(in);
  CatalogBuildResult built = validate_catalog(std::move(parsed.records), cfg.repair);
  std::size_t rejected = parsed.diagnostics.size() + built.diagnostics.size();
  bool fatal = gate(cfg, cfg.entities_path, parsed.diagnostics, err);
  fatal = gate(cfg, cfg.entities_path, built.diagnostics, err) || fatal;
  if (fatal) return std::nullopt;
  return LoadedCatalog{std::move(built.catalog), rejected};
}

inline std::optional<std::size_t> parse_id_as_line(const std::string& id) {
  if (id.empty() || id.size() > 18) return std::nullopt;
  for (char c : id)
    if (!is_ascii_digit(c)) return std::nullopt;
  return static_cast<std::size_t>(std::stoull(id));
}

}  // namespace detail

// `validate`: parse and validate whatever inputs were given; any rejected
// record makes the exit code 1.
inline int run_validate(const PipelineConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    std::size_t total_rejected = 0;

    auto in = open_input(cfg.entities_path);
    EntityLoadResult parsed = read_entity_records(in);
    CatalogBuildResult built = validate_catalog(std::move(parsed.records), cfg.repair);
    write_diagnostics(err, cfg.entities_path, parsed.diagnostics);
    write_diagnostics(err, cfg.entities_path, built.diagnostics);
    std::size_t entity_rejected = parsed.diagnostics.size() + built.diagnostics.size();
    total_rejected += entity_rejected;
    out << "entities: " << built.catalog.size() << " accepted, " << entity_rejected
        << " rejected\n";

    if (!cfg.triples_path.empty()) {
      auto tin = open_input(cfg.triples_path);
      TripleLoadResult triples = load_triples(tin, built.catalog);
      write_diagnostics(err, cfg.triples_path, triples.diagnostics);
      total_rejected += triples.diagnostics.size();
      out << "triples: " << triples.triples.size() << " accepted, "
          << triples.diagnostics.size() << " rejected\n";
    }

    if (!cfg.pages_path.empty()) {
      auto pin = open_input(cfg.pages_path);
      PageLoadResult pages = load_pages(pin, built.catalog);
      write_diagnostics(err, cfg.pages_path, pages.diagnostics);
      total_rejected += pages.diagnostics.size();
      std::size_t sentences = 0;
      for (const auto& p : pages.pages) sentences += p.sentences.size();
      out << "pages: " << pages.pages.size() << " accepted, "
          << pages.diagnostics.size() << " rejected, " << sentences << " sentences\n";
    }

    return total_rejected == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

// `align`: entities + triples + pages -> aligned.jsonl + stats.json.
inline int run_align(const PipelineConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    auto loaded = detail::load_catalog(cfg, err);
    if (!loaded) return 1;

    auto tin = open_input(cfg.triples_path);
    TripleLoadResult triples = load_triples(tin, loaded->catalog);
    if (detail::gate(cfg, cfg.triples_path, triples.diagnostics, err)) return 1;

    auto pin = open_input(cfg.pages_path);
    PageLoadResult pages = load_pages(pin, loaded->catalog);
    if (detail::gate(cfg, cfg.pages_path, pages.diagnostics, err)) return 1;

    CorpusBundle bundle = make_bundle(std::move(loaded->catalog),
                                      std::move(triples.triples),
                                      std::move(pages.pages));
    AlignmentResult result = align_corpus(bundle, resolve_workers(cfg.workers));
    if (detail::gate(cfg, cfg.triples_path, result.diagnostics, err)) return 1;

    auto aligned_out = open_output(cfg.aligned_path);
    write_aligned(aligned_out, result.examples);
    auto stats_out = open_output(cfg.stats_path);
    stats_out << alignment_stats_to_json(result.stats).dump(2) << '\n';

    out << report_alignment_text(result.stats);
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

// `cooc`: aligned.jsonl -> cooc.tsv.
inline int run_cooc(const PipelineConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    auto in = open_input(cfg.aligned_path);
    AlignedReadResult aligned = read_aligned(in);
    if (detail::gate(cfg, cfg.aligned_path, aligned.diagnostics, err)) return 1;

    CooccurrenceStats stats = count_cooccurrence(aligned.examples);
    auto cooc_out = open_output(cfg.cooc_path);
    write_cooc(cooc_out, stats);
    out << "relation pairs: " << stats.pairs().size() << '\n';
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

// `group`: entities + triples + cooc.tsv -> groups.jsonl.
inline int run_group(const PipelineConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    auto loaded = detail::load_catalog(cfg, err);
    if (!loaded) return 1;

    auto tin = open_input(cfg.triples_path);
    TripleLoadResult triples = load_triples(tin, loaded->catalog);
    if (detail::gate(cfg, cfg.triples_path, triples.diagnostics, err)) return 1;

    auto cin_ = open_input(cfg.cooc_path);
    CoocReadResult cooc = read_cooc(cin_);
    if (detail::gate(cfg, cfg.cooc_path, cooc.diagnostics, err)) return 1;

    std::vector<Diagnostic> flatten_diags;
    std::vector<FlatTriple> flats;
    for (const auto& t : triples.triples)
      for (auto& f : flatten_subproperties(t, loaded->catalog, &flatten_diags))
        flats.push_back(std::move(f));
    if (detail::gate(cfg, cfg.triples_path, flatten_diags, err)) return 1;

    GroupingConfig gcfg{cfg.max_depth, cfg.cutoff};
    std::vector<TripleGroup> groups = group_corpus(flats, cooc.stats, gcfg);
    auto gout = open_output(cfg.groups_path);
    write_groups(gout, groups);
    out << report_grouping_text(report_grouping(groups));
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

// `serialize`: aligned.jsonl -> train.tsv and/or groups.jsonl -> inputs.txt.
inline int run_serialize(const PipelineConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    auto loaded = detail::load_catalog(cfg, err);
    if (!loaded) return 1;

    bool did_any = false;
    if (!cfg.aligned_path.empty()) {
      auto in = open_input(cfg.aligned_path);
      AlignedReadResult aligned = read_aligned(in);
      if (detail::gate(cfg, cfg.aligned_path, aligned.diagnostics, err)) return 1;
      auto pairs = emit_training_pairs(aligned.examples, loaded->catalog);
      auto tout = open_output(cfg.train_path);
      write_train_tsv(tout, pairs);
      out << "training pairs: " << pairs.size() << '\n';
      did_any = true;
    }
    if (!cfg.groups_path.empty()) {
      auto in = open_input(cfg.groups_path);
      GroupsReadResult groups = read_groups(in);
      if (detail::gate(cfg, cfg.groups_path, groups.diagnostics, err)) return 1;
      std::vector<std::string> lines;
      lines.reserve(groups.groups.size());
      for (const auto& g : groups.groups)
        lines.push_back(serialize_group(g, loaded->catalog));
      auto iout = open_output(cfg.inputs_path);
      write_inputs(iout, lines);
      out << "generator inputs: " << lines.size() << '\n';
      did_any = true;
    }
    if (!did_any) {
      err << "error: serialize needs aligned examples or groups\n";
      return 2;
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

// `score`: groups.jsonl + generated.tsv -> scores.tsv via the built-in
// coverage heuristic. Sentence ids are the 1-based generator line numbers.
inline int run_score(const PipelineConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    auto loaded = detail::load_catalog(cfg, err);
    if (!loaded) return 1;

    auto gin = open_input(cfg.groups_path);
    GroupsReadResult groups = read_groups(gin);
    if (detail::gate(cfg, cfg.groups_path, groups.diagnostics, err)) return 1;

    auto genin = open_input(cfg.generated_path);
    GeneratedReadResult generated = read_generated(genin);
    if (detail::gate(cfg, cfg.generated_path, generated.diagnostics, err)) return 1;

    std::vector<Diagnostic> range_diags;
    std::vector<std::pair<std::size_t, std::string>> usable;
    for (const auto& [line_number, text] : generated.sentences) {
      if (line_number > groups.groups.size()) {
        range_diags.push_back(
            {0, "generated line number " + std::to_string(line_number) +
                    " exceeds group count " + std::to_string(groups.groups.size())});
        continue;
      }
      usable.emplace_back(line_number, text);
    }
    if (detail::gate(cfg, cfg.generated_path, range_diags, err)) return 1;

    std::vector<ScoredSentence> scored(usable.size());
    const EntityCatalog& catalog = loaded->catalog;
    parallel_for(usable.size(), resolve_workers(cfg.workers), [&](std::size_t i) {
      const auto& [line_number, text] = usable[i];
      const TripleGroup& group = groups.groups[line_number - 1];
      ScoredSentence s;
      s.id = std::to_string(line_number);
      s.subject = group.subject;
      s.text = text;
      s.score = heuristic_score(text, group, catalog);
      scored[i] = std::move(s);
    });

    auto sout = open_output(cfg.scores_path);
    write_scores(sout, scored);
    out << "scored sentences: " << scored.size() << '\n';
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

// `filter`: scores.tsv + generated.tsv + groups.jsonl -> kept/removed.jsonl.
inline int run_filter(const PipelineConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    auto sin = open_input(cfg.scores_path);
    ScoresReadResult scores = read_scores(sin);
    if (detail::gate(cfg, cfg.scores_path, scores.diagnostics, err)) return 1;

    auto genin = open_input(cfg.generated_path);
    GeneratedReadResult generated = read_generated(genin);
    if (detail::gate(cfg, cfg.generated_path, generated.diagnostics, err)) return 1;

    auto gin = open_input(cfg.groups_path);
    GroupsReadResult groups = read_groups(gin);
    if (detail::gate(cfg, cfg.groups_path, groups.diagnostics, err)) return 1;

    std::unordered_map<std::size_t, const std::string*> text_by_line;
    for (const auto& [line_number, text] : generated.sentences)
      text_by_line.emplace(line_number, &text);

    std::vector<Diagnostic> join_diags;
    std::vector<ScoredSentence> items;
    items.reserve(scores.scores.size());
    for (const auto& [id, score] : scores.scores) {
      auto line = detail::parse_id_as_line(id);
      std::size_t line_number = line.value_or(0);
      auto text_it = text_by_line.find(line_number);
      if (line_number == 0 || line_number > groups.groups.size() ||
          text_it == text_by_line.end()) {
        join_diags.push_back({0, "score id '" + id + "' matches no generated sentence"});
        continue;
      }
      ScoredSentence s;
      s.id = id;
      s.score = score;
      s.text = *text_it->second;
      s.subject = groups.groups[line_number - 1].subject;
      items.push_back(std::move(s));
    }
    if (detail::gate(cfg, cfg.scores_path, join_diags, err)) return 1;

    FilterResult result = percentile_filter(items, cfg.fraction);
    auto kout = open_output(cfg.kept_path);
    write_scored(kout, result.kept);
    auto rout = open_output(cfg.removed_path);
    write_scored(rout, result.removed);
    out << "kept: " << result.kept.size() << ", removed: " << result.removed.size()
        << '\n';
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

// `eval-scorer`: two score tables joined by id -> correlation report.
inline int run_eval_scorer(const PipelineConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    auto pin = open_input(cfg.predicted_path);
    ScoresReadResult predicted = read_scores(pin);
    if (detail::gate(cfg, cfg.predicted_path, predicted.diagnostics, err)) return 1;

    auto hin = open_input(cfg.human_path);
    ScoresReadResult human = read_scores(hin);
    if (detail::gate(cfg, cfg.human_path, human.diagnostics, err)) return 1;

    std::unordered_map<std::string, double> human_by_id;
    for (const auto& [id, score] : human.scores) human_by_id[id] = score;

    std::vector<double> xs, ys;
    std::vector<Diagnostic> join_diags;
    for (const auto& [id, score] : predicted.scores) {
      auto it = human_by_id.find(id);
      if (it == human_by_id.end()) {
        join_diags.push_back({0, "predicted id '" + id + "' has no human score"});
        continue;
      }
      xs.push_back(score);
      ys.push_back(it->second);
    }
    if (detail::gate(cfg, cfg.predicted_path, join_diags, err)) return 1;
    if (xs.size() < 2) {
      err << "error: need at least two joined score pairs, got " << xs.size() << '\n';
      return 1;
    }

    CorrelationReport report = eval_scorer(xs, ys);
    auto show = [](const std::optional<double>& v) -> std::string {
      if (!v) return "undefined";
      std::ostringstream s;
      s << std::fixed << std::setprecision(6) << *v;
      return s.str();
    };
    if (cfg.format == "json") {
      json j;
      j["n"] = report.n;
      j["pearson"] = report.pearson ? json(*report.pearson) : json(nullptr);
      j["spearman"] = report.spearman ? json(*report.spearman) : json(nullptr);
      j["kendall"] = report.kendall ? json(*report.kendall) : json(nullptr);
      out << j.dump(2) << '\n';
    } else {
      out << "pairs    " << report.n << '\n';
      out << "pearson  " << show(report.pearson) << '\n';
      out << "spearman " << show(report.spearman) << '\n';
      out << "kendall  " << show(report.kendall) << '\n';
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

// `package`: kept.jsonl -> documents.jsonl, one document per subject.
inline int run_package(const PipelineConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    auto kin = open_input(cfg.kept_path);
    ScoredReadResult kept = read_scored(kin);
    if (detail::gate(cfg, cfg.kept_path, kept.diagnostics, err)) return 1;

    std::vector<std::pair<std::string, std::string>> sentences;
    sentences.reserve(kept.items.size());
    for (const auto& s : kept.items) sentences.emplace_back(s.subject, s.text);

    std::vector<CorpusDocument> docs = package_documents(sentences);
    auto dout = open_output(cfg.documents_path);
    write_documents(dout, docs);
    out << "documents: " << docs.size() << '\n';
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

// `report`: renders stats.json and/or groups.jsonl.
inline int run_report(const PipelineConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    std::optional<AlignmentStats> stats;
    std::optional<GroupingReport> grouping;
    if (!cfg.stats_path.empty()) {
      auto in = open_input(cfg.stats_path);
      json j = json::parse(in);
      stats = alignment_stats_from_json(j);
    }
    if (!cfg.groups_path.empty()) {
      auto in = open_input(cfg.groups_path);
      GroupsReadResult groups = read_groups(in);
      if (detail::gate(cfg, cfg.groups_path, groups.diagnostics, err)) return 1;
      grouping = report_grouping(groups.groups);
    }
    if (!stats && !grouping) {
      err << "error: report needs alignment stats or groups\n";
      return 2;
    }

    if (cfg.format == "json") {
      json j;
      if (stats) j["alignment"] = alignment_stats_to_json(*stats);
      if (grouping) j["grouping"] = grouping_report_to_json(*grouping);
      out << j.dump(2) << '\n';
    } else {
      if (stats) out << report_alignment_text(*stats);
      if (grouping) out << report_grouping_text(*grouping);
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace kgverb

#endif  // KGVERB_PIPELINE_HPP_
