// Copyright 2026 The advtext Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "advtext/attacks/registry.h"
#include "advtext/core/error.h"
#include "advtext/harness/components.h"
#include "advtext/harness/dataset.h"
#include "advtext/harness/fixtures.h"
#include "advtext/harness/outcome_io.h"
#include "advtext/harness/report.h"
#include "advtext/harness/runner.h"
#include "advtext/victims/linear_victim.h"
#include "json.hpp"

namespace advtext::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

std::string UtcNow() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json ConfigJson(const AttackConfig& c) {
  return {{"method", MethodName(c.method)},
          {"substitute_k", c.substitute_k},
          {"pred_threshold", c.pred_threshold},
          {"max_iterations", c.max_iterations},
          {"population_size", c.population_size},
          {"generations", c.generations},
          {"query_budget", c.query_budget},
          {"bam2_extra_iteration", c.bam2_extra_iteration},
          {"pos_check", c.pos_check},
          {"min_candidate_score", c.min_candidate_score}};
}

void WriteFile(const fs::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << content)) throw Error(ErrorCode::kIo, "cannot write " + path.string());
}

void EnsureDir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create " + dir.string() + ": " + ec.message());
}

std::vector<ReportFormat> ParseFormats(const std::vector<std::string>& names) {
  std::vector<ReportFormat> out;
  for (const auto& n : names) out.push_back(ReportFormatFromName(n));
  return out;
}

void WriteReports(const std::vector<ReportRow>& rows, const fs::path& dir,
                  const std::vector<ReportFormat>& formats) {
  for (const auto f : formats) {
    WriteFile(dir / ("report." + std::string(ReportFormatExtension(f))), RenderReport(rows, f));
  }
}

struct AttackArgs {
  std::string dataset, victim, method, provider, neighbours, scorer = "overlap";
  std::string task, out_dir = "advtext-out";
  std::uint64_t seed = 0, query_budget = kDefaultQueryBudget;
  std::size_t parallelism = 1;
  bool bam2_extra = false, no_pos_check = false;
  std::vector<std::string> formats{"markdown", "csv", "json"};
};

int Attack(const AttackArgs& a, std::ostream& out) {
  const std::string started = UtcNow();
  TaskDataset dataset = LoadDataset(fs::path(a.dataset));
  if (!a.task.empty()) dataset.name = a.task;
  const auto victim = MakeVictim(a.victim);

  AttackResources resources;
  std::string provider_spec = a.provider;
  if (provider_spec.empty()) provider_spec = DefaultRemoteSpec().value_or("");
  if (!provider_spec.empty()) resources.provider = MakeProvider(provider_spec);
  if (!a.neighbours.empty()) resources.neighbours = MakeProvider(a.neighbours);
  AttackOptions options;
  options.query_budget = a.query_budget;
  options.bam2_extra_iteration = a.bam2_extra;
  options.pos_check = !a.no_pos_check;
  const auto attack = MakeAttack(a.method, resources, options);
  const auto scorer = MakeScorer(a.scorer);
  const auto formats = ParseFormats(a.formats);

  RunOptions run;
  run.parallelism = a.parallelism;
  run.seed = a.seed;
  const RunResult result = RunAttackSet(dataset, *victim, *attack, *scorer, run);

  const fs::path dir(a.out_dir);
  EnsureDir(dir);
  {
    std::ofstream f(dir / "outcomes.ndjson", std::ios::binary);
    if (!f) throw Error(ErrorCode::kIo, "cannot write outcomes");
    WriteOutcomes(result.outcomes, f);
  }
  WriteReports({result.row}, dir, formats);
  json configs = json::array();
  for (const auto& c : attack->configs()) configs.push_back(ConfigJson(c));
  const json meta = {{"tool", "advtext"},
                     {"version", kVersion},
                     {"command", "attack"},
                     {"dataset", a.dataset},
                     {"task", dataset.name},
                     {"instances", dataset.instances.size()},
                     {"victim", a.victim},
                     {"provider", provider_spec},
                     {"neighbours", a.neighbours},
                     {"scorer", a.scorer},
                     {"method", attack->name()},
                     {"configs", configs},
                     {"seed", a.seed},
                     {"parallelism", a.parallelism},
                     {"victim_queries", victim->queries()},
                     {"started_at", started},
                     {"finished_at", UtcNow()}};
  WriteFile(dir / "metadata.json", meta.dump(2) + "\n");
  out << RenderReport({result.row}, ReportFormat::kMarkdown);
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Black-box adversarial attacks on credibility classifiers, scored with BODEGA.",
               "advtext"};
  app.set_version_flag("--version", kVersion);
  app.set_config("--config", "", "Read options from a TOML or INI file");
  app.require_subcommand(1);

  // train-victim
  std::string corpus, model_out;
  TrainingConfig training;
  auto* train = app.add_subcommand("train-victim", "Fit the builtin linear victim on a TSV corpus");
  train->add_option("--corpus", corpus, "Labelled TSV corpus")->required();
  train->add_option("--out", model_out, "Model file to write")->required();
  train->add_option("--epochs", training.epochs)->check(CLI::PositiveNumber);
  train->add_option("--learning-rate", training.learning_rate)->check(CLI::PositiveNumber);
  train->add_option("--seed", training.seed);

  // attack
  AttackArgs aa;
  auto* attack = app.add_subcommand("attack", "Attack a dataset and report BODEGA scores");
  attack->add_option("--dataset", aa.dataset, "TSV attack set")->required();
  attack->add_option("--victim", aa.victim, "builtin:<model> or remote:<endpoint>")->required();
  attack->add_option("--method", aa.method,
                     "Attack or cascade, e.g. bam2+genetic. Methods: " + MethodCatalogue())
      ->required();
  attack->add_option("--provider", aa.provider,
                     "embeddings:<file>, static:<file> or remote:<endpoint>");
  attack->add_option("--neighbours", aa.neighbours,
                     "Neighbour source for gswse/textfooler (defaults to --provider)");
  attack->add_option("--scorer", aa.scorer, "overlap, embedding:<file> or remote:<endpoint>");
  attack->add_option("--task", aa.task, "Task name for the report (default: dataset file stem)");
  attack->add_option("--out-dir", aa.out_dir, "Directory for outcomes, reports and metadata");
  attack->add_option("--seed", aa.seed, "Master seed");
  attack->add_option("--parallelism", aa.parallelism, "Worker threads")->check(CLI::PositiveNumber);
  attack->add_option("--query-budget", aa.query_budget, "Victim queries per instance")
      ->check(CLI::PositiveNumber);
  attack->add_option("--format", aa.formats, "Report formats: markdown, csv, json");
  attack->add_flag("--bam2-extra-iteration", aa.bam2_extra,
                   "Add a seventh BAm2 step replacing seven words");
  attack->add_flag("--no-pos-check", aa.no_pos_check, "Disable TextFooler's part-of-speech check");

  // score
  std::string pairs, score_victim, score_scorer = "overlap", score_dir = "advtext-out";
  std::vector<std::string> score_formats{"markdown", "csv", "json"};
  auto* score = app.add_subcommand("score", "Score ready-made original/adversarial pairs");
  score->add_option("--pairs", pairs, "NDJSON with original and adversarial fields")->required();
  score->add_option("--victim", score_victim, "Victim deciding the confusion score")->required();
  score->add_option("--scorer", score_scorer);
  score->add_option("--out-dir", score_dir);
  score->add_option("--format", score_formats);

  // report
  std::string outcomes_path, report_format = "markdown", report_out;
  auto* report = app.add_subcommand("report", "Render a report from an outcomes file");
  report->add_option("--outcomes", outcomes_path, "outcomes.ndjson")->required();
  report->add_option("--format", report_format, "markdown, csv or json");
  report->add_option("--out", report_out, "Write here instead of stdout");

  // gen-fixtures
  std::string fixture_dir;
  FixtureOptions fixture;
  auto* gen = app.add_subcommand("gen-fixtures", "Write a synthetic corpus, embeddings and synonyms");
  gen->add_option("--out-dir", fixture_dir)->required();
  gen->add_option("--instances", fixture.instances)->check(CLI::Range(2, 1000000));
  gen->add_option("--seed", fixture.seed);
  gen->add_option("--pair-fraction", fixture.pair_fraction)->check(CLI::Range(0.0, 1.0));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*train) {
      const TaskDataset ds = LoadDataset(fs::path(corpus));
      const TrainingResult r = TrainLinearVictim(ds.instances, training);
      r.model.SaveFile(model_out);
      const json meta = {{"tool", "advtext"},        {"version", kVersion},
                         {"command", "train-victim"}, {"corpus", corpus},
                         {"instances", ds.instances.size()},
                         {"epochs", training.epochs}, {"learning_rate", training.learning_rate},
                         {"seed", training.seed},     {"training_accuracy", r.training_accuracy},
                         {"created_at", UtcNow()}};
      WriteFile(model_out + ".meta.json", meta.dump(2) + "\n");
      out << "trained on " << ds.instances.size() << " instances, training accuracy "
          << FormatFixed2(r.training_accuracy) << "\n";
      return kExitOk;
    }
    if (*attack) return Attack(aa, out);
    if (*score) {
      std::ifstream in(pairs, std::ios::binary);
      if (!in) throw Error(ErrorCode::kIo, "cannot open " + pairs);
      auto records = ReadOutcomes(in);
      const auto victim = MakeVictim(score_victim);
      for (auto& r : records) {
        if (r.victim == "unknown") r.victim = victim->name();
        if (r.method == "unknown") r.method = "pairs";
      }
      const auto rows = ScorePairs(records, *victim, *MakeScorer(score_scorer));
      const fs::path dir(score_dir);
      EnsureDir(dir);
      WriteReports(rows, dir, ParseFormats(score_formats));
      const json meta = {{"tool", "advtext"},      {"version", kVersion},
                         {"command", "score"},      {"pairs", pairs},
                         {"victim", score_victim},  {"scorer", score_scorer},
                         {"created_at", UtcNow()}};
      WriteFile(dir / "metadata.json", meta.dump(2) + "\n");
      out << RenderReport(rows, ReportFormat::kMarkdown);
      return kExitOk;
    }
    if (*report) {
      std::ifstream in(outcomes_path, std::ios::binary);
      if (!in) throw Error(ErrorCode::kIo, "cannot open " + outcomes_path);
      const std::string doc =
          RenderReport(SummarizeOutcomes(ReadOutcomes(in)), ReportFormatFromName(report_format));
      if (report_out.empty()) {
        out << doc;
      } else {
        WriteFile(report_out, doc);
      }
      return kExitOk;
    }
    if (*gen) {
      const auto fx = MakeSyntheticFixtures(fixture);
      WriteFixtureFiles(fx, fixture_dir);
      const json meta = {{"tool", "advtext"},
                         {"version", kVersion},
                         {"command", "gen-fixtures"},
                         {"instances", fixture.instances},
                         {"seed", fixture.seed},
                         {"pair_fraction", fixture.pair_fraction},
                         {"created_at", UtcNow()}};
      WriteFile(fs::path(fixture_dir) / "metadata.json", meta.dump(2) + "\n");
      out << "wrote corpus.tsv, embeddings.txt and synonyms.tsv to " << fixture_dir << "\n";
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "advtext: " << e.what() << "\n";
    return e.code() == ErrorCode::kUsage ? kExitUsage : kExitRuntime;
  } catch (const std::exception& e) {
    err << "advtext: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace advtext::cli
