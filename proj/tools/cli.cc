// Copyright 2026 The sdgmap Authors.
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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sdgmap/classifier.h"
#include "sdgmap/combiner.h"
#include "sdgmap/corpus.h"
#include "sdgmap/error.h"
#include "sdgmap/evaluation.h"
#include "sdgmap/index.h"
#include "sdgmap/mapping.h"
#include "sdgmap/query.h"
#include "sdgmap/query_engine.h"
#include "sdgmap/querydev.h"

namespace sdgmap::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Globals {
  uint64_t seed = 42;
  int threads = 1;
  std::string format = "text";
  bool machine() const { return format == "machine"; }
};

// Output file or standard output for "-" / empty.
class Sink {
 public:
  Sink(const std::string &path, std::ostream &fallback) : out_(&fallback) {
    if (!path.empty() && path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) throw DataError("cannot write " + path);
      out_ = &file_;
    }
  }
  std::ostream &operator*() { return *out_; }
  void Close() {
    if (file_.is_open()) {
      file_.close();
      if (!file_) throw DataError("error while writing output");
    }
  }

 private:
  std::ofstream file_;
  std::ostream *out_;
};

void RequireSdg(int sdg) {
  if (!IsValidSdg(sdg)) throw ConfigError("--sdg must be in [1, 17]");
}

std::set<std::string> ReadIdList(const fs::path &path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open id list " + path.string());
  std::set<std::string> ids;
  std::string line;
  while (std::getline(in, line)) {
    size_t b = line.find_first_not_of(" \t\r");
    size_t e = line.find_last_not_of(" \t\r");
    if (b != std::string::npos) ids.insert(line.substr(b, e - b + 1));
  }
  return ids;
}

// Ids named by --ids or assigned --sdg by --mapping.
std::set<std::string> ResolveIds(const std::string &ids_path, const std::string &mapping_path, int sdg) {
  if (!ids_path.empty()) return ReadIdList(ids_path);
  if (mapping_path.empty()) throw ConfigError("give --ids or --mapping with --sdg");
  RequireSdg(sdg);
  return LoadMapping(mapping_path).RecordsFor(sdg);
}

class App {
 public:
  App(std::ostream &out, std::ostream &err) : out_(out), err_(err) {}

  int Run(const std::vector<std::string> &args);

 private:
  void AddGlobals(CLI::App &app);
  void Ingest();
  void Parse();
  void Map();
  void Train();
  void Score();
  void CombineCmd();
  void ReportProvenance();
  int Evaluate();
  int GateCmd();
  void Sample();
  void Precision();
  void Recall();
  void SuggestTermsCmd();
  void ExpandCitations();
  void JournalReport();
  void Compare();

  std::ostream &out_;
  std::ostream &err_;
  Globals g_;

  // Option storage shared by subcommands.
  std::string corpus_, queries_, query_text_, mapping_, scores_, model_, out_path_, plot_data_,
      worksheet_, recall_set_, ids_, a_path_, b_path_, name_a_ = "a", name_b_ = "b", csv_path_;
  std::vector<std::string> methods_, datasets_;
  bool naive_ = false;
  bool include_sdg17_ = false;
  bool phrases_ = false;
  double theta_ = kDefaultThreshold;
  int sdg_ = 0;
  size_t n_ = 100;
  size_t k_ = 20;
  double precision_ = 0.0, recall_ = 0.0;
  size_t sample_size_ = 0;
  GateConfig gate_config_;
  TfidfConfig tfidf_config_;
  LogRegHyperparams hyper_;
  bool no_fulltext_ = false, no_subjects_ = false;
};

void App::AddGlobals(CLI::App &app) {
  app.add_option("--seed", g_.seed, "Random seed")->capture_default_str();
  app.add_option("--threads", g_.threads, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", g_.format, "Report format")
      ->check(CLI::IsMember({"text", "machine"}))
      ->capture_default_str();
}

int App::Run(const std::vector<std::string> &args) {
  CLI::App app{"Map research publications to Sustainable Development Goals", "sdgmap"};
  app.require_subcommand(1);
  app.fallthrough();
  AddGlobals(app);

  auto *ingest = app.add_subcommand("ingest", "Validate a corpus file");
  ingest->add_option("--corpus", corpus_, "Corpus JSONL")->required();
  ingest->add_option("--out", out_path_, "Write the validated corpus in canonical form");

  auto *parse = app.add_subcommand("parse", "Check a query bank and print it in canonical form");
  auto *parse_src = parse->add_option("--queries", queries_, "Query bank file or directory");
  parse->add_option("--query", query_text_, "A single query")->excludes(parse_src);

  auto *map = app.add_subcommand("map", "Run a query bank over a corpus");
  map->add_option("--corpus", corpus_)->required();
  map->add_option("--queries", queries_)->required();
  map->add_option("--out", out_path_, "Mapping JSONL")->required();
  map->add_flag("--naive", naive_, "Use the per-record matcher instead of the index");

  auto *train = app.add_subcommand("train", "Fit TF-IDF and per-SDG models from a query mapping");
  train->add_option("--corpus", corpus_)->required();
  train->add_option("--mapping", mapping_, "Query mapping used as weak labels")->required();
  train->add_option("--out", out_path_, "Model JSON")->required();
  train->add_option("--iterations", hyper_.iterations)->capture_default_str();
  train->add_option("--learning-rate", hyper_.learning_rate)->capture_default_str();
  train->add_option("--l2", hyper_.l2)->capture_default_str();
  train->add_option("--negative-ratio", hyper_.negative_ratio)->capture_default_str();
  train->add_option("--min-df", tfidf_config_.min_df)->capture_default_str();
  train->add_option("--max-vocabulary", tfidf_config_.max_vocabulary)->capture_default_str();
  train->add_option("--theta", theta_, "Threshold stored with the model")->capture_default_str();
  train->add_flag("--no-fulltext", no_fulltext_, "Ignore full-text terms");
  train->add_flag("--no-subjects", no_subjects_, "Ignore subject-area features");

  auto *score = app.add_subcommand("score", "Emit per-SDG probabilities for every record");
  score->add_option("--corpus", corpus_)->required();
  score->add_option("--model", model_)->required();
  score->add_option("--out", out_path_, "Scores JSONL")->required();

  auto *combine = app.add_subcommand("combine", "Add thresholded model predictions to a query mapping");
  combine->add_option("--mapping", mapping_)->required();
  combine->add_option("--scores", scores_)->required();
  combine->add_option("--theta", theta_)->capture_default_str();
  combine->add_option("--out", out_path_)->required();

  auto *prov = app.add_subcommand("report-provenance", "Query and model counts per SDG");
  prov->add_option("--mapping", mapping_)->required();
  prov->add_flag("--include-sdg17", include_sdg17_);
  prov->add_option("--plot-data", plot_data_, "Write sdg,query_count,ml_count CSV");

  auto *evaluate = app.add_subcommand("evaluate", "F1 matrix of methods against validation datasets");
  evaluate->add_option("--method", methods_, "name=mapping.jsonl")->required();
  evaluate->add_option("--dataset", datasets_, "Validation dataset JSONL")->required();
  evaluate->add_option("--corpus", corpus_, "Count dataset ids missing from this corpus");

  auto *gate = app.add_subcommand("gate", "Accept or reject a query by precision, recall and sample size");
  gate->add_option("--precision", precision_)->required();
  gate->add_option("--recall", recall_)->required();
  gate->add_option("--sample", sample_size_)->required();
  gate->add_option("--min-precision", gate_config_.min_precision)->capture_default_str();
  gate->add_option("--min-recall", gate_config_.min_recall)->capture_default_str();
  gate->add_option("--min-sample", gate_config_.min_sample)->capture_default_str();

  auto *sample = app.add_subcommand("sample", "Write a precision review worksheet");
  sample->add_option("--mapping", mapping_)->required();
  sample->add_option("--corpus", corpus_)->required();
  sample->add_option("--sdg", sdg_)->required();
  sample->add_option("--n", n_)->capture_default_str();
  sample->add_option("--out", out_path_, "Worksheet CSV")->required();

  auto *precision = app.add_subcommand("precision", "Precision from a filled review worksheet");
  precision->add_option("--worksheet", worksheet_)->required();

  auto *recall = app.add_subcommand("recall", "Recall of a mapping against a recall set");
  recall->add_option("--mapping", mapping_)->required();
  recall->add_option("--recall-set", recall_set_)->required();
  recall->add_option("--sdg", sdg_)->required();

  auto *suggest = app.add_subcommand("suggest-terms", "Top TF-IDF terms of a matched set");
  suggest->add_option("--corpus", corpus_)->required();
  suggest->add_option("--mapping", mapping_);
  suggest->add_option("--sdg", sdg_);
  suggest->add_option("--ids", ids_, "File with one record id per line");
  suggest->add_option("--queries", queries_, "Flag terms already used by this SDG's queries");
  suggest->add_option("--k", k_)->capture_default_str();
  suggest->add_flag("--phrases", phrases_, "Rank author-keyword phrases instead of tokens");

  auto *expand = app.add_subcommand("expand-citations", "Records one citation hop from a result set");
  expand->add_option("--corpus", corpus_)->required();
  expand->add_option("--mapping", mapping_);
  expand->add_option("--sdg", sdg_);
  expand->add_option("--ids", ids_);
  expand->add_option("--out", out_path_, "Write the expanded ids");

  auto *journal = app.add_subcommand("journal-report", "Share of each journal's records assigned an SDG");
  journal->add_option("--corpus", corpus_)->required();
  journal->add_option("--mapping", mapping_)->required();
  journal->add_option("--sdg", sdg_)->required();

  auto *compare = app.add_subcommand("compare", "Per-SDG overlap of two mappings");
  compare->add_option("--a", a_path_)->required();
  compare->add_option("--b", b_path_)->required();
  compare->add_option("--name-a", name_a_)->capture_default_str();
  compare->add_option("--name-b", name_b_)->capture_default_str();
  compare->add_option("--csv", csv_path_, "Write the table as CSV");

  if (args.empty()) {
    err_ << app.help();
    return kExitUsage;
  }
  for (size_t i = 0; i < args.size(); ++i) {
    const std::string &arg = args[i];
    if (arg == "--seed" || arg == "--threads" || arg == "--format") {
      ++i;
      continue;
    }
    if (arg.starts_with("-")) continue;
    if (!app.get_subcommand_no_throw(arg)) {
      err_ << "sdgmap: unknown subcommand '" << arg << "'; run 'sdgmap --help' for the list\n";
      return kExitUsage;
    }
    break;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out_ << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp &) {
    out_ << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err_ << "sdgmap: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*ingest) Ingest();
    else if (*parse) Parse();
    else if (*map) Map();
    else if (*train) Train();
    else if (*score) Score();
    else if (*combine) CombineCmd();
    else if (*prov) ReportProvenance();
    else if (*evaluate) return Evaluate();
    else if (*gate) return GateCmd();
    else if (*sample) Sample();
    else if (*precision) Precision();
    else if (*recall) Recall();
    else if (*suggest) SuggestTermsCmd();
    else if (*expand) ExpandCitations();
    else if (*journal) JournalReport();
    else if (*compare) Compare();
  } catch (const ConfigError &e) {
    err_ << "sdgmap: " << e.what() << '\n';
    return kExitUsage;
  } catch (const QueryParseError &e) {
    err_ << "sdgmap: query " << e.what();
    if (!e.expected().empty()) {
      err_ << " (expected";
      for (const std::string &x : e.expected()) err_ << ' ' << x;
      err_ << ')';
    }
    err_ << '\n';
    return kExitData;
  } catch (const std::exception &e) {
    err_ << "sdgmap: " << e.what() << '\n';
    return kExitData;
  }
  return kExitOk;
}

void App::Ingest() {
  Corpus corpus = LoadCorpus(corpus_);
  size_t with_fulltext = 0, references = 0, dangling = 0;
  for (const PublicationRecord &r : corpus) {
    if (r.fulltext_terms) ++with_fulltext;
    for (const std::string &ref : r.references) {
      ++references;
      if (!corpus.Find(ref)) ++dangling;
    }
  }
  if (!out_path_.empty()) {
    Sink sink(out_path_, out_);
    WriteCorpus(corpus, *sink);
    sink.Close();
  }
  if (g_.machine()) {
    out_ << json{{"records", corpus.size()},
                 {"with_fulltext", with_fulltext},
                 {"references", references},
                 {"external_references", dangling}}
                .dump()
         << '\n';
  } else {
    out_ << corpus.size() << " records, " << with_fulltext << " with full-text terms, " << references
         << " references (" << dangling << " outside the corpus)\n";
  }
}

void App::Parse() {
  if (!query_text_.empty()) {
    out_ << RenderQuery(ParseQuery(query_text_)) << '\n';
    return;
  }
  if (queries_.empty()) throw ConfigError("give --queries or --query");
  QueryBank bank = LoadQueryBank(queries_);
  if (g_.machine()) {
    for (const QueryBankEntry &e : bank.entries) {
      out_ << json{{"sdg", e.sdg}, {"theme", e.theme}, {"query", RenderQuery(e.query)}}.dump() << '\n';
    }
  } else {
    WriteQueryBank(bank, out_);
  }
}

void App::Map() {
  Corpus corpus = LoadCorpus(corpus_);
  QueryBank bank = LoadQueryBank(queries_);
  SdgMapping mapping = naive_ ? RunQueryBankNaive(bank, corpus)
                              : RunQueryBank(bank, BuildIndex(corpus), g_.threads);
  SaveMapping(mapping, out_path_);
  size_t assignments = 0;
  for (const auto &[id, sdgs] : mapping.records()) assignments += sdgs.size();
  if (g_.machine()) {
    out_ << json{{"queries", bank.entries.size()}, {"records", mapping.size()}, {"assignments", assignments}}
                .dump()
         << '\n';
  } else {
    out_ << bank.entries.size() << " queries matched " << mapping.size() << " records (" << assignments
         << " SDG assignments)\n";
  }
}

void App::Train() {
  Corpus corpus = LoadCorpus(corpus_);
  SdgMapping mapping = LoadMapping(mapping_);
  tfidf_config_.include_fulltext = !no_fulltext_;
  tfidf_config_.include_subjects = !no_subjects_;
  hyper_.seed = g_.seed;
  TrainingReport report;
  ClassifierModel model = TrainClassifier(corpus, mapping, tfidf_config_, hyper_, g_.threads, &report);
  if (!(theta_ > 0.0 && theta_ <= 1.0)) throw ConfigError("--theta must be in (0, 1]");
  model.threshold = theta_;
  SaveModel(model, out_path_);
  for (int sdg : report.skipped) err_ << "warning: SDG " << sdg << " has no query matches; not trained\n";
  if (g_.machine()) {
    json losses = json::object();
    for (const auto &[sdg, history] : report.loss_history) losses[std::to_string(sdg)] = history.back();
    out_ << json{{"vocabulary", model.tfidf.size()}, {"final_loss", losses}, {"skipped", report.skipped}}.dump()
         << '\n';
  } else {
    out_ << "vocabulary " << model.tfidf.size() << ", " << model.models.size() << " SDG models\n";
    for (const auto &[sdg, history] : report.loss_history) {
      char line[96];
      std::snprintf(line, sizeof line, "SDG %2d loss %.6f -> %.6f\n", sdg, history.front(), history.back());
      out_ << line;
    }
  }
}

void App::Score() {
  Corpus corpus = LoadCorpus(corpus_);
  ClassifierModel model = LoadModel(model_);
  ScoreTable scores = ScoreCorpus(corpus, model, g_.threads);
  Sink sink(out_path_, out_);
  WriteScores(scores, *sink);
  sink.Close();
}

void App::CombineCmd() {
  SdgMapping query = LoadMapping(mapping_);
  ScoreTable scores = LoadScores(scores_);
  SdgMapping combined = Combine(query, scores, theta_);
  SaveMapping(combined, out_path_);
  size_t added = 0;
  for (const auto &[id, sdgs] : combined.records()) {
    for (const auto &[sdg, a] : sdgs) added += a.provenance == Provenance::kMl;
  }
  if (g_.machine()) {
    out_ << json{{"theta", theta_}, {"ml_added", added}}.dump() << '\n';
  } else {
    out_ << "model added " << added << " assignments at theta " << theta_ << '\n';
  }
}

void App::ReportProvenance() {
  auto rows = ProvenanceReport(LoadMapping(mapping_), include_sdg17_);
  if (g_.machine()) {
    RenderProvenanceMachine(rows, out_);
  } else {
    RenderProvenanceText(rows, out_);
  }
  if (!plot_data_.empty()) {
    Sink sink(plot_data_, out_);
    WriteProvenancePlotData(rows, *sink);
    sink.Close();
  }
}

int App::Evaluate() {
  std::vector<std::pair<std::string, SdgMapping>> methods;
  for (const std::string &spec : methods_) {
    size_t eq = spec.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size()) {
      throw ConfigError("--method expects name=path, got '" + spec + "'");
    }
    methods.emplace_back(spec.substr(0, eq), LoadMapping(spec.substr(eq + 1)));
  }
  std::vector<ValidationDataset> datasets;
  for (const std::string &path : datasets_) datasets.push_back(LoadValidationDataset(path));

  if (!corpus_.empty()) {
    Corpus corpus = LoadCorpus(corpus_);
    for (const ValidationDataset &d : datasets) {
      size_t unknown = 0;
      for (const ValidationItem &item : d.items) {
        if (!item.record && !corpus.Find(item.id)) ++unknown;
      }
      if (unknown) {
        err_ << "warning: " << d.name << ": " << unknown
             << " ids not in the corpus are scored as empty predictions\n";
      }
    }
  }
  BenchmarkMatrix matrix = Benchmark(methods, datasets, g_.threads);
  if (g_.machine()) {
    RenderBenchmarkMachine(matrix, out_);
  } else {
    RenderBenchmarkText(matrix, out_);
  }
  return kExitOk;
}

int App::GateCmd() {
  gate_config_.Validate();
  if (!(precision_ >= 0.0 && precision_ <= 1.0) || !(recall_ >= 0.0 && recall_ <= 1.0)) {
    throw ConfigError("--precision and --recall must be in [0, 1]");
  }
  GateResult result = Gate(precision_, recall_, sample_size_, gate_config_);
  if (g_.machine()) {
    json reasons = json::array();
    for (GateCondition c : result.violations) reasons.push_back(GateConditionName(c));
    out_ << json{{"accepted", result.accepted}, {"violations", reasons}}.dump() << '\n';
  } else if (result.accepted) {
    out_ << "accept\n";
  } else {
    out_ << "reject\n";
    for (GateCondition c : result.violations) {
      char line[128];
      switch (c) {
        case GateCondition::kPrecision:
          std::snprintf(line, sizeof line, "precision %.4g is below %.4g\n", precision_,
                        gate_config_.min_precision);
          break;
        case GateCondition::kRecall:
          std::snprintf(line, sizeof line, "recall %.4g is below %.4g\n", recall_, gate_config_.min_recall);
          break;
        case GateCondition::kSampleSize:
          std::snprintf(line, sizeof line, "sample_size %zu is below %zu\n", sample_size_,
                        gate_config_.min_sample);
          break;
      }
      out_ << line;
    }
  }
  return result.accepted ? kExitOk : kExitReject;
}

void App::Sample() {
  RequireSdg(sdg_);
  Corpus corpus = LoadCorpus(corpus_);
  Worksheet sheet = SampleForReview(LoadMapping(mapping_), sdg_, n_, g_.seed, corpus);
  Sink sink(out_path_, out_);
  WriteWorksheet(sheet, *sink);
  sink.Close();
  if (sheet.short_population) {
    err_ << "warning: only " << sheet.rows.size() << " records carry SDG " << sdg_ << '\n';
  }
  if (out_path_ != "-") out_ << sheet.rows.size() << " records sampled for SDG " << sdg_ << '\n';
}

void App::Precision() {
  std::ifstream in(worksheet_);
  if (!in) throw DataError("cannot open worksheet " + worksheet_);
  std::vector<Annotation> annotations = ReadWorksheet(in);
  PrecisionEstimate est = EstimatePrecision(annotations);
  if (g_.machine()) {
    out_ << json{{"precision", est.precision}, {"agreement_rate", est.agreement_rate}, {"sample_size", est.sample_size}}
                .dump()
         << '\n';
  } else {
    char line[128];
    std::snprintf(line, sizeof line, "precision %.4f, agreement %.4f, n=%zu\n", est.precision,
                  est.agreement_rate, est.sample_size);
    out_ << line;
  }
}

void App::Recall() {
  RequireSdg(sdg_);
  ValidationDataset set = LoadValidationDataset(recall_set_);
  std::erase_if(set.items, [&](const ValidationItem &item) { return !item.gold.contains(sdg_); });
  if (set.items.empty()) throw DataError("recall set has no records labeled SDG " + std::to_string(sdg_));
  double r = EstimateRecall(LoadMapping(mapping_), set, sdg_);
  if (g_.machine()) {
    out_ << json{{"sdg", sdg_}, {"recall", r}, {"recall_set_size", set.items.size()}}.dump() << '\n';
  } else {
    char line[128];
    std::snprintf(line, sizeof line, "recall %.4f over %zu records\n", r, set.items.size());
    out_ << line;
  }
}

void App::SuggestTermsCmd() {
  Corpus corpus = LoadCorpus(corpus_);
  std::set<std::string> ids = ResolveIds(ids_, mapping_, sdg_);
  std::optional<Query> existing;
  if (!queries_.empty()) {
    RequireSdg(sdg_);
    std::vector<Query> parts;
    for (const QueryBankEntry &e : LoadQueryBank(queries_).entries) {
      if (e.sdg == sdg_) parts.push_back(e.query);
    }
    if (parts.size() == 1) existing = parts[0];
    if (parts.size() > 1) existing = Query(Or{std::move(parts)});
  }
  const Query *q = existing ? &*existing : nullptr;
  if (phrases_) {
    for (const PhraseSuggestion &s : SuggestPhrases(ids, corpus, k_, q)) {
      if (g_.machine()) {
        out_ << json{{"phrase", s.phrase}, {"positive_df", s.positive_df}, {"in_query", s.in_query}}.dump() << '\n';
      } else {
        out_ << s.positive_df << '\t' << s.phrase << (s.in_query ? "\t(in query)" : "") << '\n';
      }
    }
    return;
  }
  for (const TermSuggestion &s : SuggestTerms(ids, corpus, k_, q)) {
    if (g_.machine()) {
      out_ << json{{"term", s.term}, {"score", s.score}, {"in_query", s.in_query}}.dump() << '\n';
    } else {
      char score[32];
      std::snprintf(score, sizeof score, "%.4f", s.score);
      out_ << score << '\t' << s.term << (s.in_query ? "\t(in query)" : "") << '\n';
    }
  }
}

void App::ExpandCitations() {
  Corpus corpus = LoadCorpus(corpus_);
  std::set<std::string> expanded = CitationExpand(ResolveIds(ids_, mapping_, sdg_), corpus);
  Sink sink(out_path_, out_);
  for (const std::string &id : expanded) *sink << id << '\n';
  sink.Close();
  if (!out_path_.empty() && out_path_ != "-") out_ << expanded.size() << " records one hop away\n";
}

void App::JournalReport() {
  RequireSdg(sdg_);
  Corpus corpus = LoadCorpus(corpus_);
  for (const JournalShare &j : JournalConcentration(LoadMapping(mapping_), sdg_, corpus)) {
    if (g_.machine()) {
      out_ << json{{"journal", j.journal}, {"matched", j.matched}, {"total", j.total}, {"share", j.share}}.dump()
           << '\n';
    } else {
      char line[64];
      std::snprintf(line, sizeof line, "%6.2f%% %5zu/%-5zu ", 100.0 * j.share, j.matched, j.total);
      out_ << line << j.journal << '\n';
    }
  }
}

void App::Compare() {
  auto rows = CompareMappings(LoadMapping(a_path_), LoadMapping(b_path_));
  if (g_.machine()) {
    for (const ComparisonRow &r : rows) {
      out_ << json{{"sdg", r.sdg}, {"count_a", r.count_a}, {"count_b", r.count_b}, {"intersection", r.intersection}}
                  .dump()
           << '\n';
    }
  } else {
    RenderComparisonText(rows, name_a_, name_b_, out_);
  }
  if (!csv_path_.empty()) {
    Sink sink(csv_path_, out_);
    WriteComparisonCsv(rows, *sink);
    sink.Close();
  }
}

}  // namespace

int Run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  App app(out, err);
  return app.Run(args);
}

}  // namespace sdgmap::cli
