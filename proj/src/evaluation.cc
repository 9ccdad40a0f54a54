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

#include "sdgmap/evaluation.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>

#include "json.hpp"
#include "sdgmap/error.h"
#include "sdgmap/parallel.h"

namespace sdgmap {

using nlohmann::json;

namespace {

double Ratio(size_t num, size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

double F1(double p, double r) { return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r); }

std::string Lower(std::string s) {
  for (char &c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string PadRight(const std::string &s, size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

}  // namespace

void ValidationDataset::Validate() const {
  std::set<std::string> ids;
  for (const ValidationItem &item : items) {
    if (item.gold.empty()) throw DataError(name + ": item '" + item.id + "' has no gold SDG");
    for (int sdg : item.gold) {
      if (!IsValidSdg(sdg)) {
        throw DataError(name + ": item '" + item.id + "' has SDG " + std::to_string(sdg) +
                        " outside [1, 17]");
      }
    }
    if (!ids.insert(item.id).second) throw DataError(name + ": duplicate item id '" + item.id + "'");
  }
}

std::set<int> ValidationDataset::GoldClasses() const {
  std::set<int> out;
  for (const ValidationItem &item : items) out.insert(item.gold.begin(), item.gold.end());
  return out;
}

Corpus ValidationDataset::InlineCorpus() const {
  std::vector<PublicationRecord> records;
  for (const ValidationItem &item : items) {
    if (item.record) records.push_back(*item.record);
  }
  return Corpus(std::move(records));
}

ValidationDataset ReadValidationDataset(std::istream &in, std::string name) {
  ValidationDataset dataset;
  dataset.name = std::move(name);
  std::string text;
  size_t line_number = 0;
  while (std::getline(in, text)) {
    ++line_number;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      json line = json::parse(text);
      ValidationItem item;
      if (!line.is_object() || !line.contains("gold")) throw DataError("missing key 'gold'");
      for (const json &sdg : line.at("gold")) item.gold.insert(sdg.get<int>());
      bool reference_only = line.size() == 2 && line.contains("id");
      if (reference_only) {
        item.id = line.at("id").get<std::string>();
        if (item.id.empty()) throw DataError("record id must be nonempty");
      } else {
        item.record = RecordFromJson(line);
        item.id = item.record->id;
      }
      dataset.multi_label = dataset.multi_label || item.gold.size() > 1;
      dataset.items.push_back(std::move(item));
    } catch (const json::exception &e) {
      throw DataError(dataset.name + " line " + std::to_string(line_number) + ": " + e.what());
    } catch (const DataError &e) {
      throw DataError(dataset.name + " line " + std::to_string(line_number) + ": " + e.what());
    }
  }
  dataset.Validate();
  return dataset;
}

ValidationDataset LoadValidationDataset(const std::filesystem::path &path, std::string name) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open dataset " + path.string());
  return ReadValidationDataset(in, name.empty() ? path.stem().string() : std::move(name));
}

ConfusionTable Confusion(const SdgMapping &pred, const ValidationDataset &gold,
                         const std::set<int> &classes, size_t *missing_ids) {
  ConfusionTable table;
  for (int c : classes) {
    if (!IsValidSdg(c)) throw ConfigError("unknown class id " + std::to_string(c));
    table[c];
  }
  size_t missing = 0;
  for (const ValidationItem &item : gold.items) {
    std::set<int> predicted = pred.Sdgs(item.id);
    if (!pred.records().contains(item.id)) ++missing;
    for (int c : classes) {
      bool p = predicted.contains(c);
      bool g = item.gold.contains(c);
      ClassCounts &counts = table[c];
      if (p && g) ++counts.tp;
      if (p && !g) ++counts.fp;
      if (!p && g) ++counts.fn;
    }
  }
  if (missing_ids) *missing_ids = missing;
  return table;
}

std::string RenderCell(double micro, double macro) {
  return std::to_string(std::lround(100.0 * micro)) + "/" + std::to_string(std::lround(100.0 * macro));
}

std::string MetricsReport::Cell() const { return RenderCell(micro_f1, macro_f1); }

MetricsReport F1Report(const ConfusionTable &counts) {
  MetricsReport report;
  ClassCounts total;
  double f1_sum = 0.0;
  for (const auto &[sdg, c] : counts) {
    ClassMetrics m;
    m.sdg = sdg;
    m.counts = c;
    m.precision = Ratio(c.tp, c.tp + c.fp);
    m.recall = Ratio(c.tp, c.tp + c.fn);
    m.f1 = F1(m.precision, m.recall);
    f1_sum += m.f1;
    total.tp += c.tp;
    total.fp += c.fp;
    total.fn += c.fn;
    report.per_class.push_back(m);
    report.classes_evaluated.insert(sdg);
  }
  report.micro_f1 = F1(Ratio(total.tp, total.tp + total.fp), Ratio(total.tp, total.tp + total.fn));
  report.macro_f1 = counts.empty() ? 0.0 : f1_sum / static_cast<double>(counts.size());
  return report;
}

std::optional<Verdict> ParseVerdict(const std::string &text) {
  std::string s = Lower(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) return std::nullopt;
  if (s == "relevant" || s == "yes" || s == "y" || s == "1") return Verdict::kRelevant;
  if (s == "not_relevant" || s == "no" || s == "n" || s == "0") return Verdict::kNotRelevant;
  throw DataError("unrecognized verdict '" + text + "' (use relevant or not_relevant)");
}

const char *VerdictName(Verdict verdict) {
  return verdict == Verdict::kRelevant ? "relevant" : "not_relevant";
}

PrecisionEstimate EstimatePrecision(std::span<const Annotation> annotations) {
  if (annotations.empty()) throw DataError("no annotated records");
  size_t relevant = 0;
  size_t agree = 0;
  for (const Annotation &a : annotations) {
    if (!a.first || !a.second) throw DataError("record '" + a.id + "' is missing a verdict");
    if (*a.first == Verdict::kRelevant && *a.second == Verdict::kRelevant) ++relevant;
    if (*a.first == *a.second) ++agree;
  }
  return {Ratio(relevant, annotations.size()), Ratio(agree, annotations.size()), annotations.size()};
}

double EstimateRecall(const SdgMapping &mapping, const ValidationDataset &recall_set, int sdg) {
  if (recall_set.items.empty()) throw DataError("recall set '" + recall_set.name + "' is empty");
  size_t covered = 0;
  for (const ValidationItem &item : recall_set.items) {
    if (!item.gold.contains(sdg)) {
      throw DataError("recall set item '" + item.id + "' is not labeled SDG " + std::to_string(sdg));
    }
    if (mapping.Has(item.id, sdg)) ++covered;
  }
  return Ratio(covered, recall_set.items.size());
}

void GateConfig::Validate() const {
  if (!(min_precision > 0.0 && min_precision <= 1.0)) throw ConfigError("min_precision must be in (0, 1]");
  if (!(min_recall > 0.0 && min_recall <= 1.0)) throw ConfigError("min_recall must be in (0, 1]");
  if (min_sample < 1) throw ConfigError("min_sample must be at least 1");
}

const char *GateConditionName(GateCondition condition) {
  switch (condition) {
    case GateCondition::kPrecision:
      return "precision";
    case GateCondition::kRecall:
      return "recall";
    case GateCondition::kSampleSize:
      return "sample_size";
  }
  return "?";
}

GateResult Gate(double precision, double recall, size_t sample_size, const GateConfig &config) {
  config.Validate();
  GateResult result;
  if (!(precision >= config.min_precision)) result.violations.push_back(GateCondition::kPrecision);
  if (!(recall >= config.min_recall)) result.violations.push_back(GateCondition::kRecall);
  if (sample_size < config.min_sample) result.violations.push_back(GateCondition::kSampleSize);
  result.accepted = result.violations.empty();
  return result;
}

BenchmarkMatrix Benchmark(const std::vector<std::pair<std::string, SdgMapping>> &methods,
                          const std::vector<ValidationDataset> &datasets, int threads) {
  BenchmarkMatrix matrix;
  for (const auto &[name, mapping] : methods) matrix.methods.push_back(name);
  for (const ValidationDataset &d : datasets) matrix.datasets.push_back(d.name);
  matrix.cells.resize(methods.size() * datasets.size());
  ParallelFor(matrix.cells.size(), threads, [&](size_t i) {
    const auto &[method, mapping] = methods[i / datasets.size()];
    const ValidationDataset &dataset = datasets[i % datasets.size()];
    BenchmarkCell &cell = matrix.cells[i];
    cell.method = method;
    cell.dataset = dataset.name;
    cell.counts = Confusion(mapping, dataset, dataset.GoldClasses(), &cell.missing_ids);
    cell.report = F1Report(cell.counts);
  });
  return matrix;
}

void RenderBenchmarkText(const BenchmarkMatrix &matrix, std::ostream &out) {
  size_t first = std::string("method \\ dataset").size();
  for (const std::string &m : matrix.methods) first = std::max(first, m.size());
  std::vector<size_t> widths;
  for (const std::string &d : matrix.datasets) widths.push_back(std::max<size_t>(d.size(), 7));
  out << PadRight("method \\ dataset", first);
  for (size_t j = 0; j < matrix.datasets.size(); ++j) out << " | " << PadRight(matrix.datasets[j], widths[j]);
  out << '\n';
  for (size_t i = 0; i < matrix.methods.size(); ++i) {
    out << PadRight(matrix.methods[i], first);
    for (size_t j = 0; j < matrix.datasets.size(); ++j) {
      out << " | " << PadRight(matrix.at(i, j).report.Cell(), widths[j]);
    }
    out << '\n';
  }
}

void RenderBenchmarkMachine(const BenchmarkMatrix &matrix, std::ostream &out) {
  for (const BenchmarkCell &cell : matrix.cells) {
    json classes = json::array();
    for (const ClassMetrics &m : cell.report.per_class) {
      classes.push_back({{"sdg", m.sdg},
                         {"tp", m.counts.tp},
                         {"fp", m.counts.fp},
                         {"fn", m.counts.fn},
                         {"precision", m.precision},
                         {"recall", m.recall},
                         {"f1", m.f1}});
    }
    out << json{{"method", cell.method},
                {"dataset", cell.dataset},
                {"classes", classes},
                {"micro_f1", cell.report.micro_f1},
                {"macro_f1", cell.report.macro_f1},
                {"cell", cell.report.Cell()},
                {"missing_ids", cell.missing_ids}}
               .dump()
        << '\n';
  }
}

std::vector<ComparisonRow> CompareMappings(const SdgMapping &a, const SdgMapping &b) {
  std::map<int, ComparisonRow> rows;
  auto row = [&rows](int sdg) -> ComparisonRow & {
    ComparisonRow &r = rows[sdg];
    r.sdg = sdg;
    return r;
  };
  for (const auto &[id, sdgs] : a.records()) {
    for (const auto &[sdg, assignment] : sdgs) {
      ComparisonRow &r = row(sdg);
      ++r.count_a;
      if (b.Has(id, sdg)) ++r.intersection;
    }
  }
  for (const auto &[id, sdgs] : b.records()) {
    for (const auto &[sdg, assignment] : sdgs) ++row(sdg).count_b;
  }
  std::vector<ComparisonRow> out;
  for (auto &[sdg, r] : rows) out.push_back(r);
  return out;
}

void RenderComparisonText(const std::vector<ComparisonRow> &rows, const std::string &name_a,
                          const std::string &name_b, std::ostream &out) {
  out << "SDG | " << name_a << " | " << name_b << " | Intersection\n";
  for (const ComparisonRow &r : rows) {
    out << r.sdg << " | " << r.count_a << " | " << r.count_b << " | " << r.intersection << '\n';
  }
}

void WriteComparisonCsv(const std::vector<ComparisonRow> &rows, std::ostream &out) {
  out << "sdg,count_a,count_b,intersection\n";
  for (const ComparisonRow &r : rows) {
    out << r.sdg << ',' << r.count_a << ',' << r.count_b << ',' << r.intersection << '\n';
  }
}

}  // namespace sdgmap
