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

#ifndef SDGMAP_EVALUATION_H_
#define SDGMAP_EVALUATION_H_

#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sdgmap/corpus.h"
#include "sdgmap/mapping.h"

namespace sdgmap {

struct ValidationItem {
  std::string id;
  // Present when the dataset line carries the record's metadata.
  std::optional<PublicationRecord> record;
  std::set<int> gold;
};

struct ValidationDataset {
  std::string name;
  std::vector<ValidationItem> items;
  bool multi_label = false;

  // Throws DataError on an empty gold set, an SDG outside [1, 17] or a
  // repeated id.
  void Validate() const;
  // SDGs with nonzero gold support.
  std::set<int> GoldClasses() const;
  // Inline records, in item order.
  Corpus InlineCorpus() const;
};

// Corpus line format plus a `gold` list; a line holding only `id` and `gold`
// refers to a record by id. `multi_label` is set when any item has more than
// one gold SDG.
ValidationDataset ReadValidationDataset(std::istream &in, std::string name);
// The dataset name defaults to the file stem.
ValidationDataset LoadValidationDataset(const std::filesystem::path &path, std::string name = {});

struct ClassCounts {
  size_t tp = 0;
  size_t fp = 0;
  size_t fn = 0;

  bool operator==(const ClassCounts &) const = default;
};

using ConfusionTable = std::map<int, ClassCounts>;

// Per-class multi-label counts over the dataset items. Items absent from the
// mapping count as empty predictions; their number is stored in
// `missing_ids` when given. Throws ConfigError for a class outside [1, 17].
ConfusionTable Confusion(const SdgMapping &pred, const ValidationDataset &gold,
                         const std::set<int> &classes, size_t *missing_ids = nullptr);

struct ClassMetrics {
  int sdg = 0;
  ClassCounts counts;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct MetricsReport {
  std::vector<ClassMetrics> per_class;
  double micro_f1 = 0.0;
  double macro_f1 = 0.0;
  std::set<int> classes_evaluated;

  // "micro/macro" in rounded percent, e.g. "76/48".
  std::string Cell() const;
};

// 0/0 ratios are 0. Micro F1 pools TP/FP/FN over all classes; macro F1 is the
// unweighted mean of per-class F1 over the classes in `counts`.
MetricsReport F1Report(const ConfusionTable &counts);

std::string RenderCell(double micro, double macro);

enum class Verdict { kRelevant, kNotRelevant };

// Parses relevant/not_relevant (also yes/no, y/n, 1/0); nullopt when blank.
// Throws DataError on anything else.
std::optional<Verdict> ParseVerdict(const std::string &text);
const char *VerdictName(Verdict verdict);

struct Annotation {
  std::string id;
  std::optional<Verdict> first;
  std::optional<Verdict> second;
};

struct PrecisionEstimate {
  double precision = 0.0;
  double agreement_rate = 0.0;
  size_t sample_size = 0;
};

// A record is relevant only when both analysts mark it relevant. Throws
// DataError on a missing verdict or an empty sample.
PrecisionEstimate EstimatePrecision(std::span<const Annotation> annotations);

// Fraction of the recall set assigned `sdg` by the mapping. Throws DataError
// on an empty set or an item whose gold labels lack `sdg`.
double EstimateRecall(const SdgMapping &mapping, const ValidationDataset &recall_set, int sdg);

struct GateConfig {
  double min_precision = 0.90;
  double min_recall = 0.60;
  size_t min_sample = 100;

  // Throws ConfigError when a threshold is outside (0, 1] or min_sample < 1.
  void Validate() const;
};

enum class GateCondition { kPrecision, kRecall, kSampleSize };

const char *GateConditionName(GateCondition condition);

struct GateResult {
  bool accepted = false;
  std::vector<GateCondition> violations;
};

// Accepts iff every value reaches its threshold (inclusive).
GateResult Gate(double precision, double recall, size_t sample_size, const GateConfig &config = {});

struct BenchmarkCell {
  std::string method;
  std::string dataset;
  ConfusionTable counts;
  MetricsReport report;
  size_t missing_ids = 0;
};

struct BenchmarkMatrix {
  std::vector<std::string> methods;
  std::vector<std::string> datasets;
  // Row-major: methods x datasets.
  std::vector<BenchmarkCell> cells;

  const BenchmarkCell &at(size_t method, size_t dataset) const {
    return cells[method * datasets.size() + dataset];
  }
};

// Each cell evaluates a method on a dataset over the dataset's gold-supported
// classes.
BenchmarkMatrix Benchmark(const std::vector<std::pair<std::string, SdgMapping>> &methods,
                          const std::vector<ValidationDataset> &datasets, int threads = 1);

void RenderBenchmarkText(const BenchmarkMatrix &matrix, std::ostream &out);
void RenderBenchmarkMachine(const BenchmarkMatrix &matrix, std::ostream &out);

struct ComparisonRow {
  int sdg = 0;
  size_t count_a = 0;
  size_t count_b = 0;
  size_t intersection = 0;

  bool operator==(const ComparisonRow &) const = default;
};

// Per SDG assigned by either mapping, ascending.
std::vector<ComparisonRow> CompareMappings(const SdgMapping &a, const SdgMapping &b);

// Rows like "1 | 522 | 229 | 125" under a header naming both mappings.
void RenderComparisonText(const std::vector<ComparisonRow> &rows, const std::string &name_a,
                          const std::string &name_b, std::ostream &out);
void WriteComparisonCsv(const std::vector<ComparisonRow> &rows, std::ostream &out);

}  // namespace sdgmap

#endif  // SDGMAP_EVALUATION_H_
