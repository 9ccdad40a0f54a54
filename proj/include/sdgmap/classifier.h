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

#ifndef SDGMAP_CLASSIFIER_H_
#define SDGMAP_CLASSIFIER_H_

#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "sdgmap/corpus.h"
#include "sdgmap/logreg.h"
#include "sdgmap/mapping.h"
#include "sdgmap/tfidf.h"

namespace sdgmap {

inline constexpr double kDefaultThreshold = 0.95;
inline constexpr int kModelFormatVersion = 1;

// Uniform integer in [0, n) from a 64-bit engine by rejection sampling, so
// that sampled sets do not depend on the standard library's distributions.
uint64_t UniformIndex(std::mt19937_64 &rng, uint64_t n);

// First `k` elements of a seeded Fisher-Yates shuffle of `items`.
template <typename T>
std::vector<T> SampleWithoutReplacement(std::vector<T> items, size_t k, std::mt19937_64 &rng) {
  k = std::min(k, items.size());
  for (size_t i = 0; i < k; ++i) {
    size_t j = i + static_cast<size_t>(UniformIndex(rng, items.size() - i));
    std::swap(items[i], items[j]);
  }
  items.resize(k);
  return items;
}

// Seed for a per-SDG stream derived from a global seed.
uint64_t DeriveSeed(uint64_t seed, int sdg);

struct LabeledSet {
  std::vector<DocId> positives;
  std::vector<DocId> negatives;
};

struct TrainingPlan {
  std::map<int, LabeledSet> sets;
  // SDGs without any QUERY-provenance record.
  std::vector<int> skipped;
};

// Positives are records with (s, QUERY); negatives are a seeded uniform
// sample of the records without s, of size min(ratio * |positives|,
// available). Throws ConfigError when ratio <= 0.
TrainingPlan BuildTrainingSet(const SdgMapping &query_mapping, const Corpus &corpus, double ratio,
                              uint64_t seed);

// TF-IDF space shared by one binary model per SDG.
struct ClassifierModel {
  TfidfModel tfidf;
  std::map<int, BinaryModel> models;
  LogRegHyperparams hyperparams;
  double threshold = kDefaultThreshold;
  int format_version = kModelFormatVersion;

  // Probability per trained SDG.
  std::map<int, double> Predict(const PublicationRecord &record) const;

  nlohmann::json ToJson() const;
  static ClassifierModel FromJson(const nlohmann::json &object);

  bool operator==(const ClassifierModel &) const = default;
};

struct TrainingReport {
  std::vector<int> skipped;
  // Loss history per trained SDG.
  std::map<int, std::vector<double>> loss_history;
};

// Fits TF-IDF on the corpus, builds weak-supervision sets from the query
// mapping and trains each SDG model. Results do not depend on `threads`.
ClassifierModel TrainClassifier(const Corpus &corpus, const SdgMapping &query_mapping,
                                const TfidfConfig &tfidf_config, const LogRegHyperparams &params,
                                int threads = 1, TrainingReport *report = nullptr);

void SaveModel(const ClassifierModel &model, const std::filesystem::path &path);
ClassifierModel LoadModel(const std::filesystem::path &path);

// Record id -> SDG -> probability.
using ScoreTable = std::map<std::string, std::map<int, double>>;

ScoreTable ScoreCorpus(const Corpus &corpus, const ClassifierModel &model, int threads = 1);

// One line per record: {"id":"r1","scores":[[1,0.12],[3,0.97]]}
void WriteScores(const ScoreTable &scores, std::ostream &out);
ScoreTable ReadScores(std::istream &in);
ScoreTable LoadScores(const std::filesystem::path &path);

}  // namespace sdgmap

#endif  // SDGMAP_CLASSIFIER_H_
