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

#include "sdgmap/classifier.h"

#include <fstream>
#include <limits>

#include "sdgmap/error.h"
#include "sdgmap/parallel.h"

namespace sdgmap {

using nlohmann::json;

uint64_t UniformIndex(std::mt19937_64 &rng, uint64_t n) {
  if (n == 0) throw ConfigError("UniformIndex over an empty range");
  const uint64_t limit = std::numeric_limits<uint64_t>::max() - std::numeric_limits<uint64_t>::max() % n;
  uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % n;
}

uint64_t DeriveSeed(uint64_t seed, int sdg) {
  // splitmix64 finalizer
  uint64_t z = seed + 0x9E3779B97F4A7C15ULL * static_cast<uint64_t>(sdg + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

TrainingPlan BuildTrainingSet(const SdgMapping &query_mapping, const Corpus &corpus, double ratio,
                              uint64_t seed) {
  if (!(ratio > 0.0)) throw ConfigError("negative ratio must be positive");
  TrainingPlan plan;
  for (int sdg = kMinSdg; sdg <= kMaxSdg; ++sdg) {
    LabeledSet set;
    std::vector<DocId> candidates;
    for (DocId d = 0; d < corpus.size(); ++d) {
      const Assignment *a = query_mapping.Find(corpus[d].id, sdg);
      if (a == nullptr) {
        candidates.push_back(d);
      } else if (a->provenance == Provenance::kQuery) {
        set.positives.push_back(d);
      }
    }
    if (set.positives.empty()) {
      plan.skipped.push_back(sdg);
      continue;
    }
    auto wanted = static_cast<size_t>(std::floor(ratio * static_cast<double>(set.positives.size())));
    std::mt19937_64 rng(DeriveSeed(seed, sdg));
    set.negatives = SampleWithoutReplacement(std::move(candidates), wanted, rng);
    std::sort(set.negatives.begin(), set.negatives.end());
    plan.sets.emplace(sdg, std::move(set));
  }
  return plan;
}

std::map<int, double> ClassifierModel::Predict(const PublicationRecord &record) const {
  SparseVector x = Vectorize(record, tfidf);
  std::map<int, double> out;
  for (const auto &[sdg, m] : models) out[sdg] = m.Score(x);
  return out;
}

json ClassifierModel::ToJson() const {
  json sdgs = json::array();
  for (const auto &[sdg, m] : models) {
    sdgs.push_back({{"sdg", sdg}, {"weights", m.weights}, {"bias", m.bias}});
  }
  return {{"format_version", format_version},
          {"threshold", threshold},
          {"hyperparams",
           {{"l2", hyperparams.l2},
            {"learning_rate", hyperparams.learning_rate},
            {"iterations", hyperparams.iterations},
            {"seed", hyperparams.seed},
            {"negative_ratio", hyperparams.negative_ratio}}},
          {"tfidf", tfidf.ToJson()},
          {"models", sdgs}};
}

ClassifierModel ClassifierModel::FromJson(const json &object) {
  ClassifierModel model;
  model.format_version = object.at("format_version").get<int>();
  if (model.format_version != kModelFormatVersion) {
    throw DataError("unsupported model format version " + std::to_string(model.format_version));
  }
  model.threshold = object.at("threshold").get<double>();
  const json &hp = object.at("hyperparams");
  model.hyperparams.l2 = hp.at("l2").get<double>();
  model.hyperparams.learning_rate = hp.at("learning_rate").get<double>();
  model.hyperparams.iterations = hp.at("iterations").get<int>();
  model.hyperparams.seed = hp.at("seed").get<uint64_t>();
  model.hyperparams.negative_ratio = hp.at("negative_ratio").get<double>();
  model.tfidf = TfidfModel::FromJson(object.at("tfidf"));
  for (const json &entry : object.at("models")) {
    int sdg = entry.at("sdg").get<int>();
    if (!IsValidSdg(sdg)) throw DataError("model SDG " + std::to_string(sdg) + " outside [1, 17]");
    BinaryModel m{entry.at("weights").get<std::vector<double>>(), entry.at("bias").get<double>()};
    if (m.weights.size() != model.tfidf.size()) {
      throw DataError("weights for SDG " + std::to_string(sdg) + " do not match the vocabulary size");
    }
    model.models.emplace(sdg, std::move(m));
  }
  return model;
}

ClassifierModel TrainClassifier(const Corpus &corpus, const SdgMapping &query_mapping,
                                const TfidfConfig &tfidf_config, const LogRegHyperparams &params,
                                int threads, TrainingReport *report) {
  ClassifierModel model;
  model.hyperparams = params;
  model.tfidf = FitTfidf(corpus, tfidf_config);

  std::vector<SparseVector> vectors(corpus.size());
  ParallelFor(corpus.size(), threads, [&](size_t d) { vectors[d] = Vectorize(corpus[d], model.tfidf); });

  TrainingPlan plan = BuildTrainingSet(query_mapping, corpus, params.negative_ratio, params.seed);
  std::vector<int> sdgs;
  for (const auto &[sdg, set] : plan.sets) sdgs.push_back(sdg);
  std::vector<TrainResult> results(sdgs.size());
  ParallelFor(sdgs.size(), threads, [&](size_t i) {
    const LabeledSet &set = plan.sets.at(sdgs[i]);
    std::vector<SparseVector> x;
    std::vector<int> y;
    for (DocId d : set.positives) {
      x.push_back(vectors[d]);
      y.push_back(1);
    }
    for (DocId d : set.negatives) {
      x.push_back(vectors[d]);
      y.push_back(0);
    }
    if (set.negatives.empty()) {
      throw ConfigError("SDG " + std::to_string(sdgs[i]) + " has no negative examples");
    }
    results[i] = TrainBinary(x, y, model.tfidf.size(), params);
  });
  for (size_t i = 0; i < sdgs.size(); ++i) {
    model.models.emplace(sdgs[i], std::move(results[i].model));
    if (report) report->loss_history[sdgs[i]] = std::move(results[i].loss_history);
  }
  if (report) report->skipped = plan.skipped;
  return model;
}

void SaveModel(const ClassifierModel &model, const std::filesystem::path &path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write model file " + path.string());
  out << model.ToJson().dump() << '\n';
}

ClassifierModel LoadModel(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open model file " + path.string());
  try {
    return ClassifierModel::FromJson(json::parse(in));
  } catch (const json::exception &e) {
    throw DataError("model file " + path.string() + ": " + e.what());
  }
}

ScoreTable ScoreCorpus(const Corpus &corpus, const ClassifierModel &model, int threads) {
  std::vector<std::map<int, double>> rows(corpus.size());
  ParallelFor(corpus.size(), threads, [&](size_t d) { rows[d] = model.Predict(corpus[d]); });
  ScoreTable table;
  for (DocId d = 0; d < corpus.size(); ++d) table.emplace(corpus[d].id, std::move(rows[d]));
  return table;
}

void WriteScores(const ScoreTable &scores, std::ostream &out) {
  for (const auto &[id, row] : scores) {
    json pairs = json::array();
    for (const auto &[sdg, p] : row) pairs.push_back({sdg, p});
    out << json{{"id", id}, {"scores", pairs}}.dump() << '\n';
  }
}

ScoreTable ReadScores(std::istream &in) {
  ScoreTable table;
  std::string text;
  size_t line_number = 0;
  while (std::getline(in, text)) {
    ++line_number;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      json line = json::parse(text);
      auto &row = table[line.at("id").get<std::string>()];
      for (const json &pair : line.at("scores")) {
        int sdg = pair.at(0).get<int>();
        double p = pair.at(1).get<double>();
        if (!IsValidSdg(sdg)) throw DataError("SDG " + std::to_string(sdg) + " outside [1, 17]");
        if (!(p >= 0.0 && p <= 1.0)) throw DataError("probability outside [0, 1]");
        row[sdg] = p;
      }
    } catch (const json::exception &e) {
      throw DataError("scores line " + std::to_string(line_number) + ": " + e.what());
    } catch (const DataError &e) {
      throw DataError("scores line " + std::to_string(line_number) + ": " + e.what());
    }
  }
  return table;
}

ScoreTable LoadScores(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open scores file " + path.string());
  return ReadScores(in);
}

}  // namespace sdgmap
