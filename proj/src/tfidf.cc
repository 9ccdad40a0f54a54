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

#include "sdgmap/tfidf.h"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "sdgmap/asjc.h"
#include "sdgmap/error.h"

namespace sdgmap {

double SparseVector::Dot(std::span<const double> dense) const {
  double sum = 0.0;
  for (size_t i = 0; i < indices.size(); ++i) sum += values[i] * dense[indices[i]];
  return sum;
}

double SparseVector::Norm() const {
  double sum = 0.0;
  for (double v : values) sum += v * v;
  return std::sqrt(sum);
}

std::vector<std::string> FeatureTokens(const PublicationRecord &record, const TfidfConfig &config) {
  std::vector<std::string> out = Tokenize(record.title);
  auto append = [&out](std::vector<std::string> more) {
    out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  };
  append(Tokenize(record.abstract));
  for (const std::string &keyword : record.author_keywords) append(Tokenize(keyword));
  if (config.include_fulltext && record.fulltext_terms) {
    for (const std::string &term : *record.fulltext_terms) append(Tokenize(term));
  }
  if (config.include_subjects) {
    for (int code : record.asjc_codes) {
      out.push_back("asjc_" + std::to_string(code));
      append(Tokenize(AsjcAreaName(code)));
    }
  }
  return out;
}

TfidfModel TfidfModel::Fit(const std::vector<std::vector<std::string>> &documents,
                           const TfidfConfig &config) {
  if (documents.empty()) throw ConfigError("cannot fit TF-IDF on an empty corpus");
  if (config.min_df < 1) throw ConfigError("min_df must be at least 1");
  if (config.max_vocabulary < 1) throw ConfigError("max_vocabulary must be at least 1");

  std::unordered_map<std::string, size_t> df;
  for (const auto &doc : documents) {
    std::unordered_set<std::string_view> seen(doc.begin(), doc.end());
    for (std::string_view term : seen) ++df[std::string(term)];
  }

  std::vector<std::pair<std::string, size_t>> kept;
  for (auto &[term, count] : df) {
    if (count >= static_cast<size_t>(config.min_df)) kept.emplace_back(term, count);
  }
  if (kept.empty()) {
    throw ConfigError("TF-IDF vocabulary is empty after min_df=" + std::to_string(config.min_df));
  }
  if (kept.size() > config.max_vocabulary) {
    std::sort(kept.begin(), kept.end(), [](const auto &a, const auto &b) {
      return a.second != b.second ? a.second > b.second : a.first < b.first;
    });
    kept.resize(config.max_vocabulary);
  }
  std::sort(kept.begin(), kept.end());

  TfidfModel model;
  model.config_ = config;
  model.document_count_ = documents.size();
  const double n = static_cast<double>(documents.size());
  for (const auto &[term, count] : kept) {
    model.columns_.emplace(term, static_cast<uint32_t>(model.terms_.size()));
    model.terms_.push_back(term);
    model.idf_.push_back(std::log((1.0 + n) / (1.0 + static_cast<double>(count))) + 1.0);
  }
  return model;
}

std::optional<uint32_t> TfidfModel::Column(const std::string &term) const {
  auto it = columns_.find(term);
  if (it == columns_.end()) return std::nullopt;
  return it->second;
}

SparseVector TfidfModel::Vectorize(std::span<const std::string> tokens) const {
  std::map<uint32_t, double> counts;
  for (const std::string &token : tokens) {
    auto it = columns_.find(token);
    if (it != columns_.end()) counts[it->second] += 1.0;
  }
  SparseVector v;
  double norm2 = 0.0;
  for (const auto &[column, count] : counts) {
    double w = count * idf_[column];
    v.indices.push_back(column);
    v.values.push_back(w);
    norm2 += w * w;
  }
  if (norm2 > 0.0) {
    double inv = 1.0 / std::sqrt(norm2);
    for (double &w : v.values) w *= inv;
  }
  return v;
}

nlohmann::json TfidfModel::ToJson() const {
  return {{"config",
           {{"min_df", config_.min_df},
            {"max_vocabulary", config_.max_vocabulary},
            {"include_fulltext", config_.include_fulltext},
            {"include_subjects", config_.include_subjects}}},
          {"document_count", document_count_},
          {"vocabulary", terms_},
          {"idf", idf_}};
}

TfidfModel TfidfModel::FromJson(const nlohmann::json &object) {
  TfidfModel model;
  const auto &config = object.at("config");
  model.config_.min_df = config.at("min_df").get<int>();
  model.config_.max_vocabulary = config.at("max_vocabulary").get<size_t>();
  model.config_.include_fulltext = config.at("include_fulltext").get<bool>();
  model.config_.include_subjects = config.at("include_subjects").get<bool>();
  model.document_count_ = object.at("document_count").get<size_t>();
  model.terms_ = object.at("vocabulary").get<std::vector<std::string>>();
  model.idf_ = object.at("idf").get<std::vector<double>>();
  if (model.terms_.size() != model.idf_.size()) {
    throw DataError("TF-IDF vocabulary and idf arrays differ in length");
  }
  for (uint32_t i = 0; i < model.terms_.size(); ++i) {
    if (!model.columns_.emplace(model.terms_[i], i).second) {
      throw DataError("duplicate vocabulary term '" + model.terms_[i] + "'");
    }
  }
  return model;
}

TfidfModel FitTfidf(const Corpus &corpus, const TfidfConfig &config) {
  std::vector<std::vector<std::string>> docs;
  docs.reserve(corpus.size());
  for (const PublicationRecord &record : corpus) docs.push_back(FeatureTokens(record, config));
  return TfidfModel::Fit(docs, config);
}

SparseVector Vectorize(const PublicationRecord &record, const TfidfModel &tfidf) {
  return tfidf.Vectorize(FeatureTokens(record, tfidf.config()));
}

}  // namespace sdgmap
