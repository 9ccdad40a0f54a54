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

#ifndef SDGMAP_TFIDF_H_
#define SDGMAP_TFIDF_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "sdgmap/corpus.h"

namespace sdgmap {

struct TfidfConfig {
  int min_df = 2;
  size_t max_vocabulary = 50000;
  // Optional classifier inputs on top of title, abstract and keywords.
  bool include_fulltext = true;
  bool include_subjects = true;

  bool operator==(const TfidfConfig &) const = default;
};

struct SparseVector {
  std::vector<uint32_t> indices;  // ascending
  std::vector<double> values;

  bool empty() const { return indices.empty(); }
  double Dot(std::span<const double> dense) const;
  double Norm() const;
};

// Bag of classifier tokens for a record: title, abstract and keyword tokens,
// then fulltext term tokens, then `asjc_<code>` plus the tokens of the code's
// top-level area name.
std::vector<std::string> FeatureTokens(const PublicationRecord &record, const TfidfConfig &config);

// Vocabulary and smoothed idf, idf(t) = ln((1 + N) / (1 + df(t))) + 1.
class TfidfModel {
 public:
  TfidfModel() = default;

  // Keeps terms with df >= min_df; when more than max_vocabulary survive,
  // keeps the highest-df terms, ties broken lexicographically. Column indices
  // follow lexicographic term order. Throws ConfigError on an empty corpus or
  // an empty resulting vocabulary.
  static TfidfModel Fit(const std::vector<std::vector<std::string>> &documents,
                        const TfidfConfig &config);

  // Raw count times idf, L2-normalized. Unknown tokens are ignored.
  SparseVector Vectorize(std::span<const std::string> tokens) const;

  size_t size() const { return idf_.size(); }
  std::optional<uint32_t> Column(const std::string &term) const;
  const std::string &Term(uint32_t column) const { return terms_[column]; }
  double Idf(uint32_t column) const { return idf_[column]; }
  size_t document_count() const { return document_count_; }
  const TfidfConfig &config() const { return config_; }

  nlohmann::json ToJson() const;
  static TfidfModel FromJson(const nlohmann::json &object);

  bool operator==(const TfidfModel &) const = default;

 private:
  TfidfConfig config_;
  size_t document_count_ = 0;
  std::vector<std::string> terms_;
  std::vector<double> idf_;
  std::map<std::string, uint32_t, std::less<>> columns_;
};

TfidfModel FitTfidf(const Corpus &corpus, const TfidfConfig &config);
SparseVector Vectorize(const PublicationRecord &record, const TfidfModel &tfidf);

}  // namespace sdgmap

#endif  // SDGMAP_TFIDF_H_
