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

#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "sdgmap/error.h"
#include "support.h"

namespace sdgmap {
namespace {

using Docs = std::vector<std::vector<std::string>>;

TfidfConfig MinDf(int min_df, size_t max_vocabulary = 50000) {
  TfidfConfig c;
  c.min_df = min_df;
  c.max_vocabulary = max_vocabulary;
  return c;
}

TEST(TfidfFitTest, SingleDocumentHasUnitIdf) {
  TfidfModel m = TfidfModel::Fit(Docs{{"poverty"}}, MinDf(1));
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m.Term(0), "poverty");
  EXPECT_EQ(m.Idf(0), 1.0);
}

TEST(TfidfFitTest, SmoothedIdfValue) {
  TfidfModel m = TfidfModel::Fit(Docs{{"poverty", "water"}, {"water"}}, MinDf(1));
  // ln(3/2) + 1
  EXPECT_NEAR(m.Idf(*m.Column("poverty")), 1.4054651081081644, 1e-15);
  EXPECT_EQ(m.Idf(*m.Column("water")), 1.0);
}

TEST(TfidfFitTest, ErrorsOnDegenerateInput) {
  EXPECT_THROW(TfidfModel::Fit(Docs{}, MinDf(1)), ConfigError);
  EXPECT_THROW(TfidfModel::Fit(Docs{{"a"}, {"b"}, {"c"}}, MinDf(2)), ConfigError);
  EXPECT_THROW(TfidfModel::Fit(Docs{{"a"}}, MinDf(0)), ConfigError);
  EXPECT_THROW(TfidfModel::Fit(Docs{{"a"}}, MinDf(1, 0)), ConfigError);
  EXPECT_THROW(FitTfidf(Corpus(), TfidfConfig{}), ConfigError);
}

TEST(TfidfFitTest, VocabularyCapKeepsHighestDfThenLexicographic) {
  Docs docs = {{"a", "b", "c", "d"}, {"b", "c", "d"}, {"c", "d"}, {"e"}};
  TfidfModel m = TfidfModel::Fit(docs, MinDf(1, 3));
  ASSERT_EQ(m.size(), 3u);
  // df: c=3, d=3, b=2, then a=1 and e=1 dropped; columns in term order.
  EXPECT_EQ(m.Term(0), "b");
  EXPECT_EQ(m.Term(1), "c");
  EXPECT_EQ(m.Term(2), "d");
  TfidfModel tie = TfidfModel::Fit(docs, MinDf(1, 4));
  EXPECT_TRUE(tie.Column("a").has_value());
  EXPECT_FALSE(tie.Column("e").has_value());
}

TEST(TfidfFitTest, IdfIsAtLeastOne) {
  Corpus corpus = LoadCorpus(testing::DataDir() / "synthetic" / "corpus.jsonl");
  TfidfModel m = FitTfidf(corpus, TfidfConfig{});
  for (uint32_t c = 0; c < m.size(); ++c) EXPECT_GE(m.Idf(c), 1.0) << m.Term(c);
}

TEST(TfidfVectorizeTest, SmallCases) {
  TfidfModel one = TfidfModel::Fit(Docs{{"poverty"}}, MinDf(1));
  std::vector<std::string> none = {"unknown"};
  EXPECT_TRUE(one.Vectorize(none).empty());
  std::vector<std::string> twice = {"poverty", "poverty", "unknown"};
  SparseVector v = one.Vectorize(twice);
  ASSERT_EQ(v.indices.size(), 1u);
  EXPECT_EQ(v.values[0], 1.0);

  TfidfModel two = TfidfModel::Fit(Docs{{"a", "b"}}, MinDf(1));
  std::vector<std::string> ab = {"b", "a"};
  SparseVector w = two.Vectorize(ab);
  EXPECT_EQ(w.indices, (std::vector<uint32_t>{0, 1}));
  EXPECT_NEAR(w.values[0], 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(w.values[1], 1.0 / std::sqrt(2.0), 1e-15);
}

TEST(TfidfVectorizeTest, MatchesDirectComputation) {
  Docs docs = {{"ocean", "ocean", "reef"}, {"ocean", "fish"}, {"fish", "reef", "reef", "reef"}};
  TfidfModel m = TfidfModel::Fit(docs, MinDf(1));
  for (const auto &doc : docs) {
    std::map<std::string, double> raw;
    for (const auto &t : doc) raw[t] += 1.0;
    double norm = 0.0;
    for (auto &[t, x] : raw) {
      double df = 0;
      for (const auto &d : docs) df += std::find(d.begin(), d.end(), t) != d.end();
      x *= std::log(4.0 / (1.0 + df)) + 1.0;
      norm += x * x;
    }
    SparseVector v = m.Vectorize(doc);
    ASSERT_EQ(v.indices.size(), raw.size());
    for (size_t i = 0; i < v.indices.size(); ++i) {
      EXPECT_NEAR(v.values[i], raw.at(m.Term(v.indices[i])) / std::sqrt(norm), 1e-14);
    }
  }
}

TEST(TfidfVectorizeTest, NonzeroVectorsHaveUnitNorm) {
  Corpus corpus = LoadCorpus(testing::DataDir() / "synthetic" / "corpus.jsonl");
  TfidfModel m = FitTfidf(corpus, TfidfConfig{});
  for (const PublicationRecord &r : corpus) {
    SparseVector v = Vectorize(r, m);
    if (!v.empty()) EXPECT_NEAR(v.Norm(), 1.0, 1e-12) << r.id;
    EXPECT_TRUE(std::is_sorted(v.indices.begin(), v.indices.end()));
  }
}

TEST(FeatureTokensTest, IncludesOptionalFieldsPerConfig) {
  PublicationRecord r = testing::MakeRecord("a", "Title", "Abstract text", {"key word"}, {2725});
  r.fulltext_terms = std::vector<std::string>{"full text"};
  TfidfConfig all;
  EXPECT_EQ(FeatureTokens(r, all), (std::vector<std::string>{"title", "abstract", "text", "key", "word", "full",
                                                             "text", "asjc_2725", "medicine"}));
  TfidfConfig bare;
  bare.include_fulltext = false;
  bare.include_subjects = false;
  EXPECT_EQ(FeatureTokens(r, bare), (std::vector<std::string>{"title", "abstract", "text", "key", "word"}));
}

TEST(TfidfModelTest, JsonRoundTrip) {
  Corpus corpus = LoadCorpus(testing::DataDir() / "synthetic" / "corpus.jsonl");
  TfidfModel m = FitTfidf(corpus, TfidfConfig{});
  TfidfModel again = TfidfModel::FromJson(nlohmann::json::parse(m.ToJson().dump()));
  EXPECT_EQ(again, m);
}

}  // namespace
}  // namespace sdgmap
