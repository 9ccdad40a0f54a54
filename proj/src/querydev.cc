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

#include "sdgmap/querydev.h"

#include <algorithm>
#include <limits>
#include <map>
#include <random>

#include "sdgmap/classifier.h"
#include "sdgmap/csv.h"
#include "sdgmap/error.h"
#include "sdgmap/tfidf.h"

namespace sdgmap {
namespace {

void CollectPatterns(const Query &q, std::vector<const TermPattern *> &out) {
  std::visit(
      [&](const auto &node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, TermPattern>) {
          out.push_back(&node);
        } else if constexpr (std::is_same_v<T, Proximity>) {
          out.push_back(&node.left);
          out.push_back(&node.right);
        } else if constexpr (std::is_same_v<T, FieldScope>) {
          CollectPatterns(*node.child, out);
        } else if constexpr (std::is_same_v<T, And> || std::is_same_v<T, Or>) {
          for (const Query &c : node.children) CollectPatterns(c, out);
        } else if constexpr (std::is_same_v<T, AndNot>) {
          CollectPatterns(*node.left, out);
          CollectPatterns(*node.right, out);
        }
      },
      q.node);
}

// True when `tokens` occur as a contiguous run in some query pattern.
bool QueryMentions(const Query *query, const std::vector<std::string> &tokens) {
  if (query == nullptr || tokens.empty()) return false;
  std::vector<const TermPattern *> patterns;
  CollectPatterns(*query, patterns);
  for (const TermPattern *p : patterns) {
    for (size_t start = 0; start + tokens.size() <= p->tokens.size(); ++start) {
      bool ok = true;
      for (size_t j = 0; j < tokens.size() && ok; ++j) {
        const std::string &pat = p->tokens[start + j];
        bool last = start + j + 1 == p->tokens.size();
        ok = (p->prefix && last) ? tokens[j].starts_with(pat) : tokens[j] == pat;
      }
      if (ok) return true;
    }
  }
  return false;
}

std::vector<DocId> ResolvePositives(const std::set<std::string> &ids, const Corpus &corpus) {
  if (ids.empty()) throw ConfigError("positive set is empty");
  std::vector<DocId> docs;
  for (const std::string &id : ids) {
    auto doc = corpus.Find(id);
    if (!doc) throw ConfigError("positive id '" + id + "' is not in the corpus");
    docs.push_back(*doc);
  }
  return docs;
}

}  // namespace

std::vector<TermSuggestion> SuggestTerms(const std::set<std::string> &positive_ids,
                                         const Corpus &corpus, size_t k, const Query *existing) {
  if (k < 1) throw ConfigError("k must be at least 1");
  std::vector<DocId> positives = ResolvePositives(positive_ids, corpus);

  TfidfConfig config;
  config.min_df = 1;
  config.max_vocabulary = std::numeric_limits<size_t>::max();
  config.include_fulltext = false;
  config.include_subjects = false;
  TfidfModel tfidf = FitTfidf(corpus, config);

  std::vector<double> sums(tfidf.size(), 0.0);
  for (DocId d : positives) {
    SparseVector v = Vectorize(corpus[d], tfidf);
    for (size_t i = 0; i < v.indices.size(); ++i) sums[v.indices[i]] += v.values[i];
  }
  std::vector<TermSuggestion> ranked;
  for (uint32_t c = 0; c < sums.size(); ++c) {
    if (sums[c] > 0.0) {
      ranked.push_back({tfidf.Term(c), sums[c] / static_cast<double>(positives.size()), false});
    }
  }
  std::sort(ranked.begin(), ranked.end(), [](const TermSuggestion &a, const TermSuggestion &b) {
    return a.score != b.score ? a.score > b.score : a.term < b.term;
  });
  if (ranked.size() > k) ranked.resize(k);
  for (TermSuggestion &s : ranked) s.in_query = QueryMentions(existing, {s.term});
  return ranked;
}

std::vector<PhraseSuggestion> SuggestPhrases(const std::set<std::string> &positive_ids,
                                             const Corpus &corpus, size_t k,
                                             const Query *existing) {
  if (k < 1) throw ConfigError("k must be at least 1");
  std::map<std::string, size_t> df;
  for (DocId d : ResolvePositives(positive_ids, corpus)) {
    std::set<std::string> seen;
    for (const std::string &entry : corpus[d].author_keywords) {
      std::vector<std::string> tokens = Tokenize(entry);
      if (tokens.empty()) continue;
      std::string phrase = tokens.front();
      for (size_t i = 1; i < tokens.size(); ++i) phrase += ' ' + tokens[i];
      seen.insert(phrase);
    }
    for (const std::string &p : seen) ++df[p];
  }
  std::vector<PhraseSuggestion> ranked;
  for (const auto &[phrase, count] : df) ranked.push_back({phrase, count, false});
  std::stable_sort(ranked.begin(), ranked.end(), [](const PhraseSuggestion &a, const PhraseSuggestion &b) {
    return a.positive_df > b.positive_df;
  });
  if (ranked.size() > k) ranked.resize(k);
  for (PhraseSuggestion &s : ranked) s.in_query = QueryMentions(existing, Tokenize(s.phrase));
  return ranked;
}

std::set<std::string> CitationExpand(const std::set<std::string> &result_ids, const Corpus &corpus) {
  std::set<std::string> out;
  for (const PublicationRecord &record : corpus) {
    bool member = result_ids.contains(record.id);
    for (const std::string &cited : record.references) {
      if (member) {
        // Backward edge: a result cites `cited`.
        if (!result_ids.contains(cited) && corpus.Find(cited)) out.insert(cited);
      } else if (result_ids.contains(cited)) {
        // Forward edge: `record` cites a result.
        out.insert(record.id);
      }
    }
  }
  return out;
}

Worksheet SampleForReview(const SdgMapping &mapping, int sdg, size_t n, uint64_t seed,
                          const Corpus &corpus) {
  if (n < 1) throw ConfigError("sample size must be at least 1");
  std::set<std::string> ids = mapping.RecordsFor(sdg);
  std::vector<std::string> population(ids.begin(), ids.end());
  Worksheet sheet;
  sheet.short_population = population.size() < n;
  std::mt19937_64 rng(DeriveSeed(seed, sdg));
  for (const std::string &id : SampleWithoutReplacement(std::move(population), n, rng)) {
    WorksheetRow row;
    row.id = id;
    if (auto doc = corpus.Find(id)) {
      row.title = corpus[*doc].title;
      row.abstract = corpus[*doc].abstract;
    }
    sheet.rows.push_back(std::move(row));
  }
  return sheet;
}

void WriteWorksheet(const Worksheet &worksheet, std::ostream &out) {
  WriteCsvRow({"id", "title", "abstract", "verdict_analyst_1", "verdict_analyst_2"}, out);
  for (const WorksheetRow &row : worksheet.rows) {
    WriteCsvRow({row.id, row.title, row.abstract, row.first ? VerdictName(*row.first) : "",
                 row.second ? VerdictName(*row.second) : ""},
                out);
  }
}

std::vector<Annotation> ReadWorksheet(std::istream &in) {
  auto rows = ReadCsv(in);
  if (rows.empty()) throw DataError("worksheet is empty");
  const auto &header = rows.front();
  auto column = [&header](const std::string &name) {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw DataError("worksheet lacks column '" + name + "'");
    return static_cast<size_t>(it - header.begin());
  };
  size_t id_col = column("id");
  size_t v1_col = column("verdict_analyst_1");
  size_t v2_col = column("verdict_analyst_2");
  std::vector<Annotation> out;
  for (size_t r = 1; r < rows.size(); ++r) {
    const auto &row = rows[r];
    auto cell = [&row](size_t c) { return c < row.size() ? row[c] : std::string(); };
    try {
      out.push_back({cell(id_col), ParseVerdict(cell(v1_col)), ParseVerdict(cell(v2_col))});
    } catch (const DataError &e) {
      throw DataError("worksheet row " + std::to_string(r + 1) + ": " + e.what());
    }
  }
  return out;
}

std::vector<JournalShare> JournalConcentration(const SdgMapping &mapping, int sdg,
                                               const Corpus &corpus) {
  std::map<std::string, JournalShare> journals;
  for (const PublicationRecord &record : corpus) {
    std::string name = NormalizeJournalName(record.journal_name);
    if (name.empty()) continue;
    JournalShare &j = journals[name];
    j.journal = name;
    ++j.total;
    if (mapping.Has(record.id, sdg)) ++j.matched;
  }
  std::vector<JournalShare> out;
  for (auto &[name, j] : journals) {
    if (j.matched == 0) continue;
    j.share = static_cast<double>(j.matched) / static_cast<double>(j.total);
    out.push_back(j);
  }
  std::stable_sort(out.begin(), out.end(), [](const JournalShare &a, const JournalShare &b) {
    if (a.share != b.share) return a.share > b.share;
    return a.matched > b.matched;
  });
  return out;
}

}  // namespace sdgmap
