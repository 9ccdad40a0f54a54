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

#ifndef SDGMAP_QUERYDEV_H_
#define SDGMAP_QUERYDEV_H_

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "sdgmap/corpus.h"
#include "sdgmap/evaluation.h"
#include "sdgmap/mapping.h"
#include "sdgmap/query.h"

namespace sdgmap {

struct TermSuggestion {
  std::string term;
  double score = 0.0;
  // True when an existing query already matches the term literally.
  bool in_query = false;
};

// Ranks single tokens by their mean TF-IDF weight over the positive records,
// with the vocabulary fit on the whole corpus from titles, abstracts and
// author keywords. Descending score, ties lexicographic; at most k entries.
// Throws ConfigError on an empty positive set, k < 1 or unknown ids.
std::vector<TermSuggestion> SuggestTerms(const std::set<std::string> &positive_ids,
                                         const Corpus &corpus, size_t k,
                                         const Query *existing = nullptr);

struct PhraseSuggestion {
  std::string phrase;  // normalized keyword entry
  size_t positive_df = 0;
  bool in_query = false;
};

// Author-keyword entries of the positive records ranked by how many
// positives carry them (ties lexicographic).
std::vector<PhraseSuggestion> SuggestPhrases(const std::set<std::string> &positive_ids,
                                             const Corpus &corpus, size_t k,
                                             const Query *existing = nullptr);

// Corpus records outside `result_ids` that cite a member of the result set or
// are cited by one. One hop only.
std::set<std::string> CitationExpand(const std::set<std::string> &result_ids, const Corpus &corpus);

struct WorksheetRow {
  std::string id;
  std::string title;
  std::string abstract;
  std::optional<Verdict> first;
  std::optional<Verdict> second;
};

struct Worksheet {
  std::vector<WorksheetRow> rows;
  // Set when fewer than n records were available.
  bool short_population = false;
};

// Seeded uniform sample without replacement of the records assigned `sdg`.
// Throws ConfigError when n < 1.
Worksheet SampleForReview(const SdgMapping &mapping, int sdg, size_t n, uint64_t seed,
                          const Corpus &corpus);

// CSV with columns id,title,abstract,verdict_analyst_1,verdict_analyst_2.
void WriteWorksheet(const Worksheet &worksheet, std::ostream &out);
std::vector<Annotation> ReadWorksheet(std::istream &in);

struct JournalShare {
  std::string journal;
  size_t matched = 0;
  size_t total = 0;
  double share = 0.0;
};

// Journals with at least one record assigned `sdg`, by share desc, then
// matched count desc, then name.
std::vector<JournalShare> JournalConcentration(const SdgMapping &mapping, int sdg,
                                               const Corpus &corpus);

}  // namespace sdgmap

#endif  // SDGMAP_QUERYDEV_H_
