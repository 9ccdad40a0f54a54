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

#ifndef SDGMAP_CORPUS_H_
#define SDGMAP_CORPUS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "sdgmap/text.h"

namespace sdgmap {

// Metadata of one publication (or course) record.
struct PublicationRecord {
  std::string id;
  std::string title;
  std::string abstract;
  std::vector<std::string> author_keywords;
  std::string journal_name;
  std::vector<int> asjc_codes;
  std::optional<std::vector<std::string>> fulltext_terms;
  std::vector<std::string> references;
  int year = 0;

  bool operator==(const PublicationRecord &) const = default;
};

// Dense index of a record within its corpus.
using DocId = uint32_t;

// Records in input order with id lookup. Immutable once loaded.
class Corpus {
 public:
  Corpus() = default;

  // Throws DataError on a duplicate id or an invariant violation.
  explicit Corpus(std::vector<PublicationRecord> records);

  size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }
  const PublicationRecord &operator[](DocId doc) const { return records_[doc]; }
  const std::vector<PublicationRecord> &records() const { return records_; }

  std::optional<DocId> Find(std::string_view id) const;

  auto begin() const { return records_.begin(); }
  auto end() const { return records_.end(); }

 private:
  std::vector<PublicationRecord> records_;
  std::unordered_map<std::string, DocId> by_id_;
};

// Checks the record invariants; throws DataError naming the record.
void ValidateRecord(const PublicationRecord &record);

// Converts one line object. Accepts the publication shape and the course
// shape (`description` in place of `abstract`).
PublicationRecord RecordFromJson(const nlohmann::json &object);
nlohmann::json RecordToJson(const PublicationRecord &record);

// Line-delimited JSON, one record per line; blank lines are skipped.
// Errors carry the 1-based line number.
Corpus ReadCorpus(std::istream &in);
Corpus LoadCorpus(const std::filesystem::path &path);
void WriteCorpus(const Corpus &corpus, std::ostream &out);

// Token streams of the three query-matchable fields, indexed by Field.
struct TokenizedRecord {
  TokenStream fields[kNumFields];

  const TokenStream &stream(Field field) const {
    return fields[static_cast<int>(field)];
  }
};

TokenizedRecord TokenizeRecord(const PublicationRecord &record);

}  // namespace sdgmap

#endif  // SDGMAP_CORPUS_H_
