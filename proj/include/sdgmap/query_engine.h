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

#ifndef SDGMAP_QUERY_ENGINE_H_
#define SDGMAP_QUERY_ENGINE_H_

#include <filesystem>
#include <istream>
#include <set>
#include <string>
#include <vector>

#include "sdgmap/corpus.h"
#include "sdgmap/index.h"
#include "sdgmap/mapping.h"
#include "sdgmap/query.h"

namespace sdgmap {

struct QueryBankEntry {
  int sdg = 0;
  std::string theme;
  Query query;
};

// Theme-level queries for one or more SDGs.
struct QueryBank {
  std::vector<QueryBankEntry> entries;

  // Throws DataError when an SDG is out of range or a theme label repeats
  // within one SDG.
  void Validate() const;
};

// Reads `# SDG <n> <theme-label>` sections; the query text is every
// nonblank line up to the next header. `source` names the input in errors.
QueryBank ReadQueryBank(std::istream &in, const std::string &source = "<input>");
// A single file, or every regular file in a directory in filename order.
QueryBank LoadQueryBank(const std::filesystem::path &path);
// Writes the bank back in the same layout with canonical query text.
void WriteQueryBank(const QueryBank &bank, std::ostream &out);

// Reference matcher: evaluates the query directly on one record's tokens.
bool Matches(const Query &query, const PublicationRecord &record);
bool Matches(const Query &query, const PublicationRecord &record, const TokenizedRecord &tokens);

// Indexed evaluation; returns matching docs in ascending order.
std::vector<DocId> ExecuteDocs(const Query &query, const InvertedIndex &index);
std::set<std::string> Execute(const Query &query, const InvertedIndex &index);

// Assigns SDG s with QUERY provenance to every record matched by at least one
// of s's theme queries. `threads` > 1 evaluates entries concurrently; the
// result does not depend on it.
SdgMapping RunQueryBank(const QueryBank &bank, const InvertedIndex &index, int threads = 1);
// Same result computed with the reference matcher.
SdgMapping RunQueryBankNaive(const QueryBank &bank, const Corpus &corpus);

}  // namespace sdgmap

#endif  // SDGMAP_QUERY_ENGINE_H_
