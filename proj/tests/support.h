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

#ifndef SDGMAP_TESTS_SUPPORT_H_
#define SDGMAP_TESTS_SUPPORT_H_

#include <cstdint>
#include <filesystem>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "sdgmap/corpus.h"
#include "sdgmap/query.h"

namespace sdgmap::testing {

// Root of the bundled data directory.
std::filesystem::path DataDir();

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir &) = delete;
  TempDir &operator=(const TempDir &) = delete;

  const std::filesystem::path &path() const { return path_; }
  std::filesystem::path operator/(const std::string &name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

std::string ReadFile(const std::filesystem::path &path);
void WriteFile(const std::filesystem::path &path, const std::string &text);

PublicationRecord MakeRecord(std::string id, std::string title, std::string abstract = {},
                             std::vector<std::string> keywords = {}, std::vector<int> asjc = {1000},
                             std::string journal = "Test Journal");

// Random valid query over a small vocabulary. Depth bounds the nesting of
// Boolean nodes.
Query RandomQuery(std::mt19937_64 &rng, int depth = 3);

// Random record whose text draws from the same vocabulary as RandomQuery.
PublicationRecord RandomRecord(std::mt19937_64 &rng, const std::string &id);

// Records n0..n{nodes-1} with random references, some pointing outside the corpus.
Corpus RandomCitationCorpus(std::mt19937_64 &rng, int nodes);

// Breadth-1 neighborhood of `seeds` over an explicit edge list, minus the seeds.
std::set<std::string> NeighborhoodOracle(const Corpus &corpus, const std::set<std::string> &seeds);

}  // namespace sdgmap::testing

#endif  // SDGMAP_TESTS_SUPPORT_H_
