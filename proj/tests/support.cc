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

#include "support.h"

#include <atomic>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unistd.h>

#include "sdgmap/classifier.h"

namespace sdgmap::testing {
namespace {

namespace fs = std::filesystem;

const std::vector<std::string> kWords = {"poverty", "extreme", "global", "water", "ocean", "pollution",
                                         "energy",  "solar",   "levels", "urban", "whāriki", "2030"};

std::string Word(std::mt19937_64 &rng) { return kWords[UniformIndex(rng, kWords.size())]; }

TermPattern RandomPattern(std::mt19937_64 &rng) {
  TermPattern p;
  size_t n = 1 + UniformIndex(rng, 3);
  for (size_t i = 0; i < n; ++i) p.tokens.push_back(Word(rng));
  if (UniformIndex(rng, 4) == 0) {
    std::string &last = p.tokens.back();
    // Cut the final word to a prefix; byte cuts must not split a code point.
    size_t len = 1 + UniformIndex(rng, last.size());
    while (len < last.size() && (static_cast<unsigned char>(last[len]) & 0xC0) == 0x80) ++len;
    last.resize(len);
    p.prefix = true;
  }
  return p;
}

Query RandomBody(std::mt19937_64 &rng, int depth) {
  uint64_t pick = UniformIndex(rng, depth > 0 ? 4 : 2);
  if (pick == 0) return RandomPattern(rng);
  if (pick == 1) {
    return Proximity{RandomPattern(rng), RandomPattern(rng), static_cast<int>(UniformIndex(rng, 8)),
                     UniformIndex(rng, 2) == 1};
  }
  std::vector<Query> children;
  size_t n = 2 + UniformIndex(rng, 2);
  for (size_t i = 0; i < n; ++i) children.push_back(RandomBody(rng, depth - 1));
  if (pick == 2) return And{std::move(children)};
  return Or{std::move(children)};
}

FieldSet RandomScope(std::mt19937_64 &rng) {
  switch (UniformIndex(rng, 4)) {
    case 0:
      return {Field::kTitle};
    case 1:
      return {Field::kAbstract};
    case 2:
      return {Field::kKeywords};
    default:
      return FieldSet::All();
  }
}

std::atomic<int> temp_counter{0};

}  // namespace

fs::path DataDir() { return fs::path(SDGMAP_TEST_DATA_DIR); }

TempDir::TempDir() {
  path_ = fs::temp_directory_path() /
          ("sdgmap_test_" + std::to_string(::getpid()) + "_" + std::to_string(temp_counter++));
  fs::remove_all(path_);
  fs::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

std::string ReadFile(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void WriteFile(const fs::path &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

PublicationRecord MakeRecord(std::string id, std::string title, std::string abstract,
                             std::vector<std::string> keywords, std::vector<int> asjc,
                             std::string journal) {
  PublicationRecord r;
  r.id = std::move(id);
  r.title = std::move(title);
  r.abstract = std::move(abstract);
  r.author_keywords = std::move(keywords);
  r.asjc_codes = std::move(asjc);
  r.journal_name = std::move(journal);
  r.year = 2020;
  return r;
}

Query RandomQuery(std::mt19937_64 &rng, int depth) {
  uint64_t pick = UniformIndex(rng, depth > 0 ? 7 : 3);
  switch (pick) {
    case 0:
      return FieldScope{RandomScope(rng), RandomBody(rng, 2)};
    case 1: {
      SubjectFilter f;
      f.mode = UniformIndex(rng, 3) == 0 ? SubjectMode::kExclude : SubjectMode::kInclude;
      size_t n = 1 + UniformIndex(rng, 3);
      for (size_t i = 0; i < n; ++i) {
        f.codes.insert(UniformIndex(rng, 2) ? static_cast<int>(10 + UniformIndex(rng, 27))
                                            : static_cast<int>(1000 + UniformIndex(rng, 2700)));
      }
      return f;
    }
    case 2:
      return SourceFilter{RandomPattern(rng)};
    case 3:
    case 4:
    case 5: {
      std::vector<Query> children;
      size_t n = 2 + UniformIndex(rng, 2);
      for (size_t i = 0; i < n; ++i) children.push_back(RandomQuery(rng, depth - 1));
      if (pick == 3) return And{std::move(children)};
      if (pick == 4) return Or{std::move(children)};
      return AndNot{children[0], children[1]};
    }
    default:
      return FieldScope{FieldSet::All(), RandomBody(rng, 1)};
  }
}

PublicationRecord RandomRecord(std::mt19937_64 &rng, const std::string &id) {
  auto text = [&](size_t n) {
    std::string s;
    for (size_t i = 0; i < n; ++i) s += (i ? " " : "") + Word(rng);
    return s;
  };
  std::vector<std::string> keywords;
  size_t k = UniformIndex(rng, 4);
  for (size_t i = 0; i < k; ++i) keywords.push_back(text(1 + UniformIndex(rng, 2)));
  std::vector<int> codes = {static_cast<int>(1000 + 100 * UniformIndex(rng, 27) + UniformIndex(rng, 4))};
  std::string journal = UniformIndex(rng, 2) ? "Journal of " + text(1 + UniformIndex(rng, 2)) : text(2);
  return MakeRecord(id, text(2 + UniformIndex(rng, 5)), text(UniformIndex(rng, 25)), keywords, codes, journal);
}

Corpus RandomCitationCorpus(std::mt19937_64 &rng, int nodes) {
  std::vector<PublicationRecord> records;
  for (int i = 0; i < nodes; ++i) {
    PublicationRecord r = MakeRecord("n" + std::to_string(i), "node " + std::to_string(i));
    size_t degree = UniformIndex(rng, 4);
    for (size_t e = 0; e < degree; ++e) {
      int target = static_cast<int>(UniformIndex(rng, nodes + 5));
      std::string cited = target < nodes ? "n" + std::to_string(target) : "ext" + std::to_string(target);
      if (cited != r.id) r.references.push_back(cited);
    }
    records.push_back(std::move(r));
  }
  return Corpus(std::move(records));
}

std::set<std::string> NeighborhoodOracle(const Corpus &corpus, const std::set<std::string> &seeds) {
  std::set<std::string> ids;
  std::vector<std::pair<std::string, std::string>> edges;
  for (const PublicationRecord &r : corpus.records()) {
    ids.insert(r.id);
    for (const std::string &cited : r.references) edges.emplace_back(r.id, cited);
  }
  std::set<std::string> frontier;
  for (const auto &[from, to] : edges) {
    if (!ids.count(from) || !ids.count(to)) continue;
    if (seeds.count(from)) frontier.insert(to);
    if (seeds.count(to)) frontier.insert(from);
  }
  for (const std::string &s : seeds) frontier.erase(s);
  return frontier;
}

}  // namespace sdgmap::testing
