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

#include "sdgmap/corpus.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "sdgmap/error.h"

namespace sdgmap {

using nlohmann::json;

namespace {

const char *const kKnownKeys[] = {"id",       "title",          "abstract",
                                  "description", "keywords",    "journal",
                                  "asjc",     "fulltext_terms", "references",
                                  "year",     "gold"};

std::string RequireString(const json &object, const char *key) {
  auto it = object.find(key);
  if (it == object.end()) throw DataError(std::string("missing key '") + key + "'");
  if (!it->is_string()) throw DataError(std::string("key '") + key + "' must be a string");
  return it->get<std::string>();
}

std::vector<std::string> StringList(const json &value, const char *key) {
  if (!value.is_array()) throw DataError(std::string("key '") + key + "' must be a list");
  std::vector<std::string> out;
  for (const json &item : value) {
    if (!item.is_string()) {
      throw DataError(std::string("key '") + key + "' must hold strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

Corpus::Corpus(std::vector<PublicationRecord> records) : records_(std::move(records)) {
  by_id_.reserve(records_.size());
  for (size_t i = 0; i < records_.size(); ++i) {
    ValidateRecord(records_[i]);
    auto [it, inserted] = by_id_.emplace(records_[i].id, static_cast<DocId>(i));
    if (!inserted) throw DataError("duplicate record id '" + records_[i].id + "'");
  }
}

std::optional<DocId> Corpus::Find(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

void ValidateRecord(const PublicationRecord &record) {
  if (record.id.empty()) throw DataError("record id must be nonempty");
  for (int code : record.asjc_codes) {
    if (code < 1000 || code > 9999) {
      throw DataError("record '" + record.id + "': ASJC code " + std::to_string(code) +
                      " outside [1000, 9999]");
    }
  }
  if (std::find(record.references.begin(), record.references.end(), record.id) !=
      record.references.end()) {
    throw DataError("record '" + record.id + "' cites itself");
  }
}

PublicationRecord RecordFromJson(const json &object) {
  if (!object.is_object()) throw DataError("record must be an object");
  for (const auto &item : object.items()) {
    if (std::find_if(std::begin(kKnownKeys), std::end(kKnownKeys), [&](const char *k) {
          return item.key() == k;
        }) == std::end(kKnownKeys)) {
      throw DataError("unknown key '" + item.key() + "'");
    }
  }

  PublicationRecord record;
  record.id = RequireString(object, "id");
  record.title = RequireString(object, "title");
  bool has_abstract = object.contains("abstract");
  bool has_description = object.contains("description");
  if (has_abstract == has_description) {
    throw DataError("record needs exactly one of 'abstract' or 'description'");
  }
  record.abstract = RequireString(object, has_abstract ? "abstract" : "description");

  // Course records carry only title and description.
  if (has_abstract) {
    for (const char *key : {"keywords", "journal", "asjc", "year"}) {
      if (!object.contains(key)) throw DataError(std::string("missing key '") + key + "'");
    }
  }
  if (auto it = object.find("keywords"); it != object.end()) {
    record.author_keywords = StringList(*it, "keywords");
  }
  if (object.contains("journal")) record.journal_name = RequireString(object, "journal");
  if (auto it = object.find("asjc"); it != object.end()) {
    if (!it->is_array()) throw DataError("key 'asjc' must be a list");
    for (const json &code : *it) {
      if (!code.is_number_integer()) throw DataError("key 'asjc' must hold integers");
      record.asjc_codes.push_back(code.get<int>());
    }
  }
  if (auto it = object.find("fulltext_terms"); it != object.end() && !it->is_null()) {
    record.fulltext_terms = StringList(*it, "fulltext_terms");
  }
  if (auto it = object.find("references"); it != object.end()) {
    record.references = StringList(*it, "references");
  }
  if (auto it = object.find("year"); it != object.end()) {
    if (!it->is_number_integer()) throw DataError("key 'year' must be an integer");
    record.year = it->get<int>();
  }
  ValidateRecord(record);
  return record;
}

json RecordToJson(const PublicationRecord &record) {
  json object = {{"id", record.id},
                 {"title", record.title},
                 {"abstract", record.abstract},
                 {"keywords", record.author_keywords},
                 {"journal", record.journal_name},
                 {"asjc", record.asjc_codes},
                 {"year", record.year}};
  if (record.fulltext_terms) object["fulltext_terms"] = *record.fulltext_terms;
  if (!record.references.empty()) object["references"] = record.references;
  return object;
}

Corpus ReadCorpus(std::istream &in) {
  std::vector<PublicationRecord> records;
  std::unordered_map<std::string, size_t> seen;
  std::string line;
  size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    PublicationRecord record;
    try {
      record = RecordFromJson(json::parse(line));
    } catch (const json::exception &e) {
      throw DataError("line " + std::to_string(line_number) + ": " + e.what());
    } catch (const DataError &e) {
      throw DataError("line " + std::to_string(line_number) + ": " + e.what());
    }
    auto [it, inserted] = seen.emplace(record.id, line_number);
    if (!inserted) {
      throw DataError("line " + std::to_string(line_number) + ": duplicate record id '" +
                      record.id + "' (first seen on line " + std::to_string(it->second) +
                      ")");
    }
    records.push_back(std::move(record));
  }
  return Corpus(std::move(records));
}

Corpus LoadCorpus(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open corpus file " + path.string());
  return ReadCorpus(in);
}

void WriteCorpus(const Corpus &corpus, std::ostream &out) {
  for (const PublicationRecord &record : corpus) out << RecordToJson(record).dump() << '\n';
}

TokenizedRecord TokenizeRecord(const PublicationRecord &record) {
  TokenizedRecord out;
  out.fields[0] = NormalizeText(record.title, Field::kTitle);
  out.fields[1] = NormalizeText(record.abstract, Field::kAbstract);
  out.fields[2] = NormalizeKeywords(record.author_keywords);
  return out;
}

}  // namespace sdgmap
