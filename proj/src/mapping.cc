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

#include "sdgmap/mapping.h"

#include <fstream>

#include "json.hpp"
#include "sdgmap/error.h"

namespace sdgmap {

using nlohmann::json;

const char *ProvenanceName(Provenance provenance) {
  return provenance == Provenance::kQuery ? "QUERY" : "ML";
}

void SdgMapping::AddQuery(const std::string &id, int sdg, const std::string &theme) {
  Assignment &a = records_[id][sdg];
  if (a.provenance != Provenance::kQuery) a = Assignment{};
  if (!theme.empty()) a.themes.insert(theme);
}

void SdgMapping::AddMl(const std::string &id, int sdg, double score) {
  auto [it, inserted] = records_[id].try_emplace(sdg);
  if (inserted) {
    it->second.provenance = Provenance::kMl;
    it->second.score = score;
  }
}

void SdgMapping::SetScore(const std::string &id, int sdg, double score) {
  auto rec = records_.find(id);
  if (rec == records_.end()) return;
  auto it = rec->second.find(sdg);
  if (it != rec->second.end()) it->second.score = score;
}

const Assignment *SdgMapping::Find(const std::string &id, int sdg) const {
  auto rec = records_.find(id);
  if (rec == records_.end()) return nullptr;
  auto it = rec->second.find(sdg);
  return it == rec->second.end() ? nullptr : &it->second;
}

bool SdgMapping::Has(const std::string &id, int sdg) const { return Find(id, sdg) != nullptr; }

std::set<int> SdgMapping::Sdgs(const std::string &id) const {
  std::set<int> out;
  auto rec = records_.find(id);
  if (rec != records_.end()) {
    for (const auto &[sdg, a] : rec->second) out.insert(sdg);
  }
  return out;
}

std::set<std::string> SdgMapping::RecordsFor(int sdg) const {
  std::set<std::string> out;
  for (const auto &[id, sdgs] : records_) {
    if (sdgs.contains(sdg)) out.insert(id);
  }
  return out;
}

std::set<std::string> SdgMapping::RecordsFor(int sdg, Provenance provenance) const {
  std::set<std::string> out;
  for (const auto &[id, sdgs] : records_) {
    auto it = sdgs.find(sdg);
    if (it != sdgs.end() && it->second.provenance == provenance) out.insert(id);
  }
  return out;
}

SdgMapping SdgMapping::Restrict(Provenance provenance) const {
  SdgMapping out;
  for (const auto &[id, sdgs] : records_) {
    for (const auto &[sdg, a] : sdgs) {
      if (a.provenance == provenance) out.records_[id][sdg] = a;
    }
  }
  return out;
}

bool SameAssignments(const SdgMapping &a, const SdgMapping &b) {
  if (a.records().size() != b.records().size()) return false;
  auto ia = a.records().begin();
  auto ib = b.records().begin();
  for (; ia != a.records().end(); ++ia, ++ib) {
    if (ia->first != ib->first || ia->second.size() != ib->second.size()) return false;
    auto sa = ia->second.begin();
    auto sb = ib->second.begin();
    for (; sa != ia->second.end(); ++sa, ++sb) {
      if (sa->first != sb->first || sa->second.provenance != sb->second.provenance ||
          sa->second.themes != sb->second.themes) {
        return false;
      }
    }
  }
  return true;
}

void WriteMapping(const SdgMapping &mapping, std::ostream &out) {
  for (const auto &[id, sdgs] : mapping.records()) {
    json line = {{"id", id}, {"sdgs", json::array()}};
    for (const auto &[sdg, a] : sdgs) {
      json entry = {{"sdg", sdg}, {"provenance", ProvenanceName(a.provenance)}};
      if (!a.themes.empty()) entry["themes"] = a.themes;
      if (a.score) entry["score"] = *a.score;
      line["sdgs"].push_back(std::move(entry));
    }
    out << line.dump() << '\n';
  }
}

SdgMapping ReadMapping(std::istream &in) {
  SdgMapping mapping;
  std::string text;
  size_t line_number = 0;
  while (std::getline(in, text)) {
    ++line_number;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      json line = json::parse(text);
      std::string id = line.at("id").get<std::string>();
      if (id.empty()) throw DataError("empty record id");
      if (!mapping.Sdgs(id).empty()) throw DataError("duplicate record id '" + id + "'");
      for (const json &entry : line.at("sdgs")) {
        int sdg = entry.at("sdg").get<int>();
        if (!IsValidSdg(sdg)) throw DataError("SDG " + std::to_string(sdg) + " outside [1, 17]");
        std::string provenance = entry.at("provenance").get<std::string>();
        if (provenance == "QUERY") {
          mapping.AddQuery(id, sdg);
          if (auto themes = entry.find("themes"); themes != entry.end()) {
            for (const json &theme : *themes) mapping.AddQuery(id, sdg, theme.get<std::string>());
          }
        } else if (provenance == "ML") {
          if (!entry.contains("score")) throw DataError("ML assignment without score");
          mapping.AddMl(id, sdg, entry.at("score").get<double>());
        } else {
          throw DataError("unknown provenance '" + provenance + "'");
        }
        if (auto score = entry.find("score"); score != entry.end()) {
          mapping.SetScore(id, sdg, score->get<double>());
        }
      }
    } catch (const json::exception &e) {
      throw DataError("mapping line " + std::to_string(line_number) + ": " + e.what());
    } catch (const DataError &e) {
      throw DataError("mapping line " + std::to_string(line_number) + ": " + e.what());
    }
  }
  return mapping;
}

SdgMapping LoadMapping(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open mapping file " + path.string());
  return ReadMapping(in);
}

void SaveMapping(const SdgMapping &mapping, const std::filesystem::path &path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write mapping file " + path.string());
  WriteMapping(mapping, out);
}

}  // namespace sdgmap
