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

#ifndef SDGMAP_MAPPING_H_
#define SDGMAP_MAPPING_H_

#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace sdgmap {

inline constexpr int kMinSdg = 1;
inline constexpr int kMaxSdg = 17;

inline bool IsValidSdg(int sdg) { return sdg >= kMinSdg && sdg <= kMaxSdg; }

enum class Provenance { kQuery, kMl };

const char *ProvenanceName(Provenance provenance);

struct Assignment {
  Provenance provenance = Provenance::kQuery;
  // Themes whose queries fired; only for QUERY provenance.
  std::set<std::string> themes;
  // Model probability when the record was scored.
  std::optional<double> score;

  bool operator==(const Assignment &) const = default;
};

// Record id -> SDG -> assignment. Ids iterate lexicographically and SDGs in
// ascending order, which fixes the on-disk order.
class SdgMapping {
 public:
  using SdgMap = std::map<int, Assignment>;
  using RecordMap = std::map<std::string, SdgMap>;

  // Adds a QUERY assignment, recording `theme` when nonempty. Replaces an
  // existing ML assignment for the same pair.
  void AddQuery(const std::string &id, int sdg, const std::string &theme = {});
  // Adds an ML assignment unless the pair is already present.
  void AddMl(const std::string &id, int sdg, double score);
  void SetScore(const std::string &id, int sdg, double score);

  bool Has(const std::string &id, int sdg) const;
  const Assignment *Find(const std::string &id, int sdg) const;
  std::set<int> Sdgs(const std::string &id) const;
  std::set<std::string> RecordsFor(int sdg) const;
  std::set<std::string> RecordsFor(int sdg, Provenance provenance) const;

  // Copy holding only assignments of the given provenance.
  SdgMapping Restrict(Provenance provenance) const;

  const RecordMap &records() const { return records_; }
  size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }

  bool operator==(const SdgMapping &) const = default;

 private:
  RecordMap records_;
};

// Same (record, sdg, provenance, themes) tuples; scores are ignored.
bool SameAssignments(const SdgMapping &a, const SdgMapping &b);

// Line-delimited file, one record per line:
//   {"id":"r1","sdgs":[{"sdg":1,"provenance":"QUERY","themes":["T1"]}]}
void WriteMapping(const SdgMapping &mapping, std::ostream &out);
SdgMapping ReadMapping(std::istream &in);
SdgMapping LoadMapping(const std::filesystem::path &path);
void SaveMapping(const SdgMapping &mapping, const std::filesystem::path &path);

}  // namespace sdgmap

#endif  // SDGMAP_MAPPING_H_
