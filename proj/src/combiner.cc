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

#include "sdgmap/combiner.h"

#include <cstdio>
#include <string>

#include "json.hpp"
#include "sdgmap/error.h"

namespace sdgmap {

SdgMapping Combine(const SdgMapping &query_mapping, const ScoreTable &scores, double theta) {
  if (!(theta > 0.0 && theta <= 1.0)) {
    throw ConfigError("threshold must lie in (0, 1], got " + std::to_string(theta));
  }
  SdgMapping out = query_mapping.Restrict(Provenance::kQuery);
  for (const auto &[id, row] : scores) {
    for (const auto &[sdg, p] : row) {
      if (out.Has(id, sdg)) {
        out.SetScore(id, sdg, p);
      } else if (p >= theta) {
        out.AddMl(id, sdg, p);
      }
    }
  }
  return out;
}

std::vector<ProvenanceRow> ProvenanceReport(const SdgMapping &mapping, bool include_sdg17) {
  const int last = include_sdg17 ? kMaxSdg : kMaxSdg - 1;
  std::vector<ProvenanceRow> rows;
  for (int sdg = kMinSdg; sdg <= last; ++sdg) rows.push_back({sdg, 0, 0, 0.0});
  for (const auto &[id, sdgs] : mapping.records()) {
    for (const auto &[sdg, a] : sdgs) {
      if (sdg > last) continue;
      ProvenanceRow &row = rows[static_cast<size_t>(sdg - kMinSdg)];
      (a.provenance == Provenance::kQuery ? row.query_count : row.ml_count) += 1;
    }
  }
  for (ProvenanceRow &row : rows) {
    size_t total = row.query_count + row.ml_count;
    row.ml_share = total ? static_cast<double>(row.ml_count) / static_cast<double>(total) : 0.0;
  }
  return rows;
}

void RenderProvenanceText(const std::vector<ProvenanceRow> &rows, std::ostream &out) {
  char line[128];
  std::snprintf(line, sizeof line, "%4s %10s %10s %9s\n", "SDG", "query", "ml", "ml_share");
  out << line;
  size_t query_total = 0;
  size_t ml_total = 0;
  for (const ProvenanceRow &row : rows) {
    std::snprintf(line, sizeof line, "%4d %10zu %10zu %8.2f%%\n", row.sdg, row.query_count,
                  row.ml_count, 100.0 * row.ml_share);
    out << line;
    query_total += row.query_count;
    ml_total += row.ml_count;
  }
  double share = query_total + ml_total
                     ? static_cast<double>(ml_total) / static_cast<double>(query_total + ml_total)
                     : 0.0;
  std::snprintf(line, sizeof line, "%4s %10zu %10zu %8.2f%%\n", "all", query_total, ml_total,
                100.0 * share);
  out << line;
}

void RenderProvenanceMachine(const std::vector<ProvenanceRow> &rows, std::ostream &out) {
  for (const ProvenanceRow &row : rows) {
    out << nlohmann::json{{"sdg", row.sdg},
                          {"query_count", row.query_count},
                          {"ml_count", row.ml_count},
                          {"ml_share", row.ml_share}}
               .dump()
        << '\n';
  }
}

void WriteProvenancePlotData(const std::vector<ProvenanceRow> &rows, std::ostream &out) {
  out << "sdg,query_count,ml_count\n";
  for (const ProvenanceRow &row : rows) {
    out << row.sdg << ',' << row.query_count << ',' << row.ml_count << '\n';
  }
}

}  // namespace sdgmap
