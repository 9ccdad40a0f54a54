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

#ifndef SDGMAP_COMBINER_H_
#define SDGMAP_COMBINER_H_

#include <ostream>
#include <vector>

#include "sdgmap/classifier.h"
#include "sdgmap/mapping.h"

namespace sdgmap {

// Two-stage mapping: every query assignment is kept as is, and (r, s) is
// added with ML provenance when score_s(r) >= theta and the pair is not
// already assigned. Scores of scored records are attached to their
// assignments. Throws ConfigError unless theta is in (0, 1].
SdgMapping Combine(const SdgMapping &query_mapping, const ScoreTable &scores, double theta);

struct ProvenanceRow {
  int sdg = 0;
  size_t query_count = 0;
  size_t ml_count = 0;
  // ml / (ml + query), 0 when the SDG has no assignments.
  double ml_share = 0.0;

  bool operator==(const ProvenanceRow &) const = default;
};

// One row per SDG 1..16, plus SDG 17 when requested.
std::vector<ProvenanceRow> ProvenanceReport(const SdgMapping &mapping, bool include_sdg17 = false);

void RenderProvenanceText(const std::vector<ProvenanceRow> &rows, std::ostream &out);
// One JSON object per line.
void RenderProvenanceMachine(const std::vector<ProvenanceRow> &rows, std::ostream &out);
// CSV with header `sdg,query_count,ml_count`.
void WriteProvenancePlotData(const std::vector<ProvenanceRow> &rows, std::ostream &out);

}  // namespace sdgmap

#endif  // SDGMAP_COMBINER_H_
