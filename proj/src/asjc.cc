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

#include "sdgmap/asjc.h"

#include <array>
#include <utility>

namespace sdgmap {
namespace {

constexpr std::array<std::pair<int, std::string_view>, 27> kAreas = {{
    {10, "Multidisciplinary"},
    {11, "Agricultural and Biological Sciences"},
    {12, "Arts and Humanities"},
    {13, "Biochemistry, Genetics and Molecular Biology"},
    {14, "Business, Management and Accounting"},
    {15, "Chemical Engineering"},
    {16, "Chemistry"},
    {17, "Computer Science"},
    {18, "Decision Sciences"},
    {19, "Earth and Planetary Sciences"},
    {20, "Economics, Econometrics and Finance"},
    {21, "Energy"},
    {22, "Engineering"},
    {23, "Environmental Science"},
    {24, "Immunology and Microbiology"},
    {25, "Materials Science"},
    {26, "Mathematics"},
    {27, "Medicine"},
    {28, "Neuroscience"},
    {29, "Nursing"},
    {30, "Pharmacology, Toxicology and Pharmaceutics"},
    {31, "Physics and Astronomy"},
    {32, "Psychology"},
    {33, "Social Sciences"},
    {34, "Veterinary"},
    {35, "Dentistry"},
    {36, "Health Professions"},
}};

}  // namespace

std::string_view AsjcAreaName(int code) {
  int area = code >= 1000 ? code / 100 : code;
  for (const auto &[prefix, name] : kAreas) {
    if (prefix == area) return name;
  }
  return {};
}

}  // namespace sdgmap
