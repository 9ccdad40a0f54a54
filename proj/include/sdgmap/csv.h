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

#ifndef SDGMAP_CSV_H_
#define SDGMAP_CSV_H_

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace sdgmap {

// RFC 4180 field quoting: fields containing a comma, quote, CR or LF are
// double-quoted with inner quotes doubled.
std::string CsvEscape(const std::string &field);
void WriteCsvRow(const std::vector<std::string> &fields, std::ostream &out);

// Reads all rows; quoted fields may span lines. Throws DataError on an
// unterminated quote.
std::vector<std::vector<std::string>> ReadCsv(std::istream &in);

}  // namespace sdgmap

#endif  // SDGMAP_CSV_H_
