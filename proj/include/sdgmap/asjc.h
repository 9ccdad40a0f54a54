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

#ifndef SDGMAP_ASJC_H_
#define SDGMAP_ASJC_H_

#include <string_view>

namespace sdgmap {

// Name of the top-level ASJC subject area of a 4-digit code (or of a 2-digit
// area prefix). Empty when the area is unknown.
std::string_view AsjcAreaName(int code);

}  // namespace sdgmap

#endif  // SDGMAP_ASJC_H_
