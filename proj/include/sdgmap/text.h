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

#ifndef SDGMAP_TEXT_H_
#define SDGMAP_TEXT_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sdgmap {

// Text fields that queries can address.
enum class Field : uint8_t { kTitle = 0, kAbstract = 1, kKeywords = 2 };

inline constexpr int kNumFields = 3;

const char *FieldName(Field field);

struct Token {
  std::string text;
  int position = 0;
  // Keyword entry the token came from; 0 for title and abstract.
  int segment = 0;

  bool operator==(const Token &) const = default;
};

struct TokenStream {
  Field field = Field::kTitle;
  std::vector<Token> tokens;

  bool operator==(const TokenStream &) const = default;
};

// Gap inserted between consecutive keyword entries so that phrases never
// match across two entries.
inline constexpr int kKeywordGap = 2;

// Splits text into lowercased, NFKC-casefolded tokens. Every character that
// is not a letter or digit is a separator, hyphens included.
std::vector<std::string> Tokenize(std::string_view text);

// Tokenizes a single text into a stream with positions 0, 1, 2, ...
TokenStream NormalizeText(std::string_view text, Field field);

// Tokenizes a keyword list; entry k starts kKeywordGap positions after the
// last token of entry k-1.
TokenStream NormalizeKeywords(std::span<const std::string> keywords);

// Lowercase with collapsed and trimmed whitespace.
std::string NormalizeJournalName(std::string_view name);

}  // namespace sdgmap

#endif  // SDGMAP_TEXT_H_
