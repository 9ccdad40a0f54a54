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

#include "sdgmap/text.h"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <cctype>
#include <stdexcept>

namespace sdgmap {
namespace {

const icu::Normalizer2 &CaseFolder() {
  static const icu::Normalizer2 *folder = [] {
    UErrorCode status = U_ZERO_ERROR;
    const icu::Normalizer2 *n = icu::Normalizer2::getNFKCCasefoldInstance(status);
    if (U_FAILURE(status)) {
      throw std::runtime_error(std::string("ICU NFKC_Casefold unavailable: ") +
                               u_errorName(status));
    }
    return n;
  }();
  return *folder;
}

bool IsAscii(std::string_view text) {
  for (unsigned char c : text) {
    if (c >= 0x80) return false;
  }
  return true;
}

// Fast path for plain ASCII, which covers nearly all metadata.
std::vector<std::string> TokenizeAscii(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (unsigned char c : text) {
    if (std::isalnum(c)) {
      current.push_back(static_cast<char>(std::tolower(c)));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::vector<std::string> TokenizeUnicode(std::string_view text) {
  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString folded = CaseFolder().normalize(
      icu::UnicodeString::fromUTF8(
          icu::StringPiece(text.data(), static_cast<int32_t>(text.size()))),
      status);
  if (U_FAILURE(status)) return TokenizeAscii(text);

  std::vector<std::string> tokens;
  std::string current;
  for (int32_t i = 0; i < folded.length();) {
    UChar32 c = folded.char32At(i);
    i += U16_LENGTH(c);
    int8_t type = u_charType(c);
    bool mark = type == U_NON_SPACING_MARK || type == U_COMBINING_SPACING_MARK ||
                type == U_ENCLOSING_MARK;
    // Marks extend a token but never start one.
    if (u_isalnum(c) || (mark && !current.empty())) {
      char buf[U8_MAX_LENGTH];
      int32_t len = 0;
      UBool error = false;
      U8_APPEND(buf, len, U8_MAX_LENGTH, c, error);
      if (!error) current.append(buf, static_cast<size_t>(len));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

}  // namespace

const char *FieldName(Field field) {
  switch (field) {
    case Field::kTitle:
      return "TITLE";
    case Field::kAbstract:
      return "ABSTRACT";
    case Field::kKeywords:
      return "KEYWORDS";
  }
  return "?";
}

std::vector<std::string> Tokenize(std::string_view text) {
  return IsAscii(text) ? TokenizeAscii(text) : TokenizeUnicode(text);
}

TokenStream NormalizeText(std::string_view text, Field field) {
  TokenStream stream;
  stream.field = field;
  int position = 0;
  for (auto &token : Tokenize(text)) {
    stream.tokens.push_back({std::move(token), position++, 0});
  }
  return stream;
}

TokenStream NormalizeKeywords(std::span<const std::string> keywords) {
  TokenStream stream;
  stream.field = Field::kKeywords;
  int position = 0;
  int segment = 0;
  for (const std::string &entry : keywords) {
    std::vector<std::string> tokens = Tokenize(entry);
    if (tokens.empty()) continue;
    if (!stream.tokens.empty()) position += kKeywordGap - 1;
    for (auto &token : tokens) {
      stream.tokens.push_back({std::move(token), position++, segment});
    }
    ++segment;
  }
  return stream;
}

std::string NormalizeJournalName(std::string_view name) {
  std::string out;
  bool pending_space = false;
  for (unsigned char c : name) {
    if (std::isspace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(static_cast<char>(std::tolower(c)));
  }
  return out;
}

}  // namespace sdgmap
