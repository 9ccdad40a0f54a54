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

#ifndef SDGMAP_QUERY_H_
#define SDGMAP_QUERY_H_

#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "sdgmap/text.h"

namespace sdgmap {

// Heap-allocated value with deep copy and value equality, used for the
// recursive edges of the query tree.
template <typename T>
class Box {
 public:
  Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}  // NOLINT
  Box(const Box &other) : ptr_(std::make_unique<T>(*other.ptr_)) {}
  Box(Box &&) noexcept = default;
  Box &operator=(const Box &other) {
    if (this != &other) ptr_ = std::make_unique<T>(*other.ptr_);
    return *this;
  }
  Box &operator=(Box &&) noexcept = default;

  const T &operator*() const { return *ptr_; }
  const T *operator->() const { return ptr_.get(); }

  friend bool operator==(const Box &a, const Box &b) { return *a.ptr_ == *b.ptr_; }

 private:
  std::unique_ptr<T> ptr_;
};

// Bit set of Field values.
class FieldSet {
 public:
  constexpr FieldSet() = default;
  constexpr FieldSet(std::initializer_list<Field> fields) {
    for (Field f : fields) bits_ |= Bit(f);
  }

  static constexpr FieldSet All() { return {Field::kTitle, Field::kAbstract, Field::kKeywords}; }

  constexpr bool contains(Field f) const { return (bits_ & Bit(f)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr uint8_t bits() const { return bits_; }

  constexpr bool operator==(const FieldSet &) const = default;

 private:
  static constexpr uint8_t Bit(Field f) { return uint8_t(1u << static_cast<int>(f)); }
  uint8_t bits_ = 0;
};

// A quoted pattern: one or more tokens that must occur at consecutive
// positions; the last token may be a prefix (written with a trailing `*`).
struct TermPattern {
  std::vector<std::string> tokens;
  bool prefix = false;

  bool operator==(const TermPattern &) const = default;
};

// `left W/n right` (unordered) or `left PRE/n right` (ordered).
struct Proximity {
  TermPattern left;
  TermPattern right;
  int distance = 0;
  bool ordered = false;

  bool operator==(const Proximity &) const = default;
};

enum class SubjectMode : uint8_t { kInclude, kExclude };

// Codes are 4-digit ASJC codes, or 2-digit prefixes matching a whole area.
struct SubjectFilter {
  std::set<int> codes;
  SubjectMode mode = SubjectMode::kInclude;

  bool operator==(const SubjectFilter &) const = default;
};

struct SourceFilter {
  TermPattern pattern;

  bool operator==(const SourceFilter &) const = default;
};

struct Query;

struct FieldScope {
  FieldSet fields;
  Box<Query> child;

  bool operator==(const FieldScope &) const = default;
};

struct And {
  std::vector<Query> children;

  bool operator==(const And &) const;
};

struct Or {
  std::vector<Query> children;

  bool operator==(const Or &) const;
};

struct AndNot {
  Box<Query> left;
  Box<Query> right;

  bool operator==(const AndNot &) const = default;
};

struct Query {
  using Node = std::variant<TermPattern, Proximity, FieldScope, And, Or, AndNot,
                            SubjectFilter, SourceFilter>;
  Node node;

  template <typename T>
  Query(T value) : node(std::move(value)) {}  // NOLINT

  template <typename T>
  bool is() const {
    return std::holds_alternative<T>(node);
  }
  template <typename T>
  const T &as() const {
    return std::get<T>(node);
  }

  bool operator==(const Query &) const = default;
};

inline bool And::operator==(const And &other) const { return children == other.children; }
inline bool Or::operator==(const Or &other) const { return children == other.children; }

// Throws ConfigError when the tree breaks a structural rule: terms outside a
// field scope, filters or scopes inside a scope, And/Or with fewer than two
// children, malformed patterns, out-of-range subject codes.
void ValidateQuery(const Query &query);

// Raised for syntax errors. `offset` is a byte offset into the source.
class QueryParseError : public std::runtime_error {
 public:
  QueryParseError(std::string message, size_t offset, std::vector<std::string> expected);

  const std::string &message() const { return message_; }
  size_t offset() const { return offset_; }
  const std::vector<std::string> &expected() const { return expected_; }

 private:
  std::string message_;
  size_t offset_;
  std::vector<std::string> expected_;
};

// Parses the query language. Precedence from tightest: W/n and PRE/n, AND and
// AND NOT, OR; parentheses override.
//
//   query     := or
//   or        := and {OR and}
//   and       := unary {AND [NOT] unary}
//   unary     := scope | filter | "(" query ")"
//   scope     := FIELDFN "(" body ")"
//   body      := bodyand {OR bodyand}
//   bodyand   := prox {AND prox}
//   prox      := termexpr [(W/n | PRE/n) termexpr]
//   termexpr  := PATTERN | "(" body ")"
//   filter    := SUBJAREA "(" codes ")" | EXCLUDE "(" SUBJAREA "," codes ")"
//              | SRCTITLE "(" PATTERN ")"
//
// FIELDFN is one of TITLE, ABS, KEY, TITLE-ABS-KEY. Operators and function
// names are case-insensitive.
Query ParseQuery(std::string_view source);

// Fully parenthesized canonical text; ParseQuery(RenderQuery(q)) == q.
std::string RenderQuery(const Query &query);

// Parses a quoted-pattern body such as `pollut*` or `extreme poverty`.
TermPattern ParsePattern(std::string_view text);
std::string RenderPattern(const TermPattern &pattern);

}  // namespace sdgmap

#endif  // SDGMAP_QUERY_H_
