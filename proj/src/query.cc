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

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

#include "sdgmap/error.h"
#include "sdgmap/query.h"

namespace sdgmap {
namespace {

enum class Tok { kEnd, kLParen, kRParen, kComma, kString, kWord, kAnd, kOr, kNot, kProx };

struct Lexeme {
  Tok kind = Tok::kEnd;
  std::string text;  // string body or word text
  size_t offset = 0;
  int distance = 0;  // kProx
  bool ordered = false;
};

std::string Upper(std::string_view s) {
  std::string out(s);
  for (char &c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

bool IsWordChar(char c) {
  return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != '"' &&
         c != ',';
}

std::optional<int> ParseNumber(std::string_view digits) {
  if (digits.empty() || digits.size() > 7) return std::nullopt;
  int value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) return std::nullopt;
  return value;
}

std::vector<Lexeme> Lex(std::string_view src) {
  std::vector<Lexeme> out;
  size_t i = 0;
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Lexeme lex;
    lex.offset = i;
    if (c == '(' || c == ')' || c == ',') {
      lex.kind = c == '(' ? Tok::kLParen : c == ')' ? Tok::kRParen : Tok::kComma;
      ++i;
    } else if (c == '"') {
      size_t close = src.find('"', i + 1);
      if (close == std::string_view::npos) {
        throw QueryParseError("unterminated quoted pattern", i, {"'\"'"});
      }
      lex.kind = Tok::kString;
      lex.text = std::string(src.substr(i + 1, close - i - 1));
      i = close + 1;
    } else {
      size_t start = i;
      while (i < src.size() && IsWordChar(src[i])) ++i;
      lex.text = std::string(src.substr(start, i - start));
      std::string upper = Upper(lex.text);
      lex.kind = Tok::kWord;
      if (upper == "AND") {
        lex.kind = Tok::kAnd;
      } else if (upper == "OR") {
        lex.kind = Tok::kOr;
      } else if (upper == "NOT") {
        lex.kind = Tok::kNot;
      } else if (upper.starts_with("W/") || upper.starts_with("PRE/")) {
        bool ordered = upper[0] == 'P';
        auto n = ParseNumber(std::string_view(upper).substr(ordered ? 4 : 2));
        if (!n) throw QueryParseError("bad proximity distance in '" + lex.text + "'", start, {"W/<n>", "PRE/<n>"});
        lex.kind = Tok::kProx;
        lex.distance = *n;
        lex.ordered = ordered;
      }
    }
    out.push_back(std::move(lex));
  }
  Lexeme end;
  end.offset = src.size();
  out.push_back(end);
  return out;
}

std::string Describe(const Lexeme &lex) {
  switch (lex.kind) {
    case Tok::kEnd:
      return "end of query";
    case Tok::kLParen:
      return "'('";
    case Tok::kRParen:
      return "')'";
    case Tok::kComma:
      return "','";
    case Tok::kString:
      return "\"" + lex.text + "\"";
    default:
      return "'" + lex.text + "'";
  }
}

std::optional<FieldSet> ScopeFields(const std::string &upper) {
  if (upper == "TITLE") return FieldSet{Field::kTitle};
  if (upper == "ABS") return FieldSet{Field::kAbstract};
  if (upper == "KEY") return FieldSet{Field::kKeywords};
  if (upper == "TITLE-ABS-KEY") return FieldSet::All();
  return std::nullopt;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : lexemes_(Lex(src)) {}

  Query Parse() {
    Query q = ParseOr();
    if (Peek().kind != Tok::kEnd) Fail("unexpected " + Describe(Peek()), {"AND", "OR", "end of query"});
    return q;
  }

 private:
  const Lexeme &Peek() const { return lexemes_[pos_]; }
  const Lexeme &Next() { return lexemes_[pos_++]; }

  [[noreturn]] void Fail(const std::string &message, std::vector<std::string> expected) const {
    throw QueryParseError(message, Peek().offset, std::move(expected));
  }

  void Expect(Tok kind, const char *what) {
    if (Peek().kind != kind) Fail("expected " + std::string(what) + ", found " + Describe(Peek()), {what});
    ++pos_;
  }

  Query ParseOr() {
    std::vector<Query> parts;
    parts.push_back(ParseAnd());
    while (Peek().kind == Tok::kOr) {
      ++pos_;
      parts.push_back(ParseAnd());
    }
    if (parts.size() == 1) return std::move(parts.front());
    return Or{std::move(parts)};
  }

  static Query Collapse(std::vector<Query> chain) {
    if (chain.size() == 1) return std::move(chain.front());
    return And{std::move(chain)};
  }

  Query ParseAnd() {
    std::vector<Query> chain;
    chain.push_back(ParseUnary());
    while (Peek().kind == Tok::kAnd) {
      ++pos_;
      if (Peek().kind == Tok::kNot) {
        ++pos_;
        Query right = ParseUnary();
        Query left = Collapse(std::move(chain));
        chain.clear();
        chain.push_back(AndNot{std::move(left), std::move(right)});
      } else {
        chain.push_back(ParseUnary());
      }
    }
    return Collapse(std::move(chain));
  }

  Query ParseUnary() {
    const Lexeme &lex = Peek();
    if (lex.kind == Tok::kLParen) {
      ++pos_;
      Query inner = ParseOr();
      Expect(Tok::kRParen, "')'");
      return inner;
    }
    if (lex.kind == Tok::kNot) {
      Fail("negation must be written 'AND NOT'", {"field function", "filter", "'('"});
    }
    if (lex.kind == Tok::kString) {
      Fail("pattern " + Describe(lex) + " must be inside a field function such as TITLE-ABS-KEY(...)",
           {"field function", "filter", "'('"});
    }
    if (lex.kind != Tok::kWord) {
      Fail("unexpected " + Describe(lex), {"field function", "filter", "'('"});
    }
    std::string name = Upper(lex.text);
    if (lexemes_[pos_ + 1].kind != Tok::kLParen) {
      Fail("unexpected " + Describe(lex) + "; bare terms must be inside a field function",
           {"field function", "filter", "'('"});
    }
    if (auto fields = ScopeFields(name)) {
      pos_ += 2;
      Query body = ParseBodyOr();
      Expect(Tok::kRParen, "')'");
      return FieldScope{*fields, std::move(body)};
    }
    if (name == "SUBJAREA") {
      pos_ += 2;
      SubjectFilter filter{ParseCodes(), SubjectMode::kInclude};
      Expect(Tok::kRParen, "')'");
      return filter;
    }
    if (name == "EXCLUDE") {
      pos_ += 2;
      if (Peek().kind != Tok::kWord || Upper(Peek().text) != "SUBJAREA") {
        Fail("EXCLUDE supports only SUBJAREA", {"SUBJAREA"});
      }
      ++pos_;
      Expect(Tok::kComma, "','");
      SubjectFilter filter{ParseCodes(), SubjectMode::kExclude};
      Expect(Tok::kRParen, "')'");
      return filter;
    }
    if (name == "SRCTITLE") {
      pos_ += 2;
      SourceFilter filter{ParsePatternLexeme(Next())};
      Expect(Tok::kRParen, "')'");
      return filter;
    }
    Fail("unsupported field function '" + lex.text + "'",
         {"TITLE", "ABS", "KEY", "TITLE-ABS-KEY", "SUBJAREA", "EXCLUDE", "SRCTITLE"});
  }

  std::set<int> ParseCodes() {
    std::set<int> codes;
    while (true) {
      const Lexeme &lex = Peek();
      std::optional<int> code;
      if (lex.kind == Tok::kWord || lex.kind == Tok::kString) {
        bool digits = !lex.text.empty() &&
                      lex.text.find_first_not_of("0123456789") == std::string::npos;
        if (digits && (lex.text.size() == 2 || lex.text.size() == 4)) code = ParseNumber(lex.text);
      }
      if (!code || (*code < 10) || (*code >= 100 && *code < 1000)) {
        Fail("expected a 2-digit or 4-digit subject code, found " + Describe(lex), {"subject code"});
      }
      codes.insert(*code);
      ++pos_;
      if (Peek().kind == Tok::kComma || Peek().kind == Tok::kOr) {
        ++pos_;
        continue;
      }
      return codes;
    }
  }

  TermPattern ParsePatternLexeme(const Lexeme &lex) {
    if (lex.kind != Tok::kString && lex.kind != Tok::kWord) {
      --pos_;
      Fail("expected a pattern, found " + Describe(lex), {"quoted pattern"});
    }
    try {
      return ParsePattern(lex.text);
    } catch (const QueryParseError &e) {
      size_t base = lex.offset + (lex.kind == Tok::kString ? 1 : 0);
      throw QueryParseError(e.message(), base + e.offset(), e.expected());
    }
  }

  Query ParseBodyOr() {
    std::vector<Query> parts;
    parts.push_back(ParseBodyAnd());
    while (Peek().kind == Tok::kOr) {
      ++pos_;
      parts.push_back(ParseBodyAnd());
    }
    if (parts.size() == 1) return std::move(parts.front());
    return Or{std::move(parts)};
  }

  Query ParseBodyAnd() {
    std::vector<Query> chain;
    chain.push_back(ParseProximity());
    while (Peek().kind == Tok::kAnd) {
      ++pos_;
      if (Peek().kind == Tok::kNot) Fail("AND NOT is not allowed inside a field function", {"pattern", "'('"});
      chain.push_back(ParseProximity());
    }
    return Collapse(std::move(chain));
  }

  Query ParseProximity() {
    size_t left_offset = Peek().offset;
    Query left = ParseTermExpr();
    if (Peek().kind != Tok::kProx) return left;
    Lexeme op = Next();
    size_t right_offset = Peek().offset;
    Query right = ParseTermExpr();
    if (!left.is<TermPattern>()) {
      throw QueryParseError("proximity operands must be single patterns", left_offset, {"quoted pattern"});
    }
    if (!right.is<TermPattern>()) {
      throw QueryParseError("proximity operands must be single patterns", right_offset, {"quoted pattern"});
    }
    if (Peek().kind == Tok::kProx) {
      Fail("proximity operators cannot be chained; parenthesize with AND/OR instead", {"AND", "OR", "')'"});
    }
    return Proximity{left.as<TermPattern>(), right.as<TermPattern>(), op.distance, op.ordered};
  }

  Query ParseTermExpr() {
    const Lexeme &lex = Peek();
    if (lex.kind == Tok::kLParen) {
      ++pos_;
      Query inner = ParseBodyOr();
      Expect(Tok::kRParen, "')'");
      return inner;
    }
    if (lex.kind == Tok::kWord && lexemes_[pos_ + 1].kind == Tok::kLParen) {
      Fail("field functions and filters cannot be nested inside a field function", {"quoted pattern", "'('"});
    }
    if (lex.kind == Tok::kString || lex.kind == Tok::kWord) return ParsePatternLexeme(Next());
    Fail("expected a pattern, found " + Describe(lex), {"quoted pattern", "'('"});
  }

  std::vector<Lexeme> lexemes_;
  size_t pos_ = 0;
};

void RenderCodes(const std::set<int> &codes, std::ostringstream &out) {
  bool first = true;
  for (int code : codes) {
    if (!first) out << ", ";
    first = false;
    out << code;
  }
}

const char *ScopeName(FieldSet fields) {
  if (fields == FieldSet::All()) return "TITLE-ABS-KEY";
  if (fields == FieldSet{Field::kTitle}) return "TITLE";
  if (fields == FieldSet{Field::kAbstract}) return "ABS";
  if (fields == FieldSet{Field::kKeywords}) return "KEY";
  return nullptr;
}

void RenderBody(const Query &q, bool top, std::ostringstream &out);

template <typename Children>
void RenderJoined(const Children &children, const char *op, bool parens, bool body,
                  std::ostringstream &out);

void RenderOuter(const Query &q, std::ostringstream &out) {
  std::visit(
      [&](const auto &node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, FieldScope>) {
          out << ScopeName(node.fields) << '(';
          RenderBody(*node.child, true, out);
          out << ')';
        } else if constexpr (std::is_same_v<T, And>) {
          RenderJoined(node.children, " AND ", true, false, out);
        } else if constexpr (std::is_same_v<T, Or>) {
          RenderJoined(node.children, " OR ", true, false, out);
        } else if constexpr (std::is_same_v<T, AndNot>) {
          out << '(';
          RenderOuter(*node.left, out);
          out << " AND NOT ";
          RenderOuter(*node.right, out);
          out << ')';
        } else if constexpr (std::is_same_v<T, SubjectFilter>) {
          if (node.mode == SubjectMode::kInclude) {
            out << "SUBJAREA(";
          } else {
            out << "EXCLUDE(SUBJAREA, ";
          }
          RenderCodes(node.codes, out);
          out << ')';
        } else if constexpr (std::is_same_v<T, SourceFilter>) {
          out << "SRCTITLE(" << RenderPattern(node.pattern) << ')';
        } else {
          // Terms outside a scope are rejected by ValidateQuery.
          RenderBody(q, true, out);
        }
      },
      q.node);
}

void RenderBody(const Query &q, bool top, std::ostringstream &out) {
  std::visit(
      [&](const auto &node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, TermPattern>) {
          out << RenderPattern(node);
        } else if constexpr (std::is_same_v<T, Proximity>) {
          if (!top) out << '(';
          out << RenderPattern(node.left) << (node.ordered ? " PRE/" : " W/") << node.distance
              << ' ' << RenderPattern(node.right);
          if (!top) out << ')';
        } else if constexpr (std::is_same_v<T, And>) {
          RenderJoined(node.children, " AND ", !top, true, out);
        } else if constexpr (std::is_same_v<T, Or>) {
          RenderJoined(node.children, " OR ", !top, true, out);
        } else {
          RenderOuter(q, out);
        }
      },
      q.node);
}

template <typename Children>
void RenderJoined(const Children &children, const char *op, bool parens, bool body,
                  std::ostringstream &out) {
  if (parens) out << '(';
  bool first = true;
  for (const Query &child : children) {
    if (!first) out << op;
    first = false;
    if (body) {
      RenderBody(child, false, out);
    } else {
      RenderOuter(child, out);
    }
  }
  if (parens) out << ')';
}

void ValidatePattern(const TermPattern &p) {
  if (p.tokens.empty()) throw ConfigError("empty term pattern");
  for (const std::string &token : p.tokens) {
    std::vector<std::string> retokenized = Tokenize(token);
    if (retokenized.size() != 1 || retokenized.front() != token) {
      throw ConfigError("pattern token '" + token + "' is not a normalized token");
    }
  }
}

void ValidateBody(const Query &q) {
  std::visit(
      [&](const auto &node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, TermPattern>) {
          ValidatePattern(node);
        } else if constexpr (std::is_same_v<T, Proximity>) {
          ValidatePattern(node.left);
          ValidatePattern(node.right);
          if (node.distance < 0) throw ConfigError("negative proximity distance");
        } else if constexpr (std::is_same_v<T, And> || std::is_same_v<T, Or>) {
          if (node.children.size() < 2) throw ConfigError("AND/OR needs at least two operands");
          for (const Query &child : node.children) ValidateBody(child);
        } else {
          throw ConfigError("field scopes, filters and AND NOT cannot appear inside a field scope");
        }
      },
      q.node);
}

}  // namespace

QueryParseError::QueryParseError(std::string message, size_t offset,
                                 std::vector<std::string> expected)
    : std::runtime_error("offset " + std::to_string(offset) + ": " + message),
      message_(std::move(message)),
      offset_(offset),
      expected_(std::move(expected)) {}

TermPattern ParsePattern(std::string_view text) {
  TermPattern pattern;
  std::string_view body = text;
  size_t star = text.find('*');
  if (star != std::string_view::npos) {
    if (star != text.size() - 1) {
      throw QueryParseError("'*' may only end a pattern", star, {"'\"'"});
    }
    unsigned char before = star == 0 ? ' ' : static_cast<unsigned char>(text[star - 1]);
    if (before < 0x80 && !std::isalnum(before)) {
      throw QueryParseError("'*' must directly follow a word", star, {"letter or digit"});
    }
    pattern.prefix = true;
    body = text.substr(0, star);
  }
  pattern.tokens = Tokenize(body);
  if (pattern.tokens.empty()) throw QueryParseError("pattern has no searchable tokens", 0, {"letter or digit"});
  return pattern;
}

std::string RenderPattern(const TermPattern &pattern) {
  std::string out = "\"";
  for (size_t i = 0; i < pattern.tokens.size(); ++i) {
    if (i > 0) out += ' ';
    out += pattern.tokens[i];
  }
  if (pattern.prefix) out += '*';
  out += '"';
  return out;
}

Query ParseQuery(std::string_view source) { return Parser(source).Parse(); }

std::string RenderQuery(const Query &query) {
  std::ostringstream out;
  RenderOuter(query, out);
  return out.str();
}

void ValidateQuery(const Query &q) {
  std::visit(
      [&](const auto &node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, FieldScope>) {
          if (!ScopeName(node.fields)) throw ConfigError("unsupported field combination in scope");
          ValidateBody(*node.child);
        } else if constexpr (std::is_same_v<T, And> || std::is_same_v<T, Or>) {
          if (node.children.size() < 2) throw ConfigError("AND/OR needs at least two operands");
          for (const Query &child : node.children) ValidateQuery(child);
        } else if constexpr (std::is_same_v<T, AndNot>) {
          ValidateQuery(*node.left);
          ValidateQuery(*node.right);
        } else if constexpr (std::is_same_v<T, SubjectFilter>) {
          if (node.codes.empty()) throw ConfigError("empty subject filter");
          for (int code : node.codes) {
            if (!(code >= 10 && code <= 99) && !(code >= 1000 && code <= 9999)) {
              throw ConfigError("subject code " + std::to_string(code) + " is neither 2 nor 4 digits");
            }
          }
        } else if constexpr (std::is_same_v<T, SourceFilter>) {
          ValidatePattern(node.pattern);
        } else {
          throw ConfigError("term patterns must be enclosed in a field scope");
        }
      },
      q.node);
}

}  // namespace sdgmap
