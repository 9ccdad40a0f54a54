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

#include "sdgmap/query_engine.h"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

#include "sdgmap/error.h"
#include "sdgmap/parallel.h"

namespace sdgmap {
namespace {

// ---------------------------------------------------------------------------
// Reference matcher.

bool TokenMatches(const std::string &token, const std::string &pattern, bool prefix) {
  return prefix ? token.starts_with(pattern) : token == pattern;
}

struct Hit {
  int position;
  int segment;
};

std::vector<Hit> ScanPattern(const TermPattern &p, const TokenStream &stream) {
  std::vector<Hit> hits;
  const auto &tokens = stream.tokens;
  const size_t k = p.tokens.size();
  for (size_t i = 0; i + k <= tokens.size(); ++i) {
    bool ok = true;
    for (size_t j = 0; j < k && ok; ++j) {
      const Token &t = tokens[i + j];
      ok = t.position == tokens[i].position + static_cast<int>(j) &&
           TokenMatches(t.text, p.tokens[j], p.prefix && j + 1 == k);
    }
    if (ok) hits.push_back({tokens[i].position, tokens[i].segment});
  }
  return hits;
}

bool ScanProximity(const Proximity &prox, const TokenStream &stream) {
  std::vector<Hit> left = ScanPattern(prox.left, stream);
  std::vector<Hit> right = ScanPattern(prox.right, stream);
  for (const Hit &a : left) {
    for (const Hit &b : right) {
      if (a.segment != b.segment) continue;
      int delta = b.position - a.position;
      if (prox.ordered ? (delta > 0 && delta <= prox.distance)
                       : (std::abs(delta) <= prox.distance)) {
        return true;
      }
    }
  }
  return false;
}

bool MatchBody(const Query &q, FieldSet scope, const TokenizedRecord &tokens) {
  if (q.is<TermPattern>()) {
    for (const TokenStream &s : tokens.fields) {
      if (scope.contains(s.field) && !ScanPattern(q.as<TermPattern>(), s).empty()) return true;
    }
    return false;
  }
  if (q.is<Proximity>()) {
    for (const TokenStream &s : tokens.fields) {
      if (scope.contains(s.field) && ScanProximity(q.as<Proximity>(), s)) return true;
    }
    return false;
  }
  if (q.is<And>()) {
    for (const Query &c : q.as<And>().children) {
      if (!MatchBody(c, scope, tokens)) return false;
    }
    return true;
  }
  if (q.is<Or>()) {
    for (const Query &c : q.as<Or>().children) {
      if (MatchBody(c, scope, tokens)) return true;
    }
    return false;
  }
  throw ConfigError("invalid node inside field scope");
}

bool SubjectCodeMatches(int filter_code, int record_code) {
  return filter_code < 100 ? record_code / 100 == filter_code : record_code == filter_code;
}

bool MatchOuter(const Query &q, const PublicationRecord &record, const TokenizedRecord &tokens) {
  return std::visit(
      [&](const auto &node) -> bool {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, FieldScope>) {
          return MatchBody(*node.child, node.fields, tokens);
        } else if constexpr (std::is_same_v<T, And>) {
          return std::all_of(node.children.begin(), node.children.end(),
                             [&](const Query &c) { return MatchOuter(c, record, tokens); });
        } else if constexpr (std::is_same_v<T, Or>) {
          return std::any_of(node.children.begin(), node.children.end(),
                             [&](const Query &c) { return MatchOuter(c, record, tokens); });
        } else if constexpr (std::is_same_v<T, AndNot>) {
          return MatchOuter(*node.left, record, tokens) && !MatchOuter(*node.right, record, tokens);
        } else if constexpr (std::is_same_v<T, SubjectFilter>) {
          bool any = false;
          for (int code : record.asjc_codes) {
            for (int f : node.codes) any = any || SubjectCodeMatches(f, code);
          }
          return node.mode == SubjectMode::kInclude ? any : !any;
        } else if constexpr (std::is_same_v<T, SourceFilter>) {
          TokenStream journal = NormalizeText(NormalizeJournalName(record.journal_name), Field::kTitle);
          return !ScanPattern(node.pattern, journal).empty();
        } else {
          throw ConfigError("term pattern outside a field scope");
        }
      },
      q.node);
}

// ---------------------------------------------------------------------------
// Indexed evaluation.

using DocList = std::vector<DocId>;

bool SamePlace(const Posting &a, const Posting &b) { return a.doc == b.doc && a.field == b.field; }

bool PlaceLess(const Posting &a, const Posting &b) {
  if (a.doc != b.doc) return a.doc < b.doc;
  if (a.field != b.field) return a.field < b.field;
  return a.position < b.position;
}

std::vector<Posting> TokenPostings(const InvertedIndex &index, const std::string &token, bool prefix) {
  if (!prefix) return index.postings(token);
  std::vector<Posting> merged;
  for (const auto *list : index.prefix_postings(token)) {
    merged.insert(merged.end(), list->begin(), list->end());
  }
  std::sort(merged.begin(), merged.end());
  return merged;
}

// Start postings of every occurrence of `p` within the scoped fields, sorted.
std::vector<Posting> PatternOccurrences(const TermPattern &p, FieldSet scope,
                                        const InvertedIndex &index) {
  const size_t k = p.tokens.size();
  std::vector<std::vector<Posting>> lists;
  lists.reserve(k);
  for (size_t j = 0; j < k; ++j) {
    lists.push_back(TokenPostings(index, p.tokens[j], p.prefix && j + 1 == k));
    if (lists.back().empty()) return {};
  }
  std::vector<Posting> out;
  for (const Posting &start : lists[0]) {
    if (!scope.contains(start.field)) continue;
    bool ok = true;
    for (size_t j = 1; j < k && ok; ++j) {
      Posting want = start;
      want.position += static_cast<int>(j);
      ok = std::binary_search(lists[j].begin(), lists[j].end(), want, PlaceLess);
    }
    if (ok) out.push_back(start);
  }
  return out;
}

DocList Docs(const std::vector<Posting> &postings) {
  DocList docs;
  for (const Posting &p : postings) {
    if (docs.empty() || docs.back() != p.doc) docs.push_back(p.doc);
  }
  return docs;
}

DocList ProximityDocs(const Proximity &prox, FieldSet scope, const InvertedIndex &index) {
  std::vector<Posting> left = PatternOccurrences(prox.left, scope, index);
  if (left.empty()) return {};
  std::vector<Posting> right = PatternOccurrences(prox.right, scope, index);
  DocList docs;
  for (const Posting &a : left) {
    if (!docs.empty() && docs.back() == a.doc) continue;
    Posting lo = a;
    lo.position = prox.ordered ? a.position + 1 : a.position - prox.distance;
    for (auto it = std::lower_bound(right.begin(), right.end(), lo, PlaceLess);
         it != right.end() && SamePlace(*it, a) && it->position <= a.position + prox.distance;
         ++it) {
      if (it->segment == a.segment) {
        docs.push_back(a.doc);
        break;
      }
    }
  }
  return docs;
}

DocList Intersect(const DocList &a, const DocList &b) {
  DocList out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

DocList Unite(const DocList &a, const DocList &b) {
  DocList out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

DocList Subtract(const DocList &a, const DocList &b) {
  DocList out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

DocList AllDocs(const InvertedIndex &index) {
  DocList all(index.doc_count());
  for (DocId d = 0; d < all.size(); ++d) all[d] = d;
  return all;
}

DocList EvalBody(const Query &q, FieldSet scope, const InvertedIndex &index) {
  if (q.is<TermPattern>()) return Docs(PatternOccurrences(q.as<TermPattern>(), scope, index));
  if (q.is<Proximity>()) return ProximityDocs(q.as<Proximity>(), scope, index);
  if (q.is<And>()) {
    const auto &children = q.as<And>().children;
    DocList acc = EvalBody(children.front(), scope, index);
    for (size_t i = 1; i < children.size() && !acc.empty(); ++i) {
      acc = Intersect(acc, EvalBody(children[i], scope, index));
    }
    return acc;
  }
  if (q.is<Or>()) {
    DocList acc;
    for (const Query &c : q.as<Or>().children) acc = Unite(acc, EvalBody(c, scope, index));
    return acc;
  }
  throw ConfigError("invalid node inside field scope");
}

DocList SubjectDocs(const SubjectFilter &filter, const InvertedIndex &index) {
  DocList acc;
  const auto &subjects = index.subject_postings();
  for (int code : filter.codes) {
    int lo = code < 100 ? code * 100 : code;
    int hi = code < 100 ? code * 100 + 99 : code;
    for (auto it = subjects.lower_bound(lo); it != subjects.end() && it->first <= hi; ++it) {
      acc = Unite(acc, it->second);
    }
  }
  return filter.mode == SubjectMode::kInclude ? acc : Subtract(AllDocs(index), acc);
}

bool JournalContains(const TermPattern &pattern, const std::vector<std::string> &tokens) {
  const size_t k = pattern.tokens.size();
  for (size_t i = 0; i + k <= tokens.size(); ++i) {
    size_t j = 0;
    while (j < k && TokenMatches(tokens[i + j], pattern.tokens[j], pattern.prefix && j + 1 == k)) ++j;
    if (j == k) return true;
  }
  return false;
}

DocList SourceDocs(const SourceFilter &filter, const InvertedIndex &index) {
  DocList acc;
  for (const auto &[journal, docs] : index.journal_postings()) {
    if (JournalContains(filter.pattern, Tokenize(journal))) acc = Unite(acc, docs);
  }
  return acc;
}

DocList EvalOuter(const Query &q, const InvertedIndex &index) {
  return std::visit(
      [&](const auto &node) -> DocList {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, FieldScope>) {
          return EvalBody(*node.child, node.fields, index);
        } else if constexpr (std::is_same_v<T, And>) {
          DocList acc = EvalOuter(node.children.front(), index);
          for (size_t i = 1; i < node.children.size() && !acc.empty(); ++i) {
            acc = Intersect(acc, EvalOuter(node.children[i], index));
          }
          return acc;
        } else if constexpr (std::is_same_v<T, Or>) {
          DocList acc;
          for (const Query &c : node.children) acc = Unite(acc, EvalOuter(c, index));
          return acc;
        } else if constexpr (std::is_same_v<T, AndNot>) {
          DocList left = EvalOuter(*node.left, index);
          if (left.empty()) return left;
          return Subtract(left, EvalOuter(*node.right, index));
        } else if constexpr (std::is_same_v<T, SubjectFilter>) {
          return SubjectDocs(node, index);
        } else if constexpr (std::is_same_v<T, SourceFilter>) {
          return SourceDocs(node, index);
        } else {
          throw ConfigError("term pattern outside a field scope");
        }
      },
      q.node);
}

std::string Trim(const std::string &s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

void QueryBank::Validate() const {
  std::set<std::pair<int, std::string>> seen;
  for (const QueryBankEntry &e : entries) {
    if (!IsValidSdg(e.sdg)) throw DataError("SDG " + std::to_string(e.sdg) + " outside [1, 17]");
    if (!seen.emplace(e.sdg, e.theme).second) {
      throw DataError("duplicate theme '" + e.theme + "' for SDG " + std::to_string(e.sdg));
    }
  }
}

QueryBank ReadQueryBank(std::istream &in, const std::string &source) {
  static const std::regex kHeader(R"(#\s*SDG\s+(\d+)\s+(\S.*))", std::regex::icase);
  QueryBank bank;
  std::string text;
  int sdg = 0;
  std::string theme;
  size_t header_line = 0;
  size_t line_number = 0;
  auto flush = [&] {
    if (header_line == 0) return;
    std::string q = Trim(text);
    if (q.empty()) {
      throw DataError(source + ":" + std::to_string(header_line) + ": theme '" + theme +
                      "' has no query");
    }
    try {
      bank.entries.push_back({sdg, theme, ParseQuery(q)});
    } catch (const QueryParseError &e) {
      throw DataError(source + ": theme '" + theme + "' (line " + std::to_string(header_line) +
                      "): " + e.what());
    }
    text.clear();
  };

  std::string line;
  while (std::getline(in, line)) {
    ++line_number;
    std::string trimmed = Trim(line);
    if (trimmed.empty()) continue;
    if (trimmed.front() == '#') {
      std::smatch m;
      if (!std::regex_match(trimmed, m, kHeader)) {
        throw DataError(source + ":" + std::to_string(line_number) +
                        ": expected header '# SDG <n> <theme-label>'");
      }
      flush();
      sdg = std::stoi(m[1].str().substr(0, 3));
      theme = Trim(m[2].str());
      header_line = line_number;
      continue;
    }
    if (header_line == 0) {
      throw DataError(source + ":" + std::to_string(line_number) + ": query text before first header");
    }
    text += trimmed;
    text += '\n';
  }
  flush();
  try {
    bank.Validate();
  } catch (const DataError &e) {
    throw DataError(source + ": " + e.what());
  }
  return bank;
}

QueryBank LoadQueryBank(const std::filesystem::path &path) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  if (fs::is_directory(path)) {
    for (const auto &entry : fs::directory_iterator(path)) {
      if (entry.is_regular_file()) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
  } else {
    files.push_back(path);
  }
  QueryBank bank;
  for (const fs::path &file : files) {
    std::ifstream in(file);
    if (!in) throw DataError("cannot open query bank " + file.string());
    QueryBank part = ReadQueryBank(in, file.string());
    for (auto &e : part.entries) bank.entries.push_back(std::move(e));
  }
  bank.Validate();
  return bank;
}

void WriteQueryBank(const QueryBank &bank, std::ostream &out) {
  for (const QueryBankEntry &e : bank.entries) {
    out << "# SDG " << e.sdg << ' ' << e.theme << '\n' << RenderQuery(e.query) << "\n\n";
  }
}

bool Matches(const Query &query, const PublicationRecord &record) {
  return Matches(query, record, TokenizeRecord(record));
}

bool Matches(const Query &query, const PublicationRecord &record, const TokenizedRecord &tokens) {
  return MatchOuter(query, record, tokens);
}

std::vector<DocId> ExecuteDocs(const Query &query, const InvertedIndex &index) {
  if (index.doc_count() == 0) return {};
  return EvalOuter(query, index);
}

std::set<std::string> Execute(const Query &query, const InvertedIndex &index) {
  std::set<std::string> ids;
  for (DocId d : ExecuteDocs(query, index)) ids.insert(index.id(d));
  return ids;
}

SdgMapping RunQueryBank(const QueryBank &bank, const InvertedIndex &index, int threads) {
  std::vector<std::vector<DocId>> results(bank.entries.size());
  ParallelFor(bank.entries.size(), threads,
              [&](size_t i) { results[i] = ExecuteDocs(bank.entries[i].query, index); });
  SdgMapping mapping;
  for (size_t i = 0; i < results.size(); ++i) {
    for (DocId d : results[i]) mapping.AddQuery(index.id(d), bank.entries[i].sdg, bank.entries[i].theme);
  }
  return mapping;
}

SdgMapping RunQueryBankNaive(const QueryBank &bank, const Corpus &corpus) {
  SdgMapping mapping;
  for (const PublicationRecord &record : corpus) {
    TokenizedRecord tokens = TokenizeRecord(record);
    for (const QueryBankEntry &e : bank.entries) {
      if (Matches(e.query, record, tokens)) mapping.AddQuery(record.id, e.sdg, e.theme);
    }
  }
  return mapping;
}

}  // namespace sdgmap
