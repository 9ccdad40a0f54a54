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

#include "sdgmap/index.h"

#include <algorithm>

namespace sdgmap {

InvertedIndex InvertedIndex::Build(const Corpus &corpus) {
  InvertedIndex index;
  index.ids_.reserve(corpus.size());
  for (DocId doc = 0; doc < corpus.size(); ++doc) {
    const PublicationRecord &record = corpus[doc];
    index.ids_.push_back(record.id);
    TokenizedRecord tokenized = TokenizeRecord(record);
    // Docs and fields are visited in ascending order, so lists stay sorted.
    for (const TokenStream &stream : tokenized.fields) {
      for (const Token &token : stream.tokens) {
        index.postings_[token.text].push_back({doc, stream.field, token.position, token.segment});
      }
    }
    for (int code : record.asjc_codes) {
      auto &docs = index.subjects_[code];
      if (docs.empty() || docs.back() != doc) docs.push_back(doc);
    }
    index.journals_[NormalizeJournalName(record.journal_name)].push_back(doc);
  }
  return index;
}

const std::vector<Posting> &InvertedIndex::postings(std::string_view term) const {
  static const std::vector<Posting> kEmpty;
  auto it = postings_.find(term);
  return it == postings_.end() ? kEmpty : it->second;
}

std::vector<const std::vector<Posting> *> InvertedIndex::prefix_postings(
    std::string_view prefix) const {
  std::vector<const std::vector<Posting> *> out;
  for (auto it = postings_.lower_bound(prefix);
       it != postings_.end() && std::string_view(it->first).starts_with(prefix); ++it) {
    out.push_back(&it->second);
  }
  return out;
}

void InvertedIndex::Serialize(std::ostream &out) const {
  out << "docs " << ids_.size() << '\n';
  for (const std::string &id : ids_) out << "id " << id << '\n';
  for (const auto &[term, list] : postings_) {
    out << "term " << term;
    for (const Posting &p : list) {
      out << ' ' << p.doc << ':' << static_cast<int>(p.field) << ':' << p.position << ':'
          << p.segment;
    }
    out << '\n';
  }
  for (const auto &[code, docs] : subjects_) {
    out << "asjc " << code;
    for (DocId d : docs) out << ' ' << d;
    out << '\n';
  }
  for (const auto &[journal, docs] : journals_) {
    out << "journal " << journal << '\t';
    for (DocId d : docs) out << ' ' << d;
    out << '\n';
  }
}

}  // namespace sdgmap
