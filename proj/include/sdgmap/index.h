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

#ifndef SDGMAP_INDEX_H_
#define SDGMAP_INDEX_H_

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "sdgmap/corpus.h"

namespace sdgmap {

struct Posting {
  DocId doc = 0;
  Field field = Field::kTitle;
  int position = 0;
  int segment = 0;

  auto operator<=>(const Posting &) const = default;
};

// Positional postings over TITLE, ABSTRACT and KEYWORDS, plus subject-code
// and journal postings. Immutable after Build(); safe to share.
class InvertedIndex {
 public:
  using PostingMap = std::map<std::string, std::vector<Posting>, std::less<>>;

  // Each postings list is sorted by (doc, field, position).
  static InvertedIndex Build(const Corpus &corpus);

  size_t doc_count() const { return ids_.size(); }
  const std::string &id(DocId doc) const { return ids_[doc]; }

  // Empty list for an unknown term.
  const std::vector<Posting> &postings(std::string_view term) const;
  // All terms starting with `prefix`, in lexicographic order.
  std::vector<const std::vector<Posting> *> prefix_postings(std::string_view prefix) const;

  const PostingMap &terms() const { return postings_; }
  const std::map<int, std::vector<DocId>> &subject_postings() const { return subjects_; }
  const std::map<std::string, std::vector<DocId>> &journal_postings() const { return journals_; }

  // Canonical text dump; equal indexes produce identical bytes.
  void Serialize(std::ostream &out) const;

 private:
  std::vector<std::string> ids_;
  PostingMap postings_;
  std::map<int, std::vector<DocId>> subjects_;
  std::map<std::string, std::vector<DocId>> journals_;
};

inline InvertedIndex BuildIndex(const Corpus &corpus) { return InvertedIndex::Build(corpus); }

}  // namespace sdgmap

#endif  // SDGMAP_INDEX_H_
