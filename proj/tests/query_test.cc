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

#include "sdgmap/query.h"

#include <gtest/gtest.h>

#include <random>
#include <string>

#include "sdgmap/error.h"
#include "sdgmap/query_engine.h"
#include "support.h"

namespace sdgmap {
namespace {

TermPattern P(std::vector<std::string> tokens, bool prefix = false) { return TermPattern{std::move(tokens), prefix}; }

Query Tak(Query body) { return FieldScope{FieldSet::All(), std::move(body)}; }

TEST(ParseQueryTest, SmallestProgram) {
  EXPECT_EQ(ParseQuery(R"(TITLE-ABS-KEY("poverty"))"), Tak(P({"poverty"})));
}

TEST(ParseQueryTest, ProximityWithSubjectExclusion) {
  Query expected = AndNot{Tak(Proximity{P({"extreme"}), P({"poverty"}), 3, false}),
                          Query(SubjectFilter{{2700}, SubjectMode::kInclude})};
  EXPECT_EQ(ParseQuery(R"(TITLE-ABS-KEY("extreme" W/3 "poverty") AND NOT SUBJAREA(2700))"), expected);
}

TEST(ParseQueryTest, WildcardPattern) {
  EXPECT_EQ(ParseQuery(R"(TITLE-ABS-KEY("pollut*"))"), Tak(P({"pollut"}, true)));
  EXPECT_EQ(ParseQuery(R"(ABS("coastal pollut*"))"),
            Query(FieldScope{{Field::kAbstract}, Query(P({"coastal", "pollut"}, true))}));
}

TEST(ParseQueryTest, PatternsAreNormalizedLikeText) {
  EXPECT_EQ(ParseQuery(R"(TITLE("Gender-Based  Violence"))"),
            Query(FieldScope{{Field::kTitle}, Query(P({"gender", "based", "violence"}))}));
  // Unquoted single words are accepted inside a scope.
  EXPECT_EQ(ParseQuery("KEY(poverty)"), Query(FieldScope{{Field::kKeywords}, Query(P({"poverty"}))}));
}

TEST(ParseQueryTest, OperatorsAreCaseInsensitive) {
  EXPECT_EQ(ParseQuery(R"(title-abs-key("a" w/2 "b") and not subjarea(27))"),
            ParseQuery(R"(TITLE-ABS-KEY("a" W/2 "b") AND NOT SUBJAREA(27))"));
}

TEST(ParseQueryTest, AndBindsTighterThanOr) {
  Query a = Tak(P({"a"})), b = Tak(P({"b"})), c = Tak(P({"c"}));
  EXPECT_EQ(ParseQuery(R"(TITLE-ABS-KEY("a") OR TITLE-ABS-KEY("b") AND TITLE-ABS-KEY("c"))"),
            Query(Or{{a, And{{b, c}}}}));
  EXPECT_EQ(ParseQuery(R"((TITLE-ABS-KEY("a") OR TITLE-ABS-KEY("b")) AND TITLE-ABS-KEY("c"))"),
            Query(And{{Or{{a, b}}, c}}));
  // Inside a scope as well.
  EXPECT_EQ(ParseQuery(R"(TITLE-ABS-KEY("a" OR "b" AND "c"))"),
            Tak(Or{{P({"a"}), And{{P({"b"}), P({"c"})}}}}));
}

TEST(ParseQueryTest, ProximityBindsTighterThanAnd) {
  EXPECT_EQ(ParseQuery(R"(TITLE-ABS-KEY("a" PRE/2 "b" AND "c"))"),
            Tak(And{{Proximity{P({"a"}), P({"b"}), 2, true}, P({"c"})}}));
}

TEST(ParseQueryTest, AndNotTakesTheWholeChainOnTheLeft) {
  Query a = Tak(P({"a"})), b = Tak(P({"b"})), c = Tak(P({"c"})), d = Tak(P({"d"}));
  EXPECT_EQ(ParseQuery(R"(TITLE-ABS-KEY("a") AND TITLE-ABS-KEY("b") AND NOT TITLE-ABS-KEY("c"))"),
            Query(AndNot{Query(And{{a, b}}), c}));
  EXPECT_EQ(ParseQuery(R"(TITLE-ABS-KEY("a") AND NOT TITLE-ABS-KEY("c") AND TITLE-ABS-KEY("d"))"),
            Query(And{{Query(AndNot{a, c}), d}}));
}

TEST(ParseQueryTest, SubjectFilters) {
  EXPECT_EQ(ParseQuery("SUBJAREA(2700, 27)"), Query(SubjectFilter{{27, 2700}, SubjectMode::kInclude}));
  EXPECT_EQ(ParseQuery("SUBJAREA(33 OR 2002)"), Query(SubjectFilter{{33, 2002}, SubjectMode::kInclude}));
  EXPECT_EQ(ParseQuery("EXCLUDE(SUBJAREA, 1203)"), Query(SubjectFilter{{1203}, SubjectMode::kExclude}));
  EXPECT_EQ(ParseQuery(R"(SRCTITLE("Marine Pollution Bulletin"))"),
            Query(SourceFilter{P({"marine", "pollution", "bulletin"})}));
}

struct ErrorCase {
  const char *source;
  size_t offset;
  const char *message_part;
};

TEST(ParseQueryTest, SyntaxErrorsCarryOffsetAndExpectations) {
  const ErrorCase cases[] = {
      {R"(TITLE-ABS-KEY("poverty")", 23, "expected ')'"},
      {R"(TITLE-ABS-KEY("poverty)", 14, "unterminated"},
      {R"("poverty")", 0, "inside a field function"},
      {R"(NOT TITLE("a"))", 0, "AND NOT"},
      {R"(AUTHOR("smith"))", 0, "unsupported field function"},
      {R"(poverty)", 0, "bare terms"},
      {R"(TITLE("a") TITLE("b"))", 11, "unexpected"},
      {R"(TITLE("pol*ution"))", 10, "may only end"},
      {R"(TITLE("*"))", 7, "must directly follow"},
      {R"(TITLE("a" W/x "b"))", 10, "bad proximity distance"},
      {R"(TITLE("a" W/2 ("b" OR "c")))", 14, "single patterns"},
      {R"(TITLE(("a" W/2 "b") W/2 "c"))", 6, "single patterns"},
      {R"(TITLE("--"))", 7, "no searchable tokens"},
      {R"(SUBJAREA(270))", 9, "subject code"},
      {R"(SUBJAREA())", 9, "subject code"},
      {R"(EXCLUDE(SRCTITLE, 1203))", 8, "only SUBJAREA"},
      {R"(TITLE(ABS("a")))", 6, "cannot be nested"},
      {R"(TITLE(SUBJAREA(27)))", 6, "cannot be nested"},
      {R"(TITLE("a" AND NOT "b"))", 14, ""},
      {"", 0, "unexpected end of query"},
  };
  for (const ErrorCase &c : cases) {
    try {
      ParseQuery(c.source);
      ADD_FAILURE() << "parsed: " << c.source;
    } catch (const QueryParseError &e) {
      EXPECT_EQ(e.offset(), c.offset) << c.source << " -> " << e.what();
      EXPECT_NE(std::string(e.what()).find(c.message_part), std::string::npos) << c.source << " -> " << e.what();
      EXPECT_FALSE(e.expected().empty()) << c.source;
    }
  }
}

TEST(RenderQueryTest, CanonicalForms) {
  EXPECT_EQ(RenderQuery(Tak(P({"poverty"}))), R"(TITLE-ABS-KEY("poverty"))");
  EXPECT_EQ(RenderQuery(And{{Tak(P({"a"})), Tak(P({"b"}))}}), R"((TITLE-ABS-KEY("a") AND TITLE-ABS-KEY("b")))");
  EXPECT_EQ(RenderQuery(ParseQuery(R"(title("a" w/3 "b c*" or "d"))")), R"(TITLE(("a" W/3 "b c*") OR "d"))");
  EXPECT_EQ(RenderQuery(ParseQuery("exclude(subjarea, 2700, 27)")), "EXCLUDE(SUBJAREA, 27, 2700)");
  EXPECT_EQ(RenderQuery(ParseQuery(R"(KEY("a") AND NOT SUBJAREA(33))")), R"((KEY("a") AND NOT SUBJAREA(33)))");
}

TEST(ValidateQueryTest, RejectsStructurallyInvalidTrees) {
  EXPECT_NO_THROW(ValidateQuery(Tak(P({"a"}))));
  EXPECT_THROW(ValidateQuery(P({"a"})), ConfigError);
  EXPECT_THROW(ValidateQuery(Tak(P({}))), ConfigError);
  EXPECT_THROW(ValidateQuery(Tak(P({"Upper"}))), ConfigError);
  EXPECT_THROW(ValidateQuery(Tak(P({"two words"}))), ConfigError);
  EXPECT_THROW(ValidateQuery(And{{Tak(P({"a"}))}}), ConfigError);
  EXPECT_THROW(ValidateQuery(Tak(Tak(P({"a"})))), ConfigError);
  EXPECT_THROW(ValidateQuery(Tak(SubjectFilter{{27}, SubjectMode::kInclude})), ConfigError);
  EXPECT_THROW(ValidateQuery(SubjectFilter{{}, SubjectMode::kInclude}), ConfigError);
  EXPECT_THROW(ValidateQuery(SubjectFilter{{270}, SubjectMode::kInclude}), ConfigError);
  EXPECT_THROW(ValidateQuery(Tak(Proximity{P({"a"}), P({"b"}), -1, false})), ConfigError);
  EXPECT_THROW(ValidateQuery(FieldScope{FieldSet{Field::kTitle, Field::kAbstract}, Query(P({"a"}))}), ConfigError);
}

TEST(RoundTripTest, RandomTreesAreFixedPoints) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 2000; ++i) {
    Query q = testing::RandomQuery(rng);
    ASSERT_NO_THROW(ValidateQuery(q));
    std::string text = RenderQuery(q);
    Query parsed = ParseQuery(text);
    ASSERT_EQ(parsed, q) << text;
    EXPECT_EQ(RenderQuery(parsed), text);
  }
}

TEST(RoundTripTest, BundledBankIsFixedPoint) {
  QueryBank bank = LoadQueryBank(testing::DataDir() / "queries");
  ASSERT_GE(bank.entries.size(), 30u);
  for (const QueryBankEntry &e : bank.entries) {
    Query again = ParseQuery(RenderQuery(e.query));
    EXPECT_EQ(again, e.query) << e.sdg << " " << e.theme;
    EXPECT_EQ(ParseQuery(RenderQuery(again)), again);
  }
}

TEST(ParsePatternTest, Rules) {
  EXPECT_EQ(ParsePattern("Te Whāriki"), P({"te", "whāriki"}));
  EXPECT_EQ(ParsePattern("whā*"), P({"whā"}, true));
  EXPECT_THROW(ParsePattern(""), QueryParseError);
  EXPECT_THROW(ParsePattern("a**"), QueryParseError);
  EXPECT_THROW(ParsePattern("a *"), QueryParseError);
  EXPECT_EQ(RenderPattern(P({"coastal", "pollut"}, true)), "\"coastal pollut*\"");
}

}  // namespace
}  // namespace sdgmap
