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

#include "sdgmap/evaluation.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "sdgmap/error.h"

namespace sdgmap {
namespace {

ValidationDataset Dataset(std::string name, std::vector<std::pair<std::string, std::set<int>>> gold) {
  ValidationDataset d;
  d.name = std::move(name);
  for (auto &[id, sdgs] : gold) {
    d.items.push_back({id, std::nullopt, sdgs});
    d.multi_label = d.multi_label || sdgs.size() > 1;
  }
  return d;
}

SdgMapping Pred(const std::vector<std::pair<std::string, std::set<int>>> &pred) {
  SdgMapping m;
  for (const auto &[id, sdgs] : pred) {
    for (int s : sdgs) m.AddQuery(id, s);
  }
  return m;
}

ValidationDataset HandCaseGold() { return Dataset("hand", {{"d1", {1}}, {"d2", {2}}}); }
SdgMapping HandCasePred() { return Pred({{"d1", {1, 2}}, {"d2", {2}}}); }

TEST(ConfusionTest, HandEnumeratedCase) {
  ConfusionTable t = Confusion(HandCasePred(), HandCaseGold(), {1, 2});
  EXPECT_EQ(t.at(1), (ClassCounts{1, 0, 0}));
  EXPECT_EQ(t.at(2), (ClassCounts{1, 1, 0}));
}

TEST(ConfusionTest, CountsMissingIdsAsEmptyPredictions) {
  size_t missing = 0;
  ConfusionTable t = Confusion(Pred({{"d1", {1}}}), HandCaseGold(), {1, 2}, &missing);
  EXPECT_EQ(missing, 1u);
  EXPECT_EQ(t.at(2), (ClassCounts{0, 0, 1}));
}

TEST(ConfusionTest, IgnoresPredictionsForUnlistedRecords) {
  SdgMapping pred = HandCasePred();
  pred.AddQuery("elsewhere", 1);
  EXPECT_EQ(Confusion(pred, HandCaseGold(), {1, 2}), Confusion(HandCasePred(), HandCaseGold(), {1, 2}));
}

TEST(ConfusionTest, RejectsUnknownClass) {
  EXPECT_THROW(Confusion(HandCasePred(), HandCaseGold(), {1, 18}), ConfigError);
  EXPECT_THROW(Confusion(HandCasePred(), HandCaseGold(), {0}), ConfigError);
}

TEST(F1ReportTest, HandEnumeratedCase) {
  MetricsReport r = F1Report(Confusion(HandCasePred(), HandCaseGold(), {1, 2}));
  EXPECT_NEAR(r.micro_f1, 0.8, 1e-12);
  EXPECT_NEAR(r.macro_f1, 5.0 / 6.0, 1e-12);
  EXPECT_EQ(r.Cell(), "80/83");
  ASSERT_EQ(r.per_class.size(), 2u);
  EXPECT_NEAR(r.per_class[0].f1, 1.0, 1e-12);
  EXPECT_NEAR(r.per_class[1].precision, 0.5, 1e-12);
  EXPECT_NEAR(r.per_class[1].recall, 1.0, 1e-12);
  EXPECT_NEAR(r.per_class[1].f1, 2.0 / 3.0, 1e-12);
}

TEST(F1ReportTest, PerfectPrediction) {
  ValidationDataset gold = Dataset("g", {{"a", {1, 4}}, {"b", {4}}, {"c", {17}}});
  SdgMapping pred = Pred({{"a", {1, 4}}, {"b", {4}}, {"c", {17}}});
  MetricsReport r = F1Report(Confusion(pred, gold, gold.GoldClasses()));
  EXPECT_EQ(r.micro_f1, 1.0);
  EXPECT_EQ(r.macro_f1, 1.0);
  EXPECT_EQ(r.Cell(), "100/100");
}

TEST(F1ReportTest, ZeroOverZeroIsZero) {
  ConfusionTable t;
  t[3] = {0, 0, 0};
  t[5] = {0, 4, 0};
  MetricsReport r = F1Report(t);
  EXPECT_EQ(r.per_class[0].precision, 0.0);
  EXPECT_EQ(r.per_class[0].recall, 0.0);
  EXPECT_EQ(r.per_class[0].f1, 0.0);
  EXPECT_EQ(r.micro_f1, 0.0);
  EXPECT_EQ(r.macro_f1, 0.0);
  EXPECT_EQ(F1Report({}).macro_f1, 0.0);
  EXPECT_EQ(F1Report({}).Cell(), "0/0");
}

TEST(F1ReportTest, MetricsStayInUnitInterval) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    ConfusionTable t;
    for (int c = 1; c <= 17; ++c) {
      if (rng() % 3 == 0) continue;
      t[c] = {rng() % 20, rng() % 20, rng() % 20};
    }
    MetricsReport r = F1Report(t);
    EXPECT_GE(r.micro_f1, 0.0);
    EXPECT_LE(r.micro_f1, 1.0);
    EXPECT_GE(r.macro_f1, 0.0);
    EXPECT_LE(r.macro_f1, 1.0);
    for (const ClassMetrics &m : r.per_class) {
      EXPECT_LE(m.f1, std::max(m.precision, m.recall) + 1e-15);
      EXPECT_GE(m.f1, std::min(m.precision, m.recall) - 1e-15);
    }
  }
}

TEST(RenderCellTest, RoundsToPercent) {
  EXPECT_EQ(RenderCell(0.76, 0.48), "76/48");
  EXPECT_EQ(RenderCell(0.8, 5.0 / 6.0), "80/83");
  EXPECT_EQ(RenderCell(0.0, 1.0), "0/100");
  EXPECT_EQ(RenderCell(0.125, 0.994), "13/99");
}

TEST(VerdictTest, ParsesSpellings) {
  EXPECT_EQ(ParseVerdict("relevant"), Verdict::kRelevant);
  EXPECT_EQ(ParseVerdict(" Yes "), Verdict::kRelevant);
  EXPECT_EQ(ParseVerdict("1"), Verdict::kRelevant);
  EXPECT_EQ(ParseVerdict("NOT_RELEVANT"), Verdict::kNotRelevant);
  EXPECT_EQ(ParseVerdict("n"), Verdict::kNotRelevant);
  EXPECT_EQ(ParseVerdict("  "), std::nullopt);
  EXPECT_THROW(ParseVerdict("maybe"), DataError);
  EXPECT_STREQ(VerdictName(Verdict::kRelevant), "relevant");
  EXPECT_STREQ(VerdictName(Verdict::kNotRelevant), "not_relevant");
}

std::vector<Annotation> Annotations(int both_relevant, int both_irrelevant, int split) {
  std::vector<Annotation> out;
  int n = 0;
  auto add = [&](Verdict a, Verdict b) { out.push_back({"r" + std::to_string(n++), a, b}); };
  for (int i = 0; i < both_relevant; ++i) add(Verdict::kRelevant, Verdict::kRelevant);
  for (int i = 0; i < both_irrelevant; ++i) add(Verdict::kNotRelevant, Verdict::kNotRelevant);
  for (int i = 0; i < split; ++i) {
    i % 2 ? add(Verdict::kRelevant, Verdict::kNotRelevant) : add(Verdict::kNotRelevant, Verdict::kRelevant);
  }
  return out;
}

TEST(PrecisionTest, StrictConjunction) {
  PrecisionEstimate e = EstimatePrecision(Annotations(92, 5, 3));
  EXPECT_NEAR(e.precision, 0.92, 1e-12);
  EXPECT_NEAR(e.agreement_rate, 0.97, 1e-12);
  EXPECT_EQ(e.sample_size, 100u);
}

TEST(PrecisionTest, Extremes) {
  PrecisionEstimate all = EstimatePrecision(Annotations(100, 0, 0));
  EXPECT_EQ(all.precision, 1.0);
  EXPECT_EQ(all.agreement_rate, 1.0);
  PrecisionEstimate none = EstimatePrecision(Annotations(0, 0, 100));
  EXPECT_EQ(none.precision, 0.0);
  EXPECT_EQ(none.agreement_rate, 0.0);
}

TEST(PrecisionTest, Errors) {
  EXPECT_THROW(EstimatePrecision({}), DataError);
  std::vector<Annotation> a = Annotations(3, 0, 0);
  a[1].second.reset();
  EXPECT_THROW(EstimatePrecision(a), DataError);
}

TEST(RecallTest, FractionCovered) {
  ValidationDataset set = Dataset("j", {{"a", {14}}, {"b", {14}}, {"c", {14, 6}}, {"d", {14}}});
  EXPECT_EQ(EstimateRecall(Pred({{"a", {14}}, {"b", {14}}, {"c", {14}}, {"d", {14}}}), set, 14), 1.0);
  EXPECT_EQ(EstimateRecall(Pred({{"a", {6}}}), set, 14), 0.0);
  EXPECT_EQ(EstimateRecall(Pred({{"a", {14}}, {"c", {14}}, {"x", {14}}}), set, 14), 0.5);
}

TEST(RecallTest, Errors) {
  EXPECT_THROW(EstimateRecall(SdgMapping{}, Dataset("empty", {}), 3), DataError);
  EXPECT_THROW(EstimateRecall(SdgMapping{}, Dataset("j", {{"a", {2}}}), 3), DataError);
}

TEST(GateTest, BoundariesAreInclusive) {
  GateResult r = Gate(0.90, 0.60, 100);
  EXPECT_TRUE(r.accepted);
  EXPECT_TRUE(r.violations.empty());
  EXPECT_TRUE(Gate(0.92, 0.61, 100).accepted);
}

TEST(GateTest, NamesExactlyTheViolatedCondition) {
  auto check = [](double p, double r, size_t n, GateCondition expected) {
    GateResult g = Gate(p, r, n);
    EXPECT_FALSE(g.accepted);
    EXPECT_EQ(g.violations, std::vector<GateCondition>{expected});
  };
  check(0.899, 0.60, 100, GateCondition::kPrecision);
  check(0.90, 0.599, 100, GateCondition::kRecall);
  check(0.90, 0.60, 99, GateCondition::kSampleSize);
  GateResult all = Gate(0.1, 0.1, 1);
  EXPECT_EQ(all.violations.size(), 3u);
  EXPECT_STREQ(GateConditionName(GateCondition::kSampleSize), "sample_size");
}

TEST(GateTest, NanMetricsAreRejected) {
  EXPECT_FALSE(Gate(std::nan(""), 0.7, 100).accepted);
}

TEST(GateTest, RejectsInvalidConfig) {
  EXPECT_THROW(Gate(1, 1, 100, {0.0, 0.6, 100}), ConfigError);
  EXPECT_THROW(Gate(1, 1, 100, {0.9, 1.5, 100}), ConfigError);
  EXPECT_THROW(Gate(1, 1, 100, {0.9, 0.6, 0}), ConfigError);
  EXPECT_TRUE(Gate(1, 1, 1, {1.0, 1.0, 1}).accepted);
}

TEST(ValidationDatasetTest, ReadsReferenceAndInlineItems) {
  std::istringstream in(
      "{\"id\":\"a\",\"gold\":[3]}\n"
      "\n"
      "{\"id\":\"b\",\"title\":\"Clean water\",\"abstract\":\"\",\"keywords\":[],\"asjc\":[2300],"
      "\"journal\":\"J\",\"year\":2020,\"gold\":[6,14]}\n");
  ValidationDataset d = ReadValidationDataset(in, "mix");
  ASSERT_EQ(d.items.size(), 2u);
  EXPECT_FALSE(d.items[0].record.has_value());
  ASSERT_TRUE(d.items[1].record.has_value());
  EXPECT_EQ(d.items[1].record->title, "Clean water");
  EXPECT_TRUE(d.multi_label);
  EXPECT_EQ(d.GoldClasses(), (std::set<int>{3, 6, 14}));
  EXPECT_EQ(d.InlineCorpus().size(), 1u);
}

TEST(ValidationDatasetTest, ErrorsCarryLineNumbers) {
  auto fails = [](const std::string &text, const std::string &needle) {
    std::istringstream in(text);
    try {
      ReadValidationDataset(in, "ds");
      ADD_FAILURE() << "accepted: " << text;
    } catch (const DataError &e) {
      EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
    }
  };
  fails("{\"id\":\"a\",\"gold\":[3]}\n{not json\n", "line 2");
  fails("{\"id\":\"a\"}\n", "gold");
  fails("{\"id\":\"a\",\"gold\":[]}\n", "no gold");
  fails("{\"id\":\"a\",\"gold\":[18]}\n", "outside");
  fails("{\"id\":\"a\",\"gold\":[1]}\n{\"id\":\"a\",\"gold\":[2]}\n", "duplicate");
  fails("{\"id\":\"\",\"gold\":[1]}\n", "nonempty");
}

TEST(ValidationDatasetTest, MissingFile) {
  EXPECT_THROW(LoadValidationDataset("/nonexistent/x.jsonl"), DataError);
}

TEST(BenchmarkTest, MatchesIndependentRecompute) {
  std::mt19937_64 rng(11);
  std::vector<ValidationDataset> datasets;
  for (int d = 0; d < 3; ++d) {
    std::vector<std::pair<std::string, std::set<int>>> items;
    for (int i = 0; i < 40; ++i) {
      std::set<int> gold = {static_cast<int>(rng() % 17) + 1};
      if (d == 2 && rng() % 2) gold.insert(static_cast<int>(rng() % 17) + 1);
      items.push_back({"r" + std::to_string(i), gold});
    }
    datasets.push_back(Dataset("d" + std::to_string(d), items));
  }
  std::vector<std::pair<std::string, SdgMapping>> methods;
  for (int m = 0; m < 2; ++m) {
    SdgMapping pred;
    for (int i = 0; i < 45; ++i) {
      for (int k = 0; k < static_cast<int>(rng() % 3); ++k) pred.AddQuery("r" + std::to_string(i), rng() % 17 + 1);
    }
    methods.push_back({"m" + std::to_string(m), pred});
  }
  BenchmarkMatrix serial = Benchmark(methods, datasets, 1);
  BenchmarkMatrix parallel = Benchmark(methods, datasets, 4);
  for (size_t i = 0; i < methods.size(); ++i) {
    for (size_t j = 0; j < datasets.size(); ++j) {
      const BenchmarkCell &cell = serial.at(i, j);
      EXPECT_EQ(cell.method, methods[i].first);
      EXPECT_EQ(cell.dataset, datasets[j].name);
      std::set<int> classes = datasets[j].GoldClasses();
      size_t tp = 0, fp = 0, fn = 0;
      double f1_sum = 0.0;
      for (int c : classes) {
        size_t ctp = 0, cfp = 0, cfn = 0;
        for (const ValidationItem &item : datasets[j].items) {
          bool p = methods[i].second.Has(item.id, c);
          bool g = item.gold.count(c) > 0;
          ctp += p && g;
          cfp += p && !g;
          cfn += !p && g;
        }
        tp += ctp;
        fp += cfp;
        fn += cfn;
        f1_sum += 2.0 * ctp / static_cast<double>(2 * ctp + cfp + cfn);
      }
      double micro = 2.0 * tp / static_cast<double>(2 * tp + fp + fn);
      EXPECT_NEAR(cell.report.micro_f1, micro, 1e-12);
      EXPECT_NEAR(cell.report.macro_f1, f1_sum / classes.size(), 1e-12);
      EXPECT_EQ(cell.report.classes_evaluated, classes);
      EXPECT_EQ(parallel.at(i, j).report.Cell(), cell.report.Cell());
      EXPECT_EQ(parallel.at(i, j).counts, cell.counts);
    }
  }
}

TEST(BenchmarkTest, PermutationInvariance) {
  std::vector<std::pair<std::string, std::set<int>>> items;
  SdgMapping pred;
  std::mt19937_64 rng(2);
  for (int i = 0; i < 60; ++i) {
    std::string id = "r" + std::to_string(i);
    items.push_back({id, {static_cast<int>(rng() % 5) + 1}});
    pred.AddQuery(id, static_cast<int>(rng() % 5) + 1);
  }
  MetricsReport base = Benchmark({{"m", pred}}, {Dataset("d", items)}).at(0, 0).report;
  for (int trial = 0; trial < 10; ++trial) {
    std::shuffle(items.begin(), items.end(), rng);
    MetricsReport shuffled = Benchmark({{"m", pred}}, {Dataset("d", items)}).at(0, 0).report;
    EXPECT_EQ(shuffled.micro_f1, base.micro_f1);
    EXPECT_EQ(shuffled.macro_f1, base.macro_f1);
  }
}

TEST(BenchmarkTest, TextAndMachineRendering) {
  BenchmarkMatrix m = Benchmark({{"query", HandCasePred()}}, {HandCaseGold()});
  std::ostringstream text;
  RenderBenchmarkText(m, text);
  EXPECT_EQ(text.str(),
            "method \\ dataset | hand   \n"
            "query            | 80/83  \n");
  std::ostringstream machine;
  RenderBenchmarkMachine(m, machine);
  EXPECT_NE(machine.str().find("\"cell\":\"80/83\""), std::string::npos);
  EXPECT_NE(machine.str().find("\"method\":\"query\""), std::string::npos);
  std::string lines = machine.str();
  EXPECT_EQ(std::count(lines.begin(), lines.end(), '\n'), 1);
}

TEST(CompareTest, SetArithmetic) {
  SdgMapping a = Pred({{"d1", {1}}, {"d2", {1}}});
  SdgMapping b = Pred({{"d2", {1}}, {"d3", {1}}});
  EXPECT_EQ(CompareMappings(a, b), (std::vector<ComparisonRow>{{1, 2, 2, 1}}));
}

TEST(CompareTest, RowLayout) {
  std::ostringstream out;
  RenderComparisonText({{1, 522, 229, 125}}, "Elsevier", "Aurora", out);
  EXPECT_EQ(out.str(), "SDG | Elsevier | Aurora | Intersection\n1 | 522 | 229 | 125\n");
  std::ostringstream csv;
  WriteComparisonCsv({{1, 522, 229, 125}}, csv);
  EXPECT_EQ(csv.str(), "sdg,count_a,count_b,intersection\n1,522,229,125\n");
}

TEST(CompareTest, RandomizedBounds) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    SdgMapping a, b;
    for (int i = 0; i < 30; ++i) {
      if (rng() % 2) a.AddQuery("r" + std::to_string(i), rng() % 4 + 1);
      if (rng() % 2) b.AddQuery("r" + std::to_string(i), rng() % 4 + 1);
    }
    std::vector<ComparisonRow> ab = CompareMappings(a, b);
    std::vector<ComparisonRow> ba = CompareMappings(b, a);
    ASSERT_EQ(ab.size(), ba.size());
    for (size_t k = 0; k < ab.size(); ++k) {
      EXPECT_LE(ab[k].intersection, std::min(ab[k].count_a, ab[k].count_b));
      EXPECT_EQ(ab[k].count_a, ba[k].count_b);
      EXPECT_EQ(ab[k].intersection, ba[k].intersection);
      EXPECT_EQ(ab[k].count_a, a.RecordsFor(ab[k].sdg).size());
    }
    for (const ComparisonRow &r : CompareMappings(a, a)) EXPECT_EQ(r.intersection, r.count_a);
  }
}

}  // namespace
}  // namespace sdgmap
