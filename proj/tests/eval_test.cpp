// Copyright 2026 The covscreen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "core/eval.hpp"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <random>

#include "core/error.hpp"
#include "core/io.hpp"
#include "core/report.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace covscreen::eval {
namespace {

constexpr Label V = Label::kVaccine, T = Label::kTherapeutics, O = Label::kOther;

PredictionSet FromString(std::string_view labels) {
  PredictionSet p;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const Label l = labels[i] == 'V' ? V : labels[i] == 'T' ? T : O;
    p.Add("a" + std::to_string(i), {l, std::nullopt});
  }
  return p;
}

std::string Fixture(const std::string& name) {
  return io::ReadFile(std::string(COVSCREEN_FIXTURE_DIR) + "/" + name);
}

TEST(Confusion, DiagonalEmptyAndHandTabulated) {
  const auto gold = FromString("VVTOOT");
  const auto m = Confusion(gold, gold);
  EXPECT_EQ(m.at(V, V), 2u);
  EXPECT_EQ(m.at(T, T), 2u);
  EXPECT_EQ(m.at(O, O), 2u);
  EXPECT_EQ(m.at(V, T), 0u);
  EXPECT_EQ(Confusion(PredictionSet(), PredictionSet()).total(), 0u);

  const auto hand = Confusion(gold, FromString("VTTVOO"));
  EXPECT_EQ(hand.at(V, V), 1u);
  EXPECT_EQ(hand.at(V, T), 1u);
  EXPECT_EQ(hand.at(T, T), 1u);
  EXPECT_EQ(hand.at(O, V), 1u);
  EXPECT_EQ(hand.at(O, O), 1u);
  EXPECT_EQ(hand.at(T, O), 1u);
  EXPECT_EQ(hand.total(), 6u);
  EXPECT_THROW(Confusion(FromString("VV"), FromString("V")), ValidationError);
}

TEST(PositivePrf, PerfectAndDegenerate) {
  const auto gold = FromString("VVTTOO");
  const auto perfect = PositivePrf(Confusion(gold, gold));
  for (const Prf& p : {perfect.vaccine, perfect.therapeutics, perfect.micro, perfect.macro}) {
    EXPECT_EQ(p.precision, 1.0);
    EXPECT_EQ(p.recall, 1.0);
    EXPECT_EQ(p.f, 1.0);
  }
  const auto none = PositivePrf(Confusion(gold, FromString("OOOOOO")));
  EXPECT_EQ(none.micro.precision, 0.0);
  EXPECT_EQ(none.micro.recall, 0.0);
  EXPECT_EQ(none.micro.f, 0.0);
  EXPECT_EQ(none.macro.f, 0.0);
}

TEST(PositivePrf, HandComputedFixture) {
  // Gold V:4 T:2 O:4; one V predicted O and one O predicted T.
  const auto m = PositivePrf(Confusion(FromString("VVVVTTOOOO"), FromString("VVVOTTOOOT")));
  EXPECT_DOUBLE_EQ(m.vaccine.precision, 1.0);
  EXPECT_DOUBLE_EQ(m.vaccine.recall, 0.75);
  EXPECT_NEAR(m.vaccine.f, 6.0 / 7.0, 1e-15);
  EXPECT_NEAR(m.therapeutics.precision, 2.0 / 3.0, 1e-15);
  EXPECT_DOUBLE_EQ(m.therapeutics.recall, 1.0);
  EXPECT_NEAR(m.therapeutics.f, 0.8, 1e-15);
  EXPECT_NEAR(m.micro.precision, 5.0 / 6.0, 1e-15);
  EXPECT_NEAR(m.micro.recall, 5.0 / 6.0, 1e-15);
  EXPECT_NEAR(m.micro.f, 5.0 / 6.0, 1e-15);
  EXPECT_NEAR(m.macro.precision, 0.8333333333333333, 1e-15);
  EXPECT_NEAR(m.macro.recall, 0.875, 1e-15);
  EXPECT_NEAR(m.macro.f, 0.8285714285714285, 1e-15);
}

TEST(PositivePrf, MatchesBruteForceRecount) {
  std::mt19937_64 g(1234);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = g() % 201;
    std::vector<Label> gl, pl;
    PredictionSet gold, pred;
    for (std::size_t i = 0; i < n; ++i) {
      gl.push_back(kAllLabels[g() % 3]);
      pl.push_back(kAllLabels[g() % 3]);
      gold.Add(std::to_string(i), {gl.back(), std::nullopt});
      pred.Add(std::to_string(i), {pl.back(), std::nullopt});
    }
    const auto m = PositivePrf(Confusion(gold, pred));
    const auto v = oracle::Recount(gl, pl, V);
    const auto t = oracle::Recount(gl, pl, T);
    const double vp = oracle::Ratio(v.tp, v.tp + v.fp), vr = oracle::Ratio(v.tp, v.tp + v.fn);
    const double tp = oracle::Ratio(t.tp, t.tp + t.fp), tr = oracle::Ratio(t.tp, t.tp + t.fn);
    EXPECT_EQ(m.vaccine.precision, vp);
    EXPECT_EQ(m.vaccine.recall, vr);
    EXPECT_EQ(m.vaccine.f, oracle::F1(vp, vr));
    EXPECT_EQ(m.therapeutics.precision, tp);
    EXPECT_EQ(m.therapeutics.recall, tr);
    EXPECT_EQ(m.therapeutics.f, oracle::F1(tp, tr));
    const double mp = oracle::Ratio(v.tp + t.tp, v.tp + t.tp + v.fp + t.fp);
    const double mr = oracle::Ratio(v.tp + t.tp, v.tp + t.tp + v.fn + t.fn);
    EXPECT_EQ(m.micro.precision, mp);
    EXPECT_EQ(m.micro.recall, mr);
    EXPECT_EQ(m.micro.f, oracle::F1(mp, mr));
    EXPECT_NEAR(m.macro.precision, (vp + tp) / 2, 1e-12);
    EXPECT_NEAR(m.macro.recall, (vr + tr) / 2, 1e-12);
    for (double x : {m.micro.f, m.macro.f, m.vaccine.f, m.therapeutics.f}) {
      EXPECT_GE(x, 0.0);
      EXPECT_LE(x, 1.0);
    }
  }
}

TEST(CohenKappa, Fixtures) {
  EXPECT_NEAR(CohenKappa(FromString("VVVVVOOOOO"), FromString("VVVVOOOOOV")), 0.6, 1e-9);
  EXPECT_NEAR(CohenKappa(FromString("VVVTTTOOOO"), FromString("VVTTTOOOOV")),
              0.5454545454545454, 1e-9);
  EXPECT_DOUBLE_EQ(CohenKappa(FromString("VTOVT"), FromString("VTOVT")), 1.0);
  EXPECT_DOUBLE_EQ(CohenKappa(FromString("OOOO"), FromString("OOOO")), 1.0);
  EXPECT_THROW(CohenKappa(FromString("VV"), FromString("V")), ValidationError);
  EXPECT_THROW(CohenKappa(PredictionSet(), PredictionSet()), ValidationError);
}

TEST(CohenKappa, BoundedAndNearZeroWhenIndependent) {
  std::mt19937_64 g(55);
  std::string a, b;
  for (int i = 0; i < 5000; ++i) {
    a += "VTO"[g() % 3];
    b += "VTO"[g() % 3];
  }
  EXPECT_LT(std::abs(CohenKappa(FromString(a), FromString(b))), 0.05);
  for (int trial = 0; trial < 200; ++trial) {
    std::string x, y;
    for (std::size_t i = 0, n = 1 + g() % 20; i < n; ++i) {
      x += "VTO"[g() % 3];
      y += g() % 2 ? x.back() : "VTO"[g() % 3];
    }
    const double k = CohenKappa(FromString(x), FromString(y));
    EXPECT_LE(k, 1.0 + 1e-12);
    if (x == y) EXPECT_DOUBLE_EQ(k, 1.0);
    if (x != y) EXPECT_LT(k, 1.0);
  }
}

TEST(Lexicon, WholeTokenAndPhraseMatching) {
  const Lexicon lex({"vaccination", "antiviral therapy"});
  const Article vac{"a", "Title", "Results of vaccination.", "J"};
  const Article stem{"b", "Title", "We vaccinate mice.", "J"};
  const Article phrase{"c", "Antiviral   Therapy trial", "Abstract", "J"};
  const Article split{"d", "Antiviral drug", "therapy", "J"};
  EXPECT_TRUE(LexiconPresent(vac, lex));
  EXPECT_FALSE(LexiconPresent(stem, lex));
  EXPECT_TRUE(LexiconPresent(phrase, lex));
  EXPECT_FALSE(LexiconPresent(split, lex));
  EXPECT_TRUE(LexiconPresent({"e", "T", "A", "Vaccination Journal"}, lex));
  EXPECT_THROW(Lexicon(std::vector<std::string>{"--", " "}), ValidationError);
  EXPECT_EQ(Lexicon::Default().terms().size(), 23u);
  EXPECT_EQ(Lexicon::Parse("vaccine\n\ndrug trial\n", "l").terms().size(), 2u);
}

TEST(Categorize, TableLayout) {
  EXPECT_EQ(Categorize(V, true), 1);
  EXPECT_EQ(Categorize(T, true), 1);
  EXPECT_EQ(Categorize(O, true), 2);
  EXPECT_EQ(Categorize(T, false), 3);
  EXPECT_EQ(Categorize(O, false), 4);
}

TEST(CategoryReport, ReproducesTableOnePercentages) {
  const auto fx = gen::MakeCategorySet({27, 21, 13, 58});
  PredictionSet all_other;
  for (const auto& [id, p] : fx.gold.entries()) all_other.Add(id, {O, std::nullopt});
  const auto t = CategoryReport(fx.corpus, fx.gold, {{"gold", fx.gold}, {"none", all_other}},
                                Lexicon::Default());
  EXPECT_EQ(t.totals, (std::array<std::size_t, 4>{27, 21, 13, 58}));
  EXPECT_EQ(t.analyzed(), 119u);
  EXPECT_NEAR(t.Percent(1), 22.69, 0.01);
  EXPECT_NEAR(t.Percent(2), 17.65, 0.01);
  EXPECT_NEAR(t.Percent(3), 10.92, 0.01);
  EXPECT_NEAR(t.Percent(4), 48.74, 0.01);
  EXPECT_EQ(t.correct.at("gold"), t.totals);
  EXPECT_EQ(t.correct.at("none"), (std::array<std::size_t, 4>{0, 21, 0, 58}));
  EXPECT_EQ(t.assignment.size(), 119u);
}

TEST(CategoryReport, MarginalsOnRandomSets) {
  std::mt19937_64 g(8);
  const Lexicon lex = Lexicon::Default();
  for (int trial = 0; trial < 50; ++trial) {
    std::array<std::size_t, 4> counts{};
    for (auto& c : counts) c = g() % 15;
    const auto fx = gen::MakeCategorySet(counts);
    const auto t = CategoryReport(fx.corpus, fx.gold, {}, lex);
    std::size_t positives = 0, present = 0;
    for (const auto& [id, p] : fx.gold.entries()) {
      positives += IsPositive(p.label);
      present += LexiconPresent(*fx.corpus.Find(id), lex);
    }
    EXPECT_EQ(t.totals[0] + t.totals[2], positives);
    EXPECT_EQ(t.totals[0] + t.totals[1], present);
    EXPECT_EQ(t.analyzed(), fx.gold.size());
  }
}

TEST(CategoryReport, Errors) {
  const auto fx = gen::MakeCategorySet({1, 1, 0, 0});
  EXPECT_THROW(CategoryReport(fx.corpus, fx.gold, {{"a", fx.gold}, {"a", fx.gold}},
                              Lexicon::Default()),
               ValidationError);
  EXPECT_THROW(CategoryReport(fx.corpus, fx.gold, {{"a", PredictionSet()}},
                              Lexicon::Default()),
               ValidationError);
  PredictionSet stranger;
  stranger.Add("zz", {V, std::nullopt});
  EXPECT_THROW(CategoryReport(fx.corpus, stranger, {}, Lexicon::Default()),
               ValidationError);
}

report::Report TableTwoReport() {
  report::Report r;
  r.metrics = report::ParseMetricsTsv(Fixture("golden/table2_metrics.tsv"), "metrics");
  r.categories = report::ParseCategoryCsv(Fixture("golden/table3_categories.csv"), "cats");
  r.kappa = 0.83;
  return r;
}

TEST(Report, GoldenFiles) {
  const auto r = TableTwoReport();
  EXPECT_EQ(report::Render(r, report::Format::kMarkdown), Fixture("golden/table2_report.md"));
  EXPECT_EQ(report::Render(r, report::Format::kCsv), Fixture("golden/table2_report.csv"));
  EXPECT_EQ(report::Render(r, report::Format::kCsv), report::Render(r, report::Format::kCsv));
}

TEST(Report, EmptyMetricsIsHeaderOnly) {
  const report::Report empty;
  EXPECT_EQ(report::Render(empty, report::Format::kMarkdown), Fixture("golden/empty_report.md"));
  EXPECT_EQ(report::Render(empty, report::Format::kCsv), Fixture("golden/empty_report.csv"));
}

TEST(Report, MetricsRowsAndRounding) {
  const auto m = PositivePrf(Confusion(FromString("VVVVTTOOOO"), FromString("VVVOTTOOOT")));
  const auto rows = report::MetricsRows("MS", m);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[2].averaging, "micro");
  report::Report r;
  r.metrics = rows;
  EXPECT_EQ(report::Render(r, report::Format::kCsv),
            "system,averaging,precision,recall,f_measure\n"
            "MS,vaccine,1.00,0.75,0.86\n"
            "MS,therapeutics,0.67,1.00,0.80\n"
            "MS,micro,0.83,0.83,0.83\n"
            "MS,macro,0.83,0.88,0.83\n");
}

TEST(Report, CategoryCsvRoundTrip) {
  const auto t = report::ParseCategoryCsv(Fixture("golden/table3_categories.csv"), "c");
  EXPECT_EQ(report::RenderCategoryCsv(t), Fixture("golden/table3_categories.csv"));
  EXPECT_THROW(report::ParseCategoryCsv("category,total\n", "c"), ParseError);
  EXPECT_THROW(report::ParseMetricsTsv("system\tp\n", "m"), ParseError);
  EXPECT_THROW(report::ParseMetricsTsv(
                   "system\taveraging\tprecision\trecall\tf_measure\nX\ty\t1.5\t0\t0\n", "m"),
               ValidationError);
}

}  // namespace
}  // namespace covscreen::eval
