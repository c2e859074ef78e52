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

#include "core/model_rules.hpp"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "core/error.hpp"

namespace covscreen::rules {
namespace {

using ::testing::HasSubstr;

template <typename Fn>
std::string ErrorOf(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

TEST(NspLabel, Branches) {
  EXPECT_EQ(NspLabel({0.9995, 0.5}), Label::kVaccine);
  EXPECT_EQ(NspLabel({0.9999, 0.9995}), Label::kVaccine);
  EXPECT_EQ(NspLabel({0.9995, 0.9999}), Label::kTherapeutics);
  EXPECT_EQ(NspLabel({0.2, 0.9991}), Label::kTherapeutics);
  EXPECT_EQ(NspLabel({0.99, 0.99}), Label::kOther);
  EXPECT_EQ(NspLabel({0.999, 0.1}), Label::kVaccine);
  EXPECT_EQ(NspLabel({0.9995, 0.9995}), Label::kVaccine);
  EXPECT_EQ(NspLabel({0.6, 0.4}, 0.5), Label::kVaccine);
}

TEST(NspLabel, MonotoneInVaccineProbability) {
  std::mt19937_64 g(6);
  std::uniform_real_distribution<double> u(0.99, 1.0);
  for (int i = 0; i < 2000; ++i) {
    const double pv = u(g), pt = u(g), bump = (1.0 - pv) * u(g);
    if (NspLabel({pv, pt}) == Label::kVaccine) {
      EXPECT_EQ(NspLabel({pv + bump, pt}), Label::kVaccine);
    }
  }
}

TEST(ChCombine, Branches) {
  EXPECT_EQ(ChCombine(Label::kOther, 0.99), Label::kOther);
  EXPECT_EQ(ChCombine(Label::kOther, 0.0), Label::kOther);
  EXPECT_EQ(ChCombine(Label::kVaccine, 0.8), Label::kTherapeutics);
  EXPECT_EQ(ChCombine(Label::kTherapeutics, 0.1), Label::kVaccine);
  EXPECT_EQ(ChCombine(Label::kVaccine, 0.5), Label::kTherapeutics);
  EXPECT_EQ(ChCombine(Label::kTherapeutics, 0.9, 0.95), Label::kVaccine);
}

TEST(StsLabel, Branches) {
  EXPECT_NEAR(TopNMean({3, 1, 2, 5}, 3), 10.0 / 3.0, 1e-12);
  EXPECT_EQ(StsLabel({{3, 1, 2, 5}, {0, 0}}), Label::kVaccine);
  EXPECT_EQ(StsLabel({{2, 2, 2}, {2, 2}}), Label::kVaccine);
  EXPECT_EQ(StsLabel({{1.9, 1, 0}, {1.5}}), Label::kOther);
  EXPECT_EQ(StsLabel({{1.0}, {4.0, 0.5}}), Label::kTherapeutics);
  EXPECT_EQ(StsLabel({{2.5}, {4.0}}), Label::kTherapeutics);
  EXPECT_EQ(StsLabel({{}, {}}), Label::kOther);
  EXPECT_EQ(TopNMean({}, 3), 0.0);
  EXPECT_EQ(TopNMean({4, 1}, 3), 2.5);
}

TEST(StsLabel, InvariantToSegmentOrder) {
  std::mt19937_64 g(19);
  std::uniform_real_distribution<double> u(0.0, 5.0);
  for (int i = 0; i < 500; ++i) {
    StsRawScores s;
    for (std::size_t j = 0, n = g() % 8; j < n; ++j) s.vaccine_segment_scores.push_back(u(g));
    for (std::size_t j = 0, n = g() % 8; j < n; ++j) {
      s.therapeutics_segment_scores.push_back(u(g));
    }
    StsRawScores p = s;
    std::shuffle(p.vaccine_segment_scores.begin(), p.vaccine_segment_scores.end(), g);
    std::shuffle(p.therapeutics_segment_scores.begin(), p.therapeutics_segment_scores.end(),
                 g);
    EXPECT_EQ(StsLabel(s), StsLabel(p));
  }
}

TEST(Parsers, NspChSts) {
  const auto nsp = ParseNspScores("a\t0.9995\t0.1\nb\t0\t1\n", "n.tsv");
  EXPECT_EQ(nsp.size(), 2u);
  EXPECT_EQ(nsp.at("b").p_therapeutics, 1.0);
  EXPECT_THROW(ParseNspScores("a\t1.2\t0\n", "n"), ValidationError);
  EXPECT_THROW(ParseNspScores("a\t0.1\n", "n"), ParseError);
  EXPECT_THROW(ParseNspScores("a\t0.1\t0.2\na\t0.1\t0.2\n", "n"), ValidationError);

  const auto ch = ParseChScores("a\t0.25\n", "c.tsv");
  EXPECT_EQ(ch.at("a"), 0.25);
  EXPECT_THROW(ParseChScores("a\t-0.1\n", "c"), ValidationError);

  const auto sts =
      ParseStsScores("a\tvaccine\t3,1,2,5\na\ttherapeutics\t0,0\nb\tvaccine\t4.5\n", "s.tsv");
  EXPECT_EQ(sts.at("a").vaccine_segment_scores, (std::vector<double>{3, 1, 2, 5}));
  EXPECT_TRUE(sts.at("b").therapeutics_segment_scores.empty());
  EXPECT_THROW(ParseStsScores("a\tother\t1\n", "s"), ParseError);
  EXPECT_THROW(ParseStsScores("a\tvaccine\t5.5\n", "s"), ValidationError);
  EXPECT_THROW(ParseStsScores("a\tvaccine\t1\na\tvaccine\t2\n", "s"), ValidationError);
  EXPECT_THAT(ErrorOf([] { ParseStsScores("a\tvaccine\t1,x\n", "s.tsv"); }),
              HasSubstr("s.tsv:1"));
}

TEST(LoadPredictions, ValidAndInvalid) {
  const auto p = ParsePredictions("a\tvaccine\nb\ttherapeutics\t0.5\nc\tother\n", "p.tsv");
  EXPECT_EQ(p.size(), 3u);
  EXPECT_EQ(p.Find("b")->score, 0.5);
  EXPECT_FALSE(p.Find("a")->score);
  const auto bad = ErrorOf([] { ParsePredictions("a\tvaccine\nb\tvacine\n", "p.tsv"); });
  EXPECT_THAT(bad, HasSubstr("p.tsv:2"));
  EXPECT_THAT(bad, HasSubstr("vacine"));
  EXPECT_THROW(ParsePredictions("a\tvacine\n", "p"), ParseError);
  EXPECT_THROW(ParsePredictions("a\tvaccine\na\tother\n", "p"), ValidationError);
  EXPECT_THROW(ParsePredictions("a\tvaccine\t1\n", "p", false), ParseError);
  EXPECT_EQ(ParsePredictions(SerializePredictions(p), "rt").entries(), p.entries());
}

Corpus ThreeArticles() {
  return Corpus({{"a", "T", "A", "J"}, {"b", "T", "A", "J"}, {"c", "T", "A", "J"}});
}

TEST(Apply, NspChStsFollowCorpusOrder) {
  const auto corpus = ThreeArticles();
  const std::unordered_map<std::string, NspRawScores> nsp = {
      {"c", {0.1, 0.2}}, {"a", {0.9999, 0.1}}, {"b", {0.1, 0.9999}}};
  const auto n = ApplyNsp(corpus, nsp);
  EXPECT_EQ(n.Ids(), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(n.Find("a")->label, Label::kVaccine);
  EXPECT_EQ(n.Find("b")->label, Label::kTherapeutics);
  EXPECT_EQ(n.Find("c")->label, Label::kOther);

  const std::unordered_map<std::string, double> ch = {{"a", 0.9}, {"b", 0.1}};
  const auto c = ApplyCh(corpus, nsp, ch);
  EXPECT_EQ(c.Find("a")->label, Label::kTherapeutics);
  EXPECT_EQ(c.Find("b")->label, Label::kVaccine);
  EXPECT_EQ(c.Find("c")->label, Label::kOther);
  EXPECT_THAT(ErrorOf([&] { ApplyCh(corpus, nsp, {{"a", 0.9}}); }), HasSubstr("'b'"));

  std::unordered_map<std::string, NspRawScores> partial = nsp;
  partial.erase("b");
  EXPECT_THAT(ErrorOf([&] { ApplyNsp(corpus, partial); }), HasSubstr("b"));

  const std::unordered_map<std::string, StsRawScores> sts = {
      {"a", {{3, 1, 2, 5}, {0, 0}}}, {"b", {{0}, {2.5}}}, {"c", {{1}, {1}}}};
  const auto s = ApplySts(corpus, sts);
  EXPECT_EQ(s.Find("a")->label, Label::kVaccine);
  EXPECT_NEAR(*s.Find("a")->score, 10.0 / 3.0, 1e-12);
  EXPECT_EQ(s.Find("b")->label, Label::kTherapeutics);
  EXPECT_EQ(s.Find("c")->label, Label::kOther);
}

TEST(AlignToCorpus, ReordersAndChecksCoverage) {
  const auto corpus = ThreeArticles();
  const auto ext = ParsePredictions("c\tother\na\tvaccine\nb\tother\n", "gs");
  EXPECT_EQ(AlignToCorpus(corpus, ext).Ids(), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_THROW(AlignToCorpus(corpus, ParsePredictions("a\tvaccine\n", "gs")),
               ValidationError);
  EXPECT_THROW(AlignToCorpus(corpus, ParsePredictions(
                                         "a\tother\nb\tother\nc\tother\nz\tother\n", "gs")),
               ValidationError);
}

}  // namespace
}  // namespace covscreen::rules
