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

#include "core/textprep.hpp"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "core/error.hpp"
#include "oracles.hpp"

namespace covscreen {
namespace {

using ::testing::ElementsAre;

TEST(Tokenize, SplitsOnNonAlphanumerics) {
  EXPECT_EQ(Tokenize("COVID-19 Vaccine!"), (TokenSequence{"covid", "19", "vaccine"}));
  EXPECT_EQ(Tokenize("mRNA-based"), (TokenSequence{"mrna", "based"}));
  EXPECT_TRUE(Tokenize("").empty());
  EXPECT_TRUE(Tokenize(" --- ... ").empty());
}

TEST(Tokenize, HandlesUnicodeLetters) {
  EXPECT_EQ(Tokenize("Étude ÜBER naïve"), (TokenSequence{"étude", "über", "naïve"}));
  // Invalid UTF-8 separates tokens instead of failing.
  EXPECT_EQ(Tokenize("ab\xFF" "cd"), (TokenSequence{"ab", "cd"}));
}

TEST(Tokenize, IsIdempotentOnTokenStreams) {
  std::mt19937_64 gen(11);
  const std::string alphabet = "aZ9 -.,!é\tQx";
  for (int trial = 0; trial < 200; ++trial) {
    std::string text;
    const int len = static_cast<int>(gen() % 40);
    for (int i = 0; i < len; ++i) {
      // Keep multi-byte characters whole.
      const std::size_t pick = gen() % 11;
      text += pick == 8 ? std::string("é") : std::string(1, alphabet[pick == 8 ? 0 : pick]);
    }
    const auto once = Tokenize(text);
    std::string joined;
    for (const auto& t : once) joined += (joined.empty() ? "" : " ") + t;
    EXPECT_EQ(Tokenize(joined), once) << text;
    for (const auto& t : once) {
      EXPECT_FALSE(t.empty());
      EXPECT_EQ(t.find(' '), std::string::npos);
    }
  }
}

TEST(SplitSentences, SplitsOnTerminatorSpaceUppercase) {
  EXPECT_THAT(SplitSentences("A done. B next."), ElementsAre("A done.", "B next."));
  EXPECT_THAT(SplitSentences("Why? Because! Yes."), ElementsAre("Why?", "Because!", "Yes."));
  EXPECT_TRUE(SplitSentences("").empty());
  EXPECT_TRUE(SplitSentences("   ").empty());
}

TEST(SplitSentences, DoesNotSplitAbbreviationsOrDecimals) {
  EXPECT_THAT(SplitSentences("e.g. value 3.5 rises."), ElementsAre("e.g. value 3.5 rises."));
  EXPECT_THAT(SplitSentences("Dose was 2.5mg.Next"), ElementsAre("Dose was 2.5mg.Next"));
}

TEST(SplitSentences, TrimsAndHandlesWhitespaceRuns) {
  EXPECT_THAT(SplitSentences("  First one.\n\n  Second one.  "),
              ElementsAre("First one.", "Second one."));
}

TEST(TfIdf, IdfFormula) {
  const std::vector<TokenSequence> docs = {{"a", "b"}, {"a"}, {"a", "c"}};
  const auto m = TfIdfModel::Fit(docs);
  EXPECT_EQ(m.n_docs(), 3u);
  EXPECT_DOUBLE_EQ(m.Idf(*m.Id("a")), 1.0);
  EXPECT_NEAR(m.Idf(*m.Id("b")), 1.6931471805599454, 1e-15);
  EXPECT_FALSE(m.Id("zzz").has_value());
}

TEST(TfIdf, AllEmptyDocumentsIsAnError) {
  const std::vector<TokenSequence> docs = {{}, {}};
  EXPECT_THROW(TfIdfModel::Fit(docs), ValidationError);
  EXPECT_THROW(TfIdfModel::Fit(std::vector<TokenSequence>{}), ValidationError);
}

TEST(TfIdf, VectorizeCountsTimesIdf) {
  const std::vector<TokenSequence> docs = {{"x"}, {"x", "y"}};
  const auto m = TfIdfModel::Fit(docs);
  const auto v = m.Vectorize({"x", "x", "oov"});
  ASSERT_EQ(v.size(), 1u);
  EXPECT_DOUBLE_EQ(v.Weight(*m.Id("x")), 2.0);
  EXPECT_TRUE(m.Vectorize({"nope", "nada"}).empty());
  EXPECT_EQ(m.Vectorize(docs[1]).entries(), m.Vectorize({"y", "x"}).entries());
}

TEST(TfIdf, MatchesBruteForceOnThreeDocFixture) {
  const std::vector<TokenSequence> docs = {
      Tokenize("vaccine trial vaccine dose"),
      Tokenize("drug therapy trial"),
      Tokenize("transmission of the virus in the community")};
  const auto m = TfIdfModel::Fit(docs);
  const auto idf = oracle::Idf(docs);
  for (const auto& d : docs) {
    const auto expected = oracle::Vectorize(idf, d);
    const auto got = m.Vectorize(d);
    ASSERT_EQ(got.size(), expected.size());
    for (const auto& [term, w] : expected) {
      EXPECT_NEAR(got.Weight(*m.Id(term)), w, 1e-12) << term;
    }
  }
}

TEST(Cosine, BasicValues) {
  const SparseVector a({{1, 1.0}, {2, 1.0}});
  const SparseVector b({{1, 1.0}});
  const SparseVector c({{3, 4.0}});
  EXPECT_NEAR(Cosine(a, b), 0.7071067811865475, 1e-15);
  EXPECT_NEAR(Cosine(a, a), 1.0, 1e-15);
  EXPECT_EQ(Cosine(a, c), 0.0);
  EXPECT_EQ(Cosine(a, SparseVector()), 0.0);
  EXPECT_EQ(Cosine(SparseVector(), SparseVector()), 0.0);
}

TEST(Cosine, SymmetricAndScaleInvariant) {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> w(0.0, 3.0);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<SparseVector::Entry> ea, eb;
    for (TermId t = 0; t < 12; ++t) {
      if (gen() % 2) ea.emplace_back(t, w(gen));
      if (gen() % 2) eb.emplace_back(t, w(gen));
    }
    const SparseVector a(ea), b(eb);
    const double c = 0.01 + w(gen) * 10;
    const double ab = Cosine(a, b);
    EXPECT_NEAR(ab, Cosine(b, a), 1e-12);
    EXPECT_NEAR(Cosine(a.Scaled(c), b), ab, 1e-12);
    EXPECT_GE(ab, 0.0);
    EXPECT_LE(ab, 1.0);
  }
}

TEST(SparseVector, DropsZerosAndMergesDuplicates) {
  const SparseVector v({{3, 1.0}, {1, 0.0}, {3, 2.0}, {2, 0.5}});
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v.entries()[0], (SparseVector::Entry{2, 0.5}));
  EXPECT_EQ(v.entries()[1], (SparseVector::Entry{3, 3.0}));
}

TEST(Stopwords, ParsedAndRemoved) {
  const auto stop = ParseStopwords("the\n\n of \n");
  EXPECT_EQ(stop.size(), 2u);
  EXPECT_EQ(RemoveStopwords({"the", "virus", "of", "bats"}, stop),
            (TokenSequence{"virus", "bats"}));
}

}  // namespace
}  // namespace covscreen
