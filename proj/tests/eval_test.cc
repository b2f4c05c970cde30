// Copyright 2026 The gfgen Authors.
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

#include "gfgen/eval.h"

#include <gtest/gtest.h>

#include <random>

#include "metric_oracle.h"

#include "test_util.h"

namespace gfgen {
namespace {

using Tokens = std::vector<std::string>;
using namespace testing::oracle;

Tokens random_tokens(std::mt19937 &rng, int min_len, int max_len) {
  static const char *kWords[] = {"bill", "plays", "a", "game", "with", "friends", "the"};
  int n = std::uniform_int_distribution<int>(min_len, max_len)(rng);
  Tokens out;
  for (int i = 0; i < n; ++i) out.push_back(kWords[std::uniform_int_distribution<int>(0, 6)(rng)]);
  return out;
}

TEST(Eval, Tokenization) {
  EXPECT_EQ(score_tokens("Bill plays a game."), (Tokens{"bill", "plays", "a", "game"}));
  EXPECT_EQ(score_tokens("  Water, malt and \"hops\"! "), (Tokens{"water", "malt", "and", "hops"}));
  EXPECT_EQ(score_tokens("e.g. x-ray"), (Tokens{"e.g", "x-ray"}));
  EXPECT_TRUE(score_tokens(" . ").empty());
}

TEST(Eval, AgreesWithBruteForceOracle) {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    Tokens ref = random_tokens(rng, 3, 9);
    Tokens hyp = trial % 2 ? random_tokens(rng, 1, 9) : ref;
    if (trial % 2 == 0 && hyp.size() > 2) hyp.erase(hyp.begin() + 1);
    bool assessable = false;
    double expected = oracle_bleu(hyp, ref, &assessable);
    BleuResult b = bleu3(hyp, ref);
    EXPECT_EQ(b.assessable, assessable) << trial;
    EXPECT_NEAR(b.score, expected, 1e-9) << trial;

    RougeScores r = rouge(hyp, ref);
    auto expected_rouge = oracle_rouge(hyp, ref);
    EXPECT_NEAR(r.rouge1, expected_rouge[0], 1e-9) << trial;
    EXPECT_NEAR(r.rouge2, expected_rouge[1], 1e-9) << trial;
    EXPECT_NEAR(r.rougeL, expected_rouge[2], 1e-9) << trial;
  }
}

TEST(Eval, DroppedArticleIsNotBleuAssessable) {
  BleuResult b = bleu3(score_tokens("Bill plays game"), score_tokens("Bill plays a game."));
  EXPECT_FALSE(b.assessable);
  EXPECT_EQ(b.score, 0);
  RougeScores r = rouge(score_tokens("Bill plays game"), score_tokens("Bill plays a game."));
  EXPECT_NEAR(r.rouge1, 85.71428571428571, 1e-9);
  EXPECT_NEAR(r.rouge2, 40.0, 1e-9);
  EXPECT_NEAR(r.rougeL, 85.71428571428571, 1e-9);
}

TEST(Eval, BrevityPenalty) {
  BleuResult b = bleu3(score_tokens("bill plays a game"), score_tokens("bill plays a game today"));
  EXPECT_TRUE(b.assessable);
  EXPECT_NEAR(b.brevity_penalty, std::exp(-0.25), 1e-12);
  EXPECT_NEAR(b.score, 77.88007830714049, 1e-9);
}

TEST(Eval, IdentityAndDisjoint) {
  Tokens t = score_tokens("Beer contains water, malt and hops.");
  EXPECT_NEAR(bleu3(t, t).score, 100, 1e-9);
  RougeScores same = rouge(t, t);
  EXPECT_NEAR(same.rouge1, 100, 1e-9);
  EXPECT_NEAR(same.rouge2, 100, 1e-9);
  EXPECT_NEAR(same.rougeL, 100, 1e-9);
  Tokens other = score_tokens("cats sleep all day");
  EXPECT_EQ(bleu3(other, t).score, 0);
  RougeScores none = rouge(other, t);
  EXPECT_EQ(none.rouge1, 0);
  EXPECT_EQ(none.rougeL, 0);
}

TEST(Eval, EmptyInputs) {
  EXPECT_FALSE(bleu3({}, {"a"}).assessable);
  EXPECT_EQ(bleu3({}, {"a"}).score, 0);
  EXPECT_EQ(rouge({}, {"a"}).rouge1, 0);
  EXPECT_EQ(rouge({}, {}).rougeL, 0);
}

TEST(Eval, CorpusReport) {
  auto reports = run_corpus(testing::data_path("corpus"));
  ASSERT_EQ(reports.size(), 3u);
  std::map<std::string, int> recognized;
  for (const auto &r : reports) {
    recognized[r.portal] = r.n_recognized;
    for (const auto &s : r.sentences) {
      EXPECT_TRUE(s.grammar_problems.empty()) << s.id;
      if (s.recognized) EXPECT_FALSE(s.hypothesis.empty()) << s.id;
    }
  }
  EXPECT_EQ(recognized, (std::map<std::string, int>{{"food_drink", 23}, {"mathematics", 22}, {"people", 15}}));
  std::string csv = report_csv(reports);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "portal,n_sentences,n_recognized,n_bleu_assessable,bleu3,rouge1,rouge2,rougeL");
}

}  // namespace
}  // namespace gfgen
