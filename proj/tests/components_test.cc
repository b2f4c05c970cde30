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

#include "gfgen/components.h"

#include <gtest/gtest.h>

#include <deque>

#include "gfgen/errors.h"
#include "gfgen/structure.h"
#include "test_util.h"

namespace gfgen {
namespace {

using Roles = std::vector<std::pair<std::string, int>>;

Roles roles_of(const char *file) {
  SentenceFacts s = testing::load_sentence(file);
  return main_components(s, *select(recognize(s))).roles();
}

// Tokens reachable from `head` over complement edges, found by a plain
// breadth-first walk of the dependency list.
std::vector<int> reachable(const SentenceFacts &s, int head) {
  std::set<int> seen{head};
  std::deque<int> queue{head};
  while (!queue.empty()) {
    int h = queue.front();
    queue.pop_front();
    for (const auto &d : s.deps) {
      if (d.head != h) continue;
      std::string r = canonical_relation(d.relation);
      bool link = r == "compound" || r == "amod" || r == "conj" || r == "advmod";
      if (r == "nmod") {
        link = std::any_of(s.deps.begin(), s.deps.end(), [&](const auto &c) {
          return c.head == d.dependent && canonical_relation(c.relation) == "case";
        });
      }
      if (link && seen.insert(d.dependent).second) queue.push_back(d.dependent);
    }
  }
  return {seen.begin(), seen.end()};
}

TEST(Components, MainComponentsPerStructure) {
  EXPECT_EQ(roles_of("structures/s1_intransitive.conllu"), (Roles{{"sub", 1}, {"verb", 2}}));
  EXPECT_EQ(roles_of("bill_plays_a_game.conllu"), (Roles{{"sub", 1}, {"verb", 2}, {"obj", 4}}));
  EXPECT_EQ(roles_of("structures/s3_control.conllu"),
            (Roles{{"sub", 1}, {"verb_1", 2}, {"verb_2", 4}, {"obj", 5}}));
  EXPECT_EQ(roles_of("structures/s4_copular.conllu"), (Roles{{"sub", 1}, {"adj", 3}}));
  EXPECT_EQ(roles_of("structures/s5_passive.conllu"), (Roles{{"sub", 2}, {"verb", 4}}));
}

TEST(Components, UnsupportedCopularComplementNamesTheTag) {
  auto s = parse_conllu(
      "1\tIt\tit\tPRON\tPRP\t_\t3\tnsubj\t_\t_\n"
      "2\tis\tbe\tAUX\tVBZ\t_\t3\tcop\t_\t_\n"
      "3\there\there\tADV\tRB\t_\t0\troot\t_\t_\n")[0];
  try {
    main_components(s, {4, 2});
    FAIL() << "expected CategoryError";
  } catch (const CategoryError &e) {
    EXPECT_NE(std::string(e.what()).find("unsupported copular complement: pos_tag rb"),
              std::string::npos)
        << e.what();
  }
}

TEST(Components, ComplementsOfTheBoardGameObject) {
  SentenceFacts s = testing::load_sentence("bill_board_game.conllu");
  auto links = complements(s, 6);
  ASSERT_EQ(links.size(), 3u);
  EXPECT_EQ(links[0].kind, ComplementKind::kAdjMod);
  EXPECT_EQ(links[0].dependent, 4);
  EXPECT_EQ(links[1].kind, ComplementKind::kNounCompound);
  EXPECT_EQ(links[1].dependent, 5);
  EXPECT_EQ(links[2].kind, ComplementKind::kPreposition);
  EXPECT_EQ(links[2].dependent, 10);
  EXPECT_EQ(links[2].case_marker, 7);
}

TEST(Components, ChunkMatchesBreadthFirstWalk) {
  std::vector<std::string> files{"bill_plays_a_game.conllu", "bill_board_game.conllu"};
  for (const char *portal : {"people", "mathematics", "food_drink"}) {
    std::istringstream lines(testing::read_data(std::string("corpus/") + portal + "/sentences.tsv"));
    std::string line;
    while (std::getline(lines, line)) {
      files.push_back(std::string("corpus/") + portal + "/" + line.substr(0, line.find('\t')) +
                      ".conllu");
    }
  }
  for (const auto &f : files) {
    SentenceFacts s = testing::load_sentence(f);
    for (const auto &t : s.tokens) {
      EXPECT_EQ(chunk_tokens(build_chunk(s, t.index)), reachable(s, t.index))
          << f << " head " << t.index;
    }
  }
}

TEST(Components, CoordinatorAttachedToConjunctOrHost) {
  SentenceFacts list = testing::load_sentence("corpus/food_drink/f20.conllu");
  auto links = complements(list, 3);
  ASSERT_EQ(links.size(), 2u);
  EXPECT_EQ(links[0].dependent, 5);
  EXPECT_EQ(links[0].coordinator, 0);
  EXPECT_EQ(links[1].dependent, 7);
  EXPECT_EQ(links[1].coordinator, 6);

  auto old_style = parse_conllu(
      "1\tflour\tflour\tNOUN\tNN\t_\t0\troot\t_\t_\n"
      "2\tand\tand\tCCONJ\tCC\t_\t1\tcc\t_\t_\n"
      "3\twater\twater\tNOUN\tNN\t_\t1\tconj\t_\t_\n")[0];
  auto old_links = complements(old_style, 1);
  ASSERT_EQ(old_links.size(), 1u);
  EXPECT_EQ(old_links[0].coordinator, 2);
}

TEST(Components, KindNames) {
  EXPECT_EQ(complement_kind_name(ComplementKind::kPreposition), "preposition");
  EXPECT_EQ(complement_kind_name(ComplementKind::kNounConjunction), "noun_conjunction");
}

}  // namespace
}  // namespace gfgen
