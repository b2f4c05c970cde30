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

#include "gfgen/morphology.h"

#include <gtest/gtest.h>

namespace gfgen {
namespace {

TEST(Morphology, ThirdPersonSingular) {
  EXPECT_EQ(inflect_verb_3sg("play"), "plays");
  EXPECT_EQ(inflect_verb_3sg("be"), "is");
  EXPECT_EQ(inflect_verb_3sg("have"), "has");
  EXPECT_EQ(inflect_verb_3sg("watch"), "watches");
  EXPECT_EQ(inflect_verb_3sg("study"), "studies");
  EXPECT_EQ(inflect_verb_3sg("go"), "goes");
}

TEST(Morphology, NounPlurals) {
  EXPECT_EQ(pluralize_noun("game"), "games");
  EXPECT_EQ(pluralize_noun("board game"), "board games");
  EXPECT_EQ(pluralize_noun("person"), "people");
  EXPECT_EQ(pluralize_noun("city"), "cities");
  EXPECT_EQ(pluralize_noun("box"), "boxes");
  EXPECT_EQ(pluralize_noun("day"), "days");
  EXPECT_EQ(pluralize_noun("species"), "species");
}

TEST(Morphology, Singular) {
  EXPECT_EQ(singularize_noun("friends"), "friend");
  EXPECT_EQ(singularize_noun("people"), "person");
  EXPECT_EQ(singularize_noun("cities"), "city");
}

TEST(Morphology, PastForms) {
  EXPECT_EQ(past_tense("play"), "played");
  EXPECT_EQ(past_participle("play"), "played");
  EXPECT_EQ(past_participle("write"), "written");
  EXPECT_EQ(past_participle("stop"), "stopped");
  EXPECT_EQ(past_tense("study"), "studied");
  EXPECT_EQ(past_participle("love"), "loved");
}

TEST(Morphology, PresentParticiple) {
  EXPECT_EQ(present_participle("play"), "playing");
  EXPECT_EQ(present_participle("make"), "making");
  EXPECT_EQ(present_participle("run"), "running");
}

TEST(Morphology, LemmaFromThirdPerson) {
  EXPECT_EQ(verb_lemma_from_3sg("plays"), "play");
  EXPECT_EQ(verb_lemma_from_3sg("watches"), "watch");
  EXPECT_EQ(verb_lemma_from_3sg("studies"), "study");
  EXPECT_EQ(verb_lemma_from_3sg("is"), "be");
}

TEST(Morphology, RoundTripOverRegularVerbs) {
  for (const char *v : {"play", "watch", "study", "contain", "require", "fix", "carry"}) {
    EXPECT_EQ(verb_lemma_from_3sg(inflect_verb_3sg(v)), v);
  }
}

}  // namespace
}  // namespace gfgen
