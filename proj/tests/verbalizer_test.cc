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

#include "gfgen/verbalizer.h"

#include <gtest/gtest.h>

#include "gfgen/errors.h"
#include "gfgen/gf_syntax.h"
#include "test_util.h"

namespace gfgen {
namespace {

std::vector<std::string> sentences(const std::string &text) {
  std::vector<std::string> out;
  size_t start = 0;
  for (size_t dot; (dot = text.find(". ", start)) != std::string::npos; start = dot + 2) {
    out.push_back(text.substr(start, dot + 1 - start));
  }
  out.push_back(text.substr(start));
  return out;
}

TEST(Verbalizer, TemplateSlotsBecomeParameters) {
  std::map<int, std::string> slots;
  SentenceFacts s = parse_template("The input of $1 is $2", &slots);
  EXPECT_EQ(slots, (std::map<int, std::string>{{4, "x1"}, {6, "x2"}}));
  EXPECT_EQ(s.token(4).pos, "nn");
  EXPECT_EQ(s.token(6).pos, "nn");
}

TEST(Verbalizer, AnnotationGrammar) {
  AtomAnnotation a = make_annotation("input", 2, "The input of $1 is $2");
  ASSERT_EQ(a.grammar.functions.size(), 1u);
  const GfFunction &f = a.grammar.functions.begin()->second;
  EXPECT_EQ(f.name, "input_2");
  EXPECT_EQ(f.params, (std::vector<std::string>{"x1", "x2"}));
  EXPECT_EQ(f.arg_categories, (std::vector<std::string>{"Symbol", "Symbol"}));
  EXPECT_TRUE(check_grammar(a.grammar).empty());
}

TEST(Verbalizer, SlotsMustMatchArity) {
  EXPECT_THROW(make_annotation("input", 2, "The input of $1 is web link"), ParseError);
  EXPECT_THROW(make_annotation("input", 1, "The input of $1 is $2"), ParseError);
}

TEST(Verbalizer, LoadsAnnotationFile) {
  auto anns = load_annotations(testing::read_data("phylotastic.annotations"));
  ASSERT_EQ(anns.size(), 3u);
  EXPECT_EQ(anns[2].predicate, "typeof");
  EXPECT_EQ(anns[2].arity, 2);
}

TEST(Verbalizer, ParsesAtomsInEveryFormat) {
  auto atoms = parse_atoms(testing::read_data("phylotastic.atoms"));
  ASSERT_EQ(atoms.size(), 6u);
  EXPECT_EQ(atoms[1].predicate, "typeof");
  EXPECT_EQ(atoms[1].args, (std::vector<std::string>{"web_link", "url"}));
  auto json = parse_atoms(R"([{"predicate": "typeof", "args": ["web_link", "url"]}])");
  ASSERT_EQ(json.size(), 1u);
  EXPECT_EQ(json[0].args, atoms[1].args);
}

TEST(Verbalizer, PhylotasticAtoms) {
  auto text = verbalize_atoms(parse_atoms(testing::read_data("phylotastic.atoms")),
                              load_annotations(testing::read_data("phylotastic.annotations")));
  auto got = sentences(text);
  ASSERT_EQ(got.size(), 6u) << text;
  EXPECT_EQ(got[0], "Input of phylotastic FindScientificNamesFromWeb GET is web link.");
  EXPECT_EQ(got[1], "Type of web link is url.");
  EXPECT_EQ(got[2], "Output of phylotastic FindScientificNamesFromWeb GET is scientific names.");
  EXPECT_EQ(got[3], "Output of phylotastic FindScientificNamesFromWeb GET is species names.");
  EXPECT_EQ(got[4], "Type of scientific names is names.");
  // Symbols are substituted verbatim.
  EXPECT_EQ(got[5], "Type of species names is names.");
}

TEST(Verbalizer, MissingAnnotationIsALookupError) {
  auto anns = load_annotations("input/2\tThe input of $1 is $2\n");
  try {
    verbalize_atoms({{"typeof", {"a", "b"}}}, anns);
    FAIL() << "expected LookupError";
  } catch (const LookupError &e) {
    EXPECT_NE(std::string(e.what()).find("typeof/2"), std::string::npos) << e.what();
  }
}

TEST(Verbalizer, Triples) {
  auto out = verbalize_triples(parse_triples(testing::read_data("people.triples")),
                               load_annotations(testing::read_data("people.annotations")));
  EXPECT_EQ(out, (std::vector<std::string>{"Kevin has_pets Flossie.", "Flossie is cow.",
                                           "Mick reads Daily Mirror."}));
}

TEST(Verbalizer, TriplesFromJson) {
  auto t = parse_triples(R"([["Mick", "reads", "Daily_Mirror"]])");
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t[0].object, "Daily_Mirror");
}

}  // namespace
}  // namespace gfgen
