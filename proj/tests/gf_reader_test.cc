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

#include "gfgen/gf_reader.h"

#include <gtest/gtest.h>

#include "gfgen/errors.h"
#include "gfgen/gf_exporter.h"
#include "gfgen/pipeline.h"
#include "test_util.h"

namespace gfgen {
namespace {

TEST(GfReader, ParsesExpressions) {
  EXPECT_EQ(parse_expr("mkVP play_V2 Game"),
            Expr::app("mkVP", {Expr::ref("play_V2"), Expr::ref("Game")}));
  EXPECT_EQ(parse_expr("mkN \"board game\" \"board games\""),
            Expr::app("mkN", {Expr::str("board game"), Expr::str("board games")}));
  EXPECT_EQ(parse_expr("(mkNP x )"), Expr::app("mkNP", {Expr::ref("x")}));
  EXPECT_EQ(parse_expr("ConstructorsEng.mkAdv with_Prep (mkNP y)"),
            Expr::app("ConstructorsEng.mkAdv",
                      {Expr::ref("with_Prep"), Expr::app("mkNP", {Expr::ref("y")})}));
}

TEST(GfReader, ReadsPeopleGrammar) {
  Grammar g = read_grammar({testing::read_data("People.gf"), testing::read_data("PeopleEng.gf")});
  EXPECT_EQ(g.name, "People");
  EXPECT_EQ(g.categories, (std::set<std::string>{"Action", "Entity", "Message", "People"}));
  EXPECT_EQ(g.lincats.at("Action"), "V2");
  const GfFunction &f = g.functions.at("simple_sent");
  EXPECT_EQ(f.arg_categories, (std::vector<std::string>{"People", "Action", "Entity"}));
  EXPECT_EQ(f.params, (std::vector<std::string>{"People", "Action", "Entity"}));
  EXPECT_EQ(g.functions.at("Bill").result, "People");
  EXPECT_EQ(g.opers.at("soccer_N").category, "N");
  EXPECT_TRUE(check_grammar(g).empty());
}

TEST(GfReader, RenderedGrammarReadsBack) {
  for (const char *f : {"bill_board_game.conllu", "structures/s3_control.conllu",
                        "structures/s5_passive.conllu", "corpus/food_drink/f20.conllu"}) {
    Grammar g = merge({*analyze_sentence(testing::load_sentence(f)).grammar});
    auto r = render(g, "G");
    Grammar back = read_grammar({r.abstract_text, r.concrete_text});
    EXPECT_EQ(render(back, "G").abstract_text, r.abstract_text) << f;
    EXPECT_EQ(render(back, "G").concrete_text, r.concrete_text) << f;
  }
}

TEST(GfReader, IgnoresComments) {
  Grammar g = read_grammar({"-- header\nabstract A = { cat Message ; {- block\n comment -} fun s : Message ; }",
                            "concrete AEng of A = open SyntaxEng in { lincat Message = Cl ;\n"
                            "lin s = mkCl (mkNP x_N) (mkV \"sleep\") ; -- trailing\n"
                            "oper x_N = mkN \"x\" ; }"});
  EXPECT_EQ(g.functions.size(), 1u);
  EXPECT_EQ(g.opers.size(), 1u);
}

TEST(GfReader, ReportsLineOfSyntaxErrors) {
  try {
    read_grammar({"abstract A = {\n  cat Message ;\n  fun s : ; \n}"});
    FAIL() << "expected ParseError";
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(GfReader, MissingLinearizationIsALookupError) {
  EXPECT_THROW(read_grammar({"abstract A = { cat Message ; fun s, t : Message ; }",
                             "concrete AEng of A = open SyntaxEng in { lincat Message = Cl ; "
                             "lin s = mkCl (mkNP x_N) (mkV \"go\") ; oper x_N = mkN \"x\" ; }"}),
               LookupError);
  EXPECT_THROW(read_grammar({"abstract A = { cat Message ; fun s : Message ; }",
                             "concrete AEng of A = open SyntaxEng in { lincat Message = Cl ; "
                             "lin s = x ; u = x ; oper x = mkN \"x\" ; }"}),
               LookupError);
}

}  // namespace
}  // namespace gfgen
