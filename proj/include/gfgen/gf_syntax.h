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

#ifndef GFGEN_GF_SYNTAX_H_
#define GFGEN_GF_SYNTAX_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace gfgen {

enum class Number { kSingular, kPlural };

// A constructor expression over the resource-library subset: an
// application (mkCl, mkNP, ...), a reference to an oper / library
// constant / lin parameter, or a string literal.
//
// `number` is realization metadata on NP-forming applications. It is kept
// in the JSON form of a grammar but has no GF surface syntax, so rendered
// .gf files are number-neutral exactly like the library's mass-noun mkNP.
struct Expr {
  enum class Kind { kApp, kRef, kString };

  Kind kind = Kind::kRef;
  std::string head;  // constructor, identifier or literal contents
  std::vector<Expr> args;
  Number number = Number::kSingular;

  static Expr ref(std::string name) { return Expr{Kind::kRef, std::move(name), {}, Number::kSingular}; }
  static Expr str(std::string text) { return Expr{Kind::kString, std::move(text), {}, Number::kSingular}; }
  static Expr app(std::string fn, std::vector<Expr> args) {
    return Expr{Kind::kApp, std::move(fn), std::move(args), Number::kSingular};
  }

  bool operator==(const Expr &) const = default;
};

// Canonical GF text. Applications nested as arguments are parenthesized; a
// parenthesized one-argument application over an atom is written with a
// space before the closing parenthesis, "(mkNP friend_N )".
std::string render_expr(const Expr &e);

// Identifiers referenced by `e` (oper names, constants, parameters).
void collect_refs(const Expr &e, std::set<std::string> *out);

// Rewrites references according to `renames`.
Expr rename_refs(const Expr &e, const std::map<std::string, std::string> &renames);

struct GfOper {
  std::string name;
  std::string category;  // resource category such as N, CN, NP
  Expr definition;

  bool operator==(const GfOper &) const = default;
};

struct GfFunction {
  std::string name;
  std::vector<std::string> arg_categories;  // abstract categories
  std::string result = "Message";
  std::vector<std::string> params;  // lin parameter names, one per argument
  Expr linearization;

  bool operator==(const GfFunction &) const = default;
};

// Abstract plus English concrete syntax. Serves both as a per-sentence
// fragment and as the merged paragraph grammar.
struct Grammar {
  std::string name;
  std::string sentence_id;  // set on per-sentence fragments
  std::set<std::string> categories;
  std::map<std::string, std::string> lincats;
  std::map<std::string, GfFunction> functions;
  std::map<std::string, GfOper> opers;

  bool operator==(const Grammar &) const = default;
};

// Resource-library category names used by the encoder and linearizer.
bool is_resource_category(std::string_view cat);

// Built-in constants from the structural lexicon (with_Prep, and_Conj,
// it_Pron, ...) and their categories.
std::optional<std::string> library_constant_category(std::string_view name);

// Unqualified constructor name: "ConstructorsEng.mkAdv" -> "mkAdv".
std::string_view unqualified(std::string_view name);

// Argument categories accepted by `constructor`, one entry per overload.
struct Signature {
  std::vector<std::string> args;
  std::string result;
};
const std::vector<Signature> &signatures(std::string_view constructor);
bool is_constructor(std::string_view name);

// Category of `e` given categories of the names in scope. Throws TypeError
// when an application matches no overload or a reference is unknown.
std::string infer_category(const Expr &e, const std::map<std::string, std::string> &scope);

// Type-checks every oper and linearization. Returns the list of problems,
// empty when the grammar is well formed and closed.
std::vector<std::string> check_grammar(const Grammar &g);

// Lowercase identifier stem for a word or phrase: letters and digits kept,
// everything else collapsed to '_'; non-ASCII bytes are written as hex.
std::string identifier_stem(std::string_view text);

// The k-th alternative for a colliding oper or function name. Lexical
// names keep their category suffix last: game_N -> game_2_N, Game -> Game_2.
std::string suffixed_name(std::string_view name, int k);

// Natural ordering: digit runs compare numerically ("s2" < "s10").
bool natural_less(std::string_view a, std::string_view b);

}  // namespace gfgen

#endif  // GFGEN_GF_SYNTAX_H_
