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

#ifndef GFGEN_RULE_ENGINE_H_
#define GFGEN_RULE_ENGINE_H_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gfgen/ingest.h"

namespace gfgen {

// A ground argument: an integer (token index, structure number) or a
// lowercase symbol (a POS tag).
using Term = std::variant<std::int64_t, std::string>;

struct Atom {
  std::string predicate;
  std::vector<Term> args;

  auto operator<=>(const Atom &) const = default;
  bool operator==(const Atom &) const = default;
  std::string to_string() const;
};

using Model = std::set<Atom>;

struct PatternTerm {
  bool is_variable = false;
  std::string variable;  // set when is_variable
  Term value;            // set otherwise
};

struct PatternAtom {
  std::string predicate;
  std::vector<PatternTerm> args;
};

// A positive rule. Cardinality heads such as "2 { sub(S); verb(V) }" are
// read as conjunctive heads: their lower bound always equals the number of
// head atoms, so every atom in the braces is forced.
struct Rule {
  std::vector<PatternAtom> head;
  std::vector<PatternAtom> body;
  std::string source;
};

struct Program {
  std::string name;
  std::vector<Rule> rules;
};

// Parses rules written in clingo surface syntax. Uppercase identifiers are
// variables; "%" starts a comment. Throws ParseError.
Program parse_program(std::string_view source, std::string name);

enum class RuleFamily { kStructures, kMainComponents, kComplements };

// The built-in programs: structure recognition, main components and
// complements. The complements program reads its focus token from the
// symbol constant `pos`.
const Program &program(RuleFamily family);

using Bindings = std::map<std::string, Term>;

struct Firing {
  size_t rule = 0;
  Bindings bindings;
};

struct Derivation {
  Model atoms;                  // derived atoms not present in the input
  std::vector<Firing> firings;  // every satisfied ground rule instance
};

// Least fixpoint of `program` over `facts`. Symbol constants listed in
// `constants` are replaced by their value before matching. When
// `rule_subset` is non-empty only those rule indices take part.
Derivation derive_with_firings(const Model &facts, const Program &program,
                               const Bindings &constants = {},
                               const std::vector<size_t> &rule_subset = {});

Model derive(const Model &facts, const Program &program, const Bindings &constants = {});

// dependency facts under their canonical predicate names plus pos_tag/2.
Model facts_from_sentence(const SentenceFacts &facts);

// One "atom." per line in the model's order.
std::string model_to_text(const Model &model);

}  // namespace gfgen

#endif  // GFGEN_RULE_ENGINE_H_
