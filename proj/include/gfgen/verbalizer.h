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

#ifndef GFGEN_VERBALIZER_H_
#define GFGEN_VERBALIZER_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gfgen/gf_syntax.h"
#include "gfgen/ingest.h"

namespace gfgen {

struct GroundAtom {
  std::string predicate;
  std::vector<std::string> args;
};

struct Triple {
  std::string subject, relation, object;
};

// An annotation sentence for predicate/arity, compiled into a grammar whose
// single function takes one Symbol argument per `$k` slot.
struct AtomAnnotation {
  std::string predicate;
  int arity = 0;
  std::string template_sentence;
  Grammar grammar;
};

// Dependency analysis of a simple annotation sentence ("The input of $1 is
// $2", "$1 reads $2"). Slot tokens are nouns; `slot_params` receives the
// token index -> lin parameter ("x1", "x2", ...) binding.
SentenceFacts parse_template(std::string_view sentence, std::map<int, std::string> *slot_params);

// Compiles one annotation; throws ParseError on slot-count mismatches and
// Error when the sentence structure is not recognized.
AtomAnnotation make_annotation(const std::string &predicate, int arity,
                               const std::string &sentence);

// One record per line: `predicate/arity<TAB>sentence`. Blank lines and
// lines starting with '#' are skipped.
std::vector<AtomAnnotation> load_annotations(std::string_view text);

// Fact-program text (`pred(a, b).`, several per line allowed) or a JSON
// array of {"predicate": ..., "args": [...]} objects.
std::vector<GroundAtom> parse_atoms(std::string_view text);

// Three-column TSV or a JSON array of [subject, relation, object] arrays.
std::vector<Triple> parse_triples(std::string_view text);

// One sentence per atom, in input order, joined by single spaces.
std::string verbalize_atoms(const std::vector<GroundAtom> &atoms,
                            const std::vector<AtomAnnotation> &annotations);

// One sentence per triple. `rdf:type` falls back to the copular
// annotation "$1 is $2" when not annotated.
std::vector<std::string> verbalize_triples(const std::vector<Triple> &triples,
                                           const std::vector<AtomAnnotation> &annotations);

}  // namespace gfgen

#endif  // GFGEN_VERBALIZER_H_
