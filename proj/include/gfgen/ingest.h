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

#ifndef GFGEN_INGEST_H_
#define GFGEN_INGEST_H_

#include <string>
#include <string_view>
#include <vector>

namespace gfgen {

struct Token {
  int index = 0;        // 1-based position in the sentence
  std::string surface;
  std::string lemma;    // surface when the LEMMA column is "_"
  bool has_lemma = false;
  std::string pos;      // lowercased Penn tag, "punct" for punctuation
};

struct DependencyFact {
  std::string relation;  // UD label as written in the input
  int head = 0;
  int dependent = 0;

  bool operator==(const DependencyFact &) const = default;
};

struct SentenceFacts {
  std::string sentence_id;
  std::vector<Token> tokens;
  std::vector<DependencyFact> deps;  // ordered by dependent index
  std::string source_text;

  const Token &token(int index) const { return tokens.at(index - 1); }
  bool valid_index(int index) const {
    return index >= 1 && index <= static_cast<int>(tokens.size());
  }
  // Head of `index`, or 0 when it is the root or unattached.
  int head_of(int index) const;
  // Number of edges between `index` and its tree root.
  int depth_of(int index) const;
};

// Parses CoNLL-U text into one SentenceFacts per sentence block.
// Multiword ranges ("3-4") and empty nodes ("3.1") are skipped, the ROOT
// edge is dropped and DEPS/MISC are ignored. Throws ParseError on a
// malformed row and StructuralError on bad or cyclic heads.
std::vector<SentenceFacts> parse_conllu(std::string_view text);

// Maps a UD label onto the predicate name the rule programs use:
// obj -> dobj, nsubj:pass -> nsubjpass, aux:pass -> auxpass, obl -> nmod,
// and any remaining subtype separator ':' becomes '_' (nmod:poss ->
// nmod_poss).
std::string canonical_relation(std::string_view label);

// Renders the fact program: dependency facts in dependent order, then one
// pos_tag fact per token, each on its own line.
std::string facts_to_text(const SentenceFacts &facts);

}  // namespace gfgen

#endif  // GFGEN_INGEST_H_
