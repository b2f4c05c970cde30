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

#ifndef GFGEN_GF_ENCODER_H_
#define GFGEN_GF_ENCODER_H_

#include <map>
#include <string>
#include <vector>

#include "gfgen/components.h"
#include "gfgen/gf_syntax.h"
#include "gfgen/ingest.h"
#include "gfgen/structure.h"

namespace gfgen {

// Oper table with the collision policy used everywhere: an identical
// definition under the same name collapses, a different one takes the next
// free suffixed name.
class OperSet {
 public:
  // Returns the name the oper ended up under.
  std::string add(const std::string &name, const std::string &category, Expr definition);
  const std::map<std::string, GfOper> &opers() const { return opers_; }

 private:
  std::map<std::string, GfOper> opers_;
};

struct EncodedPhrase {
  Expr expr;
  std::vector<GfOper> opers;  // in creation order
};

// Structure-level skeleton with category names standing in for the
// components, e.g. mkCl NP (mkVP V2 NP).
Expr top_rule(const StructureAtom &structure, bool adjectival = false);

struct EncodeOptions {
  // Template slots: token index -> lin parameter name. Slot tokens encode
  // as bare NP parameters.
  std::map<int, std::string> slot_params;
  // Function name; defaults to "sent_" + the sentence id.
  std::string function_name;
};

// Builds the NP for a nominal chunk: compounds fold into one multiword N,
// adjectives become APs combined into CNs, then adverbs and prepositional
// phrases wrap the NP, and conjuncts form a ListNP. Throws CategoryError
// when the head is not nominal.
EncodedPhrase encode_np(const SentenceFacts &facts, const Chunk &chunk,
                        const EncodeOptions &options = {});

// `verb_chunks` holds one chunk for structures 1, 2 and 5 and the
// (verb_1, verb_2) pair for structure 3. `object` is required for 2 and 3.
EncodedPhrase encode_vp(const SentenceFacts &facts, const StructureAtom &structure,
                        const std::vector<Chunk> &verb_chunks, const Expr *object,
                        const EncodeOptions &options = {});

// One-sentence grammar: a single Message function whose linearization is
// the applied clause, plus every oper it needs. Main NP/AP components that
// do not mention a slot become named opers (Game = mkNP ...).
Grammar encode_sentence(const SentenceFacts &facts, const StructureAtom &structure,
                        const ComponentMap &components, const EncodeOptions &options = {});

}  // namespace gfgen

#endif  // GFGEN_GF_ENCODER_H_
