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

#ifndef GFGEN_COMPONENTS_H_
#define GFGEN_COMPONENTS_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gfgen/ingest.h"
#include "gfgen/structure.h"

namespace gfgen {

// Role assignment produced by the main-component program. Only the roles
// of the selected structure are populated.
struct ComponentMap {
  StructureAtom structure;
  std::optional<int> sub;
  std::optional<int> verb;    // structures 1, 2 and 5
  std::optional<int> verb_1;  // structure 3
  std::optional<int> verb_2;  // structure 3
  std::optional<int> obj;     // structures 2, 3 and nominal 4
  std::optional<int> adj;     // adjectival 4

  // (role name, token index) pairs in a fixed role order.
  std::vector<std::pair<std::string, int>> roles() const;
};

enum class ComplementKind {
  kNounCompound,
  kAdjMod,
  kNounConjunction,
  kPreposition,
  kAdverbialModifier,
};

std::string complement_kind_name(ComplementKind kind);

struct ComplementAttachment {
  ComplementKind kind;
  int host = 0;
  int dependent = 0;
  int case_marker = 0;  // preposition only
  int coordinator = 0;  // noun conjunction only; 0 means none was found

  bool operator==(const ComplementAttachment &) const = default;
};

// The maximal word chunk supporting a component: its head plus the
// recursively expanded complements, in surface order of the dependents.
struct Chunk {
  struct Member;

  int head = 0;
  std::vector<Member> attachments;
};

struct Chunk::Member {
  ComplementAttachment link;
  Chunk chunk;
};

// Applies the main-component rules of the selected structure. When several
// clauses match, the instance anchored closest to the tree root wins.
// Throws CategoryError for a copular head whose tag is not jj/nn/nns/cd.
ComponentMap main_components(const SentenceFacts &facts, const StructureAtom &structure);

// Complement atoms whose focus is token `pos`, ordered by dependent.
std::vector<ComplementAttachment> complements(const SentenceFacts &facts, int pos);

Chunk build_chunk(const SentenceFacts &facts, int head);

// Head plus all member tokens (case markers and coordinators excluded), in
// ascending order.
std::vector<int> chunk_tokens(const Chunk &chunk);

}  // namespace gfgen

#endif  // GFGEN_COMPONENTS_H_
