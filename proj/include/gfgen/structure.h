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

#ifndef GFGEN_STRUCTURE_H_
#define GFGEN_STRUCTURE_H_

#include <optional>
#include <set>
#include <string>

#include "gfgen/ingest.h"

namespace gfgen {

// A recognized sentence pattern. `kind` is 1..5, `i_value` the number of
// dependency relations the recognizing rule consumes.
struct StructureAtom {
  int kind = 0;
  int i_value = 0;

  auto operator<=>(const StructureAtom &) const = default;
  bool operator==(const StructureAtom &) const = default;
  std::string to_string() const;
};

// Runs the structure program over the sentence's facts.
std::set<StructureAtom> recognize(const SentenceFacts &facts);

// The most informative structure: highest i-value, ties broken by kind
// priority 3 > 2 > 5 > 4 > 1. Empty input means the sentence is
// unrecognized.
std::optional<StructureAtom> select(const std::set<StructureAtom> &structures);

}  // namespace gfgen

#endif  // GFGEN_STRUCTURE_H_
