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

#include "gfgen/structure.h"

#include "gfgen/rule_engine.h"

namespace gfgen {

namespace {

int tie_rank(int kind) {
  switch (kind) {
    case 3: return 5;
    case 2: return 4;
    case 5: return 3;
    case 4: return 2;
    case 1: return 1;
  }
  return 0;
}

}  // namespace

std::string StructureAtom::to_string() const {
  return "structure(" + std::to_string(kind) + "," + std::to_string(i_value) + ")";
}

std::set<StructureAtom> recognize(const SentenceFacts &facts) {
  std::set<StructureAtom> out;
  Model model = derive(facts_from_sentence(facts), program(RuleFamily::kStructures));
  for (const auto &atom : model) {
    if (atom.predicate != "structure" || atom.args.size() != 2) continue;
    out.insert({static_cast<int>(std::get<std::int64_t>(atom.args[0])),
                static_cast<int>(std::get<std::int64_t>(atom.args[1]))});
  }
  return out;
}

std::optional<StructureAtom> select(const std::set<StructureAtom> &structures) {
  std::optional<StructureAtom> best;
  for (const auto &s : structures) {
    if (!best || s.i_value > best->i_value ||
        (s.i_value == best->i_value && tie_rank(s.kind) > tie_rank(best->kind))) {
      best = s;
    }
  }
  return best;
}

}  // namespace gfgen
