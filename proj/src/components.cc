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

#include "gfgen/components.h"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

#include "gfgen/errors.h"
#include "gfgen/rule_engine.h"

namespace gfgen {

namespace {

// Rule indices of the main-component program per structure kind, and the
// variable whose token anchors the clause.
struct KindRules {
  std::vector<size_t> rules;
  const char *anchor;
};

KindRules rules_for(int kind) {
  switch (kind) {
    case 1: return {{0}, "V"};
    case 2: return {{1}, "V"};
    case 5: return {{2}, "V"};
    case 3: return {{3}, "V1"};
    case 4: return {{4, 5, 6, 7}, "O"};
  }
  return {{}, "V"};
}

int as_index(const Term &t) { return static_cast<int>(std::get<std::int64_t>(t)); }

// The copular head nearest the root, for error reporting.
std::optional<int> copular_head(const SentenceFacts &facts) {
  std::optional<int> best;
  for (const auto &d : facts.deps) {
    if (canonical_relation(d.relation) != "nsubj") continue;
    bool has_cop = std::any_of(facts.deps.begin(), facts.deps.end(), [&](const auto &c) {
      return c.head == d.head && canonical_relation(c.relation) == "cop";
    });
    if (!has_cop) continue;
    if (!best || facts.depth_of(d.head) < facts.depth_of(*best)) best = d.head;
  }
  return best;
}

void expand(const SentenceFacts &facts, Chunk *chunk, std::set<int> *visited) {
  for (const auto &link : complements(facts, chunk->head)) {
    if (!visited->insert(link.dependent).second) continue;
    Chunk::Member member{link, Chunk{link.dependent, {}}};
    expand(facts, &member.chunk, visited);
    chunk->attachments.push_back(std::move(member));
  }
}

}  // namespace

std::vector<std::pair<std::string, int>> ComponentMap::roles() const {
  std::vector<std::pair<std::string, int>> out;
  auto add = [&](const char *name, const std::optional<int> &v) {
    if (v) out.emplace_back(name, *v);
  };
  add("sub", sub);
  add("verb", verb);
  add("verb_1", verb_1);
  add("verb_2", verb_2);
  add("obj", obj);
  add("adj", adj);
  return out;
}

std::string complement_kind_name(ComplementKind kind) {
  switch (kind) {
    case ComplementKind::kNounCompound: return "noun_compound";
    case ComplementKind::kAdjMod: return "adj_mod";
    case ComplementKind::kNounConjunction: return "noun_conjunction";
    case ComplementKind::kPreposition: return "preposition";
    case ComplementKind::kAdverbialModifier: return "adverbial_modifier";
  }
  return "";
}

ComponentMap main_components(const SentenceFacts &facts, const StructureAtom &structure) {
  KindRules kr = rules_for(structure.kind);
  if (kr.rules.empty()) {
    throw CategoryError("no main-component rules for " + structure.to_string());
  }
  Derivation d = derive_with_firings(facts_from_sentence(facts),
                                     program(RuleFamily::kMainComponents), {}, kr.rules);
  const Firing *best = nullptr;
  auto key = [&](const Firing &f) {
    int anchor = as_index(f.bindings.at(kr.anchor));
    return std::make_pair(facts.depth_of(anchor), anchor);
  };
  for (const auto &f : d.firings) {
    if (!best || key(f) < key(*best)) best = &f;
  }
  if (!best) {
    if (structure.kind == 4) {
      auto head = copular_head(facts);
      std::string tag = head ? facts.token(*head).pos : "?";
      throw CategoryError("unsupported copular complement: pos_tag " + tag);
    }
    throw CategoryError("no main components found for " + structure.to_string());
  }

  ComponentMap m;
  m.structure = structure;
  const Rule &rule = program(RuleFamily::kMainComponents).rules[best->rule];
  for (const auto &h : rule.head) {
    int token = as_index(best->bindings.at(h.args.at(0).variable));
    if (h.predicate == "sub") m.sub = token;
    else if (h.predicate == "verb") m.verb = token;
    else if (h.predicate == "verb_1") m.verb_1 = token;
    else if (h.predicate == "verb_2") m.verb_2 = token;
    else if (h.predicate == "obj") m.obj = token;
    else if (h.predicate == "adj") m.adj = token;
  }
  return m;
}

std::vector<ComplementAttachment> complements(const SentenceFacts &facts, int pos) {
  Model model = derive(facts_from_sentence(facts), program(RuleFamily::kComplements),
                       {{"pos", Term{static_cast<std::int64_t>(pos)}}});
  std::vector<ComplementAttachment> out;
  for (const auto &atom : model) {
    ComplementAttachment a;
    a.host = pos;
    a.dependent = as_index(atom.args.at(0));
    if (atom.predicate == "noun_compound") a.kind = ComplementKind::kNounCompound;
    else if (atom.predicate == "adj_mod") a.kind = ComplementKind::kAdjMod;
    else if (atom.predicate == "noun_conjunction") a.kind = ComplementKind::kNounConjunction;
    else if (atom.predicate == "adverbial_modifier") a.kind = ComplementKind::kAdverbialModifier;
    else if (atom.predicate == "preposition") {
      a.kind = ComplementKind::kPreposition;
      a.case_marker = as_index(atom.args.at(1));
    } else {
      continue;
    }
    out.push_back(a);
  }
  // One attachment per dependent: a noun with two case markers keeps the
  // first marker.
  std::sort(out.begin(), out.end(), [](const auto &x, const auto &y) {
    return std::tie(x.dependent, x.case_marker) < std::tie(y.dependent, y.case_marker);
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const auto &x, const auto &y) {
                          return x.dependent == y.dependent && x.kind == y.kind;
                        }),
            out.end());
  for (auto &a : out) {
    if (a.kind != ComplementKind::kNounConjunction) continue;
    // UD v2 attaches cc to the conjunct, older schemes to the first one.
    for (int owner : {a.dependent, a.host}) {
      for (const auto &d : facts.deps) {
        if (d.head == owner && canonical_relation(d.relation) == "cc") {
          a.coordinator = d.dependent;
          break;
        }
      }
      if (a.coordinator) break;
    }
  }
  return out;
}

Chunk build_chunk(const SentenceFacts &facts, int head) {
  Chunk chunk{head, {}};
  std::set<int> visited{head};
  expand(facts, &chunk, &visited);
  return chunk;
}

std::vector<int> chunk_tokens(const Chunk &chunk) {
  std::vector<int> out;
  std::function<void(const Chunk &)> walk = [&](const Chunk &c) {
    out.push_back(c.head);
    for (const auto &m : c.attachments) walk(m.chunk);
  };
  walk(chunk);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gfgen
