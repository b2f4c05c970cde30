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

#include "gfgen/rule_engine.h"

#include <cctype>
#include <sstream>

#include "gfgen/errors.h"

namespace gfgen {

namespace {

constexpr std::string_view kStructureProgram = R"(
structure(1,1) :- nsubj(V,S).
structure(1,1) :- nsubjpass(V,S).
structure(2,2) :- nsubj(V,S), dobj(V,O).
structure(3,3) :- nsubj(V1,S), xcomp(V1,V2), dobj(V2,O).
structure(4,2) :- nsubj(O,S), cop(O,TOBE).
structure(5,2) :- nsubjpass(V,S), auxpass(V,TOBE).
)";

constexpr std::string_view kMainComponentProgram = R"(
2 { sub(S); verb(V) }         :- nsubj(V,S).
3 { sub(S); obj(O); verb(V) } :- nsubj(V,S), dobj(V,O).
2 { sub(S); verb(V) }         :- nsubjpass(V,S), auxpass(V,TOBE).
4 { sub(S); obj(O); verb_1(V1); verb_2(V2) }
                              :- nsubj(V1,S), xcomp(V1,V2), dobj(V2,O).
2 { sub(S); adj(O) }          :- nsubj(O,S), pos_tag(O,jj).
2 { sub(S); obj(O) }          :- nsubj(O,S), pos_tag(O,nn).
2 { sub(S); obj(O) }          :- nsubj(O,S), pos_tag(O,nns).
2 { sub(S); obj(O) }          :- nsubj(O,S), pos_tag(O,cd).
)";

constexpr std::string_view kComplementProgram = R"(
noun_compound(N)        :- compound(pos,N).
adj_mod(JJ)             :- amod(pos,JJ).
noun_conjunction(N)     :- conj(pos,N).
preposition(COMP,IN)    :- nmod(pos,COMP), case(COMP,IN).
adverbial_modifier(ADV) :- advmod(pos,ADV).
)";

class RuleParser {
 public:
  RuleParser(std::string_view src) : src_(src) {}

  std::vector<Rule> parse() {
    std::vector<Rule> rules;
    skip_space();
    while (pos_ < src_.size()) {
      size_t start = pos_;
      Rule rule;
      rule.head = parse_head();
      skip_space();
      if (consume(":-")) {
        do {
          rule.body.push_back(parse_atom());
          skip_space();
        } while (consume(","));
      }
      expect(".");
      rule.source = collapse(src_.substr(start, pos_ - start));
      rules.push_back(std::move(rule));
      skip_space();
    }
    return rules;
  }

 private:
  [[noreturn]] void fail(const std::string &what) const {
    int line = 1;
    for (size_t i = 0; i < pos_ && i < src_.size(); ++i) line += src_[i] == '\n';
    throw ParseError(what, line);
  }

  static std::string collapse(std::string_view s) {
    std::string out;
    bool space = false;
    for (char c : s) {
      if (std::isspace(static_cast<unsigned char>(c))) {
        space = !out.empty();
      } else {
        if (space) out += ' ';
        out += c;
        space = false;
      }
    }
    return out;
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      if (std::isspace(static_cast<unsigned char>(src_[pos_]))) {
        ++pos_;
      } else if (src_[pos_] == '%') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  bool consume(std::string_view s) {
    skip_space();
    if (src_.substr(pos_, s.size()) == s) {
      pos_ += s.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view s) {
    if (!consume(s)) fail("expected '" + std::string(s) + "'");
  }

  std::string identifier() {
    skip_space();
    size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail("expected identifier");
    return std::string(src_.substr(start, pos_ - start));
  }

  PatternTerm parse_term() {
    std::string word = identifier();
    PatternTerm t;
    if (std::isdigit(static_cast<unsigned char>(word[0]))) {
      for (char c : word) {
        if (!std::isdigit(static_cast<unsigned char>(c))) fail("bad integer '" + word + "'");
      }
      t.value = static_cast<std::int64_t>(std::stoll(word));
    } else if (std::isupper(static_cast<unsigned char>(word[0]))) {
      t.is_variable = true;
      t.variable = word;
    } else {
      t.value = word;
    }
    return t;
  }

  PatternAtom parse_atom() {
    PatternAtom atom;
    atom.predicate = identifier();
    if (!std::islower(static_cast<unsigned char>(atom.predicate[0]))) {
      fail("predicate must start with a lowercase letter: " + atom.predicate);
    }
    if (consume("(")) {
      do {
        atom.args.push_back(parse_term());
      } while (consume(","));
      expect(")");
    }
    return atom;
  }

  std::vector<PatternAtom> parse_head() {
    skip_space();
    std::vector<PatternAtom> head;
    if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      std::string bound = identifier();
      expect("{");
      do {
        head.push_back(parse_atom());
      } while (consume(";"));
      expect("}");
      if (std::stoul(bound) != head.size()) {
        fail("choice head lower bound " + bound + " does not force all " +
             std::to_string(head.size()) + " atoms");
      }
      return head;
    }
    head.push_back(parse_atom());
    return head;
  }

  std::string_view src_;
  size_t pos_ = 0;
};

PatternTerm substitute_constant(const PatternTerm &t, const Bindings &constants) {
  if (t.is_variable) return t;
  if (const auto *sym = std::get_if<std::string>(&t.value)) {
    auto it = constants.find(*sym);
    if (it != constants.end()) {
      PatternTerm out;
      out.value = it->second;
      return out;
    }
  }
  return t;
}

using Index = std::map<std::string, std::vector<const Atom *>, std::less<>>;

bool unify(const PatternAtom &pattern, const Atom &atom, Bindings *bindings,
           std::vector<std::string> *added) {
  if (pattern.args.size() != atom.args.size()) return false;
  for (size_t i = 0; i < pattern.args.size(); ++i) {
    const PatternTerm &p = pattern.args[i];
    if (!p.is_variable) {
      if (p.value != atom.args[i]) return false;
      continue;
    }
    auto it = bindings->find(p.variable);
    if (it != bindings->end()) {
      if (it->second != atom.args[i]) return false;
    } else {
      bindings->emplace(p.variable, atom.args[i]);
      added->push_back(p.variable);
    }
  }
  return true;
}

void match_body(const std::vector<PatternAtom> &body, size_t i, const Index &index,
                Bindings *bindings, std::vector<Bindings> *out) {
  if (i == body.size()) {
    out->push_back(*bindings);
    return;
  }
  auto it = index.find(body[i].predicate);
  if (it == index.end()) return;
  for (const Atom *atom : it->second) {
    std::vector<std::string> added;
    if (unify(body[i], *atom, bindings, &added)) {
      match_body(body, i + 1, index, bindings, out);
    }
    for (const auto &v : added) bindings->erase(v);
  }
}

Atom instantiate(const PatternAtom &pattern, const Bindings &bindings) {
  Atom atom;
  atom.predicate = pattern.predicate;
  for (const auto &t : pattern.args) {
    atom.args.push_back(t.is_variable ? bindings.at(t.variable) : t.value);
  }
  return atom;
}

}  // namespace

std::string Atom::to_string() const {
  std::ostringstream out;
  out << predicate;
  if (!args.empty()) {
    out << '(';
    for (size_t i = 0; i < args.size(); ++i) {
      if (i) out << ',';
      std::visit([&](const auto &v) { out << v; }, args[i]);
    }
    out << ')';
  }
  return out.str();
}

Program parse_program(std::string_view source, std::string name) {
  Program p;
  p.name = std::move(name);
  p.rules = RuleParser(source).parse();
  for (const auto &rule : p.rules) {
    for (const auto &h : rule.head) {
      for (const auto &t : h.args) {
        if (!t.is_variable) continue;
        bool bound = false;
        for (const auto &b : rule.body) {
          for (const auto &bt : b.args) bound |= bt.is_variable && bt.variable == t.variable;
        }
        if (!bound) throw ParseError("unsafe variable " + t.variable + " in: " + rule.source, 0);
      }
    }
  }
  return p;
}

const Program &program(RuleFamily family) {
  static const Program kStructures = parse_program(kStructureProgram, "structures");
  static const Program kMain = parse_program(kMainComponentProgram, "main_components");
  static const Program kComplements = parse_program(kComplementProgram, "complements");
  switch (family) {
    case RuleFamily::kStructures:
      return kStructures;
    case RuleFamily::kMainComponents:
      return kMain;
    case RuleFamily::kComplements:
      return kComplements;
  }
  return kStructures;
}

Derivation derive_with_firings(const Model &facts, const Program &program,
                               const Bindings &constants,
                               const std::vector<size_t> &rule_subset) {
  std::vector<size_t> active = rule_subset;
  if (active.empty()) {
    for (size_t i = 0; i < program.rules.size(); ++i) active.push_back(i);
  }
  std::vector<Rule> rules;
  for (size_t r : active) {
    Rule rule = program.rules.at(r);
    for (auto &atom : rule.body) {
      for (auto &t : atom.args) t = substitute_constant(t, constants);
    }
    for (auto &atom : rule.head) {
      for (auto &t : atom.args) t = substitute_constant(t, constants);
    }
    rules.push_back(std::move(rule));
  }

  Model all = facts;
  Derivation result;
  std::set<std::pair<size_t, Bindings>> seen;
  bool changed = true;
  while (changed) {
    changed = false;
    Index index;
    for (const auto &a : all) index[a.predicate].push_back(&a);
    std::vector<Atom> fresh;
    for (size_t k = 0; k < rules.size(); ++k) {
      std::vector<Bindings> matches;
      Bindings scratch;
      match_body(rules[k].body, 0, index, &scratch, &matches);
      for (auto &b : matches) {
        if (!seen.emplace(active[k], b).second) continue;
        for (const auto &h : rules[k].head) fresh.push_back(instantiate(h, b));
        result.firings.push_back({active[k], std::move(b)});
      }
    }
    for (auto &a : fresh) {
      if (all.insert(a).second) {
        if (!facts.count(a)) result.atoms.insert(a);
        changed = true;
      }
    }
  }
  return result;
}

Model derive(const Model &facts, const Program &program, const Bindings &constants) {
  return derive_with_firings(facts, program, constants).atoms;
}

Model facts_from_sentence(const SentenceFacts &facts) {
  Model model;
  for (const auto &d : facts.deps) {
    model.insert(Atom{canonical_relation(d.relation),
                      {static_cast<std::int64_t>(d.head), static_cast<std::int64_t>(d.dependent)}});
  }
  for (const auto &t : facts.tokens) {
    model.insert(Atom{"pos_tag", {static_cast<std::int64_t>(t.index), t.pos}});
  }
  return model;
}

std::string model_to_text(const Model &model) {
  std::string out;
  for (const auto &a : model) out += a.to_string() + ".\n";
  return out;
}

}  // namespace gfgen
