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

#include "gfgen/linearizer.h"

#include <map>
#include <sstream>
#include <vector>

#include "gfgen/errors.h"
#include "gfgen/gf_reader.h"
#include "gfgen/morphology.h"

namespace gfgen {

namespace {

struct Verb {
  std::string base, s3, past, participle, present_participle;
  bool copula = false;
};

Verb regular_verb(const std::string &lemma) {
  Verb v{lemma, inflect_verb_3sg(lemma), past_tense(lemma), past_participle(lemma),
         present_participle(lemma), lemma == "be"};
  return v;
}

Verb copula() { return regular_verb("be"); }

// Phrase value; which fields are meaningful depends on `cat`.
struct Value {
  std::string cat;
  std::string s;             // A AP AdA Adv Prep Conj PN Str Cl
  std::string sg, pl;        // N CN
  std::string nom, acc;      // NP
  bool plural = false;       // NP
  int person = 3;            // NP
  Verb verb;                 // V V2 VV VP
  std::string tail;          // VP: everything after the finite verb
  std::vector<Value> items;  // ListNP
};

Value text_value(std::string cat, std::string s) {
  Value v;
  v.cat = std::move(cat);
  v.s = std::move(s);
  return v;
}

Value opaque_np(const std::string &text) {
  Value v;
  v.cat = "NP";
  v.nom = v.acc = text;
  return v;
}

std::string join(const std::string &a, const std::string &b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  return a + " " + b;
}

std::string finite(const Verb &v, const Value &subject) {
  if (v.copula) {
    if (subject.plural || subject.person == 2) return "are";
    return subject.person == 1 ? "am" : "is";
  }
  return !subject.plural && subject.person == 3 ? v.s3 : v.base;
}

std::string infinitive(const Value &vp) { return join(vp.verb.base, vp.tail); }

Value pronoun(const std::string &name) {
  struct P {
    const char *nom, *acc;
    bool plural;
    int person;
  };
  static const std::map<std::string, P> kPronouns = {
      {"i_Pron", {"I", "me", false, 1}},       {"youSg_Pron", {"you", "you", false, 2}},
      {"youPl_Pron", {"you", "you", true, 2}}, {"he_Pron", {"he", "him", false, 3}},
      {"she_Pron", {"she", "her", false, 3}},  {"it_Pron", {"it", "it", false, 3}},
      {"we_Pron", {"we", "us", true, 1}},      {"they_Pron", {"they", "them", true, 3}},
  };
  const P &p = kPronouns.at(name);
  Value v;
  v.cat = "Pron";
  v.nom = p.nom;
  v.acc = p.acc;
  v.plural = p.plural;
  v.person = p.person;
  return v;
}

std::string library_word(const std::string &name) { return name.substr(0, name.rfind('_')); }

class Evaluator {
 public:
  explicit Evaluator(const Grammar &g) : g_(g) {}

  Value tree(const Expr &t);

 private:
  using Env = std::map<std::string, Value>;

  Value eval(const Expr &e, const Env &env);
  Value reference(const std::string &name, const Env &env);
  Value apply(const Expr &e, std::vector<Value> args);

  const Grammar &g_;
  std::map<std::string, Value> oper_cache_;
  std::vector<std::string> oper_stack_;
};

std::string categories_of(const std::vector<Value> &args) {
  std::string out;
  for (const auto &a : args) out += " " + a.cat;
  return out;
}

Value Evaluator::tree(const Expr &t) {
  if (t.kind == Expr::Kind::kString) return opaque_np(t.head);
  auto it = g_.functions.find(t.head);
  if (it == g_.functions.end()) throw LookupError("unknown function '" + t.head + "'");
  const GfFunction &fn = it->second;
  if (t.args.size() != fn.arg_categories.size()) {
    throw TypeError("function " + fn.name + " takes " + std::to_string(fn.arg_categories.size()) +
                    " arguments, got " + std::to_string(t.args.size()));
  }
  if (fn.params.size() != fn.arg_categories.size()) {
    throw TypeError("function " + fn.name + " has no usable linearization");
  }
  Env env;
  for (size_t i = 0; i < t.args.size(); ++i) {
    Value v = tree(t.args[i]);
    auto lc = g_.lincats.find(fn.arg_categories[i]);
    std::string want = lc == g_.lincats.end() ? "" : lc->second;
    bool ok = want.empty() || v.cat == want || (want == "NP" && v.cat == "Pron");
    if (!ok) {
      throw TypeError("argument " + std::to_string(i + 1) + " of " + fn.name + " is " + v.cat +
                      ", expected " + want);
    }
    env[fn.params[i]] = std::move(v);
  }
  return eval(fn.linearization, env);
}

Value Evaluator::reference(const std::string &name, const Env &env) {
  if (auto it = env.find(name); it != env.end()) return it->second;
  if (auto it = oper_cache_.find(name); it != oper_cache_.end()) return it->second;
  if (auto it = g_.opers.find(name); it != g_.opers.end()) {
    for (const auto &active : oper_stack_) {
      if (active == name) throw TypeError("oper " + name + " is defined in terms of itself");
    }
    oper_stack_.push_back(name);
    Value v = eval(it->second.definition, {});
    oper_stack_.pop_back();
    oper_cache_[name] = v;
    return v;
  }
  if (auto cat = library_constant_category(name)) {
    if (*cat == "Pron") return pronoun(name);
    return text_value(*cat, library_word(name));
  }
  // A zero-argument abstract function used inside a linearization.
  if (auto it = g_.functions.find(name); it != g_.functions.end() && it->second.params.empty()) {
    return tree(Expr::ref(name));
  }
  throw LookupError("unknown name '" + name + "'");
}

Value Evaluator::eval(const Expr &e, const Env &env) {
  switch (e.kind) {
    case Expr::Kind::kString:
      return text_value("Str", e.head);
    case Expr::Kind::kRef:
      return reference(e.head, env);
    case Expr::Kind::kApp:
      break;
  }
  std::vector<Value> args;
  for (const auto &a : e.args) args.push_back(eval(a, env));
  return apply(e, std::move(args));
}

Value Evaluator::apply(const Expr &e, std::vector<Value> a) {
  const std::string fn(unqualified(e.head));
  auto sig = [&](std::initializer_list<const char *> cats) {
    if (a.size() != cats.size()) return false;
    size_t i = 0;
    for (const char *c : cats) {
      if (a[i++].cat != c) return false;
    }
    return true;
  };
  Value v;
  if (fn == "mkN") {
    if (sig({"Str"})) {
      v.cat = "N";
      v.sg = a[0].s;
      v.pl = pluralize_noun(a[0].s);
      return v;
    }
    if (sig({"Str", "Str"})) {
      v.cat = "N";
      v.sg = a[0].s;
      v.pl = a[1].s;
      return v;
    }
  } else if (fn == "mkPN" && sig({"Str"})) {
    return text_value("PN", a[0].s);
  } else if ((fn == "mkA" || fn == "mkAdA" || fn == "mkPrep" || fn == "mkConj") &&
             sig({"Str"})) {
    return text_value(fn.substr(2), a[0].s);
  } else if (fn == "mkAdv") {
    if (sig({"Str"})) return text_value("Adv", a[0].s);
    if (sig({"Prep", "NP"})) return text_value("Adv", join(a[0].s, a[1].acc));
  } else if (fn == "mkV" || fn == "mkV2" || fn == "mkVV") {
    std::string cat = fn.substr(2);
    if (sig({"Str"})) {
      v.cat = cat;
      v.verb = regular_verb(a[0].s);
      return v;
    }
    if (fn == "mkV" && sig({"Str", "Str", "Str", "Str", "Str"})) {
      v.cat = "V";
      v.verb = Verb{a[0].s, a[1].s, a[2].s, a[3].s, a[4].s, a[0].s == "be"};
      return v;
    }
    if (fn != "mkV" && sig({"V"})) {
      v = a[0];
      v.cat = cat;
      return v;
    }
  } else if (fn == "mkAP") {
    if (sig({"A"})) return text_value("AP", a[0].s);
    if (sig({"AdA", "AP"}) || sig({"AdA", "A"})) return text_value("AP", join(a[0].s, a[1].s));
  } else if (fn == "mkCN") {
    if (sig({"N"})) {
      v = a[0];
      v.cat = "CN";
      return v;
    }
    if (sig({"AP", "CN"}) || sig({"AP", "N"}) || sig({"A", "N"}) || sig({"A", "CN"})) {
      v.cat = "CN";
      v.sg = join(a[0].s, a[1].sg);
      v.pl = join(a[0].s, a[1].pl);
      return v;
    }
    if (sig({"CN", "Adv"})) {
      v.cat = "CN";
      v.sg = join(a[0].sg, a[1].s);
      v.pl = join(a[0].pl, a[1].s);
      return v;
    }
  } else if (fn == "mkNP") {
    if (sig({"N"}) || sig({"CN"})) {
      v.cat = "NP";
      v.plural = e.number == Number::kPlural;
      v.nom = v.acc = v.plural ? a[0].pl : a[0].sg;
      return v;
    }
    if (sig({"PN"})) return opaque_np(a[0].s);
    if (sig({"Pron"})) {
      v = a[0];
      v.cat = "NP";
      return v;
    }
    if (sig({"NP", "Adv"})) {
      v = a[0];
      v.nom = join(v.nom, a[1].s);
      v.acc = join(v.acc, a[1].s);
      return v;
    }
    if (sig({"Conj", "ListNP"})) {
      const auto &items = a[1].items;
      auto coordinate = [&](std::string Value::*form) {
        std::string out;
        for (size_t i = 0; i < items.size(); ++i) {
          if (i + 1 == items.size()) {
            out = join(out, a[0].s);
          } else if (i > 0) {
            out += ",";
          }
          out = join(out, items[i].*form);
        }
        return out;
      };
      v.cat = "NP";
      v.nom = coordinate(&Value::nom);
      v.acc = coordinate(&Value::acc);
      v.plural = a[0].s == "and" || items.back().plural;
      v.person = 3;
      for (const auto &item : items) v.person = std::min(v.person, item.person);
      return v;
    }
  } else if (fn == "mkListNP") {
    if (sig({"NP", "NP"})) {
      v.cat = "ListNP";
      v.items = {a[0], a[1]};
      return v;
    }
    if (sig({"NP", "ListNP"})) {
      v = a[1];
      v.items.insert(v.items.begin(), a[0]);
      return v;
    }
  } else if (fn == "mkVP") {
    v.cat = "VP";
    if (sig({"V"})) {
      v.verb = a[0].verb;
      return v;
    }
    if (sig({"V2", "NP"})) {
      v.verb = a[0].verb;
      v.tail = a[1].acc;
      return v;
    }
    if (sig({"VV", "VP"})) {
      v.verb = a[0].verb;
      v.tail = "to " + infinitive(a[1]);
      return v;
    }
    if (sig({"VP", "Adv"})) {
      v = a[0];
      v.tail = join(v.tail, a[1].s);
      return v;
    }
    if (sig({"AP"}) || sig({"Adv"})) {
      v.verb = copula();
      v.tail = a[0].s;
      return v;
    }
    if (sig({"NP"})) {
      v.verb = copula();
      v.tail = a[0].acc;
      return v;
    }
  } else if (fn == "passiveVP") {
    v.cat = "VP";
    v.verb = copula();
    if (sig({"V2"})) {
      v.tail = a[0].verb.participle;
      return v;
    }
    if (sig({"V2", "NP"})) {
      v.tail = a[0].verb.participle + " by " + a[1].acc;
      return v;
    }
  } else if (fn == "mkCl") {
    if (!a.empty() && (a[0].cat == "NP")) {
      const Value &subject = a[0];
      Value vp;
      if (sig({"NP", "VP"})) {
        vp = a[1];
      } else if (sig({"NP", "V"})) {
        vp.verb = a[1].verb;
      } else if (sig({"NP", "V2", "NP"})) {
        vp.verb = a[1].verb;
        vp.tail = a[2].acc;
      } else if (sig({"NP", "AP"}) || sig({"NP", "A"}) || sig({"NP", "Adv"})) {
        vp.verb = copula();
        vp.tail = a[1].s;
      } else if (sig({"NP", "NP"})) {
        vp.verb = copula();
        vp.tail = a[1].nom;
      } else {
        throw TypeError("no overload of mkCl takes" + categories_of(a));
      }
      return text_value("Cl", join(join(subject.nom, finite(vp.verb, subject)), vp.tail));
    }
  } else {
    throw TypeError("unknown constructor '" + e.head + "'");
  }
  throw TypeError("no overload of " + fn + " takes" + categories_of(a));
}

std::string surface(const Value &v) {
  if (v.cat == "NP" || v.cat == "Pron") return v.nom;
  if (v.cat == "N" || v.cat == "CN") return v.sg;
  if (v.cat == "V" || v.cat == "V2" || v.cat == "VV") return v.verb.base;
  if (v.cat == "VP") return infinitive(v);
  return v.s;
}

std::string normalize_spaces(const std::string &s) {
  std::istringstream in(s);
  std::string word, out;
  while (in >> word) out = join(out, word);
  return out;
}

}  // namespace

std::string linearize(const Grammar &g, const Expr &tree) {
  Evaluator ev(g);
  return normalize_spaces(surface(ev.tree(tree)));
}

std::string linearize(const Grammar &g, std::string_view tree) {
  return linearize(g, parse_expr(tree));
}

}  // namespace gfgen
