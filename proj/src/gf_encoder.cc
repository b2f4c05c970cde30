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

#include "gfgen/gf_encoder.h"

#include <algorithm>
#include <cctype>
#include <set>

#include "gfgen/errors.h"
#include "gfgen/morphology.h"

namespace gfgen {

namespace {

using Member = Chunk::Member;

std::string lower(std::string_view s) {
  std::string out(s);
  for (char &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool is_proper_tag(const std::string &pos) { return pos == "nnp" || pos == "nnps"; }

// Word form with the sentence-initial capital removed from common words.
std::string running_form(const Token &t, const std::string &form) {
  if (t.index != 1 || is_proper_tag(t.pos) || form.empty()) return form;
  std::string out = form;
  out[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(out[0])));
  return out;
}

const std::map<std::string, std::string, std::less<>> &pronoun_constants() {
  static const std::map<std::string, std::string, std::less<>> kPronouns = {
      {"i", "i_Pron"},     {"me", "i_Pron"},    {"you", "youSg_Pron"}, {"he", "he_Pron"},
      {"him", "he_Pron"},  {"she", "she_Pron"}, {"her", "she_Pron"},   {"it", "it_Pron"},
      {"we", "we_Pron"},   {"us", "we_Pron"},   {"they", "they_Pron"}, {"them", "they_Pron"},
  };
  return kPronouns;
}

std::optional<std::string> pronoun_constant(const Token &t) {
  if (t.pos != "prp") return std::nullopt;
  auto it = pronoun_constants().find(lower(t.surface));
  if (it == pronoun_constants().end()) return std::nullopt;
  return it->second;
}

bool is_nominal(const Token &t) {
  static const std::set<std::string, std::less<>> kTags = {"nn", "nns", "nnp", "nnps", "cd", "prp"};
  return kTags.count(t.pos) > 0;
}

bool is_proper(const Token &t) {
  if (is_proper_tag(t.pos) || t.pos == "cd") return true;
  return t.pos == "prp" && !t.surface.empty() &&
         std::isupper(static_cast<unsigned char>(t.surface[0]));
}

const std::set<std::string, std::less<>> &reserved_names() {
  static const std::set<std::string, std::less<>> kReserved = {
      "Message", "Symbol", "Cl", "NP", "VP", "V",    "V2",   "VV",     "CN",  "AP",
      "A",       "N",      "PN", "Adv", "AdA", "Prep", "Conj", "ListNP", "Pron", "Str"};
  return kReserved;
}

class Encoder {
 public:
  Encoder(const SentenceFacts &facts, const EncodeOptions &options)
      : facts_(facts), options_(options) {}

  Expr np(const Chunk &chunk);
  Expr ap_inline(const Chunk &chunk);
  Expr vp(const StructureAtom &structure, const std::vector<Chunk> &verbs, const Expr *object);
  Expr component(Expr expr, const Token &head, const std::string &category);

  std::vector<GfOper> created() const {
    std::vector<GfOper> out;
    for (const auto &name : order_) out.push_back(set_.opers().at(name));
    return out;
  }
  const OperSet &set() const { return set_; }

 private:
  std::string add(const std::string &name, const std::string &category, Expr def) {
    std::string final_name = set_.add(name, category, std::move(def));
    if (std::find(order_.begin(), order_.end(), final_name) == order_.end()) {
      order_.push_back(final_name);
    }
    return final_name;
  }

  bool is_slot(int index) const { return options_.slot_params.count(index) > 0; }
  bool mentions_slot(const Expr &e) const {
    std::set<std::string> refs;
    collect_refs(e, &refs);
    for (const auto &[index, param] : options_.slot_params) {
      if (refs.count(param)) return true;
    }
    return false;
  }

  // Returns (oper name, stem) of the multiword noun.
  std::pair<std::string, std::string> noun(const std::vector<int> &words, int head);
  // Returns (oper name, stem) of the named AP built for an adjective chunk.
  std::pair<std::string, std::string> named_ap(const Chunk &adjective);
  std::string adjective(const Token &t);
  std::string adverb(const Token &t, const char *category);
  Expr preposition(int case_marker);
  Expr conjunction(int coordinator);
  std::string verb(const Token &t, const std::string &category);
  Expr wrap_vp(Expr vp, const Chunk &verb_chunk);

  const SentenceFacts &facts_;
  const EncodeOptions &options_;
  OperSet set_;
  std::vector<std::string> order_;
};

void collect_compounds(const Chunk &chunk, std::vector<int> *words,
                       std::vector<const Member *> *others) {
  for (const auto &m : chunk.attachments) {
    if (m.link.kind == ComplementKind::kNounCompound) {
      words->push_back(m.chunk.head);
      collect_compounds(m.chunk, words, others);
    } else {
      others->push_back(&m);
    }
  }
}

std::vector<const Member *> of_kind(const std::vector<const Member *> &members,
                                    ComplementKind kind) {
  std::vector<const Member *> out;
  for (const Member *m : members) {
    if (m->link.kind == kind) out.push_back(m);
  }
  return out;
}

std::pair<std::string, std::string> Encoder::noun(const std::vector<int> &words, int head) {
  const Token &h = facts_.token(head);
  std::string singular, plural;
  for (int w : words) {
    if (w == head) continue;
    const Token &t = facts_.token(w);
    std::string form = running_form(t, t.surface);
    singular += form + " ";
  }
  plural = singular;
  if (is_proper(h)) {
    singular += h.surface;
    plural += h.surface;
  } else {
    std::string lemma = h.has_lemma ? h.lemma
                        : h.pos == "nns" ? singularize_noun(lower(h.surface))
                                         : h.surface;
    lemma = running_form(h, lemma);
    singular += lemma;
    plural = h.pos == "nns" ? plural + running_form(h, h.surface) : pluralize_noun(singular);
  }
  std::string stem = identifier_stem(singular);
  std::string name =
      add(stem + "_N", "N", Expr::app("mkN", {Expr::str(singular), Expr::str(plural)}));
  return {name, stem};
}

std::string Encoder::adjective(const Token &t) {
  std::string form = t.pos == "jj" && t.has_lemma ? t.lemma : running_form(t, t.surface);
  return add(identifier_stem(form) + "_A", "A", Expr::app("mkA", {Expr::str(form)}));
}

std::string Encoder::adverb(const Token &t, const char *category) {
  std::string form = lower(t.surface);
  std::string cat(category);
  return add(identifier_stem(form) + "_" + cat, cat, Expr::app("mk" + cat, {Expr::str(form)}));
}

std::pair<std::string, std::string> Encoder::named_ap(const Chunk &adjective_chunk) {
  const Token &t = facts_.token(adjective_chunk.head);
  std::string a = adjective(t);
  std::string stem = a.substr(0, a.size() - 2);
  std::string ap = add(stem + "_AP", "AP", Expr::app("mkAP", {Expr::ref(a)}));
  std::vector<const Member *> advs;
  for (const auto &m : adjective_chunk.attachments) {
    if (m.link.kind == ComplementKind::kAdverbialModifier) advs.push_back(&m);
  }
  for (auto it = advs.rbegin(); it != advs.rend(); ++it) {
    std::string ada = adverb(facts_.token((*it)->chunk.head), "AdA");
    std::string ada_stem = ada.substr(0, ada.size() - 4);
    stem = ada_stem + "_" + stem;
    ap = add(stem + "_AP", "AP", Expr::app("mkAP", {Expr::ref(ada), Expr::ref(ap)}));
  }
  return {ap, stem};
}

Expr Encoder::ap_inline(const Chunk &chunk) {
  const Token &t = facts_.token(chunk.head);
  Expr ap = Expr::app("mkAP", {Expr::ref(adjective(t))});
  std::vector<const Member *> advs;
  for (const auto &m : chunk.attachments) {
    if (m.link.kind == ComplementKind::kAdverbialModifier) advs.push_back(&m);
  }
  for (auto it = advs.rbegin(); it != advs.rend(); ++it) {
    ap = Expr::app("mkAP", {Expr::ref(adverb(facts_.token((*it)->chunk.head), "AdA")), ap});
  }
  return ap;
}

Expr Encoder::preposition(int case_marker) {
  std::string word = lower(facts_.token(case_marker).surface);
  std::string name = identifier_stem(word) + "_Prep";
  if (library_constant_category(name)) return Expr::ref(name);
  return Expr::ref(add(name, "Prep", Expr::app("mkPrep", {Expr::str(word)})));
}

Expr Encoder::conjunction(int coordinator) {
  std::string word = coordinator ? lower(facts_.token(coordinator).surface) : "and";
  std::string name = identifier_stem(word) + "_Conj";
  if (library_constant_category(name)) return Expr::ref(name);
  return Expr::ref(add(name, "Conj", Expr::app("mkConj", {Expr::str(word)})));
}

Expr Encoder::np(const Chunk &chunk) {
  const Token &head = facts_.token(chunk.head);
  if (is_slot(chunk.head)) return Expr::ref(options_.slot_params.at(chunk.head));

  Expr base;
  std::vector<const Member *> rest;
  if (auto pron = pronoun_constant(head)) {
    base = Expr::app("mkNP", {Expr::ref(*pron)});
    for (const auto &m : chunk.attachments) rest.push_back(&m);
  } else {
    if (!is_nominal(head)) {
      throw CategoryError("token '" + head.surface + "' (" + head.pos +
                          ") cannot head a noun phrase");
    }
    std::vector<int> words;
    collect_compounds(chunk, &words, &rest);
    words.push_back(chunk.head);
    std::sort(words.begin(), words.end());
    std::sort(rest.begin(), rest.end(), [](const Member *a, const Member *b) {
      return a->link.dependent < b->link.dependent;
    });
    auto [core_name, stem] = noun(words, chunk.head);
    Expr core = Expr::ref(core_name);
    auto adjectives = of_kind(rest, ComplementKind::kAdjMod);
    for (auto it = adjectives.rbegin(); it != adjectives.rend(); ++it) {
      auto [ap, ap_stem] = named_ap((*it)->chunk);
      stem = ap_stem + "_" + stem;
      core = Expr::ref(add(stem + "_CN", "CN", Expr::app("mkCN", {Expr::ref(ap), core})));
    }
    base = Expr::app("mkNP", {core});
    if (head.pos == "nns" || head.pos == "nnps") base.number = Number::kPlural;
  }

  for (const Member *m : of_kind(rest, ComplementKind::kAdverbialModifier)) {
    base = Expr::app("mkNP", {base, Expr::ref(adverb(facts_.token(m->chunk.head), "Adv"))});
  }
  for (const Member *m : of_kind(rest, ComplementKind::kPreposition)) {
    Expr adv = Expr::app("ConstructorsEng.mkAdv", {preposition(m->link.case_marker), np(m->chunk)});
    base = Expr::app("mkNP", {base, adv});
  }
  auto conjuncts = of_kind(rest, ComplementKind::kNounConjunction);
  if (!conjuncts.empty()) {
    std::vector<Expr> items{base};
    int coordinator = 0;
    for (const Member *m : conjuncts) {
      items.push_back(np(m->chunk));
      if (!coordinator) coordinator = m->link.coordinator;
    }
    Expr list = Expr::app("mkListNP", {items[items.size() - 2], items.back()});
    for (size_t i = items.size() - 2; i-- > 0;) {
      list = Expr::app("mkListNP", {items[i], list});
    }
    base = Expr::app("mkNP", {conjunction(coordinator), list});
  }
  return base;
}

std::string Encoder::verb(const Token &t, const std::string &category) {
  std::string lemma = t.has_lemma ? lower(t.lemma)
                      : t.pos == "vbz" ? verb_lemma_from_3sg(lower(t.surface))
                                       : lower(t.surface);
  std::string s3 = inflect_verb_3sg(lemma);
  std::string past = past_tense(lemma);
  std::string participle = past_participle(lemma);
  std::string surface = lower(t.surface);
  bool explicit_forms = false;
  if (t.pos == "vbz" && surface != s3) s3 = surface, explicit_forms = true;
  if (t.pos == "vbd" && surface != past) past = surface, explicit_forms = true;
  if (t.pos == "vbn" && surface != participle) participle = surface, explicit_forms = true;

  Expr lex = Expr::str(lemma);
  if (explicit_forms && category != "VV") {
    lex = Expr::app("mkV", {Expr::str(lemma), Expr::str(s3), Expr::str(past),
                            Expr::str(participle), Expr::str(present_participle(lemma))});
    if (category == "V") return add(identifier_stem(lemma) + "_V", "V", lex);
  }
  return add(identifier_stem(lemma) + "_" + category, category, Expr::app("mk" + category, {lex}));
}

Expr Encoder::wrap_vp(Expr vp, const Chunk &verb_chunk) {
  std::vector<const Member *> members;
  for (const auto &m : verb_chunk.attachments) members.push_back(&m);
  for (const Member *m : of_kind(members, ComplementKind::kAdverbialModifier)) {
    vp = Expr::app("mkVP", {vp, Expr::ref(adverb(facts_.token(m->chunk.head), "Adv"))});
  }
  for (const Member *m : of_kind(members, ComplementKind::kPreposition)) {
    Expr adv = Expr::app("ConstructorsEng.mkAdv", {preposition(m->link.case_marker), np(m->chunk)});
    vp = Expr::app("mkVP", {vp, adv});
  }
  return vp;
}

Expr Encoder::vp(const StructureAtom &structure, const std::vector<Chunk> &verbs,
                 const Expr *object) {
  auto need_object = [&] {
    if (!object) throw CategoryError(structure.to_string() + " needs an object");
    return *object;
  };
  switch (structure.kind) {
    case 1:
      return wrap_vp(Expr::app("mkVP", {Expr::ref(verb(facts_.token(verbs.at(0).head), "V"))}),
                     verbs.at(0));
    case 2:
      return wrap_vp(Expr::app("mkVP", {Expr::ref(verb(facts_.token(verbs.at(0).head), "V2")),
                                        need_object()}),
                     verbs.at(0));
    case 5:
      return wrap_vp(
          Expr::app("passiveVP", {Expr::ref(verb(facts_.token(verbs.at(0).head), "V2"))}),
          verbs.at(0));
    case 3: {
      Expr inner = wrap_vp(Expr::app("mkVP", {Expr::ref(verb(facts_.token(verbs.at(1).head), "V2")),
                                              need_object()}),
                           verbs.at(1));
      Expr outer = Expr::app("mkVP", {Expr::ref(verb(facts_.token(verbs.at(0).head), "VV")), inner});
      return wrap_vp(outer, verbs.at(0));
    }
  }
  throw CategoryError(structure.to_string() + " has no verb phrase");
}

Expr Encoder::component(Expr expr, const Token &head, const std::string &category) {
  if (expr.kind != Expr::Kind::kApp || mentions_slot(expr)) return expr;
  std::string stem = identifier_stem(is_proper(head) ? head.surface : head.lemma);
  stem[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(stem[0])));
  if (reserved_names().count(stem)) stem += "_" + category;
  return Expr::ref(add(stem, category, std::move(expr)));
}

}  // namespace

std::string OperSet::add(const std::string &name, const std::string &category, Expr definition) {
  for (int k = 1;; ++k) {
    std::string candidate = k == 1 ? name : suffixed_name(name, k);
    auto it = opers_.find(candidate);
    if (it == opers_.end()) {
      opers_.emplace(candidate, GfOper{candidate, category, std::move(definition)});
      return candidate;
    }
    if (it->second.category == category && it->second.definition == definition) {
      return candidate;
    }
  }
}

Expr top_rule(const StructureAtom &structure, bool adjectival) {
  auto r = [](const char *n) { return Expr::ref(n); };
  switch (structure.kind) {
    case 1:
      return Expr::app("mkCl", {r("NP"), r("VP")});
    case 2:
      return Expr::app("mkCl", {r("NP"), Expr::app("mkVP", {r("V2"), r("NP")})});
    case 3:
      return Expr::app("mkCl",
                       {r("NP"), Expr::app("mkVP", {r("VV"), Expr::app("mkVP", {r("V2"), r("NP")})})});
    case 4:
      return Expr::app("mkCl", {r("NP"), r(adjectival ? "AP" : "NP")});
    case 5:
      return Expr::app("mkCl", {r("NP"), Expr::app("passiveVP", {r("V2")})});
  }
  throw CategoryError("no GF rule for " + structure.to_string());
}

EncodedPhrase encode_np(const SentenceFacts &facts, const Chunk &chunk,
                        const EncodeOptions &options) {
  Encoder enc(facts, options);
  Expr e = enc.np(chunk);
  return {e, enc.created()};
}

EncodedPhrase encode_vp(const SentenceFacts &facts, const StructureAtom &structure,
                        const std::vector<Chunk> &verb_chunks, const Expr *object,
                        const EncodeOptions &options) {
  Encoder enc(facts, options);
  Expr e = enc.vp(structure, verb_chunks, object);
  return {e, enc.created()};
}

Grammar encode_sentence(const SentenceFacts &facts, const StructureAtom &structure,
                        const ComponentMap &m, const EncodeOptions &options) {
  Encoder enc(facts, options);
  auto chunk = [&](const std::optional<int> &role, const char *name) {
    if (!role) throw CategoryError(structure.to_string() + " is missing its " + name);
    return build_chunk(facts, *role);
  };
  Expr subject = enc.component(enc.np(chunk(m.sub, "subject")), facts.token(*m.sub), "NP");
  Expr clause;
  switch (structure.kind) {
    case 1:
    case 5:
      clause = Expr::app("mkCl", {subject, enc.vp(structure, {chunk(m.verb, "verb")}, nullptr)});
      break;
    case 2: {
      Expr obj = enc.component(enc.np(chunk(m.obj, "object")), facts.token(*m.obj), "NP");
      clause = Expr::app("mkCl", {subject, enc.vp(structure, {chunk(m.verb, "verb")}, &obj)});
      break;
    }
    case 3: {
      Expr obj = enc.component(enc.np(chunk(m.obj, "object")), facts.token(*m.obj), "NP");
      clause = Expr::app(
          "mkCl", {subject, enc.vp(structure, {chunk(m.verb_1, "verb_1"), chunk(m.verb_2, "verb_2")},
                                   &obj)});
      break;
    }
    case 4:
      if (m.adj) {
        Expr ap = enc.component(enc.ap_inline(chunk(m.adj, "adjective")), facts.token(*m.adj), "AP");
        clause = Expr::app("mkCl", {subject, ap});
      } else {
        Expr obj = enc.component(enc.np(chunk(m.obj, "object")), facts.token(*m.obj), "NP");
        clause = Expr::app("mkCl", {subject, obj});
      }
      break;
    default:
      throw CategoryError("no GF rule for " + structure.to_string());
  }

  Grammar g;
  g.sentence_id = facts.sentence_id;
  g.name = options.function_name.empty() ? "sent_" + identifier_stem(facts.sentence_id)
                                         : options.function_name;
  g.categories.insert("Message");
  g.lincats["Message"] = "Cl";
  GfFunction fn;
  fn.name = g.name;
  std::vector<std::string> params;
  for (const auto &[index, param] : options.slot_params) params.push_back(param);
  std::sort(params.begin(), params.end(),
            [](const auto &a, const auto &b) { return natural_less(a, b); });
  params.erase(std::unique(params.begin(), params.end()), params.end());
  if (!params.empty()) {
    g.categories.insert("Symbol");
    g.lincats["Symbol"] = "NP";
  }
  fn.params = params;
  fn.arg_categories.assign(params.size(), "Symbol");
  fn.linearization = clause;
  g.functions[fn.name] = fn;
  g.opers = enc.set().opers();
  return g;
}

}  // namespace gfgen
