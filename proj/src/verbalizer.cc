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

#include "gfgen/verbalizer.h"

#include <algorithm>
#include <cctype>
#include <regex>
#include <set>
#include <sstream>

#include "gfgen/errors.h"
#include "gfgen/linearizer.h"
#include "gfgen/morphology.h"
#include "gfgen/pipeline.h"
#include "json.hpp"

namespace gfgen {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (char &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

int slot_number(std::string_view word) {
  if (word.size() < 2 || word[0] != '$') return 0;
  for (char c : word.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return 0;
  }
  return std::stoi(std::string(word.substr(1)));
}

// Coarse word classes; plain words become nouns or verbs by position.
enum class WordClass { kSlot, kDet, kPrep, kCopula, kTo, kAdverb, kAdjective, kPlain };

WordClass classify(std::string_view word) {
  static const std::set<std::string, std::less<>> kDets = {
      "the", "a", "an", "this", "that", "these", "those", "some", "every", "each"};
  static const std::set<std::string, std::less<>> kPreps = {
      "of", "in", "on", "at", "with", "for", "from", "by", "about", "into", "under", "over",
      "after", "before", "during", "without", "through", "between", "behind", "above"};
  static const std::set<std::string, std::less<>> kCopulas = {"is", "are", "am", "was", "were"};
  static const char *kAdjectiveSuffixes[] = {"ous", "ful", "ive", "able", "ible", "ic", "less", "ish"};
  if (slot_number(word)) return WordClass::kSlot;
  std::string w = lower(word);
  if (kDets.count(w)) return WordClass::kDet;
  if (kPreps.count(w)) return WordClass::kPrep;
  if (kCopulas.count(w)) return WordClass::kCopula;
  if (w == "to") return WordClass::kTo;
  if (w.size() > 4 && ends_with(w, "ly")) return WordClass::kAdverb;
  for (const char *suffix : kAdjectiveSuffixes) {
    if (w.size() > std::string_view(suffix).size() + 2 && ends_with(w, suffix)) {
      return WordClass::kAdjective;
    }
  }
  return WordClass::kPlain;
}

// A plain word that reads as a finite verb after a noun: "reads", "has_pet".
bool looks_verbal(std::string_view word) {
  return (ends_with(word, "s") && !ends_with(word, "ss")) || word.find('_') != std::string_view::npos;
}

class TemplateParser {
 public:
  explicit TemplateParser(std::string_view sentence) {
    std::istringstream in{std::string(sentence)};
    std::string w;
    while (in >> w) words_.push_back(w);
    if (!words_.empty()) {
      std::string &last = words_.back();
      while (!last.empty() && (last.back() == '.' || last.back() == '!')) last.pop_back();
      if (last.empty()) words_.pop_back();
    }
    for (size_t i = 0; i < words_.size(); ++i) {
      Token t;
      t.index = static_cast<int>(i) + 1;
      t.surface = t.lemma = words_[i];
      classes_.push_back(classify(words_[i]));
      facts_.tokens.push_back(t);
    }
    copular_ = std::count(classes_.begin(), classes_.end(), WordClass::kCopula) > 0;
  }

  SentenceFacts parse(std::map<int, std::string> *slot_params) {
    if (words_.empty()) fail("empty annotation sentence");
    int subject = noun_phrase(true);
    if (at_end()) fail("no verb after the subject");
    if (cls() == WordClass::kCopula) {
      int cop = take("vbz");
      if (!at_end() && lower(word()).size() > 3 && ends_with(lower(word()), "ed") &&
          (pos_ + 1 == words_.size() || classes_[pos_ + 1] == WordClass::kPrep)) {
        int verb = take("vbn");
        dep("nsubjpass", verb, subject);
        dep("auxpass", verb, cop);
        trailing_modifiers(verb);
      } else if (adjective_complement()) {
        std::vector<int> adverbs;
        while (cls() == WordClass::kAdverb) adverbs.push_back(take("rb"));
        int adj = take("jj");
        for (int a : adverbs) dep("advmod", adj, a);
        dep("nsubj", adj, subject);
        dep("cop", adj, cop);
        trailing_modifiers(adj);
      } else {
        int head = noun_phrase(false);
        dep("nsubj", head, subject);
        dep("cop", head, cop);
      }
    } else {
      std::vector<int> adverbs;
      while (cls() == WordClass::kAdverb) adverbs.push_back(take("rb"));
      if (at_end() || cls() != WordClass::kPlain) fail("expected a verb after the subject");
      int verb = take_verb();
      for (int a : adverbs) dep("advmod", verb, a);
      dep("nsubj", verb, subject);
      if (cls() == WordClass::kTo && pos_ + 1 < words_.size() &&
          classes_[pos_ + 1] == WordClass::kPlain) {
        int to = take("to");
        int verb2 = take("vb");
        facts_.tokens[verb2 - 1].has_lemma = true;
        facts_.tokens[verb2 - 1].lemma = lower(words_[verb2 - 1]);
        dep("mark", verb2, to);
        dep("xcomp", verb, verb2);
        if (starts_noun_phrase()) dep("dobj", verb2, noun_phrase(false));
        trailing_modifiers(verb2);
      } else {
        if (starts_noun_phrase()) dep("dobj", verb, noun_phrase(false));
        trailing_modifiers(verb);
      }
    }
    if (!at_end()) fail("unexpected '" + word() + "'");
    std::stable_sort(facts_.deps.begin(), facts_.deps.end(),
                     [](const auto &a, const auto &b) { return a.dependent < b.dependent; });
    for (const auto &t : facts_.tokens) {
      if (int k = slot_number(t.surface)) (*slot_params)[t.index] = "x" + std::to_string(k);
    }
    facts_.sentence_id = "template";
    std::string text;
    for (const auto &w : words_) text += (text.empty() ? "" : " ") + w;
    facts_.source_text = text;
    return facts_;
  }

 private:
  [[noreturn]] void fail(const std::string &why) const {
    std::string text;
    for (const auto &w : words_) text += (text.empty() ? "" : " ") + w;
    throw Error("cannot analyze annotation \"" + text + "\": " + why);
  }
  bool at_end() const { return pos_ >= words_.size(); }
  WordClass cls() const { return at_end() ? WordClass::kPlain : classes_[pos_]; }
  const std::string &word() const { return words_.at(pos_); }

  int take(const std::string &tag) {
    if (at_end()) fail("sentence ends early");
    facts_.tokens[pos_].pos = tag;
    return static_cast<int>(++pos_);
  }
  int take_verb() {
    std::string w = lower(word());
    bool third_person = ends_with(w, "s") && !ends_with(w, "ss");
    int v = take(third_person ? "vbz" : "vbp");
    Token &t = facts_.tokens[v - 1];
    t.has_lemma = true;
    t.lemma = third_person ? verb_lemma_from_3sg(w) : w;
    return v;
  }
  void dep(const std::string &rel, int head, int dependent) {
    facts_.deps.push_back({rel, head, dependent});
  }

  bool starts_noun_phrase() const {
    if (at_end()) return false;
    WordClass c = cls();
    return c == WordClass::kSlot || c == WordClass::kDet || c == WordClass::kPlain ||
           c == WordClass::kAdjective;
  }

  // "is (adverb)* adjective" at the end of the sentence or before a preposition.
  bool adjective_complement() const {
    size_t i = pos_;
    while (i < words_.size() && classes_[i] == WordClass::kAdverb) ++i;
    return i < words_.size() && classes_[i] == WordClass::kAdjective &&
           (i + 1 == words_.size() || classes_[i + 1] == WordClass::kPrep);
  }

  int noun_phrase(bool subject) {
    std::vector<int> dets, adjectives, nouns;
    while (cls() == WordClass::kDet && !at_end()) dets.push_back(take("dt"));
    std::vector<std::pair<int, int>> adverb_of;  // (adverb, adjective)
    while (!at_end() && (cls() == WordClass::kAdjective || cls() == WordClass::kAdverb)) {
      if (cls() == WordClass::kAdverb) {
        int adv = take("rb");
        if (at_end() || cls() != WordClass::kAdjective) fail("adverb without adjective");
        adverb_of.push_back({adv, static_cast<int>(pos_) + 1});
      } else {
        adjectives.push_back(take("jj"));
      }
    }
    while (!at_end()) {
      if (cls() == WordClass::kSlot) {
        nouns.push_back(take("nn"));
        break;
      }
      if (cls() != WordClass::kPlain) break;
      if (subject && !copular_ && !nouns.empty() && looks_verbal(word())) break;
      std::string w = word();
      bool proper = pos_ > 0 && std::isupper(static_cast<unsigned char>(w[0]));
      bool plural = ends_with(lower(w), "s") && !ends_with(lower(w), "ss");
      int n = take(proper ? "nnp" : plural ? "nns" : "nn");
      if (plural && !proper) {
        facts_.tokens[n - 1].lemma = singularize_noun(lower(w));
        facts_.tokens[n - 1].has_lemma = true;
      }
      nouns.push_back(n);
      if (subject && !copular_ && nouns.size() == 1 && !at_end() && cls() == WordClass::kPlain &&
          pos_ + 1 < words_.size() && classes_[pos_ + 1] != WordClass::kPlain) {
        break;  // "cat eats fish": the next plain word is the verb
      }
    }
    if (nouns.empty()) fail("expected a noun phrase");
    int head = nouns.back();
    for (int d : dets) dep("det", head, d);
    for (int a : adjectives) dep("amod", head, a);
    for (auto [adv, adj] : adverb_of) dep("advmod", adj, adv);
    for (size_t i = 0; i + 1 < nouns.size(); ++i) dep("compound", head, nouns[i]);
    while (cls() == WordClass::kPrep && !at_end() && pos_ + 1 < words_.size()) {
      int prep = take("in");
      int object = noun_phrase(false);
      dep("case", object, prep);
      dep("nmod", head, object);
    }
    return head;
  }

  void trailing_modifiers(int head) {
    while (!at_end()) {
      if (cls() == WordClass::kAdverb) {
        dep("advmod", head, take("rb"));
      } else if (cls() == WordClass::kPrep && pos_ + 1 < words_.size()) {
        int prep = take("in");
        int object = noun_phrase(false);
        dep("case", object, prep);
        dep("nmod", head, object);
      } else {
        break;
      }
    }
  }

  std::vector<std::string> words_;
  std::vector<WordClass> classes_;
  SentenceFacts facts_;
  size_t pos_ = 0;
  bool copular_ = false;
};

std::string function_name(const std::string &predicate, int arity) {
  return identifier_stem(predicate) + "_" + std::to_string(arity);
}

std::string symbol_text(std::string symbol) {
  std::replace(symbol.begin(), symbol.end(), '_', ' ');
  return symbol;
}

std::string sentence_case(std::string s) {
  if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s + ".";
}

const AtomAnnotation *find(const std::vector<AtomAnnotation> &annotations,
                           const std::string &predicate, size_t arity) {
  for (const auto &a : annotations) {
    if (a.predicate == predicate && static_cast<size_t>(a.arity) == arity) return &a;
  }
  return nullptr;
}

std::string realize(const AtomAnnotation &a, const std::vector<std::string> &args) {
  std::vector<Expr> literals;
  for (const auto &arg : args) literals.push_back(Expr::str(symbol_text(arg)));
  const GfFunction &fn = sentence_function(a.grammar);
  return sentence_case(linearize(a.grammar, Expr::app(fn.name, std::move(literals))));
}

std::string trim(std::string s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  size_t e = s.find_last_not_of(" \t\r\n");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

}  // namespace

SentenceFacts parse_template(std::string_view sentence, std::map<int, std::string> *slot_params) {
  return TemplateParser(sentence).parse(slot_params);
}

AtomAnnotation make_annotation(const std::string &predicate, int arity,
                               const std::string &sentence) {
  std::string label = predicate + "/" + std::to_string(arity);
  std::map<int, std::string> slots;
  SentenceFacts facts = parse_template(sentence, &slots);
  std::set<std::string> seen;
  for (const auto &[index, param] : slots) {
    if (!seen.insert(param).second) throw ParseError(label + ": slot " + param + " used twice", 0);
  }
  for (int k = 1; k <= arity; ++k) {
    if (!seen.count("x" + std::to_string(k))) {
      throw ParseError(label + ": annotation lacks slot $" + std::to_string(k), 0);
    }
  }
  if (static_cast<int>(seen.size()) != arity) {
    throw ParseError(label + ": annotation has " + std::to_string(seen.size()) + " slots", 0);
  }
  EncodeOptions options;
  options.slot_params = slots;
  options.function_name = function_name(predicate, arity);
  facts.sentence_id = label;
  SentenceAnalysis analysis = analyze_sentence(facts, options);
  if (!analysis.recognized()) {
    throw Error(label + ": annotation \"" + sentence + "\" not usable: " + analysis.skip_reason);
  }
  auto problems = check_grammar(*analysis.grammar);
  if (!problems.empty()) throw Error(label + ": " + problems.front());
  return AtomAnnotation{predicate, arity, sentence, *analysis.grammar};
}

std::vector<AtomAnnotation> load_annotations(std::string_view text) {
  std::vector<AtomAnnotation> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty() || trim(line)[0] == '#') continue;
    size_t tab = line.find('\t');
    size_t slash = line.rfind('/', tab);
    if (tab == std::string::npos || slash == std::string::npos || slash == 0) {
      throw ParseError("expected predicate/arity<TAB>sentence", line_no);
    }
    std::string predicate = line.substr(0, slash);
    std::string arity_text = line.substr(slash + 1, tab - slash - 1);
    if (arity_text.empty() ||
        !std::all_of(arity_text.begin(), arity_text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw ParseError("bad arity '" + arity_text + "'", line_no);
    }
    try {
      out.push_back(make_annotation(predicate, std::stoi(arity_text), trim(line.substr(tab + 1))));
    } catch (const ParseError &e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return out;
}

std::vector<GroundAtom> parse_atoms(std::string_view text) {
  std::vector<GroundAtom> out;
  std::string src = trim(std::string(text));
  if (!src.empty() && src[0] == '[') {
    try {
      for (const auto &a : nlohmann::json::parse(src)) {
        out.push_back({a.at("predicate").get<std::string>(),
                       a.at("args").get<std::vector<std::string>>()});
      }
    } catch (const nlohmann::json::exception &e) {
      throw ParseError(std::string("atoms JSON: ") + e.what(), 0);
    }
    return out;
  }
  static const std::regex kAtom(R"(([a-z][A-Za-z0-9_]*)\s*\(([^()]*)\)\s*\.)");
  std::istringstream in(src);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string rest = line.substr(0, line.find('%'));
    for (std::sregex_iterator it(rest.begin(), rest.end(), kAtom), end; it != end; ++it) {
      GroundAtom atom{(*it)[1], {}};
      std::stringstream args((*it)[2].str());
      std::string arg;
      while (std::getline(args, arg, ',')) {
        arg = trim(arg);
        if (arg.size() >= 2 && arg.front() == '"' && arg.back() == '"') arg = arg.substr(1, arg.size() - 2);
        if (arg.empty()) throw ParseError("empty argument in " + atom.predicate, line_no);
        atom.args.push_back(arg);
      }
      out.push_back(atom);
    }
    std::string leftover = std::regex_replace(rest, kAtom, "");
    if (!trim(leftover).empty()) throw ParseError("cannot read atom '" + trim(leftover) + "'", line_no);
  }
  return out;
}

std::vector<Triple> parse_triples(std::string_view text) {
  std::vector<Triple> out;
  std::string src = trim(std::string(text));
  if (!src.empty() && src[0] == '[') {
    try {
      for (const auto &t : nlohmann::json::parse(src)) {
        auto v = t.get<std::vector<std::string>>();
        if (v.size() != 3) throw ParseError("a triple needs three elements", 0);
        out.push_back({v[0], v[1], v[2]});
      }
    } catch (const nlohmann::json::exception &e) {
      throw ParseError(std::string("triples JSON: ") + e.what(), 0);
    }
    return out;
  }
  std::istringstream in(src);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty() || trim(line)[0] == '#') continue;
    std::vector<std::string> cols;
    std::stringstream ss(line);
    std::string col;
    while (std::getline(ss, col, '\t')) cols.push_back(trim(col));
    if (cols.size() != 3 || cols[0].empty() || cols[1].empty() || cols[2].empty()) {
      throw ParseError("expected subject<TAB>relation<TAB>object", line_no);
    }
    out.push_back({cols[0], cols[1], cols[2]});
  }
  return out;
}

std::string verbalize_atoms(const std::vector<GroundAtom> &atoms,
                            const std::vector<AtomAnnotation> &annotations) {
  std::set<std::string> missing;
  for (const auto &atom : atoms) {
    if (!find(annotations, atom.predicate, atom.args.size())) {
      missing.insert(atom.predicate + "/" + std::to_string(atom.args.size()));
    }
  }
  if (!missing.empty()) {
    std::string list;
    for (const auto &m : missing) list += (list.empty() ? "" : ", ") + m;
    throw LookupError("no annotation for " + list);
  }
  std::string out;
  for (const auto &atom : atoms) {
    if (!out.empty()) out += " ";
    out += realize(*find(annotations, atom.predicate, atom.args.size()), atom.args);
  }
  return out;
}

std::vector<std::string> verbalize_triples(const std::vector<Triple> &triples,
                                           const std::vector<AtomAnnotation> &annotations) {
  std::vector<AtomAnnotation> all = annotations;
  if (!find(all, "rdf:type", 2)) all.push_back(make_annotation("rdf:type", 2, "$1 is $2"));
  std::set<std::string> missing;
  for (const auto &t : triples) {
    if (!find(all, t.relation, 2)) missing.insert(t.relation + "/2");
  }
  if (!missing.empty()) {
    std::string list;
    for (const auto &m : missing) list += (list.empty() ? "" : ", ") + m;
    throw LookupError("no annotation for " + list);
  }
  std::vector<std::string> out;
  for (const auto &t : triples) out.push_back(realize(*find(all, t.relation, 2), {t.subject, t.object}));
  return out;
}

}  // namespace gfgen
