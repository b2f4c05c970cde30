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

#include "gfgen/gf_syntax.h"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <functional>

#include "gfgen/errors.h"

namespace gfgen {

namespace {

bool is_atom(const Expr &e) { return e.kind != Expr::Kind::kApp || e.args.empty(); }

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

void render_into(const Expr &e, bool as_argument, std::string *out) {
  switch (e.kind) {
    case Expr::Kind::kRef:
      *out += e.head;
      return;
    case Expr::Kind::kString:
      *out += quote(e.head);
      return;
    case Expr::Kind::kApp:
      break;
  }
  if (e.args.empty()) {
    *out += e.head;
    return;
  }
  if (as_argument) *out += '(';
  *out += e.head;
  for (const auto &a : e.args) {
    *out += ' ';
    render_into(a, true, out);
  }
  if (as_argument) {
    if (e.args.size() == 1 && is_atom(e.args[0])) *out += ' ';
    *out += ')';
  }
}

using SignatureTable = std::map<std::string, std::vector<Signature>, std::less<>>;

const SignatureTable &table() {
  static const SignatureTable kTable = {
      {"mkCl",
       {{{"NP", "VP"}, "Cl"},
        {{"NP", "V2", "NP"}, "Cl"},
        {{"NP", "V"}, "Cl"},
        {{"NP", "AP"}, "Cl"},
        {{"NP", "A"}, "Cl"},
        {{"NP", "NP"}, "Cl"},
        {{"NP", "Adv"}, "Cl"}}},
      {"mkNP",
       {{{"N"}, "NP"},
        {{"CN"}, "NP"},
        {{"PN"}, "NP"},
        {{"Pron"}, "NP"},
        {{"NP", "Adv"}, "NP"},
        {{"Conj", "ListNP"}, "NP"}}},
      {"mkCN",
       {{{"N"}, "CN"},
        {{"AP", "CN"}, "CN"},
        {{"AP", "N"}, "CN"},
        {{"A", "N"}, "CN"},
        {{"A", "CN"}, "CN"},
        {{"CN", "Adv"}, "CN"}}},
      {"mkAP", {{{"A"}, "AP"}, {{"AdA", "AP"}, "AP"}, {{"AdA", "A"}, "AP"}}},
      {"mkVP",
       {{{"V"}, "VP"},
        {{"V2", "NP"}, "VP"},
        {{"VV", "VP"}, "VP"},
        {{"VP", "Adv"}, "VP"},
        {{"AP"}, "VP"},
        {{"NP"}, "VP"},
        {{"Adv"}, "VP"}}},
      {"passiveVP", {{{"V2"}, "VP"}, {{"V2", "NP"}, "VP"}}},
      {"mkAdv", {{{"Prep", "NP"}, "Adv"}, {{"Str"}, "Adv"}}},
      {"mkAdA", {{{"Str"}, "AdA"}}},
      {"mkListNP", {{{"NP", "NP"}, "ListNP"}, {{"NP", "ListNP"}, "ListNP"}}},
      {"mkN", {{{"Str"}, "N"}, {{"Str", "Str"}, "N"}}},
      {"mkPN", {{{"Str"}, "PN"}}},
      {"mkA", {{{"Str"}, "A"}}},
      {"mkV", {{{"Str"}, "V"}, {{"Str", "Str", "Str", "Str", "Str"}, "V"}}},
      {"mkV2", {{{"Str"}, "V2"}, {{"V"}, "V2"}}},
      {"mkVV", {{{"Str"}, "VV"}}},
      {"mkPrep", {{{"Str"}, "Prep"}}},
      {"mkConj", {{{"Str"}, "Conj"}}},
  };
  return kTable;
}

}  // namespace

std::string render_expr(const Expr &e) {
  std::string out;
  render_into(e, false, &out);
  return out;
}

void collect_refs(const Expr &e, std::set<std::string> *out) {
  if (e.kind == Expr::Kind::kRef) out->insert(e.head);
  if (e.kind == Expr::Kind::kApp && e.args.empty()) out->insert(e.head);
  for (const auto &a : e.args) collect_refs(a, out);
}

Expr rename_refs(const Expr &e, const std::map<std::string, std::string> &renames) {
  Expr out = e;
  if (out.kind == Expr::Kind::kRef) {
    auto it = renames.find(out.head);
    if (it != renames.end()) out.head = it->second;
  }
  for (auto &a : out.args) a = rename_refs(a, renames);
  return out;
}

bool is_resource_category(std::string_view cat) {
  static const std::set<std::string, std::less<>> kCats = {
      "Cl", "NP", "VP", "V", "V2", "VV", "CN",   "AP",     "A",   "N",
      "PN", "Adv", "AdA", "Prep", "Conj", "ListNP", "Pron", "Str"};
  return kCats.count(cat) > 0;
}

std::optional<std::string> library_constant_category(std::string_view name) {
  static const std::map<std::string, std::string, std::less<>> kConstants = [] {
    std::map<std::string, std::string, std::less<>> m;
    for (const char *p : {"above", "after", "before", "behind", "between", "during", "except",
                          "for", "from", "in", "on", "through", "to", "under", "with",
                          "without"}) {
      m[std::string(p) + "_Prep"] = "Prep";
    }
    m["and_Conj"] = "Conj";
    m["or_Conj"] = "Conj";
    for (const char *p : {"i", "youSg", "youPl", "he", "she", "it", "we", "they"}) {
      m[std::string(p) + "_Pron"] = "Pron";
    }
    return m;
  }();
  auto it = kConstants.find(name);
  if (it == kConstants.end()) return std::nullopt;
  return it->second;
}

std::string_view unqualified(std::string_view name) {
  size_t dot = name.rfind('.');
  return dot == std::string_view::npos ? name : name.substr(dot + 1);
}

const std::vector<Signature> &signatures(std::string_view constructor) {
  static const std::vector<Signature> kNone;
  auto it = table().find(unqualified(constructor));
  return it == table().end() ? kNone : it->second;
}

bool is_constructor(std::string_view name) { return table().count(unqualified(name)) > 0; }

std::string infer_category(const Expr &e, const std::map<std::string, std::string> &scope) {
  if (e.kind == Expr::Kind::kString) return "Str";
  if (e.kind == Expr::Kind::kRef || e.args.empty()) {
    auto it = scope.find(e.head);
    if (it != scope.end()) return it->second;
    if (auto lib = library_constant_category(e.head)) return *lib;
    throw TypeError("unresolved reference '" + e.head + "'");
  }
  const auto &overloads = signatures(e.head);
  if (overloads.empty()) throw TypeError("unknown constructor '" + e.head + "'");
  std::vector<std::string> cats;
  for (const auto &a : e.args) cats.push_back(infer_category(a, scope));
  for (const auto &sig : overloads) {
    if (sig.args == cats) return sig.result;
  }
  std::string shown;
  for (const auto &c : cats) shown += " " + c;
  throw TypeError("no overload of " + e.head + " takes" + shown);
}

std::vector<std::string> check_grammar(const Grammar &g) {
  std::vector<std::string> problems;
  for (const auto &cat : g.categories) {
    if (!g.lincats.count(cat)) problems.push_back("category " + cat + " has no lincat");
  }
  for (const auto &[cat, lin] : g.lincats) {
    if (!g.categories.count(cat)) problems.push_back("lincat for undeclared category " + cat);
    if (!is_resource_category(lin)) problems.push_back("lincat " + cat + " = " + lin + " is not a resource category");
  }

  std::map<std::string, std::string> scope;
  for (const auto &[name, oper] : g.opers) scope[name] = oper.category;
  for (const auto &[name, oper] : g.opers) {
    try {
      std::string cat = infer_category(oper.definition, scope);
      if (cat != oper.category) {
        problems.push_back("oper " + name + " declared " + oper.category + " but is " + cat);
      }
    } catch (const TypeError &e) {
      problems.push_back("oper " + name + ": " + e.what());
    }
  }

  std::set<std::string> used;
  for (const auto &[name, fn] : g.functions) {
    for (const auto &c : fn.arg_categories) {
      if (!g.categories.count(c)) problems.push_back("function " + name + " uses undeclared category " + c);
    }
    if (!g.categories.count(fn.result)) problems.push_back("function " + name + " has undeclared result " + fn.result);
    if (fn.params.size() != fn.arg_categories.size()) {
      problems.push_back("function " + name + " has " + std::to_string(fn.params.size()) +
                         " lin parameters for " + std::to_string(fn.arg_categories.size()) +
                         " arguments");
      continue;
    }
    std::map<std::string, std::string> local = scope;
    for (size_t i = 0; i < fn.params.size(); ++i) {
      auto lc = g.lincats.find(fn.arg_categories[i]);
      local[fn.params[i]] = lc == g.lincats.end() ? "?" : lc->second;
    }
    try {
      std::string cat = infer_category(fn.linearization, local);
      auto want = g.lincats.find(fn.result);
      if (want != g.lincats.end() && cat != want->second) {
        problems.push_back("lin " + name + " is " + cat + ", lincat says " + want->second);
      }
    } catch (const TypeError &e) {
      problems.push_back("lin " + name + ": " + e.what());
    }
    std::multiset<std::string> refs;
    std::function<void(const Expr &)> count = [&](const Expr &e) {
      if (e.kind == Expr::Kind::kRef) refs.insert(e.head);
      for (const auto &a : e.args) count(a);
    };
    count(fn.linearization);
    for (const auto &p : fn.params) {
      if (refs.count(p) != 1) {
        problems.push_back("lin " + name + " uses parameter " + p + " " +
                           std::to_string(refs.count(p)) + " times");
      }
    }
    collect_refs(fn.linearization, &used);
  }

  // Opers reachable from the linearizations.
  std::set<std::string> reachable;
  std::vector<std::string> work(used.begin(), used.end());
  while (!work.empty()) {
    std::string name = work.back();
    work.pop_back();
    auto it = g.opers.find(name);
    if (it == g.opers.end() || !reachable.insert(name).second) continue;
    std::set<std::string> refs;
    collect_refs(it->second.definition, &refs);
    work.insert(work.end(), refs.begin(), refs.end());
  }
  for (const auto &[name, oper] : g.opers) {
    if (!reachable.count(name)) problems.push_back("oper " + name + " is never used");
  }
  return problems;
}

std::string identifier_stem(std::string_view text) {
  std::string out;
  bool pending_sep = false;
  for (unsigned char c : text) {
    std::string piece;
    if (std::isalnum(c)) {
      piece = static_cast<char>(std::tolower(c));
    } else if (c >= 0x80) {
      char buf[4];
      std::snprintf(buf, sizeof buf, "%02x", c);
      piece = buf;
    } else {
      pending_sep = !out.empty();
      continue;
    }
    if (pending_sep) out += '_';
    pending_sep = false;
    out += piece;
  }
  if (out.empty()) out = "x";
  if (std::isdigit(static_cast<unsigned char>(out[0]))) out = "num_" + out;
  return out;
}

std::string suffixed_name(std::string_view name, int k) {
  static const char *kSuffixes[] = {"_N", "_A", "_V2", "_VV", "_V", "_CN", "_AP", "_NP",
                                    "_Adv", "_AdA", "_Prep", "_Conj"};
  std::string n(name);
  for (const char *suffix : kSuffixes) {
    std::string_view sv(suffix);
    if (n.size() > sv.size() && n.compare(n.size() - sv.size(), sv.size(), sv) == 0) {
      return n.substr(0, n.size() - sv.size()) + "_" + std::to_string(k) + std::string(sv);
    }
  }
  return n + "_" + std::to_string(k);
}

bool natural_less(std::string_view a, std::string_view b) {
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    bool da = std::isdigit(static_cast<unsigned char>(a[i]));
    bool db = std::isdigit(static_cast<unsigned char>(b[j]));
    if (da && db) {
      size_t ie = i, je = j;
      while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
      while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
      std::string_view na = a.substr(i, ie - i), nb = b.substr(j, je - j);
      while (na.size() > 1 && na[0] == '0') na.remove_prefix(1);
      while (nb.size() > 1 && nb[0] == '0') nb.remove_prefix(1);
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      i = ie;
      j = je;
      continue;
    }
    if (a[i] != b[j]) return a[i] < b[j];
    ++i;
    ++j;
  }
  if (a.size() - i != b.size() - j) return a.size() - i < b.size() - j;
  return a < b;
}

}  // namespace gfgen
