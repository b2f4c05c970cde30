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

#include "gfgen/gf_exporter.h"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>

#include "gfgen/errors.h"
#include "gfgen/gf_encoder.h"
#include "json.hpp"

namespace gfgen {

namespace {

using nlohmann::json;

// Opers of `g` ordered so that every oper follows the opers it references.
std::vector<const GfOper *> dependency_order(const Grammar &g) {
  std::vector<const GfOper *> out;
  std::set<std::string> done, active;
  std::function<void(const GfOper &)> visit = [&](const GfOper &oper) {
    if (done.count(oper.name) || !active.insert(oper.name).second) return;
    std::set<std::string> refs;
    collect_refs(oper.definition, &refs);
    for (const auto &r : refs) {
      auto it = g.opers.find(r);
      if (it != g.opers.end()) visit(it->second);
    }
    active.erase(oper.name);
    done.insert(oper.name);
    out.push_back(&oper);
  };
  for (const auto &[name, oper] : g.opers) visit(oper);
  return out;
}

const char *number_name(Number n) { return n == Number::kPlural ? "pl" : "sg"; }

json expr_to_json(const Expr &e) {
  switch (e.kind) {
    case Expr::Kind::kString:
      return json{{"str", e.head}};
    case Expr::Kind::kRef:
      return json{{"ref", e.head}};
    case Expr::Kind::kApp: {
      json args = json::array();
      for (const auto &a : e.args) args.push_back(expr_to_json(a));
      json out{{"app", e.head}, {"args", args}};
      if (e.number == Number::kPlural) out["number"] = number_name(e.number);
      return out;
    }
  }
  return json();
}

Expr expr_from_json(const json &j) {
  if (j.contains("str")) return Expr::str(j.at("str").get<std::string>());
  if (j.contains("ref")) return Expr::ref(j.at("ref").get<std::string>());
  std::vector<Expr> args;
  for (const auto &a : j.at("args")) args.push_back(expr_from_json(a));
  Expr e = Expr::app(j.at("app").get<std::string>(), std::move(args));
  if (j.value("number", "sg") == "pl") e.number = Number::kPlural;
  return e;
}

std::string fragment_key(const Grammar &g) { return g.sentence_id + '\n' + grammar_to_json(g); }

}  // namespace

Grammar merge(const std::vector<Grammar> &fragments) {
  std::vector<const Grammar *> ordered;
  for (const auto &f : fragments) ordered.push_back(&f);
  std::vector<std::string> keys;
  std::stable_sort(ordered.begin(), ordered.end(), [](const Grammar *a, const Grammar *b) {
    if (a->sentence_id != b->sentence_id) return natural_less(a->sentence_id, b->sentence_id);
    return fragment_key(*a) < fragment_key(*b);
  });

  Grammar out;
  out.categories.insert("Message");
  out.lincats["Message"] = "Cl";
  OperSet opers;
  for (const Grammar *g : ordered) {
    std::map<std::string, std::string> renames;
    for (const GfOper *oper : dependency_order(*g)) {
      std::string final_name =
          opers.add(oper->name, oper->category, rename_refs(oper->definition, renames));
      if (final_name != oper->name) renames[oper->name] = final_name;
    }
    out.categories.insert(g->categories.begin(), g->categories.end());
    for (const auto &[cat, lin] : g->lincats) out.lincats.emplace(cat, lin);
    for (const auto &[name, fn] : g->functions) {
      GfFunction renamed = fn;
      renamed.linearization = rename_refs(fn.linearization, renames);
      for (int k = 1;; ++k) {
        renamed.name = k == 1 ? name : suffixed_name(name, k);
        auto it = out.functions.find(renamed.name);
        if (it == out.functions.end()) {
          out.functions.emplace(renamed.name, renamed);
          break;
        }
        if (it->second == renamed) break;
      }
    }
  }
  out.opers = opers.opers();
  return out;
}

RenderedGrammar render(const Grammar &g, const std::string &name) {
  std::vector<const GfFunction *> functions;
  for (const auto &[fname, fn] : g.functions) functions.push_back(&fn);
  std::sort(functions.begin(), functions.end(), [](const GfFunction *a, const GfFunction *b) {
    return natural_less(a->name, b->name);
  });

  RenderedGrammar r;
  std::string &abs = r.abstract_text;
  abs = "abstract " + name + " = {\n";
  abs += "  flags startcat = Message ;\n";
  if (!g.categories.empty()) {
    abs += "  cat\n";
    for (const auto &c : g.categories) abs += "    " + c + " ;\n";
  }
  if (!functions.empty()) {
    abs += "  fun\n";
    for (const GfFunction *fn : functions) {
      abs += "    " + fn->name + " : ";
      for (const auto &c : fn->arg_categories) abs += c + " -> ";
      abs += fn->result + " ;\n";
    }
  }
  abs += "}\n";

  std::string &con = r.concrete_text;
  con = "concrete " + name + "Eng of " + name +
        " = open SyntaxEng, ParadigmsEng, ConstructorsEng in {\n";
  if (!g.lincats.empty()) {
    con += "  lincat\n";
    for (const auto &[cat, lin] : g.lincats) con += "    " + cat + " = " + lin + " ;\n";
  }
  if (!functions.empty()) {
    con += "  lin\n";
    for (const GfFunction *fn : functions) {
      con += "    " + fn->name;
      for (const auto &p : fn->params) con += " " + p;
      con += " = " + render_expr(fn->linearization) + " ;\n";
    }
  }
  if (!g.opers.empty()) {
    con += "  oper\n";
    for (const auto &[oname, oper] : g.opers) {
      con += "    " + oname + " = " + render_expr(oper.definition) + " ;\n";
    }
  }
  con += "}\n";
  return r;
}

std::string grammar_to_json(const Grammar &g) {
  json j;
  j["name"] = g.name;
  j["sentence_id"] = g.sentence_id;
  j["categories"] = g.categories;
  j["lincats"] = g.lincats;
  json functions = json::array();
  for (const auto &[name, fn] : g.functions) {
    functions.push_back({{"name", fn.name},
                         {"arg_categories", fn.arg_categories},
                         {"result", fn.result},
                         {"params", fn.params},
                         {"lin", expr_to_json(fn.linearization)}});
  }
  j["functions"] = functions;
  json opers = json::array();
  for (const auto &[name, oper] : g.opers) {
    opers.push_back(
        {{"name", oper.name}, {"category", oper.category}, {"def", expr_to_json(oper.definition)}});
  }
  j["opers"] = opers;
  return j.dump(2) + "\n";
}

Grammar grammar_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
    Grammar g;
    g.name = j.value("name", "");
    g.sentence_id = j.value("sentence_id", "");
    g.categories = j.at("categories").get<std::set<std::string>>();
    g.lincats = j.at("lincats").get<std::map<std::string, std::string>>();
    for (const auto &f : j.at("functions")) {
      GfFunction fn;
      fn.name = f.at("name").get<std::string>();
      fn.arg_categories = f.at("arg_categories").get<std::vector<std::string>>();
      fn.result = f.at("result").get<std::string>();
      fn.params = f.at("params").get<std::vector<std::string>>();
      fn.linearization = expr_from_json(f.at("lin"));
      g.functions[fn.name] = fn;
    }
    for (const auto &o : j.at("opers")) {
      GfOper oper{o.at("name").get<std::string>(), o.at("category").get<std::string>(),
                  expr_from_json(o.at("def"))};
      g.opers[oper.name] = oper;
    }
    return g;
  } catch (const json::exception &e) {
    throw ParseError(std::string("grammar JSON: ") + e.what(), 0);
  }
}

void write_grammar_files(const Grammar &g, const std::filesystem::path &dir,
                         const std::string &name) {
  std::filesystem::create_directories(dir);
  RenderedGrammar r = render(g, name);
  auto write = [](const std::filesystem::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out << text;
  };
  write(dir / (name + ".gf"), r.abstract_text);
  write(dir / (name + "Eng.gf"), r.concrete_text);
  write(dir / (name + ".json"), grammar_to_json(g));
}

}  // namespace gfgen
