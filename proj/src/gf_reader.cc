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

#include "gfgen/gf_reader.h"

#include <cctype>
#include <functional>
#include <map>
#include <set>

#include "gfgen/errors.h"

namespace gfgen {

namespace {

struct Tok {
  enum class Kind { kIdent, kString, kSymbol, kEnd };
  Kind kind;
  std::string text;
  int line;
};

std::vector<Tok> tokenize(std::string_view src) {
  std::vector<Tok> out;
  int line = 1;
  size_t i = 0;
  auto is_ident_char = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.' ||
           static_cast<unsigned char>(c) >= 0x80;
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == '\n') {
      ++line;
      ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (src.compare(i, 2, "--") == 0) {
      while (i < src.size() && src[i] != '\n') ++i;
    } else if (src.compare(i, 2, "{-") == 0) {
      int start = line;
      size_t end = src.find("-}", i + 2);
      if (end == std::string_view::npos) throw ParseError("unterminated comment", start);
      for (size_t k = i; k < end; ++k) line += src[k] == '\n';
      i = end + 2;
    } else if (c == '"') {
      std::string text;
      int start = line;
      ++i;
      while (true) {
        if (i >= src.size() || src[i] == '\n') throw ParseError("unterminated string", start);
        if (src[i] == '"') break;
        if (src[i] == '\\' && i + 1 < src.size()) ++i;
        text += src[i++];
      }
      ++i;
      out.push_back({Tok::Kind::kString, text, start});
    } else if (src.compare(i, 2, "->") == 0) {
      out.push_back({Tok::Kind::kSymbol, "->", line});
      i += 2;
    } else if (std::string_view("=;:(){},").find(c) != std::string_view::npos) {
      out.push_back({Tok::Kind::kSymbol, std::string(1, c), line});
      ++i;
    } else if (is_ident_char(c) && c != '.' && c != '\'') {
      size_t j = i;
      while (j < src.size() && is_ident_char(src[j])) ++j;
      out.push_back({Tok::Kind::kIdent, std::string(src.substr(i, j - i)), line});
      i = j;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line);
    }
  }
  out.push_back({Tok::Kind::kEnd, "", line});
  return out;
}

const std::set<std::string, std::less<>> &keywords() {
  static const std::set<std::string, std::less<>> kKeywords = {
      "abstract", "concrete", "of", "open", "in", "flags", "cat", "fun", "lincat", "lin", "oper"};
  return kKeywords;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

  const Tok &peek() const { return toks_[pos_]; }
  bool at_symbol(std::string_view s) const {
    return peek().kind == Tok::Kind::kSymbol && peek().text == s;
  }
  bool at_keyword(std::string_view k) const {
    return peek().kind == Tok::Kind::kIdent && peek().text == k;
  }
  bool at_name() const {
    return peek().kind == Tok::Kind::kIdent && !keywords().count(peek().text);
  }
  bool at_end() const { return peek().kind == Tok::Kind::kEnd; }

  [[noreturn]] void fail(const std::string &what) const {
    std::string found = at_end() ? "end of input" : "'" + peek().text + "'";
    throw ParseError("expected " + what + ", found " + found, peek().line);
  }
  void expect_symbol(std::string_view s) {
    if (!at_symbol(s)) fail("'" + std::string(s) + "'");
    ++pos_;
  }
  void expect_keyword(std::string_view k) {
    if (!at_keyword(k)) fail("'" + std::string(k) + "'");
    ++pos_;
  }
  std::string name() {
    if (!at_name()) fail("an identifier");
    return toks_[pos_++].text;
  }
  bool skip_symbol(std::string_view s) {
    if (!at_symbol(s)) return false;
    ++pos_;
    return true;
  }

  Expr atom() {
    if (peek().kind == Tok::Kind::kString) return Expr::str(toks_[pos_++].text);
    if (skip_symbol("(")) {
      Expr e = application();
      expect_symbol(")");
      return e;
    }
    return Expr::ref(name());
  }

  bool at_atom() const {
    return peek().kind == Tok::Kind::kString || at_symbol("(") || at_name();
  }

  Expr application() {
    Expr head = atom();
    std::vector<Expr> args;
    while (at_atom()) args.push_back(atom());
    if (args.empty()) return head;
    if (head.kind != Expr::Kind::kRef) fail("a function name before its arguments");
    return Expr::app(head.head, std::move(args));
  }

 private:
  std::vector<Tok> toks_;
  size_t pos_ = 0;
};

// Lexical entries read from text are applications of constructors; bare
// identifiers stay references.
void read_abstract(Parser &p, Grammar *g) {
  p.expect_keyword("abstract");
  g->name = p.name();
  p.expect_symbol("=");
  p.expect_symbol("{");
  while (!p.skip_symbol("}")) {
    if (p.at_keyword("flags")) {
      p.expect_keyword("flags");
      while (p.at_name()) {
        p.name();
        p.expect_symbol("=");
        p.name();
        p.expect_symbol(";");
      }
    } else if (p.at_keyword("cat")) {
      p.expect_keyword("cat");
      while (p.at_name()) {
        g->categories.insert(p.name());
        p.expect_symbol(";");
      }
    } else if (p.at_keyword("fun")) {
      p.expect_keyword("fun");
      while (p.at_name()) {
        std::vector<std::string> names{p.name()};
        while (p.skip_symbol(",")) names.push_back(p.name());
        p.expect_symbol(":");
        std::vector<std::string> cats{p.name()};
        while (p.skip_symbol("->")) cats.push_back(p.name());
        p.expect_symbol(";");
        for (const auto &n : names) {
          GfFunction &fn = g->functions[n];
          fn.name = n;
          fn.result = cats.back();
          fn.arg_categories.assign(cats.begin(), cats.end() - 1);
        }
      }
    } else {
      p.fail("'flags', 'cat', 'fun' or '}'");
    }
  }
}

struct Concrete {
  std::map<std::string, std::string> lincats;
  std::map<std::string, std::pair<std::vector<std::string>, Expr>> lins;
  std::map<std::string, std::pair<std::string, Expr>> opers;  // declared type, definition
};

void read_concrete(Parser &p, Concrete *c) {
  p.expect_keyword("concrete");
  p.name();
  p.expect_keyword("of");
  p.name();
  p.expect_symbol("=");
  if (p.at_keyword("open")) {
    p.expect_keyword("open");
    p.name();
    while (p.skip_symbol(",")) p.name();
    p.expect_keyword("in");
  }
  p.expect_symbol("{");
  while (!p.skip_symbol("}")) {
    if (p.at_keyword("flags")) {
      p.expect_keyword("flags");
      while (p.at_name()) {
        p.name();
        p.expect_symbol("=");
        p.name();
        p.expect_symbol(";");
      }
    } else if (p.at_keyword("lincat")) {
      p.expect_keyword("lincat");
      while (p.at_name()) {
        std::string cat = p.name();
        p.expect_symbol("=");
        c->lincats[cat] = p.name();
        p.expect_symbol(";");
      }
    } else if (p.at_keyword("lin")) {
      p.expect_keyword("lin");
      while (p.at_name()) {
        std::string fn = p.name();
        std::vector<std::string> params;
        while (p.at_name()) params.push_back(p.name());
        p.expect_symbol("=");
        Expr body = p.application();
        p.expect_symbol(";");
        c->lins[fn] = {params, body};
      }
    } else if (p.at_keyword("oper")) {
      p.expect_keyword("oper");
      while (p.at_name()) {
        std::string name = p.name();
        std::string type;
        if (p.skip_symbol(":")) type = p.name();
        p.expect_symbol("=");
        Expr def = p.application();
        p.expect_symbol(";");
        c->opers[name] = {type, def};
      }
    } else {
      p.fail("'lincat', 'lin', 'oper' or '}'");
    }
  }
}

}  // namespace

Expr parse_expr(std::string_view text) {
  Parser p(text);
  Expr e = p.application();
  if (!p.at_end()) p.fail("end of expression");
  return e;
}

Grammar read_grammar(const std::vector<std::string> &sources) {
  Grammar g;
  Concrete c;
  bool have_abstract = false, have_concrete = false;
  for (const auto &src : sources) {
    Parser p(src);
    while (!p.at_end()) {
      if (p.at_keyword("abstract")) {
        if (have_abstract) p.fail("a single abstract module");
        read_abstract(p, &g);
        have_abstract = true;
      } else if (p.at_keyword("concrete")) {
        if (have_concrete) p.fail("a single concrete module");
        read_concrete(p, &c);
        have_concrete = true;
      } else {
        p.fail("'abstract' or 'concrete'");
      }
    }
  }
  if (!have_abstract) throw ParseError("no abstract module", 0);

  g.lincats = c.lincats;
  for (auto &[name, fn] : g.functions) {
    auto it = c.lins.find(name);
    if (it == c.lins.end()) {
      if (have_concrete) throw LookupError("function " + name + " has no lin");
      continue;
    }
    fn.params = it->second.first;
    fn.linearization = it->second.second;
  }
  for (const auto &[name, lin] : c.lins) {
    if (!g.functions.count(name)) throw LookupError("lin for undeclared function " + name);
  }

  // Oper categories: declared, or inferred once every referenced oper is known.
  std::map<std::string, std::string> scope;
  std::set<std::string> active;
  std::function<void(const std::string &)> infer = [&](const std::string &name) {
    if (scope.count(name)) return;
    if (!active.insert(name).second) throw TypeError("oper " + name + " is defined in terms of itself");
    const auto &[type, def] = c.opers.at(name);
    std::set<std::string> refs;
    collect_refs(def, &refs);
    for (const auto &r : refs) {
      if (c.opers.count(r)) infer(r);
    }
    scope[name] = type.empty() ? infer_category(def, scope) : type;
    active.erase(name);
  };
  for (const auto &[name, oper] : c.opers) {
    infer(name);
    g.opers[name] = GfOper{name, scope[name], oper.second};
  }
  return g;
}

}  // namespace gfgen
