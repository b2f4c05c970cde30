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

#include "gfgen/ingest.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>

#include "gfgen/errors.h"

namespace gfgen {

namespace {

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::vector<std::string_view> split_columns(std::string_view line) {
  std::vector<std::string_view> cols;
  if (line.find('\t') != std::string_view::npos) {
    size_t start = 0;
    while (true) {
      size_t tab = line.find('\t', start);
      cols.push_back(line.substr(start, tab - start));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    return cols;
  }
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) cols.push_back(line.substr(i, j - i));
    i = j;
  }
  return cols;
}

bool parse_int(std::string_view s, int *out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), *out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool is_punct_xpos(std::string_view xpos) {
  static const char *kTags[] = {".",     ",",     ":",    "``",  "''",
                                "-LRB-", "-RRB-", "HYPH", "NFP", "\"",
                                "(",     ")"};
  for (const char *tag : kTags) {
    if (xpos == tag) return true;
  }
  return false;
}

// UPOS fallback when XPOS is absent.
std::string pos_from_upos(std::string_view upos) {
  static const std::map<std::string, std::string, std::less<>> kMap = {
      {"NOUN", "nn"}, {"PROPN", "nnp"}, {"ADJ", "jj"},  {"NUM", "cd"},
      {"VERB", "vbp"}, {"PUNCT", "punct"}, {"PRON", "prp"}, {"DET", "dt"},
      {"ADP", "in"},  {"ADV", "rb"},    {"CCONJ", "cc"}, {"AUX", "vbp"},
  };
  auto it = kMap.find(upos);
  if (it != kMap.end()) return it->second;
  return to_lower(upos);
}

struct PendingRow {
  Token token;
  int head = 0;
  std::string relation;
  int line = 0;
};

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

class SentenceBuilder {
 public:
  explicit SentenceBuilder(int ordinal) { facts_.sentence_id = std::to_string(ordinal); }

  void comment(std::string_view body) {
    std::string text = trim(body);
    auto take = [&](std::string_view key, std::string *dst) {
      if (text.rfind(key, 0) != 0) return;
      std::string rest = trim(std::string_view(text).substr(key.size()));
      if (rest.empty() || rest[0] != '=') return;
      *dst = trim(std::string_view(rest).substr(1));
    };
    take("sent_id", &facts_.sentence_id);
    take("text", &facts_.source_text);
  }

  void row(std::string_view line, int line_no) {
    auto cols = split_columns(line);
    if (cols.size() != 10) {
      throw ParseError("expected 10 columns, found " + std::to_string(cols.size()), line_no);
    }
    std::string_view id = cols[0];
    if (id.find('-') != std::string_view::npos || id.find('.') != std::string_view::npos) {
      return;  // multiword range or empty node
    }
    PendingRow r;
    r.line = line_no;
    if (!parse_int(id, &r.token.index)) {
      throw ParseError("non-integer token index '" + std::string(id) + "'", line_no);
    }
    if (r.token.index != static_cast<int>(rows_.size()) + 1) {
      throw ParseError("token index " + std::to_string(r.token.index) +
                           " is out of sequence",
                       line_no);
    }
    r.token.surface = std::string(cols[1]);
    r.token.has_lemma = cols[2] != "_";
    r.token.lemma = r.token.has_lemma ? std::string(cols[2]) : r.token.surface;
    std::string_view upos = cols[3];
    std::string_view xpos = cols[4];
    std::string_view deprel = cols[7];
    if (upos == "PUNCT" || deprel == "punct" || is_punct_xpos(xpos)) {
      r.token.pos = "punct";
    } else if (xpos != "_" && !xpos.empty()) {
      r.token.pos = to_lower(xpos);
    } else {
      r.token.pos = pos_from_upos(upos);
    }
    if (r.token.pos.empty() || r.token.pos == "_") {
      throw ParseError("token has neither XPOS nor UPOS", line_no);
    }
    if (cols[6] == "_") {
      r.head = -1;
    } else if (!parse_int(cols[6], &r.head) || r.head < 0) {
      throw ParseError("non-integer head '" + std::string(cols[6]) + "'", line_no);
    }
    r.relation = std::string(deprel);
    rows_.push_back(std::move(r));
  }

  bool empty() const { return rows_.empty(); }

  SentenceFacts finish() {
    const int n = static_cast<int>(rows_.size());
    for (const auto &r : rows_) {
      if (r.head > n) {
        throw StructuralError("sentence " + facts_.sentence_id + ": head " +
                              std::to_string(r.head) + " of token " +
                              std::to_string(r.token.index) + " does not exist");
      }
    }
    // Every chain of heads must reach 0 (or an unattached token) within n
    // steps.
    for (const auto &r : rows_) {
      int current = r.token.index;
      for (int steps = 0; current > 0; ++steps) {
        if (steps > n) {
          throw StructuralError("sentence " + facts_.sentence_id +
                                ": dependency heads form a cycle through token " +
                                std::to_string(r.token.index));
        }
        current = rows_[current - 1].head;
      }
    }
    for (auto &r : rows_) {
      facts_.tokens.push_back(r.token);
      if (r.head > 0 && to_lower(r.relation) != "root") {
        facts_.deps.push_back({r.relation, r.head, r.token.index});
      }
    }
    if (facts_.source_text.empty()) {
      std::string text;
      for (const auto &t : facts_.tokens) {
        if (!text.empty()) text += ' ';
        text += t.surface;
      }
      facts_.source_text = text;
    }
    return std::move(facts_);
  }

 private:
  SentenceFacts facts_;
  std::vector<PendingRow> rows_;
};

}  // namespace

int SentenceFacts::head_of(int index) const {
  for (const auto &d : deps) {
    if (d.dependent == index) return d.head;
  }
  return 0;
}

int SentenceFacts::depth_of(int index) const {
  int depth = 0;
  for (int h = head_of(index); h > 0 && depth <= static_cast<int>(tokens.size());
       h = head_of(h)) {
    ++depth;
  }
  return depth;
}

std::vector<SentenceFacts> parse_conllu(std::string_view text) {
  std::vector<SentenceFacts> out;
  int ordinal = 1;
  std::optional<SentenceBuilder> current;
  auto flush = [&] {
    if (current && !current->empty()) {
      out.push_back(current->finish());
      ++ordinal;
    }
    current.reset();
  };
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty()) {
      flush();
    } else {
      if (!current) current.emplace(ordinal);
      if (line[0] == '#') {
        current->comment(line.substr(1));
      } else {
        current->row(line, line_no);
      }
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  flush();
  return out;
}

std::string canonical_relation(std::string_view label) {
  std::string rel = to_lower(label);
  if (rel == "obj") return "dobj";
  if (rel == "nsubj:pass") return "nsubjpass";
  if (rel == "aux:pass") return "auxpass";
  if (rel == "csubj:pass") return "csubjpass";
  if (rel == "obl") return "nmod";
  if (rel.rfind("obl:", 0) == 0) rel = "nmod:" + rel.substr(4);
  std::replace(rel.begin(), rel.end(), ':', '_');
  return rel;
}

std::string facts_to_text(const SentenceFacts &facts) {
  std::vector<DependencyFact> deps = facts.deps;
  std::stable_sort(deps.begin(), deps.end(),
                   [](const auto &a, const auto &b) { return a.dependent < b.dependent; });
  std::ostringstream out;
  for (const auto &d : deps) {
    out << canonical_relation(d.relation) << '(' << d.head << ',' << d.dependent << ").\n";
  }
  for (const auto &t : facts.tokens) {
    out << "pos_tag(" << t.index << ',' << t.pos << ").\n";
  }
  return out.str();
}

}  // namespace gfgen
