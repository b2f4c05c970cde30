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

#include "gfgen/eval.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "gfgen/errors.h"
#include "gfgen/gf_exporter.h"
#include "gfgen/ingest.h"
#include "gfgen/linearizer.h"
#include "gfgen/pipeline.h"

namespace gfgen {

namespace {

using NgramCounts = std::map<std::vector<std::string>, int>;

NgramCounts ngrams(const std::vector<std::string> &tokens, size_t n) {
  NgramCounts out;
  for (size_t i = 0; i + n <= tokens.size(); ++i) {
    ++out[std::vector<std::string>(tokens.begin() + i, tokens.begin() + i + n)];
  }
  return out;
}

int clipped_overlap(const NgramCounts &hyp, const NgramCounts &ref) {
  int total = 0;
  for (const auto &[gram, count] : hyp) {
    auto it = ref.find(gram);
    if (it != ref.end()) total += std::min(count, it->second);
  }
  return total;
}

double f1(double overlap, double hyp_total, double ref_total) {
  if (overlap == 0 || hyp_total == 0 || ref_total == 0) return 0;
  double p = overlap / hyp_total, r = overlap / ref_total;
  return 100.0 * 2 * p * r / (p + r);
}

size_t lcs_length(const std::vector<std::string> &a, const std::vector<std::string> &b) {
  std::vector<size_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (size_t i = 1; i <= a.size(); ++i) {
    for (size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

std::string read_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <typename T, typename F>
double mean_of(const std::vector<T> &items, F value) {
  if (items.empty()) return 0;
  double sum = 0;
  for (const auto &i : items) sum += value(i);
  return sum / static_cast<double>(items.size());
}

}  // namespace

std::vector<std::string> score_tokens(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string w;
  while (in >> w) {
    size_t b = 0, e = w.size();
    while (b < e && std::ispunct(static_cast<unsigned char>(w[b]))) ++b;
    while (e > b && std::ispunct(static_cast<unsigned char>(w[e - 1]))) --e;
    if (b == e) continue;
    std::string t = w.substr(b, e - b);
    for (char &c : t) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    out.push_back(t);
  }
  return out;
}

BleuResult bleu3(const std::vector<std::string> &hypothesis,
                 const std::vector<std::string> &reference) {
  BleuResult r;
  if (hypothesis.empty()) return r;
  double log_sum = 0;
  r.assessable = true;
  for (size_t n = 1; n <= 3; ++n) {
    NgramCounts hyp = ngrams(hypothesis, n);
    int total = hypothesis.size() >= n ? static_cast<int>(hypothesis.size() - n + 1) : 0;
    int overlap = clipped_overlap(hyp, ngrams(reference, n));
    r.precisions[n - 1] = total ? static_cast<double>(overlap) / total : 0;
    if (r.precisions[n - 1] == 0) {
      r.assessable = false;
    } else {
      log_sum += std::log(r.precisions[n - 1]) / 3.0;
    }
  }
  double c = static_cast<double>(hypothesis.size()), ref_len = static_cast<double>(reference.size());
  r.brevity_penalty = c < ref_len ? std::exp(1.0 - ref_len / c) : 1.0;
  r.score = r.assessable ? 100.0 * r.brevity_penalty * std::exp(log_sum) : 0.0;
  return r;
}

RougeScores rouge(const std::vector<std::string> &hypothesis,
                  const std::vector<std::string> &reference) {
  RougeScores s;
  for (size_t n : {1u, 2u}) {
    NgramCounts hyp = ngrams(hypothesis, n), ref = ngrams(reference, n);
    double hyp_total = hypothesis.size() >= n ? static_cast<double>(hypothesis.size() - n + 1) : 0;
    double ref_total = reference.size() >= n ? static_cast<double>(reference.size() - n + 1) : 0;
    double score = f1(clipped_overlap(hyp, ref), hyp_total, ref_total);
    (n == 1 ? s.rouge1 : s.rouge2) = score;
  }
  s.rougeL = f1(static_cast<double>(lcs_length(hypothesis, reference)),
                static_cast<double>(hypothesis.size()), static_cast<double>(reference.size()));
  return s;
}

std::vector<PortalReport> run_corpus(const std::filesystem::path &corpus_dir,
                                     std::vector<std::string> *warnings) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(corpus_dir)) throw Error("corpus directory " + corpus_dir.string() + " not found");
  auto warn = [&](const std::string &w) {
    if (warnings) warnings->push_back(w);
  };
  std::vector<fs::path> portals;
  for (const auto &entry : fs::directory_iterator(corpus_dir)) {
    if (entry.is_directory() && fs::exists(entry.path() / "sentences.tsv")) portals.push_back(entry.path());
  }
  std::sort(portals.begin(), portals.end());

  std::vector<PortalReport> reports;
  for (const auto &dir : portals) {
    PortalReport report;
    report.portal = dir.filename().string();
    std::istringstream lines(read_file(dir / "sentences.tsv"));
    std::string line;
    std::vector<Grammar> fragments;
    std::vector<std::string> function_names;
    while (std::getline(lines, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      size_t tab = line.find('\t');
      if (tab == std::string::npos) throw ParseError(report.portal + "/sentences.tsv: expected id<TAB>text", 0);
      SentenceEval s;
      s.id = line.substr(0, tab);
      s.reference = line.substr(tab + 1);
      ++report.n_sentences;
      fs::path parse_path = dir / (s.id + ".conllu");
      try {
        if (!fs::exists(parse_path)) throw Error("missing parse " + parse_path.string());
        auto parsed = parse_conllu(read_file(parse_path));
        if (parsed.size() != 1) throw Error(parse_path.string() + " must hold exactly one sentence");
        SentenceFacts facts = parsed.front();
        facts.sentence_id = s.id;
        SentenceAnalysis a = analyze_sentence(facts);
        if (a.recognized()) {
          s.recognized = true;
          s.grammar_problems = check_grammar(*a.grammar);
          function_names.push_back(sentence_function(*a.grammar).name);
          fragments.push_back(*a.grammar);
        } else {
          s.skip_reason = a.skip_reason;
          function_names.emplace_back();
        }
      } catch (const Error &e) {
        warn(report.portal + "/" + s.id + ": " + e.what());
        s.skip_reason = e.what();
        function_names.emplace_back();
      }
      report.sentences.push_back(s);
    }

    Grammar merged = merge(fragments);
    std::vector<const SentenceEval *> recognized, assessable;
    for (size_t i = 0; i < report.sentences.size(); ++i) {
      SentenceEval &s = report.sentences[i];
      if (!s.recognized) continue;
      s.hypothesis = linearize(merged, Expr::ref(function_names[i]));
      auto hyp = score_tokens(s.hypothesis), ref = score_tokens(s.reference);
      s.bleu = bleu3(hyp, ref);
      s.rouge = rouge(hyp, ref);
      recognized.push_back(&s);
      if (s.bleu.assessable) assessable.push_back(&s);
    }
    report.n_recognized = static_cast<int>(recognized.size());
    report.n_bleu_assessable = static_cast<int>(assessable.size());
    report.bleu3 = mean_of(assessable, [](const SentenceEval *s) { return s->bleu.score; });
    report.rouge1 = mean_of(recognized, [](const SentenceEval *s) { return s->rouge.rouge1; });
    report.rouge2 = mean_of(recognized, [](const SentenceEval *s) { return s->rouge.rouge2; });
    report.rougeL = mean_of(recognized, [](const SentenceEval *s) { return s->rouge.rougeL; });
    reports.push_back(std::move(report));
  }
  return reports;
}

std::string report_csv(const std::vector<PortalReport> &reports) {
  std::string out = "portal,n_sentences,n_recognized,n_bleu_assessable,bleu3,rouge1,rouge2,rougeL\n";
  for (const auto &r : reports) {
    char buf[160];
    std::snprintf(buf, sizeof buf, ",%d,%d,%d,%.1f,%.1f,%.1f,%.1f\n", r.n_sentences, r.n_recognized,
                  r.n_bleu_assessable, r.bleu3, r.rouge1, r.rouge2, r.rougeL);
    out += r.portal + buf;
  }
  return out;
}

}  // namespace gfgen
