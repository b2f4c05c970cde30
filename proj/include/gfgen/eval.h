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

#ifndef GFGEN_EVAL_H_
#define GFGEN_EVAL_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace gfgen {

// Lowercase, split on whitespace, strip leading and trailing ASCII
// punctuation from each token, drop tokens that become empty.
std::vector<std::string> score_tokens(std::string_view text);

struct BleuResult {
  double score = 0;          // 0..100
  double precisions[3] = {};  // modified 1/2/3-gram precisions
  double brevity_penalty = 0;
  bool assessable = false;   // all three precisions nonzero
};

// Sentence-level BLEU-3 with weights 1/3 each.
BleuResult bleu3(const std::vector<std::string> &hypothesis,
                 const std::vector<std::string> &reference);

struct RougeScores {
  double rouge1 = 0, rouge2 = 0, rougeL = 0;  // F1, 0..100
};

RougeScores rouge(const std::vector<std::string> &hypothesis,
                  const std::vector<std::string> &reference);

struct SentenceEval {
  std::string id;
  std::string reference;
  std::string hypothesis;
  bool recognized = false;
  std::string skip_reason;
  std::vector<std::string> grammar_problems;  // from the type checker
  BleuResult bleu;
  RougeScores rouge;
};

struct PortalReport {
  std::string portal;
  int n_sentences = 0;
  int n_recognized = 0;
  int n_bleu_assessable = 0;
  double bleu3 = 0;  // mean over assessable sentences
  double rouge1 = 0, rouge2 = 0, rougeL = 0;  // means over recognized sentences
  std::vector<SentenceEval> sentences;
};

// Each subdirectory of `corpus_dir` is a portal holding sentences.tsv
// (id<TAB>text) and one <id>.conllu parse per sentence. A missing or
// unreadable parse is reported on `warnings` and counts as unrecognized.
// Sentences are encoded, merged into one grammar per portal, and
// regenerated from it.
std::vector<PortalReport> run_corpus(const std::filesystem::path &corpus_dir,
                                     std::vector<std::string> *warnings = nullptr);

// CSV with header portal,n_sentences,n_recognized,n_bleu_assessable,
// bleu3,rouge1,rouge2,rougeL; scores to one decimal place.
std::string report_csv(const std::vector<PortalReport> &reports);

}  // namespace gfgen

#endif  // GFGEN_EVAL_H_
