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

#ifndef GFGEN_TESTS_METRIC_ORACLE_H_
#define GFGEN_TESTS_METRIC_ORACLE_H_

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

// Slow reference implementations of the n-gram metrics.
namespace gfgen::testing::oracle {

using Tokens = std::vector<std::string>;

// Longest common subsequence length by trying every subsequence of the
// shorter sequence, longest first.
inline size_t lcs_by_subsets(const Tokens &a, const Tokens &b) {
  const Tokens &s = a.size() <= b.size() ? a : b;
  const Tokens &t = a.size() <= b.size() ? b : a;
  size_t best = 0;
  for (unsigned mask = 0; mask < (1u << s.size()); ++mask) {
    Tokens sub;
    for (size_t i = 0; i < s.size(); ++i) {
      if (mask & (1u << i)) sub.push_back(s[i]);
    }
    if (sub.size() <= best) continue;
    size_t j = 0;
    for (const auto &w : t) {
      if (j < sub.size() && sub[j] == w) ++j;
    }
    if (j == sub.size()) best = sub.size();
  }
  return best;
}

// Number of times `gram` occurs in `seq`, found by scanning every offset.
inline size_t occurrences(const Tokens &seq, const Tokens &gram) {
  size_t count = 0;
  for (size_t i = 0; i + gram.size() <= seq.size(); ++i) {
    if (std::equal(gram.begin(), gram.end(), seq.begin() + i)) ++count;
  }
  return count;
}

// Clipped n-gram matches and hypothesis n-gram total.
inline std::pair<size_t, size_t> clipped(const Tokens &hyp, const Tokens &ref, size_t n) {
  if (hyp.size() < n) return {0, 0};
  std::vector<Tokens> seen;
  size_t matches = 0;
  for (size_t i = 0; i + n <= hyp.size(); ++i) {
    Tokens g(hyp.begin() + i, hyp.begin() + i + n);
    if (std::find(seen.begin(), seen.end(), g) != seen.end()) continue;
    seen.push_back(g);
    matches += std::min(occurrences(hyp, g), occurrences(ref, g));
  }
  return {matches, hyp.size() - n + 1};
}

inline double f1(double matches, double hyp_total, double ref_total) {
  if (matches == 0) return 0;
  double p = matches / hyp_total, r = matches / ref_total;
  return 100 * 2 * p * r / (p + r);
}

inline double oracle_bleu(const Tokens &hyp, const Tokens &ref, bool *assessable) {
  double log_sum = 0;
  *assessable = true;
  for (size_t n = 1; n <= 3; ++n) {
    auto [m, total] = clipped(hyp, ref, n);
    if (m == 0) {
      *assessable = false;
      return 0;
    }
    log_sum += std::log(static_cast<double>(m) / total);
  }
  double c = hyp.size(), r = ref.size();
  double bp = c < r ? std::exp(1 - r / c) : 1.0;
  return 100 * bp * std::exp(log_sum / 3);
}

// ROUGE-1, ROUGE-2 and ROUGE-L F1 scores, 0..100.
inline std::array<double, 3> oracle_rouge(const Tokens &hyp, const Tokens &ref) {
  auto [m1, h1] = clipped(hyp, ref, 1);
  auto [m2, h2] = clipped(hyp, ref, 2);
  double ref2 = ref.size() >= 2 ? ref.size() - 1 : 0;
  return {f1(m1, h1, ref.size()), f1(m2, h2, ref2),
          f1(lcs_by_subsets(hyp, ref), hyp.size(), ref.size())};
}

}  // namespace gfgen::testing::oracle

#endif  // GFGEN_TESTS_METRIC_ORACLE_H_
