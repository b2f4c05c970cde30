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

#include "gfgen/pipeline.h"

#include "gfgen/errors.h"
#include "gfgen/linearizer.h"

namespace gfgen {

SentenceAnalysis analyze_sentence(const SentenceFacts &facts, const EncodeOptions &options) {
  SentenceAnalysis a;
  a.structures = recognize(facts);
  a.selected = select(a.structures);
  if (!a.selected) {
    a.skip_reason = "no sentence structure recognized";
    return a;
  }
  try {
    a.components = main_components(facts, *a.selected);
    for (const auto &[role, index] : a.components->roles()) {
      a.chunks.emplace_back(role, build_chunk(facts, index));
    }
    a.grammar = encode_sentence(facts, *a.selected, *a.components, options);
  } catch (const Error &e) {
    a.grammar.reset();
    a.skip_reason = e.what();
  }
  return a;
}

const GfFunction &sentence_function(const Grammar &fragment) {
  if (fragment.functions.size() != 1) {
    throw LookupError("grammar " + fragment.name + " has " +
                      std::to_string(fragment.functions.size()) + " functions, expected one");
  }
  return fragment.functions.begin()->second;
}

std::string regenerate(const Grammar &fragment) {
  return linearize(fragment, Expr::ref(sentence_function(fragment).name));
}

}  // namespace gfgen
