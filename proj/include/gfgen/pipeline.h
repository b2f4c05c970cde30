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

#ifndef GFGEN_PIPELINE_H_
#define GFGEN_PIPELINE_H_

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gfgen/components.h"
#include "gfgen/gf_encoder.h"
#include "gfgen/gf_syntax.h"
#include "gfgen/ingest.h"
#include "gfgen/structure.h"

namespace gfgen {

// Everything the pipeline learned about one sentence.
struct SentenceAnalysis {
  std::set<StructureAtom> structures;
  std::optional<StructureAtom> selected;
  std::optional<ComponentMap> components;
  std::vector<std::pair<std::string, Chunk>> chunks;  // per component role
  std::optional<Grammar> grammar;
  std::string skip_reason;  // set when no grammar was produced

  bool recognized() const { return grammar.has_value(); }
};

// Structure recognition, selection, component and chunk discovery, and GF
// encoding. Unrecognizable or unencodable sentences are reported through
// `skip_reason` rather than thrown.
SentenceAnalysis analyze_sentence(const SentenceFacts &facts, const EncodeOptions &options = {});

// The single function of a per-sentence grammar.
const GfFunction &sentence_function(const Grammar &fragment);

// Regenerates the sentence encoded by a closed per-sentence grammar.
std::string regenerate(const Grammar &fragment);

}  // namespace gfgen

#endif  // GFGEN_PIPELINE_H_
