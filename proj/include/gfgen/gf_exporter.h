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

#ifndef GFGEN_GF_EXPORTER_H_
#define GFGEN_GF_EXPORTER_H_

#include <filesystem>
#include <string>
#include <vector>

#include "gfgen/gf_syntax.h"

namespace gfgen {

// Union of per-sentence fragments. Identical opers collapse; an oper or
// function whose name is taken by a different definition is renamed with a
// numeric suffix and references to it are rewritten. The result does not
// depend on the order of `fragments`.
Grammar merge(const std::vector<Grammar> &fragments);

struct RenderedGrammar {
  std::string abstract_text;  // <name>.gf
  std::string concrete_text;  // <name>Eng.gf
};

RenderedGrammar render(const Grammar &g, const std::string &name);

// Lossless JSON form, including realization metadata that GF text lacks.
std::string grammar_to_json(const Grammar &g);
Grammar grammar_from_json(std::string_view text);

// Writes <name>.gf, <name>Eng.gf and <name>.json into `dir`.
void write_grammar_files(const Grammar &g, const std::filesystem::path &dir,
                         const std::string &name);

}  // namespace gfgen

#endif  // GFGEN_GF_EXPORTER_H_
