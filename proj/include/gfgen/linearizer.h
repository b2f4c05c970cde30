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

#ifndef GFGEN_LINEARIZER_H_
#define GFGEN_LINEARIZER_H_

#include <string>
#include <string_view>

#include "gfgen/gf_syntax.h"

namespace gfgen {

// English realization of an abstract tree over `g`. A tree is a function
// name applied to argument trees; string literals stand for opaque
// third-person singular noun phrases. No articles are inserted and
// capitalization comes from the lexicon. Throws LookupError for unknown
// functions or names, TypeError for ill-typed expressions.
std::string linearize(const Grammar &g, const Expr &tree);

// Same, with the tree given in GF syntax: "simple_sent Bill Play Soccer".
std::string linearize(const Grammar &g, std::string_view tree);

}  // namespace gfgen

#endif  // GFGEN_LINEARIZER_H_
