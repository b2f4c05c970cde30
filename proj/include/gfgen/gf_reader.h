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

#ifndef GFGEN_GF_READER_H_
#define GFGEN_GF_READER_H_

#include <string>
#include <string_view>
#include <vector>

#include "gfgen/gf_syntax.h"

namespace gfgen {

// Parses one constructor expression or abstract tree, e.g.
// `simple_sent Bill Play Soccer` or `input_2 "web link" "url"`.
Expr parse_expr(std::string_view text);

// Parses GF modules (one abstract plus one English concrete, in any
// order) in the subset written by the exporter; the compact layout of
// hand-written grammars (several declarations per line) is accepted too.
// Oper categories are inferred from their definitions. Throws ParseError
// with a line number on malformed input and TypeError on ill-typed opers.
Grammar read_grammar(const std::vector<std::string> &sources);

}  // namespace gfgen

#endif  // GFGEN_GF_READER_H_
