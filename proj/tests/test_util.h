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

#ifndef GFGEN_TESTS_TEST_UTIL_H_
#define GFGEN_TESTS_TEST_UTIL_H_

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "gfgen/ingest.h"

namespace gfgen::testing {

inline std::string data_path(const std::string &relative) {
  return std::string(GFGEN_TEST_DATA) + "/" + relative;
}

inline std::string read_data(const std::string &relative) {
  std::ifstream in(data_path(relative), std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + relative);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// The single sentence of a fixture file.
inline SentenceFacts load_sentence(const std::string &relative) {
  auto parsed = parse_conllu(read_data(relative));
  if (parsed.size() != 1) throw std::runtime_error(relative + " must hold one sentence");
  return parsed.front();
}

}  // namespace gfgen::testing

#endif  // GFGEN_TESTS_TEST_UTIL_H_
