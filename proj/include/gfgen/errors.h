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

#ifndef GFGEN_ERRORS_H_
#define GFGEN_ERRORS_H_

#include <stdexcept>
#include <string>

namespace gfgen {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. Carries the 1-based line number when known (0
// otherwise).
class ParseError : public Error {
 public:
  ParseError(const std::string &message, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message
                       : message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Well-formed rows that do not form a valid dependency forest.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// A chunk or component cannot be realized in the requested category.
class CategoryError : public Error {
 public:
  using Error::Error;
};

// Unknown grammar function, oper or annotation.
class LookupError : public Error {
 public:
  using Error::Error;
};

// A constructor application does not match any signature.
class TypeError : public Error {
 public:
  using Error::Error;
};

}  // namespace gfgen

#endif  // GFGEN_ERRORS_H_
