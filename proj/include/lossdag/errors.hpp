// Copyright 2026 The lossdag Authors.
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

#pragma once

#include <stdexcept>
#include <string>

namespace lossdag {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Static / structural problems: bad arity, no matching operator signature,
// malformed graphs. A graph that passed validation never raises these.
struct TypeError : Error {
  using Error::Error;
};

// Runtime payload shapes that cannot be reconciled (two batched operands of
// different length, mismatched widths beyond scalar broadcast).
struct ShapeError : Error {
  using Error::Error;
};

// Numerically invalid inputs to an otherwise well-typed evaluation
// (clip bounds inverted, unsupported density head). Search code treats
// these as a failed candidate, not a fault.
struct DomainError : Error {
  using Error::Error;
};

struct ParseError : Error {
  int line = 0;
  ParseError(int line_, const std::string& msg)
      : Error("parse error (line " + std::to_string(line_) + "): " + msg),
        line(line_) {}
};

struct SchemaVersionMismatch : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace lossdag
