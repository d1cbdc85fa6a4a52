// Copyright 2026 The twograph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>

namespace twograph {

/// An operation was called outside its domain (bad vertex, non-edge, size mismatch).
class PreconditionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A rewrite produced a value that breaks a representation invariant.
class InvariantError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// Malformed text input (state documents, operation strings).
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace twograph
