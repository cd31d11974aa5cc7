// Copyright 2026 The fuzzyloss Authors
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

namespace fuzzyloss {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument does not hold (bad level, empty data, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A real value was used where a label was expected, or vice versa.
class TypeMismatch : public Error {
 public:
  using Error::Error;
};

/// The requested loss cannot be applied to the kind of data supplied.
class IncompatibleLoss : public Error {
 public:
  using Error::Error;
};

/// An interval too narrow for a likelihood-based loss.
class DegenerateInterval : public Error {
 public:
  using Error::Error;
};

/// Malformed dataset, model or datum text.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace fuzzyloss
