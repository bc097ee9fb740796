// Copyright 2026 The degreal Authors
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

#ifndef DEGREAL_ERRORS_HPP_
#define DEGREAL_ERRORS_HPP_

#include <stdexcept>

namespace degreal {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (non-integer token, bad edge line).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Argument outside the domain of an operation (negative degree, gamma out of
// range, empty input).
class DomainError : public Error {
 public:
  using Error::Error;
};

class NotGraphicError : public Error {
 public:
  using Error::Error;
};

// Flow network violating its structural invariants.
class NetworkError : public Error {
 public:
  using Error::Error;
};

// A flow does not saturate, so no prefix-dominated / nu-matched bipartite
// realization can be read off it.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// A caller-supplied object violates the precondition of an operation.
class ContractError : public Error {
 public:
  using Error::Error;
};

// A flip whose preconditions do not hold.
class FlipError : public Error {
 public:
  using Error::Error;
};

// Exhaustive oracle asked to go past its configured instance bound.
class LimitError : public Error {
 public:
  using Error::Error;
};

// Broken internal invariant. Always a bug, never an input problem.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace degreal

#endif  // DEGREAL_ERRORS_HPP_
