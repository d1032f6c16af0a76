// Copyright 2026 The iet3 Authors. All Rights Reserved.
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

#ifndef IET3_ERROR_HPP_
#define IET3_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace iet3 {

// Base class of every error raised by the library. Callers that only need to
// distinguish "bad input" from "bug" can catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operation mixed words or morphisms over different alphabets.
class AlphabetError : public Error {
 public:
  using Error::Error;
};

// Numeric argument outside the domain of a transformation (e.g. x0 not in
// [0,1)).
class DomainError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Quadratic numbers with different radicands were combined.
class UnsupportedFieldError : public Error {
 public:
  using Error::Error;
};

class NotUnimodularError : public Error {
 public:
  using Error::Error;
};

class InvalidMatrixError : public Error {
 public:
  using Error::Error;
};

class NotSturmianError : public Error {
 public:
  using Error::Error;
};

class NotAmicableError : public Error {
 public:
  using Error::Error;
};

class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// Malformed textual literal. The message names the offending token.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace iet3

#endif  // IET3_ERROR_HPP_
