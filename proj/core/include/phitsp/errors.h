// Copyright 2026 The phitsp Authors
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

#ifndef PHITSP_ERRORS_H_
#define PHITSP_ERRORS_H_

#include <stdexcept>
#include <string>

namespace phitsp {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An edge multiset references edges that do not exist in its host graph.
class MalformedMultisetError : public Error {
 public:
  using Error::Error;
};

// Some connected component holds an odd number of T-vertices.
class NoTJoinError : public Error {
 public:
  using Error::Error;
};

// A perfect matching would need a pair with infinite cost.
class NoMatchingError : public Error {
 public:
  using Error::Error;
};

// The instance admits no Phi-tour.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// A configured enumeration or size cap was exceeded.
class SizeCapError : public Error {
 public:
  using Error::Error;
};

// Uncrossing did not reach a laminar dual within its step budget.
class UncrossingError : public Error {
 public:
  using Error::Error;
};

// An argument violates a documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Malformed instance or tour text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace phitsp

#endif  // PHITSP_ERRORS_H_
