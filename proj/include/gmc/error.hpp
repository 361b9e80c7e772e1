// Copyright 2026 The gmc Authors.
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

#ifndef GMC_ERROR_HPP
#define GMC_ERROR_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gmc {

enum class ErrorKind {
  IndexOutOfRange,
  BadDimension,
  DimensionMismatch,
  ConstraintViolated,
  NegativeCoefficient,
  NonLinearMap,
  InvalidChannel,
  NotTracePreserving,
  NotEV,
  NotKF,
  NotLF,
  ZeroEigenvalue,
  NotCPAtTime,
  ProfileDomain,
  ParseError,
  SchemaError,
  InvariantError,
};

std::string_view to_string(ErrorKind kind);

// A (row, col) position in an n x n coefficient table.
struct IndexPair {
  int row = 0;
  int col = 0;
  friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

// Base exception for every library failure. The kind is the stable,
// machine-checkable part; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised when a coefficient table fails at a specific entry
// (NegativeCoefficient, InvariantError).
class EntryError : public Error {
 public:
  EntryError(ErrorKind kind, IndexPair where, const std::string& what)
      : Error(kind, what), where_(where) {}

  IndexPair where() const noexcept { return where_; }

 private:
  IndexPair where_;
};

// One failed equality between two tabulated quantities. `label` names the
// condition family; `indices` carries the indices it was evaluated at.
struct Violation {
  std::string label;
  std::vector<int> indices;
  double residual = 0.0;
};

std::string describe(const Violation& v);

// Raised by converters whose precondition fails (NotEV, NotKF, NotLF).
class ConditionError : public Error {
 public:
  ConditionError(ErrorKind kind, std::vector<Violation> violations,
                 const std::string& what);

  const std::vector<Violation>& violations() const noexcept {
    return violations_;
  }

 private:
  std::vector<Violation> violations_;
};

// Raised at a specific sample of a time grid (ZeroEigenvalue, NotCPAtTime).
class TimeIndexError : public Error {
 public:
  TimeIndexError(ErrorKind kind, std::size_t time_index,
                 const std::string& what)
      : Error(kind, what), time_index_(time_index) {}

  std::size_t time_index() const noexcept { return time_index_; }

 private:
  std::size_t time_index_;
};

}  // namespace gmc

#endif  // GMC_ERROR_HPP
