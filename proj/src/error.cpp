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

#include "gmc/error.hpp"

#include <fmt/format.h>

namespace gmc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::BadDimension: return "BadDimension";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ConstraintViolated: return "ConstraintViolated";
    case ErrorKind::NegativeCoefficient: return "NegativeCoefficient";
    case ErrorKind::NonLinearMap: return "NonLinearMap";
    case ErrorKind::InvalidChannel: return "InvalidChannel";
    case ErrorKind::NotTracePreserving: return "NotTracePreserving";
    case ErrorKind::NotEV: return "NotEV";
    case ErrorKind::NotKF: return "NotKF";
    case ErrorKind::NotLF: return "NotLF";
    case ErrorKind::ZeroEigenvalue: return "ZeroEigenvalue";
    case ErrorKind::NotCPAtTime: return "NotCPAtTime";
    case ErrorKind::ProfileDomain: return "ProfileDomain";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::InvariantError: return "InvariantError";
  }
  return "Unknown";
}

std::string describe(const Violation& v) {
  std::string idx;
  for (std::size_t i = 0; i < v.indices.size(); ++i) {
    if (i) idx += ',';
    idx += std::to_string(v.indices[i]);
  }
  return fmt::format("{}({}) residual={:.3e}", v.label, idx, v.residual);
}

ConditionError::ConditionError(ErrorKind kind, std::vector<Violation> violations,
                               const std::string& what)
    : Error(kind, [&] {
        std::string msg = what;
        for (const auto& v : violations) msg += "\n  " + describe(v);
        return msg;
      }()),
      violations_(std::move(violations)) {}

}  // namespace gmc
