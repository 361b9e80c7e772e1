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

#ifndef GMC_SRC_TABLE_CHECKS_HPP
#define GMC_SRC_TABLE_CHECKS_HPP

#include <cmath>

#include <fmt/format.h>

#include "gmc/basis.hpp"
#include "gmc/error.hpp"

namespace gmc::detail {

inline void check_table(const RealTable& t, const char* what) {
  if (t.rows() != t.cols()) {
    throw Error(ErrorKind::DimensionMismatch,
                fmt::format("{}: table must be square, got {}x{}", what, t.rows(),
                            t.cols()));
  }
  if (t.rows() < 2) {
    throw Error(ErrorKind::BadDimension,
                fmt::format("{}: dimension must be >= 2, got {}", what, t.rows()));
  }
  for (int i = 0; i < t.rows(); ++i)
    for (int j = 0; j < t.cols(); ++j)
      if (!std::isfinite(t(i, j))) {
        throw EntryError(ErrorKind::InvariantError, {i, j},
                         fmt::format("{}: entry ({}, {}) is not finite", what, i, j));
      }
}

// 1 / (k (k + 1)), the weight that recurs in every diagonal formula.
inline double inv_kk1(int k) {
  const double d = k;
  return 1.0 / (d * (d + 1.0));
}

}  // namespace gmc::detail

#endif  // GMC_SRC_TABLE_CHECKS_HPP
