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

#include "gmc/basis.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include <fmt/format.h>

#include "gmc/error.hpp"

namespace gmc {

namespace {

void check_dimension(int n) {
  if (n < 2) {
    throw Error(ErrorKind::BadDimension,
                fmt::format("dimension must be >= 2, got {}", n));
  }
}

}  // namespace

MatrixC matrix_unit(int n, int i, int j) {
  MatrixC m = MatrixC::Zero(n, n);
  m(i, j) = 1.0;
  return m;
}

MatrixC gell_mann(int n, int i, int j) {
  check_dimension(n);
  if (i < 0 || j < 0 || i >= n || j >= n) {
    throw Error(ErrorKind::IndexOutOfRange,
                fmt::format("index ({}, {}) out of range for n = {}", i, j, n));
  }
  MatrixC m = MatrixC::Zero(n, n);
  if (i == 0 && j == 0) {
    m.setIdentity();
  } else if (i < j) {
    m(i, j) = 1.0;
    m(j, i) = 1.0;
  } else if (i > j) {
    // sigma_ij for i > j is -i(e_ji - e_ij).
    m(j, i) = Complex(0.0, -1.0);
    m(i, j) = Complex(0.0, 1.0);
  } else {
    const double scale = std::sqrt(2.0 / (static_cast<double>(j) * (j + 1)));
    for (int a = 0; a < j; ++a) m(a, a) = scale;
    m(j, j) = -scale * j;
  }
  return m;
}

GellMannBasis::GellMannBasis(int n) : n_(n) {
  check_dimension(n);
  matrices_.reserve(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) matrices_.push_back(gell_mann(n, i, j));
}

const GellMannBasis& GellMannBasis::shared(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<const GellMannBasis>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<const GellMannBasis>(n);
  return *slot;
}

void require_square(const MatrixC& m, int n, const char* what) {
  if (m.rows() != n || m.cols() != n) {
    throw Error(ErrorKind::DimensionMismatch,
                fmt::format("{}: expected {}x{}, got {}x{}", what, n, n,
                            m.rows(), m.cols()));
  }
}

Complex hs_inner(const MatrixC& a, const MatrixC& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::DimensionMismatch,
                fmt::format("hs_inner: {}x{} vs {}x{}", a.rows(), a.cols(),
                            b.rows(), b.cols()));
  }
  return (a.conjugate().array() * b.array()).sum();
}

ComplexTable decompose(const MatrixC& x, const GellMannBasis& basis) {
  const int n = basis.dim();
  require_square(x, n, "decompose");
  ComplexTable c(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      c(i, j) = hs_inner(basis(i, j), x) / basis.norm_sq(i, j);
  return c;
}

MatrixC recompose(const ComplexTable& coeffs, const GellMannBasis& basis) {
  const int n = basis.dim();
  if (coeffs.rows() != n || coeffs.cols() != n) {
    throw Error(ErrorKind::DimensionMismatch,
                "recompose: coefficient table shape does not match basis");
  }
  MatrixC out = MatrixC::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out += coeffs(i, j) * basis(i, j);
  return out;
}

}  // namespace gmc
