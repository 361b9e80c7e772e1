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


#include <cmath>

#include <doctest.h>

#include "gmc/basis.hpp"
#include "gmc/error.hpp"
#include "gmc/sampling.hpp"
#include "oracles.hpp"

using namespace gmc;

TEST_SUITE("basis") {

TEST_CASE("individual matrices") {
  MatrixC x(2, 2);
  x << 0, 1, 1, 0;
  CHECK(gell_mann(2, 0, 1) == x);
  CHECK(gell_mann(4, 0, 0) == MatrixC::Identity(4, 4));

  MatrixC d = MatrixC::Zero(3, 3);
  d.diagonal() << 1, 1, -2;
  d /= std::sqrt(3.0);
  CHECK(oracle::max_entry(gell_mann(3, 2, 2) - d) < 1e-15);

  for (int n = 2; n <= 5; ++n)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        CHECK(oracle::max_entry(gell_mann(n, i, j) - oracle::gell_mann(n, i, j)) < 1e-15);
}

TEST_CASE("n = 2 is the Pauli set") {
  const GellMannBasis b(2);
  MatrixC sx(2, 2), sy(2, 2), sz(2, 2);
  sx << 0, 1, 1, 0;
  sy << 0, Complex(0, -1), Complex(0, 1), 0;
  sz << 1, 0, 0, -1;
  CHECK(b(0, 0) == MatrixC::Identity(2, 2));
  CHECK(b(0, 1) == sx);
  CHECK(b(1, 0) == sy);
  CHECK(b(1, 1) == sz);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(gell_mann(1, 0, 0), Error);
  try {
    gell_mann(3, 3, 0);
    FAIL("expected IndexOutOfRange");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IndexOutOfRange);
  }
  try {
    GellMannBasis b(1);
    FAIL("expected BadDimension");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadDimension);
  }
  try {
    hs_inner(MatrixC::Identity(2, 2), MatrixC::Identity(3, 3));
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimensionMismatch);
  }
}

TEST_CASE("hermiticity, traces, orthogonality, norms for n = 2..8") {
  for (int n = 2; n <= 8; ++n) {
    const GellMannBasis b(n);
    REQUIRE(b.size() == n * n);
    double worst = 0.0;
    for (int a = 0; a < b.size(); ++a) {
      const MatrixC& s = b.at(a);
      worst = std::max(worst, oracle::max_entry(s - s.adjoint()));
      const double tr = a == 0 ? n : 0.0;
      worst = std::max(worst, std::abs(s.trace() - tr));
      for (int c = 0; c < b.size(); ++c) {
        const double want = a != c ? 0.0 : (a == 0 ? n : 2.0);
        worst = std::max(worst, std::abs(hs_inner(s, b.at(c)) - want));
      }
    }
    CHECK(worst <= 1e-14);
  }
}

TEST_CASE("hs_inner examples") {
  const GellMannBasis b2(2), b3(3);
  CHECK(hs_inner(b2(0, 1), b2(0, 1)) == Complex(2, 0));
  CHECK(std::abs(hs_inner(b3(0, 0), b3(1, 1))) < 1e-15);
  CHECK(std::abs(hs_inner(b3(0, 1), b3(1, 0))) < 1e-15);
  // Tr(A^dagger B) is conjugate-linear in A.
  CHECK(std::abs(hs_inner(Complex(0, 1) * b2(0, 0), b2(0, 0)) - Complex(0, -2)) < 1e-15);
}

TEST_CASE("decompose and recompose") {
  const GellMannBasis b2(2);
  const ComplexTable c = decompose(matrix_unit(2, 0, 0), b2);
  CHECK(std::abs(c(0, 0) - 0.5) < 1e-15);
  CHECK(std::abs(c(1, 1) - 0.5) < 1e-15);
  CHECK(std::abs(c(0, 1)) < 1e-15);
  CHECK(std::abs(c(1, 0)) < 1e-15);

  const GellMannBasis b3(3);
  const ComplexTable unit = decompose(b3(1, 1), b3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(std::abs(unit(i, j) - ((i == 1 && j == 1) ? 1.0 : 0.0)) < 1e-15);

  Sampler s(11);
  for (int n = 2; n <= 6; ++n) {
    const GellMannBasis& b = GellMannBasis::shared(n);
    for (int rep = 0; rep < 20; ++rep) {
      const MatrixC x = s.complex_matrix(n);
      CHECK(oracle::max_entry(recompose(decompose(x, b), b) - x) <= 1e-12);
      const MatrixC h = x + x.adjoint();
      const ComplexTable hc = decompose(h, b);
      CHECK(hc.imag().cwiseAbs().maxCoeff() <= 1e-14);
    }
  }
  CHECK_THROWS_AS(decompose(MatrixC::Identity(3, 3), b2), Error);
}

}
