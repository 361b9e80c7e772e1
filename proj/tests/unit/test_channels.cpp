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

#include "gmc/channels.hpp"
#include "gmc/experiments.hpp"
#include "gmc/sampling.hpp"
#include "oracles.hpp"

using namespace gmc;

namespace {

RealTable table2(double a, double b, double c, double d) {
  RealTable t(2, 2);
  t << a, b, c, d;
  return t;
}

KrausChannel pauli_58() { return KrausChannel(table2(5.0 / 8, 1.0 / 8, 1.0 / 8, 1.0 / 8)); }

}  // namespace

TEST_SUITE("channels") {

TEST_CASE("apply_kf") {
  Sampler s(3);
  for (int n = 2; n <= 4; ++n) {
    const MatrixC x = s.complex_matrix(n);
    CHECK(oracle::max_entry(apply_kf(KrausChannel::identity(n), x) - x) < 1e-15);
  }
  const auto& b = GellMannBasis::shared(2);
  CHECK(oracle::max_entry(apply_kf(pauli_58(), b(0, 1)) - 0.5 * b(0, 1)) < 1e-15);
  CHECK_THROWS_AS(apply_kf(pauli_58(), MatrixC::Identity(3, 3)), Error);
}

TEST_CASE("apply_ev") {
  Sampler s(4);
  const MatrixC x = s.complex_matrix(3);
  CHECK(oracle::max_entry(apply_ev(EigenChannel::identity(3), x) - x) < 1e-14);

  const EigenChannel ch = s.ev_uniform(3, 1.0);
  const auto& b = GellMannBasis::shared(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(oracle::max_entry(apply_ev(ch, b(i, j)) - ch(i, j) * b(i, j)) < 1e-14);

  const EigenChannel q(table2(1, 0.5, 0.25, 0.25));
  const auto& b2 = GellMannBasis::shared(2);
  const MatrixC rho = 0.5 * (b2(0, 0) + b2(1, 1));
  const MatrixC want = 0.5 * (b2(0, 0) + 0.25 * b2(1, 1));
  CHECK(oracle::max_entry(apply_ev(q, rho) - want) < 1e-15);

  // Linearity and Hermiticity preservation.
  const MatrixC y = s.complex_matrix(3);
  const Complex a(0.3, -1.2), c(-0.7, 0.4);
  CHECK(oracle::max_entry(apply_ev(ch, a * x + c * y) - a * apply_ev(ch, x) - c * apply_ev(ch, y)) <=
        1e-12);
  const MatrixC h = x + x.adjoint();
  const MatrixC out = apply_ev(ch, h);
  CHECK(oracle::max_entry(out - out.adjoint()) <= 1e-12);
  const KrausChannel kf = s.kf_tp(3);
  const MatrixC out2 = apply_kf(kf, h);
  CHECK(oracle::max_entry(out2 - out2.adjoint()) <= 1e-12);
}

TEST_CASE("tp_residuals") {
  for (int n = 2; n <= 6; ++n) {
    const auto r = tp_residuals(KrausChannel::identity(n));
    CHECK(r.size() == static_cast<std::size_t>(n == 2 ? 1 : n));
    CHECK(max_abs(r) == 0.0);
  }
  const auto r = tp_residuals(pauli_58());
  REQUIRE(r.size() == 1);
  CHECK(std::abs(r[0]) < 1e-16);
  CHECK(oracle::trace_defect([](const MatrixC& x) { return apply_kf(pauli_58(), x); }, 2) < 1e-15);

  // Unbalanced columns at n = 4: residual[1] and the direct trace test both fail.
  RealTable p = RealTable::Zero(4, 4);
  p(1, 2) = 0.05;
  p(0, 0) = 0.9;
  const KrausChannel bad(p);
  CHECK(std::abs(tp_residuals(bad)[1]) > 1e-3);
  CHECK(std::abs(apply_kf(bad, matrix_unit(4, 0, 0)).trace() - 1.0) > 1e-3);
}

TEST_CASE("complete_tp") {
  const KrausChannel id = complete_tp(RealTable::Zero(4, 4), 0.0);
  CHECK(id.coefficients() == KrausChannel::identity(4).coefficients());

  const KrausChannel q = complete_tp(table2(0, 1.0 / 8, 1.0 / 8, 0), 1.0 / 8);
  CHECK(q(0, 0) == doctest::Approx(5.0 / 8).epsilon(1e-15));

  RealTable off = RealTable::Constant(3, 3, 1.0 / 20);
  const KrausChannel c3 = complete_tp(off, 1.0 / 20);
  CHECK(std::abs(c3(2, 2) - 1.0 / 20) < 1e-15);
  CHECK(std::abs(c3(0, 0) - (1 - 0.2 - 0.05 - 1.0 / 60)) < 1e-15);
  CHECK(max_abs(tp_residuals(c3)) <= 1e-12);
  CHECK(oracle::trace_defect([&](const MatrixC& x) { return apply_kf(c3, x); }, 3) <= 1e-12);

  RealTable unbalanced = RealTable::Zero(3, 3);
  unbalanced(1, 2) = 0.1;
  try {
    complete_tp(unbalanced, 0.0);
    FAIL("expected ConstraintViolated");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ConstraintViolated);
  }

  // p_22 = p_11 + p~_01 - p~_12 < 0.
  RealTable neg = RealTable::Zero(3, 3);
  neg(1, 2) = neg(0, 2) = 0.1;
  try {
    complete_tp(neg, 0.0);
    FAIL("expected NegativeCoefficient");
  } catch (const EntryError& e) {
    CHECK(e.kind() == ErrorKind::NegativeCoefficient);
    CHECK(e.where() == IndexPair{2, 2});
  }

  RealTable neg_off = RealTable::Zero(2, 2);
  neg_off(0, 1) = -0.1;
  try {
    complete_tp(neg_off, 0.0);
    FAIL("expected NegativeCoefficient");
  } catch (const EntryError& e) {
    CHECK(e.where() == IndexPair{0, 1});
  }
}

TEST_CASE("random TP-completed channels preserve the trace") {
  Sampler s(5);
  for (int n = 2; n <= 6; ++n)
    for (int rep = 0; rep < 20; ++rep) {
      const KrausChannel ch = s.kf_tp(n);
      CHECK(ch.is_nonnegative());
      CHECK(max_abs(tp_residuals(ch)) <= 1e-12);
      for (int k = 0; k < 5; ++k) {
        const MatrixC x = s.complex_matrix(n);
        CHECK(std::abs(apply_kf(ch, x).trace() - x.trace()) <= 1e-10);
      }
    }
}

TEST_CASE("density matrix invariants") {
  MatrixC ok = MatrixC::Identity(2, 2) / 2.0;
  CHECK_NOTHROW(DensityMatrix{ok});
  MatrixC not_herm = ok;
  not_herm(0, 1) = 0.1;
  CHECK_THROWS_AS(DensityMatrix{not_herm}, Error);
  CHECK_THROWS_AS(DensityMatrix{MatrixC::Identity(2, 2)}, Error);
  MatrixC negative(2, 2);
  negative << 1.5, 0, 0, -0.5;
  CHECK_THROWS_AS(DensityMatrix{negative}, Error);
}

TEST_CASE("apply_to_state") {
  Sampler s(6);
  const DensityMatrix rho = s.state(3);
  const DensityMatrix same = apply_to_state(KrausChannel::identity(3), rho);
  CHECK(oracle::max_entry(same.matrix() - rho.matrix()) < 1e-15);

  const double x = 0.5;
  const EigenChannel dep(table2(1, x, x, x));
  const DensityMatrix e00(matrix_unit(2, 0, 0));
  const DensityMatrix out = apply_to_state(dep, e00);
  CHECK(std::abs(out.matrix()(0, 0) - 0.75) < 1e-15);
  CHECK(std::abs(out.matrix()(1, 1) - 0.25) < 1e-15);
  CHECK(std::abs(out.matrix()(0, 1)) < 1e-15);

  const KrausChannel kf = s.kf_tp(3);
  CHECK(std::abs(apply_to_state(kf, rho).matrix().trace() - 1.0) <= 1e-12);

  try {
    apply_to_state(EigenChannel(table2(1, 1, 1, -1)), e00);
    FAIL("expected InvalidChannel");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidChannel);
  }
  CHECK_THROWS_AS(apply_to_state(EigenChannel(table2(0.9, 1, 1, 1)), e00), Error);
  CHECK_THROWS_AS(apply_to_state(KrausChannel(table2(0.5, 0, 0, 0)), e00), Error);
}

TEST_CASE("constructors reject bad tables") {
  CHECK_THROWS_AS(KrausChannel(RealTable::Zero(2, 3)), Error);
  CHECK_THROWS_AS(EigenChannel(RealTable::Zero(1, 1)), Error);
  RealTable nan = RealTable::Zero(2, 2);
  nan(1, 0) = std::nan("");
  try {
    EigenChannel bad(nan);
    FAIL("expected InvariantError");
  } catch (const EntryError& e) {
    CHECK(e.kind() == ErrorKind::InvariantError);
    CHECK(e.where() == IndexPair{1, 0});
  }
  const KrausChannel neg(table2(1.1, -0.1, 0, 0));
  CHECK_FALSE(neg.is_nonnegative());
  REQUIRE(neg.negative_entries().size() == 1);
  CHECK(neg.negative_entries()[0] == IndexPair{0, 1});
}

}
