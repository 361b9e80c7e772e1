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

#include "gmc/converters.hpp"
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

// Largest deviation of any Gell-Mann matrix from being an eigenvector of ch
// with eigenvalue lambda(i, j).
double eigen_defect(const KrausChannel& ch, const EigenChannel& lambda) {
  const int n = ch.dim();
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto r = oracle::eigen_readout([&](const MatrixC& x) { return apply_kf(ch, x); }, n,
                                           i, j);
      worst = std::max({worst, r.residual, std::abs(r.value - lambda(i, j))});
    }
  return worst;
}

}  // namespace

TEST_SUITE("converters") {

TEST_CASE("kf_is_ev") {
  CHECK(kf_is_ev(KrausChannel::identity(4)).holds);
  const ConditionCheck c = kf_is_ev(example_kf_not_ev_channel());
  CHECK_FALSE(c.holds);
  bool saw = false;
  for (const auto& v : c.violations)
    if (v.indices == std::vector<int>{0, 2, 3}) saw = true;
  CHECK(saw);

  RealTable off = RealTable::Zero(3, 3);
  off(0, 2) = 0.03;
  off(2, 0) = 0.01;
  off(1, 2) = 0.02;
  off(2, 1) = 0.02;
  off(0, 1) = 0.01;
  off(1, 0) = 0.01;
  const KrausChannel ch = complete_tp(off, 0.02);
  CHECK(kf_is_ev(ch).holds);
  CHECK(eigen_defect(ch, kf_to_ev(ch)) <= 1e-11);

  try {
    kf_is_ev(KrausChannel(table2(0.5, 0, 0, 0)));
    FAIL("expected NotTracePreserving");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotTracePreserving);
  }
}

TEST_CASE("kf_to_ev values") {
  const EigenChannel id = kf_to_ev(KrausChannel::identity(3));
  CHECK((id.eigenvalues().array() == 1.0).all());

  // p = (5/8, 1/8, 1/8, 1/8): the Pauli channel scales every Pauli matrix by 1/2.
  const KrausChannel q(table2(5.0 / 8, 1.0 / 8, 1.0 / 8, 1.0 / 8));
  const EigenChannel l = kf_to_ev(q);
  CHECK(std::abs(l(0, 1) - 0.5) < 1e-15);
  CHECK(std::abs(l(1, 0) - 0.5) < 1e-15);
  CHECK(std::abs(l(1, 1) - 0.5) < 1e-15);
  CHECK(eigen_defect(q, l) < 1e-15);

  const KrausChannel c3 = complete_tp(RealTable::Constant(3, 3, 1.0 / 20), 1.0 / 20);
  const EigenChannel l3 = kf_to_ev(c3);
  CHECK(std::abs(l3(1, 1) - 0.7) < 1e-14);
  CHECK(std::abs(l3(2, 2) - 0.7) < 1e-14);
  CHECK(eigen_defect(c3, l3) <= 1e-11);

  try {
    kf_to_ev(example_kf_not_ev_channel());
    FAIL("expected NotEV");
  } catch (const ConditionError& e) {
    CHECK(e.kind() == ErrorKind::NotEV);
    CHECK_FALSE(e.violations().empty());
  }
}

TEST_CASE("eigenvector oracle on random admissible channels") {
  Sampler s(31);
  for (int n = 2; n <= 6; ++n)
    for (int rep = 0; rep < 30; ++rep) {
      const KrausChannel ch = s.kf_ev_compatible(n);
      CHECK(eigen_defect(ch, kf_to_ev(ch)) <= 1e-11);
    }
}

TEST_CASE("ev_is_kf") {
  CHECK(ev_is_kf(EigenChannel::identity(5)).holds);
  Sampler s(32);
  for (int rep = 0; rep < 20; ++rep) {
    const EigenChannel ch = s.ev_uniform(2, 1.0);
    CHECK(ev_is_kf(ch).holds);
    const EigenChannel back = kf_to_ev(ev_to_kf(ch));
    CHECK((back.eigenvalues() - ch.eigenvalues()).cwiseAbs().maxCoeff() <= 1e-12);
  }
  RealTable l = RealTable::Ones(3, 3);
  l(0, 2) = 0.5;
  CHECK_FALSE(ev_is_kf(EigenChannel(l)).holds);
  RealTable not_tp = RealTable::Ones(2, 2);
  not_tp(0, 0) = 0.5;
  CHECK_THROWS_AS(ev_is_kf(EigenChannel(not_tp)), Error);
}

TEST_CASE("ev_to_kf values") {
  const KrausChannel id = ev_to_kf(EigenChannel::identity(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(std::abs(id(i, j) - (i == 0 && j == 0 ? 1.0 : 0.0)) < 1e-15);

  // lambda = (1/2, 1/4, 1/4): p_01 - p_10 = (l01 - l10)/4 fixes the split.
  const KrausChannel p = ev_to_kf(EigenChannel(table2(1, 0.5, 0.25, 0.25)));
  CHECK(std::abs(p(0, 0) - 0.5) < 1e-15);
  CHECK(std::abs(p(0, 1) - 0.25) < 1e-15);
  CHECK(std::abs(p(1, 0) - 0.125) < 1e-15);
  CHECK(std::abs(p(1, 1) - 0.125) < 1e-15);

  for (double x : {-1.0 / 3, 0.0, 0.3, 0.9}) {
    const KrausChannel d = ev_to_kf(EigenChannel(table2(1, x, x, x)));
    CHECK(std::abs(d(0, 0) - (1 + 3 * x) / 4) < 1e-15);
    CHECK(std::abs(d(0, 1) - (1 - x) / 4) < 1e-15);
    CHECK(std::abs(d(1, 0) - (1 - x) / 4) < 1e-15);
    CHECK(std::abs(d(1, 1) - (1 - x) / 4) < 1e-15);
  }

  // Negative weights are returned, not rejected.
  const KrausChannel neg = ev_to_kf(EigenChannel(table2(1, 1, 1, -1)));
  CHECK_FALSE(neg.is_nonnegative());

  RealTable l = RealTable::Ones(3, 3);
  l(1, 1) = 0.5;
  try {
    ev_to_kf(EigenChannel(l));
    FAIL("expected NotKF");
  } catch (const ConditionError& e) {
    CHECK(e.kind() == ErrorKind::NotKF);
  }
}

TEST_CASE("application equivalence and round trips") {
  Sampler s(33);
  for (int n = 2; n <= 6; ++n)
    for (int rep = 0; rep < 20; ++rep) {
      const KrausChannel ch = s.kf_ev_compatible(n);
      const EigenChannel ev = kf_to_ev(ch);
      CHECK(ev_is_kf(ev).holds);
      const KrausChannel back = ev_to_kf(ev);
      CHECK((back.coefficients() - ch.coefficients()).cwiseAbs().maxCoeff() <= 1e-11);
      CHECK(max_abs(tp_residuals(back)) <= 1e-10);
      for (int k = 0; k < 5; ++k) {
        const MatrixC x = s.complex_matrix(n);
        CHECK(oracle::max_entry(apply_kf(back, x) - apply_ev(ev, x)) <= 1e-11);
      }
    }
}

TEST_CASE("off-eigenvector component of the n = 4 witness") {
  Sampler s(34);
  for (int rep = 0; rep < 20; ++rep) {
    const KrausChannel ch = random_kf_not_ev_channel(s);
    CHECK_FALSE(kf_is_ev(ch).holds);
    const auto& b = GellMannBasis::shared(4);
    const double off = ch.tilde(0, 3) - ch.tilde(2, 3);
    const MatrixC d = matrix_unit(4, 3, 3) - matrix_unit(4, 2, 2);
    const MatrixC img = apply_kf(ch, b(2, 2));
    const double c22 = 1 - 3 * ch.tilde(0, 2) - ch.tilde(0, 3);
    CHECK(oracle::max_entry(img - c22 * b(2, 2) - 2 * std::sqrt(3.0) / 3 * off * d) <= 1e-12);
  }
}

}
