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


#include <algorithm>
#include <cmath>

#include <doctest.h>

#include "gmc/channels.hpp"
#include "gmc/sampling.hpp"
#include "oracles.hpp"

using namespace gmc;

namespace {

EigenChannel ev2(double l01, double l10, double l11) {
  RealTable t(2, 2);
  t << 1, l01, l10, l11;
  return EigenChannel(t);
}

}  // namespace

TEST_SUITE("cp_checks") {

TEST_CASE("choi of the identity") {
  const ChoiMatrix j = choi(EigenChannel::identity(2));
  CHECK(j.spectrum.size() == 4);
  CHECK(std::abs(j.spectrum(3) - 2.0) < 1e-14);
  for (int k = 0; k < 3; ++k) CHECK(std::abs(j.spectrum(k)) < 1e-14);
  CHECK(std::abs(j.trace() - 2.0) < 1e-14);
  CHECK(j.max_asymmetry < 1e-15);
}

TEST_CASE("depolarizing boundary") {
  const double x = -1.0 / 3;
  const ChoiMatrix j = choi(ev2(x, x, x));
  CHECK(std::abs(j.min_eigenvalue) <= 1e-12);
}

TEST_CASE("choi agrees with the Kraus-vector construction") {
  Sampler s(21);
  for (int n = 2; n <= 5; ++n)
    for (int rep = 0; rep < 10; ++rep) {
      const KrausChannel ch = s.kf_tp(n);
      const ChoiMatrix j = choi(ch);
      CHECK(oracle::max_entry(j.entries - oracle::choi_from_kraus(ch)) <= 1e-13);
      CHECK(j.min_eigenvalue >= -1e-12);
      CHECK(std::abs(j.trace() - n) <= 1e-12);
      CHECK(j.max_asymmetry <= 1e-12);
    }
}

TEST_CASE("non-linear maps are rejected") {
  try {
    choi([](const MatrixC& x) { return MatrixC(x.cwiseProduct(x)); }, 2);
    FAIL("expected NonLinearMap");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonLinearMap);
  }
  CHECK_THROWS_AS(
      choi([](const MatrixC& x) { return MatrixC(x + MatrixC::Identity(3, 3)); }, 3), Error);
}

TEST_CASE("oracle verdicts") {
  CHECK(cp_check_oracle(EigenChannel::identity(3)).is_cp());
  CHECK(cp_check_oracle(KrausChannel::identity(3)).is_cp());
  const CpReport r = cp_check_oracle(ev2(1, 1, -1));
  CHECK_FALSE(r.is_cp());
  CHECK(r.method == CpMethod::choi_oracle);
  REQUIRE(r.choi_min_eigenvalue.has_value());
  CHECK(r.margin == *r.choi_min_eigenvalue);

  Sampler s(22);
  for (int rep = 0; rep < 1000; ++rep) {
    const EigenChannel ch = s.ev_uniform(3, 1.0);
    const CpReport o = cp_check_oracle(ch);
    CHECK(o.is_cp() == (oracle::min_eigenvalue(choi(ch).entries) >= -tol::psd));
  }
}

TEST_CASE("paper conditions on the identity") {
  for (int n = 2; n <= 6; ++n) {
    const CpReport r = cp_check_paper(EigenChannel::identity(n));
    CHECK(r.is_cp());
    CHECK(r.method == CpMethod::paper_conditions);
    CHECK(r.b_margins.size() == static_cast<std::size_t>(n * (n - 1) / 2));
    for (const BlockMargin& m : r.b_margins) {
      double want = 1.0 - 2.0 / (m.j + 1);
      for (int k = m.j + 1; k < n; ++k) want += 2.0 / (k * (k + 1.0));
      CHECK(std::abs(m.margin - std::abs(want)) < 1e-14);
    }
    CHECK(r.literal.has_value());
  }
}

TEST_CASE("n = 2 block conditions reduce to the qubit conditions") {
  Sampler s(23);
  for (int rep = 0; rep < 2000; ++rep) {
    const EigenChannel ch = s.ev_uniform(2, 1.5);
    const FujiwaraAlgoet fa = fujiwara_algoet(ch);
    const CpReport p = cp_check_paper(ch);
    const CpReport q = cp_check_normalized(ch);
    const CpReport o = cp_check_oracle(ch);
    // Unnormalized blocks are twice the normalized ones at n = 2.
    CHECK(std::abs(p.margin - 2.0 * q.margin) < 1e-13);
    CHECK(std::abs(fa.margin - 2.0 * o.margin) < 1e-13);
    if (std::abs(o.margin) > 1e-8) {
      CHECK(p.verdict == o.verdict);
      CHECK(q.verdict == o.verdict);
    }
  }
  CHECK_THROWS_AS(fujiwara_algoet(EigenChannel::identity(3)), Error);
}

TEST_CASE("normalized block spectrum is the Choi spectrum") {
  Sampler s(24);
  for (int n = 2; n <= 6; ++n)
    for (int rep = 0; rep < 50; ++rep) {
      const EigenChannel ch = s.ev_scaled(n);
      const CpReport r = cp_check_normalized(ch);
      const ChoiMatrix j = choi(ch);
      REQUIRE(r.block_spectrum.size() == j.spectrum.size());
      CHECK((r.block_spectrum - j.spectrum).cwiseAbs().maxCoeff() <= 1e-12);
      CHECK(std::abs(r.margin - j.min_eigenvalue) <= 1e-12);
    }
}

TEST_CASE("det A and PSD are both reported") {
  // At n = 2 A is 2x2 with trace 2 + 2 l11 and det (1 + l11)^2 - (l01 + l10)^2:
  // l11 = -3, l01 = l10 = 0 gives det 4 > 0 with both eigenvalues negative.
  const CpReport r = cp_check_paper(ev2(0, 0, -3));
  REQUIRE(r.det_a.has_value());
  CHECK(*r.det_a > 0);
  CHECK(r.a_spectrum.maxCoeff() < 0);
  CHECK(r.det_psd_discrepancy);
  CHECK_FALSE(r.is_cp());
}

}
