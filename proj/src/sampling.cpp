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


#include "gmc/sampling.hpp"

#include <cmath>

namespace gmc {

EigenChannel Sampler::ev_uniform(int n, double range) {
  RealTable l(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) l(i, j) = uniform(-range, range);
  l(0, 0) = 1.0;
  return EigenChannel(std::move(l));
}

EigenChannel Sampler::ev_scaled(int n) {
  const double s = std::sqrt(uniform(0.0, 1.0));
  RealTable l(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) l(i, j) = s * uniform(-1.0, 1.0);
  l(0, 0) = 1.0;
  return EigenChannel(std::move(l));
}

namespace {

// Restores sum_{1<l<n} (p~_1l - p~_0l) = 0 by raising p_02 or p_12.
void balance_columns(RealTable& p) {
  const int n = static_cast<int>(p.rows());
  if (n < 3) return;
  double b = 0.0;
  for (int l = 2; l < n; ++l) b += p(1, l) + p(l, 1) - p(0, l) - p(l, 0);
  if (b > 0) {
    p(0, 2) += b;
  } else {
    p(1, 2) -= b;
  }
}

}  // namespace

KrausChannel Sampler::kf_tp(int n) {
  const double s = kf_offdiag_scale(n);
  for (;;) {
    RealTable p(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) p(i, j) = i == j ? 0.0 : uniform(0.0, s);
    balance_columns(p);
    const double p11 = uniform(0.0, s);
    try {
      return complete_tp(p, p11);
    } catch (const EntryError&) {
    }
  }
}

KrausChannel Sampler::kf_ev_compatible(int n) {
  const double s = kf_offdiag_scale(n);
  for (;;) {
    RealTable p = RealTable::Zero(n, n);
    for (int l = 1; l < n; ++l) {
      const double col = uniform(0.0, 2.0 * s);
      for (int j = 0; j < l; ++j) {
        const double a = uniform(-col, col);
        p(j, l) = 0.5 * (col + a);
        p(l, j) = 0.5 * (col - a);
      }
    }
    const double p11 = uniform(0.0, s);
    try {
      return complete_tp(p, p11);
    } catch (const EntryError&) {
    }
  }
}

LindbladGenerator Sampler::lf_ev_compatible(int n) {
  RealTable g = RealTable::Zero(n, n);
  for (int l = 1; l < n; ++l) {
    const double col = uniform(-1.0, 1.0);
    for (int j = 0; j < l; ++j) {
      const double a = uniform(-1.0, 1.0);
      g(j, l) = 0.5 * (col + a);
      g(l, j) = 0.5 * (col - a);
    }
    g(l, l) = uniform(-1.0, 1.0);
  }
  return LindbladGenerator(std::move(g));
}

MatrixC Sampler::complex_matrix(int n) {
  MatrixC m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Complex(uniform(-1.0, 1.0), uniform(-1.0, 1.0));
  return m;
}

DensityMatrix Sampler::state(int n) {
  const MatrixC a = complex_matrix(n);
  MatrixC rho = a * a.adjoint() + 1e-3 * MatrixC::Identity(n, n);
  rho /= rho.trace();
  return DensityMatrix(0.5 * (rho + rho.adjoint()));
}

}  // namespace gmc
