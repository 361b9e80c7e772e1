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


#ifndef GMC_SAMPLING_HPP
#define GMC_SAMPLING_HPP

#include <cstdint>
#include <random>

#include "gmc/generators.hpp"

namespace gmc {

// Seeded random objects for experiments and tests. All draws go through
// one std::mt19937_64, so a seed fixes the whole sequence.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  std::mt19937_64& engine() noexcept { return rng_; }

  // lambda_00 = 1, every other eigenvalue uniform in [-range, range].
  EigenChannel ev_uniform(int n, double range);

  // As ev_uniform(n, 1) with all non-identity eigenvalues multiplied by a
  // common factor u^(1/2), u uniform in [0, 1]. Covers both sides of the
  // CP boundary for every n.
  EigenChannel ev_scaled(int n);

  // Nonnegative, trace-preserving Kraus coefficients: random off-diagonals
  // with the column balance restored, completed by complete_tp. Draws that
  // complete to a negative diagonal are rejected.
  KrausChannel kf_tp(int n);

  // As kf_tp, restricted to channels with Gell-Mann eigenvectors (equal
  // column sums p~_jl over j < l).
  KrausChannel kf_ev_compatible(int n);

  // Rates of either sign with equal column sums gamma~_jl over j < l.
  LindbladGenerator lf_ev_compatible(int n);

  // n x n complex matrix with entries uniform in [-1, 1] + i [-1, 1].
  MatrixC complex_matrix(int n);

  // Random full-rank state.
  DensityMatrix state(int n);

 private:
  std::mt19937_64 rng_;
};

// Off-diagonal scale used by kf_tp; keeps p_00 positive for most draws.
inline double kf_offdiag_scale(int n) { return 1.0 / (n * n); }

}  // namespace gmc

#endif  // GMC_SAMPLING_HPP
