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

#ifndef GMC_DYNAMICS_HPP
#define GMC_DYNAMICS_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gmc/generators.hpp"

namespace gmc {

// Scalar function of time t >= 0.
//   constant     c
//   exponential  c e^{-a t}          parameters {c, a}
//   polynomial   sum_k c_k t^k        parameters {c_0, c_1, ...}
//   tabulated    linear interpolation of (t_i, y_i); no extrapolation
class RateProfile {
 public:
  enum class Kind { constant, exponential, polynomial, tabulated };

  static RateProfile constant(double c);
  static RateProfile exponential(double c, double a);
  static RateProfile polynomial(std::vector<double> coeffs);
  // Throws ProfileDomain unless t is strictly increasing and sizes match.
  static RateProfile tabulated(std::vector<double> t, std::vector<double> y);

  Kind kind() const noexcept { return kind_; }
  const std::vector<double>& parameters() const noexcept { return params_; }

  // Throws ProfileDomain for t < 0 or t outside a tabulated range.
  double operator()(double t) const;

  // The profile multiplied by s.
  RateProfile scaled(double s) const;

 private:
  RateProfile(Kind kind, std::vector<double> params, std::vector<double> knots = {})
      : kind_(kind), params_(std::move(params)), knots_(std::move(knots)) {}

  Kind kind_;
  std::vector<double> params_;  // values y_i for tabulated
  std::vector<double> knots_;   // t_i for tabulated
};

// n x n table of profiles, all constant 0 by default.
class ProfileTable {
 public:
  explicit ProfileTable(int n);

  int dim() const noexcept { return n_; }
  const RateProfile& operator()(int i, int j) const;
  void set(int i, int j, RateProfile p);

  RealTable evaluate(double t) const;

  // entry (i, j) = base(i, j) * f.
  static ProfileTable modulated(const RealTable& base, const RateProfile& f);

 private:
  int n_;
  std::vector<RateProfile> entries_;
};

struct TrajectoryOptions {
  // CP is certified on frames 0, stride, 2 stride, ... and the last frame.
  std::size_t cp_stride = 1;
  double tolerance = tol::psd;
};

// EV channels sampled on a time grid, with per-frame Choi-oracle verdicts.
// Immutable once built.
class Trajectory {
 public:
  // Throws ProfileDomain for a bad grid, DimensionMismatch when frames and
  // grid differ in length and InvariantError when frames[0] is not the
  // identity.
  Trajectory(std::vector<double> grid, std::vector<EigenChannel> frames,
             TrajectoryOptions opts = {});

  int dim() const noexcept { return frames_.front().dim(); }
  std::size_t size() const noexcept { return grid_.size(); }
  const std::vector<double>& grid() const noexcept { return grid_; }
  const std::vector<EigenChannel>& frames() const noexcept { return frames_; }
  const EigenChannel& frame(std::size_t i) const { return frames_.at(i); }

  // Unset for frames skipped by the stride.
  const std::vector<std::optional<CpVerdict>>& cp_flags() const noexcept {
    return cp_flags_;
  }
  const std::vector<std::optional<double>>& choi_min() const noexcept {
    return choi_min_;
  }
  // Some lambda_kl has |lambda| <= 1e-13; the generator is undefined there.
  const std::vector<bool>& generator_singular() const noexcept { return singular_; }

  // First certified frame whose verdict is NotCP.
  std::optional<std::size_t> first_not_cp() const;

  double tolerance() const noexcept { return tolerance_; }

 private:
  std::vector<double> grid_;
  std::vector<EigenChannel> frames_;
  std::vector<std::optional<CpVerdict>> cp_flags_;
  std::vector<std::optional<double>> choi_min_;
  std::vector<bool> singular_;
  double tolerance_;
};

// `points` equally spaced times on [0, t_end]; default 1001.
std::vector<double> uniform_grid(double t_end, std::size_t points = 1001);

// lambda_kl(t) = exp(eta_kl t).
Trajectory evolve_semigroup(const EigenGenerator& gen, std::span<const double> grid,
                            TrajectoryOptions opts = {});

// lambda_kl(t) = exp(int_0^t eta_kl) by the trapezoid rule on the grid. The
// (0, 0) profile is ignored.
Trajectory evolve_timedep(const ProfileTable& eta, std::span<const double> grid,
                          TrajectoryOptions opts = {});

// Time-dependent GKSL rates; each sample gamma(t_i) is mapped through
// lf_to_ev before integration. Throws NotEV at the first offending sample.
Trajectory evolve_timedep_lf(const ProfileTable& gamma, std::span<const double> grid,
                             TrajectoryOptions opts = {});

// rho(t_i) = Lambda(t_i)[rho0]. Throws NotCPAtTime (TimeIndexError) when the
// frame is not CP; frames skipped by the stride are certified on demand.
DensityMatrix evolve_state(const Trajectory& traj, const DensityMatrix& rho0,
                           std::size_t t_index);

}  // namespace gmc

#endif  // GMC_DYNAMICS_HPP
