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


#include "gmc/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace gmc {

RateProfile RateProfile::constant(double c) { return RateProfile(Kind::constant, {c}); }

RateProfile RateProfile::exponential(double c, double a) {
  return RateProfile(Kind::exponential, {c, a});
}

RateProfile RateProfile::polynomial(std::vector<double> coeffs) {
  if (coeffs.empty()) coeffs.push_back(0.0);
  return RateProfile(Kind::polynomial, std::move(coeffs));
}

RateProfile RateProfile::tabulated(std::vector<double> t, std::vector<double> y) {
  if (t.size() != y.size()) {
    throw Error(ErrorKind::ProfileDomain,
                fmt::format("tabulated profile: {} knots but {} values", t.size(), y.size()));
  }
  check_grid(t, false);
  return RateProfile(Kind::tabulated, std::move(y), std::move(t));
}

double RateProfile::operator()(double t) const {
  if (!(t >= 0.0)) {
    throw Error(ErrorKind::ProfileDomain, fmt::format("profile evaluated at t = {}", t));
  }
  switch (kind_) {
    case Kind::constant:
      return params_[0];
    case Kind::exponential:
      return params_[0] * std::exp(-params_[1] * t);
    case Kind::polynomial: {
      double acc = 0.0;
      for (auto it = params_.rbegin(); it != params_.rend(); ++it) acc = acc * t + *it;
      return acc;
    }
    case Kind::tabulated: {
      if (t < knots_.front() || t > knots_.back()) {
        throw Error(ErrorKind::ProfileDomain,
                    fmt::format("t = {} outside tabulated range [{}, {}]", t,
                                knots_.front(), knots_.back()));
      }
      const auto hi = std::lower_bound(knots_.begin(), knots_.end(), t);
      const auto i = static_cast<std::size_t>(hi - knots_.begin());
      if (*hi == t) return params_[i];
      const double w = (t - knots_[i - 1]) / (knots_[i] - knots_[i - 1]);
      return (1.0 - w) * params_[i - 1] + w * params_[i];
    }
  }
  return 0.0;
}

RateProfile RateProfile::scaled(double s) const {
  RateProfile out = *this;
  if (kind_ == Kind::exponential) {
    out.params_[0] *= s;
  } else {
    for (double& v : out.params_) v *= s;
  }
  return out;
}

ProfileTable::ProfileTable(int n)
    : n_(n),
      entries_(static_cast<std::size_t>(n > 0 ? n * n : 0), RateProfile::constant(0.0)) {
  if (n < 2) throw Error(ErrorKind::BadDimension, "profile table: dimension must be >= 2");
}

const RateProfile& ProfileTable::operator()(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) {
    throw Error(ErrorKind::IndexOutOfRange, fmt::format("profile ({}, {})", i, j));
  }
  return entries_[static_cast<std::size_t>(flat_index(n_, i, j))];
}

void ProfileTable::set(int i, int j, RateProfile p) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) {
    throw Error(ErrorKind::IndexOutOfRange, fmt::format("profile ({}, {})", i, j));
  }
  entries_[static_cast<std::size_t>(flat_index(n_, i, j))] = std::move(p);
}

RealTable ProfileTable::evaluate(double t) const {
  RealTable out(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out(i, j) = (*this)(i, j)(t);
  return out;
}

ProfileTable ProfileTable::modulated(const RealTable& base, const RateProfile& f) {
  if (base.rows() != base.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "modulated: base table must be square");
  }
  ProfileTable out(static_cast<int>(base.rows()));
  for (int i = 0; i < out.n_; ++i)
    for (int j = 0; j < out.n_; ++j) out.set(i, j, f.scaled(base(i, j)));
  return out;
}

namespace {

bool is_identity(const EigenChannel& ch) {
  return (ch.eigenvalues().array() == 1.0).all();
}

bool has_zero(const EigenChannel& ch) {
  return (ch.eigenvalues().array().abs() <= 1e-13).any();
}

}  // namespace

Trajectory::Trajectory(std::vector<double> grid, std::vector<EigenChannel> frames,
                       TrajectoryOptions opts)
    : grid_(std::move(grid)), frames_(std::move(frames)), tolerance_(opts.tolerance) {
  check_grid(grid_, true);
  if (frames_.size() != grid_.size()) {
    throw Error(ErrorKind::DimensionMismatch,
                fmt::format("trajectory: {} frames on a grid of {}", frames_.size(),
                            grid_.size()));
  }
  if (!is_identity(frames_.front())) {
    throw Error(ErrorKind::InvariantError, "trajectory: frame 0 must be the identity");
  }
  const std::size_t stride = std::max<std::size_t>(opts.cp_stride, 1);
  const std::size_t m = frames_.size();
  cp_flags_.resize(m);
  choi_min_.resize(m);
  singular_.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    singular_[i] = has_zero(frames_[i]);
    if (i % stride != 0 && i + 1 != m) continue;
    const CpReport rep = cp_check_oracle(frames_[i], tolerance_);
    cp_flags_[i] = rep.verdict;
    choi_min_[i] = rep.choi_min_eigenvalue;
  }
}

std::optional<std::size_t> Trajectory::first_not_cp() const {
  for (std::size_t i = 0; i < cp_flags_.size(); ++i)
    if (cp_flags_[i] == CpVerdict::NotCP) return i;
  return std::nullopt;
}

std::vector<double> uniform_grid(double t_end, std::size_t points) {
  if (!(t_end > 0.0) || points < 2) {
    throw Error(ErrorKind::ProfileDomain,
                fmt::format("uniform grid needs T > 0 and >= 2 points (T = {}, points = {})",
                            t_end, points));
  }
  std::vector<double> t(points);
  const double h = t_end / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) t[i] = h * static_cast<double>(i);
  t.back() = t_end;
  return t;
}

Trajectory evolve_semigroup(const EigenGenerator& gen, std::span<const double> grid,
                            TrajectoryOptions opts) {
  check_grid(grid, true);
  std::vector<EigenChannel> frames;
  frames.reserve(grid.size());
  for (double t : grid) {
    RealTable lambda = (gen.eigenvalues() * t).array().exp().matrix();
    lambda(0, 0) = 1.0;
    frames.emplace_back(std::move(lambda));
  }
  return Trajectory(std::vector<double>(grid.begin(), grid.end()), std::move(frames), opts);
}

namespace {

// Integrates per-entry eta samples (one table per grid point) into frames.
Trajectory integrate(const std::vector<RealTable>& eta, std::span<const double> grid,
                     TrajectoryOptions opts) {
  const int n = static_cast<int>(eta.front().rows());
  const std::size_t m = grid.size();
  std::vector<RealTable> lambda(m, RealTable::Ones(n, n));
  std::vector<double> series(m);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      if (k == 0 && l == 0) continue;
      for (std::size_t i = 0; i < m; ++i) series[i] = eta[i](k, l);
      const std::vector<double> y = lambda_from_eta(grid, series);
      for (std::size_t i = 0; i < m; ++i) lambda[i](k, l) = y[i];
    }
  std::vector<EigenChannel> frames;
  frames.reserve(m);
  for (auto& t : lambda) frames.emplace_back(std::move(t));
  return Trajectory(std::vector<double>(grid.begin(), grid.end()), std::move(frames), opts);
}

}  // namespace

Trajectory evolve_timedep(const ProfileTable& eta, std::span<const double> grid,
                          TrajectoryOptions opts) {
  check_grid(grid, true);
  std::vector<RealTable> samples;
  samples.reserve(grid.size());
  for (double t : grid) samples.push_back(eta.evaluate(t));
  return integrate(samples, grid, opts);
}

Trajectory evolve_timedep_lf(const ProfileTable& gamma, std::span<const double> grid,
                             TrajectoryOptions opts) {
  check_grid(grid, true);
  std::vector<RealTable> samples;
  samples.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    try {
      samples.push_back(lf_to_ev(LindbladGenerator(gamma.evaluate(grid[i]))).eigenvalues());
    } catch (const ConditionError& e) {
      throw ConditionError(
          e.kind(), e.violations(),
          fmt::format("rates at t[{}] = {} lack Gell-Mann eigenvectors", i, grid[i]));
    }
  }
  return integrate(samples, grid, opts);
}

DensityMatrix evolve_state(const Trajectory& traj, const DensityMatrix& rho0,
                           std::size_t t_index) {
  if (t_index >= traj.size()) {
    throw Error(ErrorKind::IndexOutOfRange,
                fmt::format("time index {} outside trajectory of {}", t_index, traj.size()));
  }
  const EigenChannel& ch = traj.frame(t_index);
  std::optional<CpVerdict> flag = traj.cp_flags()[t_index];
  if (!flag) flag = cp_check_oracle(ch, traj.tolerance()).verdict;
  if (*flag != CpVerdict::CP) {
    throw TimeIndexError(ErrorKind::NotCPAtTime, t_index,
                         fmt::format("channel at t[{}] = {} is not CP", t_index,
                                     traj.grid()[t_index]));
  }
  MatrixC out = apply_ev(ch, rho0.matrix());
  return DensityMatrix(0.5 * (out + out.adjoint()));
}

}  // namespace gmc
