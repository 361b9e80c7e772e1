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

#include "gmc/generators.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "table_checks.hpp"

namespace gmc {

using detail::inv_kk1;

LindbladGenerator::LindbladGenerator(RealTable gamma) : gamma_(std::move(gamma)) {
  detail::check_table(gamma_, "decoherence rates");
  if (gamma_(0, 0) != 0.0) {
    discarded_ = gamma_(0, 0);
    gamma_(0, 0) = 0.0;
  }
}

EigenGenerator::EigenGenerator(RealTable eta) : eta_(std::move(eta)) {
  detail::check_table(eta_, "generator eigenvalues");
  if (eta_(0, 0) != 0.0) {
    discarded_ = eta_(0, 0);
    eta_(0, 0) = 0.0;
  }
}

MatrixC apply_lf(const LindbladGenerator& gen, const MatrixC& x) {
  const int n = gen.dim();
  require_square(x, n, "apply_lf");
  const auto& basis = GellMannBasis::shared(n);
  MatrixC jump = MatrixC::Zero(n, n);
  MatrixC weight = MatrixC::Zero(n, n);  // sum_ij gamma_ij sigma_ij^2
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double g = gen(i, j);
      if (g == 0.0) continue;
      const MatrixC& s = basis(i, j);
      jump.noalias() += g * (s * x * s);
      weight.noalias() += g * (s * s);
    }
  return jump - 0.5 * (weight * x + x * weight);
}

MatrixC apply_ev_gen(const EigenGenerator& gen, const MatrixC& x) {
  const int n = gen.dim();
  require_square(x, n, "apply_ev_gen");
  const auto& basis = GellMannBasis::shared(n);
  ComplexTable c = decompose(x, basis);
  c.array() *= gen.eigenvalues().array().cast<Complex>();
  return recompose(c, basis);
}

namespace {

ConditionCheck finish(std::vector<Violation> v) {
  ConditionCheck c;
  c.holds = v.empty();
  c.violations = std::move(v);
  return c;
}

void check(double residual, const char* label, std::vector<int> idx,
           std::vector<Violation>& out) {
  if (std::abs(residual) > tol::equality) out.push_back({label, std::move(idx), residual});
}

}  // namespace

ConditionCheck lf_is_ev(const LindbladGenerator& gen) {
  const int n = gen.dim();
  std::vector<Violation> v;
  for (int l = 2; l < n; ++l)
    for (int j = 0; j < l; ++j)
      for (int k = j + 1; k < l; ++k)
        check(gen.tilde(j, l) - gen.tilde(k, l), "gamma~_jl != gamma~_kl", {j, k, l}, v);
  return finish(std::move(v));
}

EigenGenerator lf_to_ev(const LindbladGenerator& gen) {
  const ConditionCheck c = lf_is_ev(gen);
  if (!c.holds) {
    throw ConditionError(ErrorKind::NotEV, c.violations,
                         "LF generator does not have Gell-Mann eigenvectors");
  }
  const int n = gen.dim();
  auto gt = [&gen](int l) { return l == 0 ? 0.0 : gen.tilde(0, l); };

  RealTable eta = RealTable::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    double s = -(k + 1) * gt(k);
    for (int j = k + 1; j < n; ++j) s -= gt(j);
    eta(k, k) = s;
  }
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      if (k == l) continue;
      const int m = std::min(k, l);
      const int top = std::max(k, l);
      double bracket = m * gt(m) + (top - 1) * gt(top);
      double between = 0.0;
      for (int j = m + 1; j < top; ++j) {
        bracket += gt(j);
        between += inv_kk1(j) * gen(j, j);
      }
      for (int j = top + 1; j < n; ++j) bracket += 2.0 * gt(j);
      double s = -2.0 * gen(l, k) - 0.5 * bracket - between;
      if (m > 0) s -= m / (m + 1.0) * gen(m, m);
      s -= (top + 1.0) / top * gen(top, top);
      eta(k, l) = s;
    }
  return EigenGenerator(std::move(eta));
}

ConditionCheck ev_is_lf(const EigenGenerator& gen) {
  const int n = gen.dim();
  auto et = [&gen](int k, int l) { return gen.tilde(k, l); };
  std::vector<Violation> v;
  for (int l = 2; l < n; ++l) check(et(0, l) - et(1, l), "eta~_0l != eta~_1l", {l}, v);
  for (int k = 2; k <= n - 2; ++k) {
    double rhs = gen(1, 1);
    for (int j = 1; j < k; ++j) {
      rhs += (j + 1) / 2.0 *
             (-(j + 2.0) / j * (et(j, j + 2) - et(j + 1, j + 2)) + et(j - 1, j) -
              et(j - 1, j + 1));
    }
    check(gen(k, k) - rhs, "eta_kk recursion", {k}, v);
  }
  for (int k = 1; k < n; ++k)
    for (int l = k + 1; l < n; ++l)
      for (int m = l + 1; m < n; ++m)
        check(et(k, l) - et(k - 1, l) - et(k, m) + et(k - 1, m),
              "eta~ column differences", {k, l, m}, v);
  return finish(std::move(v));
}

LindbladGenerator ev_to_lf(const EigenGenerator& gen) {
  const ConditionCheck c = ev_is_lf(gen);
  if (!c.holds) {
    throw ConditionError(ErrorKind::NotLF, c.violations,
                         "EV generator has no Gell-Mann GKSL form");
  }
  const int n = gen.dim();
  auto et = [&gen](int k, int l) { return gen.tilde(k, l); };

  std::vector<double> col(static_cast<std::size_t>(n), 0.0);
  for (int l = 1; l < n; ++l) {
    double s = -gen(l, l) / (l + 1.0);
    for (int j = l + 1; j < n; ++j) s += inv_kk1(j) * gen(j, j);
    col[static_cast<std::size_t>(l)] = s;
  }

  RealTable gamma = RealTable::Zero(n, n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      if (k == l) continue;
      gamma(k, l) = 0.5 * col[static_cast<std::size_t>(std::max(k, l))] +
                    0.25 * (gen(k, l) - gen(l, k));
    }
  for (int k = 1; k < n; ++k) {
    double tail = 0.0;
    for (int j = k + 1; j < n; ++j) tail += 2.0 * inv_kk1(j) * gen(j, j);
    const double ratio = (k - 1.0) / (k + 1.0);
    gamma(k, k) = -0.25 * (et(k - 1, k) - tail - 2.0 * inv_kk1(k) * gen(k, k)) +
                  0.25 * ratio * (et(0, k - 1) - et(0, k) + 2.0 * gen(k, k)) +
                  ratio / (2.0 * k) * gen(k - 1, k - 1);
  }
  return LindbladGenerator(std::move(gamma));
}

void check_grid(std::span<const double> t, bool must_start_at_zero) {
  if (t.empty()) throw Error(ErrorKind::ProfileDomain, "time grid is empty");
  if (must_start_at_zero && t.front() != 0.0) {
    throw Error(ErrorKind::ProfileDomain,
                fmt::format("time grid must start at 0, starts at {}", t.front()));
  }
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (!(t[i] > t[i - 1])) {
      throw Error(ErrorKind::ProfileDomain,
                  fmt::format("time grid not strictly increasing at index {}", i));
    }
  }
}

std::vector<double> eta_from_lambda(std::span<const double> t,
                                    std::span<const double> lambda) {
  check_grid(t, false);
  if (lambda.size() != t.size()) {
    throw Error(ErrorKind::DimensionMismatch, "eta_from_lambda: grid/sample size mismatch");
  }
  const std::size_t m = t.size();
  if (m < 2) throw Error(ErrorKind::ProfileDomain, "eta_from_lambda needs >= 2 samples");

  std::vector<double> logs(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (std::abs(lambda[i]) <= 1e-13) {
      throw TimeIndexError(ErrorKind::ZeroEigenvalue, i,
                           fmt::format("lambda vanishes at t[{}] = {}", i, t[i]));
    }
    if (i > 0 && (lambda[i] > 0) != (lambda[i - 1] > 0)) {
      throw TimeIndexError(ErrorKind::ZeroEigenvalue, i,
                           fmt::format("lambda changes sign before t[{}] = {}", i, t[i]));
    }
    logs[i] = std::log(std::abs(lambda[i]));
  }

  std::vector<double> eta(m);
  if (m == 2) {
    const double d = (logs[1] - logs[0]) / (t[1] - t[0]);
    eta[0] = eta[1] = d;
    return eta;
  }
  for (std::size_t i = 1; i + 1 < m; ++i) {
    const double h1 = t[i] - t[i - 1];
    const double h2 = t[i + 1] - t[i];
    eta[i] = -h2 / (h1 * (h1 + h2)) * logs[i - 1] + (h2 - h1) / (h1 * h2) * logs[i] +
             h1 / (h2 * (h1 + h2)) * logs[i + 1];
  }
  {
    const double h1 = t[1] - t[0];
    const double h2 = t[2] - t[1];
    eta[0] = -(2 * h1 + h2) / (h1 * (h1 + h2)) * logs[0] + (h1 + h2) / (h1 * h2) * logs[1] -
             h1 / (h2 * (h1 + h2)) * logs[2];
  }
  {
    const double h1 = t[m - 2] - t[m - 3];
    const double h2 = t[m - 1] - t[m - 2];
    eta[m - 1] = h2 / (h1 * (h1 + h2)) * logs[m - 3] - (h1 + h2) / (h1 * h2) * logs[m - 2] +
                 (h1 + 2 * h2) / (h2 * (h1 + h2)) * logs[m - 1];
  }
  return eta;
}

std::vector<double> lambda_from_eta(std::span<const double> t,
                                    std::span<const double> eta) {
  check_grid(t, true);
  if (eta.size() != t.size()) {
    throw Error(ErrorKind::DimensionMismatch, "lambda_from_eta: grid/sample size mismatch");
  }
  std::vector<double> lambda(t.size());
  lambda[0] = 1.0;
  double integral = 0.0;
  for (std::size_t i = 1; i < t.size(); ++i) {
    integral += 0.5 * (t[i] - t[i - 1]) * (eta[i] + eta[i - 1]);
    lambda[i] = std::exp(integral);
  }
  return lambda;
}

}  // namespace gmc
