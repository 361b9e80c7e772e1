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

#ifndef GMC_GENERATORS_HPP
#define GMC_GENERATORS_HPP

#include <optional>
#include <span>
#include <vector>

#include "gmc/converters.hpp"

namespace gmc {

// GKSL generator with Gell-Mann noise operators:
//   X -> sum_ij gamma_ij (sigma_ij X sigma_ij - {sigma_ij^2, X} / 2).
// The (0, 0) term vanishes identically, so gamma_00 is stored as 0. A
// nonzero input value is kept in discarded_gamma00() for diagnostics.
// Rates may be negative.
class LindbladGenerator {
 public:
  explicit LindbladGenerator(RealTable gamma);

  static LindbladGenerator zero(int n) { return LindbladGenerator(RealTable::Zero(n, n)); }

  int dim() const noexcept { return static_cast<int>(gamma_.rows()); }
  const RealTable& rates() const noexcept { return gamma_; }
  double operator()(int i, int j) const { return gamma_(i, j); }
  double tilde(int k, int l) const { return gamma_(k, l) + gamma_(l, k); }

  std::optional<double> discarded_gamma00() const noexcept { return discarded_; }

 private:
  RealTable gamma_;
  std::optional<double> discarded_;
};

// Generator defined by sigma_ij -> eta_ij sigma_ij. eta_00 is forced to 0
// (trace preservation); a nonzero input is kept in discarded_eta00().
class EigenGenerator {
 public:
  explicit EigenGenerator(RealTable eta);

  static EigenGenerator zero(int n) { return EigenGenerator(RealTable::Zero(n, n)); }

  int dim() const noexcept { return static_cast<int>(eta_.rows()); }
  const RealTable& eigenvalues() const noexcept { return eta_; }
  double operator()(int i, int j) const { return eta_(i, j); }
  double tilde(int k, int l) const { return eta_(k, l) + eta_(l, k); }

  std::optional<double> discarded_eta00() const noexcept { return discarded_; }

 private:
  RealTable eta_;
  std::optional<double> discarded_;
};

MatrixC apply_lf(const LindbladGenerator& gen, const MatrixC& x);
MatrixC apply_ev_gen(const EigenGenerator& gen, const MatrixC& x);

// LF generator has Gell-Mann eigenvectors iff gamma~_jl agree over j < l.
ConditionCheck lf_is_ev(const LindbladGenerator& gen);

// Eigenvalues of an EV-compatible LF generator. With gamma~_l the common
// column sum, m = min(k, l) and M = max(k, l):
//   eta_kk = -(k+1) gamma~_k - sum_{k<j<n} gamma~_j
//   eta_kl = -2 gamma_lk
//            - [m gamma~_m + (M-1) gamma~_M + sum_{m<j<M} gamma~_j
//               + 2 sum_{M<j<n} gamma~_j] / 2
//            - sum_{m<j<M} gamma_jj / (j(j+1)) - m/(m+1) gamma_mm
//            - (M+1)/M gamma_MM
// Throws NotEV.
EigenGenerator lf_to_ev(const LindbladGenerator& gen);

// Three condition families, checked to 1e-12:
//   eta~_0l = eta~_1l                                        2 <= l < n
//   eta_kk recursion in terms of eta_11 and eta~             2 <= k <= n-2
//   eta~_kl - eta~_{k-1,l} = eta~_km - eta~_{k-1,m}          1 <= k < l < m < n
ConditionCheck ev_is_lf(const EigenGenerator& gen);

// Decoherence rates of an LF-compatible EV generator. Rates may come out
// negative. Throws NotLF.
LindbladGenerator ev_to_lf(const EigenGenerator& gen);

// Samples of a scalar eigenvalue trajectory on a strictly increasing grid.
struct Series {
  std::vector<double> t;
  std::vector<double> y;
};

// eta = d/dt ln|lambda| by second-order finite differences of ln|lambda|:
// three-point centered stencils inside, three-point one-sided at the ends
// (plain difference when the grid has two points). Throws ZeroEigenvalue
// (TimeIndexError) where |lambda| <= 1e-13 or lambda changes sign between
// neighbouring samples.
std::vector<double> eta_from_lambda(std::span<const double> t,
                                    std::span<const double> lambda);

// lambda(t) = exp(cumulative trapezoid of eta); lambda(t_0) = 1 exactly.
// The grid must start at 0 and be strictly increasing.
std::vector<double> lambda_from_eta(std::span<const double> t,
                                    std::span<const double> eta);

// Throws ProfileDomain unless t is non-empty and strictly increasing, and,
// when must_start_at_zero is set, t[0] == 0.
void check_grid(std::span<const double> t, bool must_start_at_zero);

}  // namespace gmc

#endif  // GMC_GENERATORS_HPP
