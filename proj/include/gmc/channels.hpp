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

#ifndef GMC_CHANNELS_HPP
#define GMC_CHANNELS_HPP

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "gmc/basis.hpp"
#include "gmc/error.hpp"

namespace gmc {

namespace tol {
// Eigenvalue >= -psd counts as nonnegative.
inline constexpr double psd = 1e-10;
// Trace-preservation residuals.
inline constexpr double tp = 1e-10;
// Equality of O(1) coefficients in condition checks.
inline constexpr double equality = 1e-12;
}  // namespace tol

// Kraus-form Gell-Mann channel: X -> sum_ij p_ij sigma_ij X sigma_ij.
//
// Coefficients are stored as given. Nonnegativity is what makes the map
// manifestly CP; tables produced by ev_to_kf may carry negative entries and
// are reported through negative_entries() instead of being rejected.
class KrausChannel {
 public:
  explicit KrausChannel(RealTable p);

  static KrausChannel identity(int n);

  int dim() const noexcept { return static_cast<int>(p_.rows()); }
  const RealTable& coefficients() const noexcept { return p_; }
  double operator()(int i, int j) const { return p_(i, j); }

  // p~_ij = p_ij + p_ji.
  double tilde(int i, int j) const { return p_(i, j) + p_(j, i); }

  std::vector<IndexPair> negative_entries(double tolerance = 0.0) const;
  bool is_nonnegative(double tolerance = 0.0) const {
    return negative_entries(tolerance).empty();
  }

 private:
  RealTable p_;
};

// Eigenvalue-form Gell-Mann channel: sigma_ij -> lambda_ij sigma_ij.
class EigenChannel {
 public:
  explicit EigenChannel(RealTable lambda);

  static EigenChannel identity(int n);

  int dim() const noexcept { return static_cast<int>(lambda_.rows()); }
  const RealTable& eigenvalues() const noexcept { return lambda_; }
  double operator()(int i, int j) const { return lambda_(i, j); }

  // lambda~_kl = lambda_kl + lambda_lk.
  double tilde(int k, int l) const { return lambda_(k, l) + lambda_(l, k); }

  // TP iff lambda_00 = 1.
  bool is_trace_preserving(double tolerance = tol::tp) const;

 private:
  RealTable lambda_;
};

// Unit-trace positive semidefinite Hermitian matrix.
class DensityMatrix {
 public:
  // Throws InvariantError unless rho is Hermitian (1e-12), has unit trace
  // (1e-12) and min eigenvalue >= -1e-10.
  explicit DensityMatrix(MatrixC rho);

  int dim() const noexcept { return static_cast<int>(rho_.rows()); }
  const MatrixC& matrix() const noexcept { return rho_; }

 private:
  MatrixC rho_;
};

// Choi matrix J = sum_kl e_kl (x) Lambda[e_kl] (map on the left factor).
struct ChoiMatrix {
  int n = 0;
  MatrixC entries;          // n^2 x n^2, Hermitian-symmetrized
  Eigen::VectorXd spectrum;  // ascending
  double min_eigenvalue = 0.0;
  double max_asymmetry = 0.0;  // max |J - J^dagger| entry before symmetrizing
  double trace() const { return entries.trace().real(); }
};

using LinearMap = std::function<MatrixC(const MatrixC&)>;

enum class CpVerdict { CP, NotCP };
enum class CpMethod { paper_conditions, normalized_conditions, choi_oracle };

std::string_view to_string(CpVerdict v);
std::string_view to_string(CpMethod m);

// Margin of the 2x2 block coupling the (i, j) and (j, i) product vectors,
// i < j. Nonnegative iff the block is PSD.
struct BlockMargin {
  int i = 0;
  int j = 0;
  double margin = 0.0;
};

// The closed-form conditions exactly as typeset: absolute values on both
// sides of the 2x2 block inequality and a diagonal A entry with weight
// j/(j+1) on lambda_jj. Kept for comparison with the PSD reading.
struct LiteralConditions {
  std::vector<BlockMargin> b_margins;
  Eigen::VectorXd a_spectrum;
  double det_a = 0.0;
  CpVerdict verdict_psd = CpVerdict::NotCP;  // B conditions and A PSD
  CpVerdict verdict_det = CpVerdict::NotCP;  // B conditions and det A >= 0
};

struct CpReport {
  CpVerdict verdict = CpVerdict::NotCP;
  CpMethod method = CpMethod::choi_oracle;
  // Smallest condition margin (block eigenvalue or Choi eigenvalue).
  double margin = 0.0;

  std::vector<BlockMargin> b_margins;
  Eigen::VectorXd a_spectrum;
  std::optional<double> det_a;
  // det A >= -tol while A is not PSD.
  bool det_psd_discrepancy = false;
  // Union of all block eigenvalues, ascending (block methods only).
  Eigen::VectorXd block_spectrum;

  std::optional<double> choi_min_eigenvalue;
  Eigen::VectorXd choi_spectrum;

  std::optional<LiteralConditions> literal;

  bool is_cp() const { return verdict == CpVerdict::CP; }
};

// Channel application.
MatrixC apply_kf(const KrausChannel& ch, const MatrixC& x);
MatrixC apply_ev(const EigenChannel& ch, const MatrixC& x);

// Trace-preservation residuals of a Kraus-form channel, one per equation:
//   [0]  p_00 - (1 - sum_l p~_0l - 2 sum_l p_ll / (l(l+1)))
//   [1]  sum_{1<l<n} (p~_1l - p~_0l)                       (n >= 3)
//   [2]  p_22 - (p_11 + p~_01 - p~_12 + sum_{l>2} (p~_0l - p~_2l))
//   [k]  p_kk - (p_22 + sum_{1<j<k} (j+1)/(2j) [...])      (2 < k < n)
// All vanish iff the channel is trace preserving. For n = 2 only [0] exists.
std::vector<double> tp_residuals(const KrausChannel& ch);

double max_abs(const std::vector<double>& v);

// Solves the trace-preservation equations for p_00 and p_22..p_{n-1,n-1}
// given the off-diagonal table (its diagonal is ignored) and p_11.
//
// Throws ConstraintViolated when sum_{1<l<n} (p~_1l - p~_0l) != 0 and
// NegativeCoefficient (EntryError) when any resulting coefficient is < 0.
KrausChannel complete_tp(const RealTable& offdiag, double p11);

// Choi matrix of an arbitrary linear map on n x n matrices. Throws
// NonLinearMap when an additivity/homogeneity probe fails beyond 1e-10.
ChoiMatrix choi(const LinearMap& apply, int n);
ChoiMatrix choi(const KrausChannel& ch);
ChoiMatrix choi(const EigenChannel& ch);

// CP ground truth: verdict CP iff the Choi spectrum is >= -tolerance.
CpReport cp_check_oracle(const KrausChannel& ch, double tolerance = tol::psd);
CpReport cp_check_oracle(const EigenChannel& ch, double tolerance = tol::psd);

// Block conditions built from sum_ij lambda_ij conj(sigma_ij) (x) sigma_ij
// with unnormalized Gell-Mann matrices. The 2x2 blocks give
//   lambda_00 - 2/(j+1) lambda_jj + sum_{j<k<n} 2/(k(k+1)) lambda_kk
//       >= |lambda_ij - lambda_ji|
// and the n x n block has A_ij = lambda_ij + lambda_ji and
//   A_jj = lambda_00 + 2j/(j+1) lambda_jj + sum_{j<k<n} 2/(k(k+1)) lambda_kk.
// The verbatim typeset variant is reported alongside in `literal`.
CpReport cp_check_paper(const EigenChannel& ch, double tolerance = tol::psd);

// Exact block decomposition of the Choi matrix of an EV channel, with each
// Gell-Mann matrix weighted by 1/Tr(sigma^2). Block eigenvalues coincide
// with the Choi spectrum.
CpReport cp_check_normalized(const EigenChannel& ch,
                             double tolerance = tol::psd);

// Qubit Pauli-channel conditions for an n = 2 EV channel with
// (lambda_0, lambda_1, lambda_2, lambda_3) = (l_00, l_01, l_10, l_11).
struct FujiwaraAlgoet {
  // min(l0 + l3 - |l1 + l2|, l0 - l3 - |l1 - l2|)
  double margin = 0.0;
  // min(|l0 + l3| - |l1 + l2|, |l0 - l3| - |l1 - l2|)
  double literal_margin = 0.0;
};
FujiwaraAlgoet fujiwara_algoet(const EigenChannel& ch);

// Applies a TP, oracle-CP channel to a state. Throws InvalidChannel when
// the TP residual or the Choi spectrum exceeds the tolerance.
DensityMatrix apply_to_state(const KrausChannel& ch, const DensityMatrix& rho,
                             double tolerance = tol::psd);
DensityMatrix apply_to_state(const EigenChannel& ch, const DensityMatrix& rho,
                             double tolerance = tol::psd);

}  // namespace gmc

#endif  // GMC_CHANNELS_HPP
