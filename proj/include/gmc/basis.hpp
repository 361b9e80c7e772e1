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

#ifndef GMC_BASIS_HPP
#define GMC_BASIS_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace gmc {

using Complex = std::complex<double>;
using MatrixC = Eigen::MatrixXcd;

// n x n table of real coefficients indexed by the Gell-Mann pair (i, j).
// Serialized row-major, i.e. flat index i * n + j.
using RealTable = Eigen::MatrixXd;
using ComplexTable = Eigen::MatrixXcd;

inline int flat_index(int n, int i, int j) { return i * n + j; }

// Matrix unit e_ij: a single 1 at (i, j).
MatrixC matrix_unit(int n, int i, int j);

// Generalized Gell-Mann matrix sigma_ij of dimension n.
//
//   i <  j : e_ij + e_ji                       (symmetric)
//   i >  j : -i (e_ji - e_ij)                  (antisymmetric)
//   i == j > 0 : sqrt(2/(j(j+1))) (sum_{a<j} e_aa - j e_jj)
//   (0, 0) : identity
//
// Throws BadDimension for n < 2 and IndexOutOfRange for i, j outside [0, n).
MatrixC gell_mann(int n, int i, int j);

// All n^2 Gell-Mann matrices for one dimension, in row-major (i, j) order.
class GellMannBasis {
 public:
  explicit GellMannBasis(int n);

  int dim() const noexcept { return n_; }
  int size() const noexcept { return n_ * n_; }

  const MatrixC& operator()(int i, int j) const {
    return matrices_[static_cast<std::size_t>(flat_index(n_, i, j))];
  }
  const MatrixC& at(int alpha) const {
    return matrices_[static_cast<std::size_t>(alpha)];
  }

  // Tr(sigma_ij^2): n for the identity, 2 otherwise.
  double norm_sq(int i, int j) const {
    return (i == 0 && j == 0) ? static_cast<double>(n_) : 2.0;
  }

  // Shared immutable instance for dimension n, built on first use.
  static const GellMannBasis& shared(int n);

 private:
  int n_;
  std::vector<MatrixC> matrices_;
};

inline GellMannBasis full_basis(int n) { return GellMannBasis(n); }

// Hilbert-Schmidt pairing Tr(A^dagger B). Throws DimensionMismatch.
Complex hs_inner(const MatrixC& a, const MatrixC& b);

// Coefficients c_ij with X = sum c_ij sigma_ij. Throws DimensionMismatch.
ComplexTable decompose(const MatrixC& x, const GellMannBasis& basis);

// Inverse of decompose.
MatrixC recompose(const ComplexTable& coeffs, const GellMannBasis& basis);

// Throws DimensionMismatch unless m is n x n.
void require_square(const MatrixC& m, int n, const char* what);

}  // namespace gmc

#endif  // GMC_BASIS_HPP
