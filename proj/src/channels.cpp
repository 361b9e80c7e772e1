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

#include "gmc/channels.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "table_checks.hpp"

namespace gmc {

KrausChannel::KrausChannel(RealTable p) : p_(std::move(p)) {
  detail::check_table(p_, "Kraus coefficients");
}

KrausChannel KrausChannel::identity(int n) {
  RealTable p = RealTable::Zero(n, n);
  if (n >= 1) p(0, 0) = 1.0;
  return KrausChannel(std::move(p));
}

std::vector<IndexPair> KrausChannel::negative_entries(double tolerance) const {
  std::vector<IndexPair> out;
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      if (p_(i, j) < -tolerance) out.push_back({i, j});
  return out;
}

EigenChannel::EigenChannel(RealTable lambda) : lambda_(std::move(lambda)) {
  detail::check_table(lambda_, "channel eigenvalues");
}

EigenChannel EigenChannel::identity(int n) {
  return EigenChannel(RealTable::Ones(n, n));
}

bool EigenChannel::is_trace_preserving(double tolerance) const {
  return std::abs(lambda_(0, 0) - 1.0) <= tolerance;
}

DensityMatrix::DensityMatrix(MatrixC rho) : rho_(std::move(rho)) {
  if (rho_.rows() != rho_.cols() || rho_.rows() < 2) {
    throw Error(ErrorKind::InvariantError,
                "density matrix must be square with dimension >= 2");
  }
  if (!rho_.allFinite()) {
    throw Error(ErrorKind::InvariantError, "density matrix has non-finite entries");
  }
  const double asym = (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
  if (asym > 1e-12) {
    throw Error(ErrorKind::InvariantError,
                fmt::format("density matrix not Hermitian (asymmetry {:.3e})", asym));
  }
  const Complex tr = rho_.trace();
  if (std::abs(tr - 1.0) > 1e-12) {
    throw Error(ErrorKind::InvariantError,
                fmt::format("density matrix trace {:.17g}{:+.3e}i != 1", tr.real(),
                            tr.imag()));
  }
  const MatrixC herm = 0.5 * (rho_ + rho_.adjoint());
  Eigen::SelfAdjointEigenSolver<MatrixC> es(herm, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-10) {
    throw Error(ErrorKind::InvariantError,
                fmt::format("density matrix has negative eigenvalue {:.3e}",
                            es.eigenvalues().minCoeff()));
  }
}

MatrixC apply_kf(const KrausChannel& ch, const MatrixC& x) {
  const int n = ch.dim();
  require_square(x, n, "apply_kf");
  const auto& basis = GellMannBasis::shared(n);
  MatrixC out = MatrixC::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double w = ch(i, j);
      if (w == 0.0) continue;
      const MatrixC& s = basis(i, j);
      out.noalias() += w * (s * x * s);
    }
  }
  return out;
}

MatrixC apply_ev(const EigenChannel& ch, const MatrixC& x) {
  const int n = ch.dim();
  require_square(x, n, "apply_ev");
  const auto& basis = GellMannBasis::shared(n);
  ComplexTable c = decompose(x, basis);
  c.array() *= ch.eigenvalues().array().cast<Complex>();
  return recompose(c, basis);
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

namespace {

// Right-hand sides of the trace-preservation equations, written against a
// generic coefficient accessor so complete_tp and tp_residuals share them.
template <class P>
struct TpEquations {
  const P& p;
  int n;

  double tilde(int i, int j) const { return p(i, j) + p(j, i); }

  double p00_rhs() const {
    double s = 1.0;
    for (int l = 1; l < n; ++l) s -= tilde(0, l);
    for (int l = 1; l < n; ++l) s -= 2.0 * p(l, l) * detail::inv_kk1(l);
    return s;
  }

  double column_balance() const {
    double s = 0.0;
    for (int l = 2; l < n; ++l) s += tilde(1, l) - tilde(0, l);
    return s;
  }

  double p22_rhs() const {
    double s = p(1, 1) + tilde(0, 1) - tilde(1, 2);
    for (int l = 3; l < n; ++l) s += tilde(0, l) - tilde(2, l);
    return s;
  }

  // p_kk for 2 < k < n, in terms of p_22 and off-diagonals.
  double pkk_rhs(int k) const {
    double s = p(2, 2);
    for (int j = 2; j < k; ++j) {
      double bracket = 0.0;
      for (int l = 0; l < j; ++l) bracket += tilde(l, j) - tilde(l, j + 1);
      for (int l = j + 2; l < n; ++l) bracket += tilde(j, l) - tilde(j + 1, l);
      s += (j + 1.0) / (2.0 * j) * bracket;
    }
    return s;
  }
};

}  // namespace

std::vector<double> tp_residuals(const KrausChannel& ch) {
  const int n = ch.dim();
  TpEquations<KrausChannel> eq{ch, n};
  std::vector<double> r;
  r.push_back(ch(0, 0) - eq.p00_rhs());
  if (n >= 3) {
    r.push_back(eq.column_balance());
    r.push_back(ch(2, 2) - eq.p22_rhs());
    for (int k = 3; k < n; ++k) r.push_back(ch(k, k) - eq.pkk_rhs(k));
  }
  return r;
}

KrausChannel complete_tp(const RealTable& offdiag, double p11) {
  detail::check_table(offdiag, "off-diagonal coefficients");
  const int n = static_cast<int>(offdiag.rows());
  RealTable p = offdiag;
  for (int k = 0; k < n; ++k) p(k, k) = 0.0;
  p(1, 1) = p11;

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p(i, j) < 0.0) {
        throw EntryError(ErrorKind::NegativeCoefficient, {i, j},
                         fmt::format("p_{}{} = {} is negative", i, j, p(i, j)));
      }

  auto at = [&p](int i, int j) { return p(i, j); };
  TpEquations<decltype(at)> eq{at, n};
  if (n >= 3) {
    const double balance = eq.column_balance();
    if (std::abs(balance) > tol::equality) {
      throw Error(ErrorKind::ConstraintViolated,
                  fmt::format("sum_(1<l<n) (p~_1l - p~_0l) = {:.3e}, must vanish",
                              balance));
    }
    p(2, 2) = eq.p22_rhs();
    // p_kk only references p_22 and off-diagonals, so order does not matter.
    for (int k = 3; k < n; ++k) p(k, k) = eq.pkk_rhs(k);
  }
  p(0, 0) = eq.p00_rhs();

  for (int k = 0; k < n; ++k) {
    // Cancellation can leave exact zeros at -1e-17.
    if (p(k, k) < 0.0 && p(k, k) > -1e-14) p(k, k) = 0.0;
    if (p(k, k) < 0.0) {
      throw EntryError(ErrorKind::NegativeCoefficient, {k, k},
                       fmt::format("completed p_{}{} = {} is negative", k, k,
                                   p(k, k)));
    }
  }
  return KrausChannel(std::move(p));
}

DensityMatrix apply_to_state(const KrausChannel& ch, const DensityMatrix& rho,
                             double tolerance) {
  require_square(rho.matrix(), ch.dim(), "apply_to_state");
  const double tp = max_abs(tp_residuals(ch));
  if (tp > tol::tp) {
    throw Error(ErrorKind::InvalidChannel,
                fmt::format("channel is not trace preserving (residual {:.3e})", tp));
  }
  const CpReport cp = cp_check_oracle(ch, tolerance);
  if (!cp.is_cp()) {
    throw Error(ErrorKind::InvalidChannel,
                fmt::format("channel is not CP (Choi min eigenvalue {:.3e})",
                            cp.margin));
  }
  MatrixC out = apply_kf(ch, rho.matrix());
  return DensityMatrix(0.5 * (out + out.adjoint()));
}

DensityMatrix apply_to_state(const EigenChannel& ch, const DensityMatrix& rho,
                             double tolerance) {
  require_square(rho.matrix(), ch.dim(), "apply_to_state");
  if (!ch.is_trace_preserving()) {
    throw Error(ErrorKind::InvalidChannel,
                fmt::format("channel is not trace preserving (lambda_00 = {})",
                            ch(0, 0)));
  }
  const CpReport cp = cp_check_oracle(ch, tolerance);
  if (!cp.is_cp()) {
    throw Error(ErrorKind::InvalidChannel,
                fmt::format("channel is not CP (Choi min eigenvalue {:.3e})",
                            cp.margin));
  }
  MatrixC out = apply_ev(ch, rho.matrix());
  return DensityMatrix(0.5 * (out + out.adjoint()));
}

}  // namespace gmc
