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
#include <limits>

#include <fmt/format.h>

#include "gmc/channels.hpp"
#include "table_checks.hpp"

namespace gmc {

using detail::inv_kk1;

std::string_view to_string(CpVerdict v) {
  return v == CpVerdict::CP ? "CP" : "NotCP";
}

std::string_view to_string(CpMethod m) {
  switch (m) {
    case CpMethod::paper_conditions: return "paper_conditions";
    case CpMethod::normalized_conditions: return "normalized_conditions";
    case CpMethod::choi_oracle: return "choi_oracle";
  }
  return "unknown";
}

namespace {

CpVerdict verdict_of(double margin, double tolerance) {
  return margin >= -tolerance ? CpVerdict::CP : CpVerdict::NotCP;
}

// Fixed, dense, non-Hermitian probe inputs for the linearity check.
MatrixC probe_matrix(int n, double phase) {
  MatrixC m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m(i, j) = Complex(std::cos(phase * (i + 1) + j), std::sin(phase * (j + 2) - i));
  return m;
}

void check_linear(const LinearMap& apply, int n) {
  const MatrixC a = probe_matrix(n, 0.37);
  const MatrixC b = probe_matrix(n, 1.91);
  const Complex c(0.7, -0.3);
  const MatrixC fa = apply(a);
  const MatrixC fb = apply(b);
  require_square(fa, n, "choi: map output");
  const double scale = std::max(1.0, fa.cwiseAbs().maxCoeff() + fb.cwiseAbs().maxCoeff());
  const double additive = (apply(a + b) - fa - fb).cwiseAbs().maxCoeff();
  const double homogeneous = (apply(c * a) - c * fa).cwiseAbs().maxCoeff();
  const double err = std::max(additive, homogeneous);
  if (!(err <= 1e-10 * scale)) {
    throw Error(ErrorKind::NonLinearMap,
                fmt::format("map failed the linearity probe (deviation {:.3e})", err));
  }
}

// Eigenvalues of the real symmetric matrix a, ascending.
Eigen::VectorXd sym_eigenvalues(const Eigen::MatrixXd& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

Eigen::VectorXd sorted(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return Eigen::Map<Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

// Diagonal weights shared by both block constructions. With w0 the weight
// on lambda_00 and s the weight on every other Gell-Mann matrix:
//   pair_diag(j) = w0 l00 - s 2/(j+1) l_jj + s sum_{j<k<n} 2/(k(k+1)) l_kk
//   a_diag(a)    = w0 l00 + c(a) l_aa      + s sum_{a<k<n} 2/(k(k+1)) l_kk
struct BlockWeights {
  double w0;
  double s;
};

double tail_sum(const EigenChannel& ch, int from, double s) {
  double acc = 0.0;
  for (int k = from + 1; k < ch.dim(); ++k) acc += 2.0 * s * inv_kk1(k) * ch(k, k);
  return acc;
}

double pair_diag(const EigenChannel& ch, int j, BlockWeights w) {
  return w.w0 * ch(0, 0) - w.s * 2.0 / (j + 1.0) * ch(j, j) + tail_sum(ch, j, w.s);
}

Eigen::MatrixXd a_block(const EigenChannel& ch, BlockWeights w,
                        double (*diag_coeff)(int, double)) {
  const int n = ch.dim();
  Eigen::MatrixXd a(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (r == c) {
        const double own = r > 0 ? diag_coeff(r, w.s) * ch(r, r) : 0.0;
        a(r, r) = w.w0 * ch(0, 0) + own + tail_sum(ch, r, w.s);
      } else {
        a(r, c) = w.s * ch.tilde(r, c);
      }
    }
  }
  return a;
}

// Weight of sigma_aa (x) sigma_aa on |aa>: 2a/(a+1) per unit weight.
double derived_diag_coeff(int a, double s) { return s * 2.0 * a / (a + 1.0); }
// As typeset: a/(a+1) regardless of normalization.
double typeset_diag_coeff(int a, double) { return a / (a + 1.0); }

void fill_block_report(CpReport& rep, const EigenChannel& ch, BlockWeights w,
                       double tolerance) {
  const int n = ch.dim();
  std::vector<double> spectrum;
  double margin = std::numeric_limits<double>::infinity();
  for (int j = 1; j < n; ++j) {
    const double d = pair_diag(ch, j, w);
    for (int i = 0; i < j; ++i) {
      const double off = w.s * std::abs(ch(i, j) - ch(j, i));
      rep.b_margins.push_back({i, j, d - off});
      spectrum.push_back(d - off);
      spectrum.push_back(d + off);
      margin = std::min(margin, d - off);
    }
  }
  const Eigen::MatrixXd a = a_block(ch, w, derived_diag_coeff);
  rep.a_spectrum = sym_eigenvalues(a);
  rep.det_a = a.determinant();
  for (double ev : rep.a_spectrum) spectrum.push_back(ev);
  margin = std::min(margin, rep.a_spectrum.minCoeff());
  rep.det_psd_discrepancy = *rep.det_a >= -tolerance && rep.a_spectrum.minCoeff() < -tolerance;
  rep.block_spectrum = sorted(std::move(spectrum));
  rep.margin = margin;
  rep.verdict = verdict_of(margin, tolerance);
}

}  // namespace

ChoiMatrix choi(const LinearMap& apply, int n) {
  if (n < 2) throw Error(ErrorKind::BadDimension, "choi: dimension must be >= 2");
  check_linear(apply, n);
  const int d = n * n;
  MatrixC j = MatrixC::Zero(d, d);
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      const MatrixC img = apply(matrix_unit(n, k, l));
      require_square(img, n, "choi: map output");
      j.block(k * n, l * n, n, n) = img;
    }
  }
  ChoiMatrix out;
  out.n = n;
  out.max_asymmetry = (j - j.adjoint()).cwiseAbs().maxCoeff();
  out.entries = 0.5 * (j + j.adjoint());
  Eigen::SelfAdjointEigenSolver<MatrixC> es(out.entries, Eigen::EigenvaluesOnly);
  out.spectrum = es.eigenvalues();
  out.min_eigenvalue = out.spectrum.minCoeff();
  return out;
}

ChoiMatrix choi(const KrausChannel& ch) {
  return choi([&ch](const MatrixC& x) { return apply_kf(ch, x); }, ch.dim());
}

ChoiMatrix choi(const EigenChannel& ch) {
  return choi([&ch](const MatrixC& x) { return apply_ev(ch, x); }, ch.dim());
}

namespace {

CpReport oracle_report(const ChoiMatrix& j, double tolerance) {
  CpReport rep;
  rep.method = CpMethod::choi_oracle;
  rep.choi_spectrum = j.spectrum;
  rep.choi_min_eigenvalue = j.min_eigenvalue;
  rep.margin = j.min_eigenvalue;
  rep.verdict = verdict_of(j.min_eigenvalue, tolerance);
  return rep;
}

}  // namespace

CpReport cp_check_oracle(const KrausChannel& ch, double tolerance) {
  return oracle_report(choi(ch), tolerance);
}

CpReport cp_check_oracle(const EigenChannel& ch, double tolerance) {
  return oracle_report(choi(ch), tolerance);
}

CpReport cp_check_paper(const EigenChannel& ch, double tolerance) {
  const int n = ch.dim();
  CpReport rep;
  rep.method = CpMethod::paper_conditions;
  fill_block_report(rep, ch, {1.0, 1.0}, tolerance);

  LiteralConditions lit;
  double b_min = std::numeric_limits<double>::infinity();
  for (int j = 1; j < n; ++j) {
    const double d = std::abs(pair_diag(ch, j, {1.0, 1.0}));
    for (int i = 0; i < j; ++i) {
      const double m = d - std::abs(ch(i, j) - ch(j, i));
      lit.b_margins.push_back({i, j, m});
      b_min = std::min(b_min, m);
    }
  }
  const Eigen::MatrixXd a = a_block(ch, {1.0, 1.0}, typeset_diag_coeff);
  lit.a_spectrum = sym_eigenvalues(a);
  lit.det_a = a.determinant();
  const bool b_ok = b_min >= -tolerance;
  lit.verdict_psd = (b_ok && lit.a_spectrum.minCoeff() >= -tolerance) ? CpVerdict::CP
                                                                       : CpVerdict::NotCP;
  lit.verdict_det = (b_ok && lit.det_a >= -tolerance) ? CpVerdict::CP : CpVerdict::NotCP;
  rep.literal = std::move(lit);
  return rep;
}

CpReport cp_check_normalized(const EigenChannel& ch, double tolerance) {
  CpReport rep;
  rep.method = CpMethod::normalized_conditions;
  fill_block_report(rep, ch, {1.0 / ch.dim(), 0.5}, tolerance);
  return rep;
}

FujiwaraAlgoet fujiwara_algoet(const EigenChannel& ch) {
  if (ch.dim() != 2) {
    throw Error(ErrorKind::BadDimension,
                "Fujiwara-Algoet conditions apply to n = 2 channels only");
  }
  const double l0 = ch(0, 0), l1 = ch(0, 1), l2 = ch(1, 0), l3 = ch(1, 1);
  FujiwaraAlgoet fa;
  fa.margin = std::min(l0 + l3 - std::abs(l1 + l2), l0 - l3 - std::abs(l1 - l2));
  fa.literal_margin = std::min(std::abs(l0 + l3) - std::abs(l1 + l2),
                               std::abs(l0 - l3) - std::abs(l1 - l2));
  return fa;
}

}  // namespace gmc
