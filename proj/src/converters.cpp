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

#include "gmc/converters.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "table_checks.hpp"

namespace gmc {

using detail::inv_kk1;

namespace {

// Pairwise equality of column sums tilde(j, l) over j < l, as (j, k, l).
template <class Tilde>
void check_columns(int n, Tilde tilde, const char* label,
                   std::vector<Violation>& out) {
  for (int l = 2; l < n; ++l)
    for (int j = 0; j < l; ++j)
      for (int k = j + 1; k < l; ++k) {
        const double d = tilde(j, l) - tilde(k, l);
        if (std::abs(d) > tol::equality) out.push_back({label, {j, k, l}, d});
      }
}

ConditionCheck finish(std::vector<Violation> v) {
  ConditionCheck c;
  c.holds = v.empty();
  c.violations = std::move(v);
  return c;
}

}  // namespace

ConditionCheck kf_is_ev(const KrausChannel& ch) {
  const double tp = max_abs(tp_residuals(ch));
  if (tp > tol::tp) {
    throw Error(ErrorKind::NotTracePreserving,
                fmt::format("KF channel is not trace preserving (residual {:.3e})", tp));
  }
  std::vector<Violation> v;
  check_columns(ch.dim(), [&ch](int i, int j) { return ch.tilde(i, j); },
                "p~_jl != p~_kl", v);
  return finish(std::move(v));
}

EigenChannel kf_to_ev(const KrausChannel& ch) {
  const ConditionCheck c = kf_is_ev(ch);
  if (!c.holds) {
    throw ConditionError(ErrorKind::NotEV, c.violations,
                         "KF channel does not have Gell-Mann eigenvectors");
  }
  const int n = ch.dim();
  auto pt = [&ch](int l) { return ch.tilde(0, l); };
  double pt_sum = 0.0;
  for (int j = 1; j < n; ++j) pt_sum += pt(j);

  RealTable lambda(n, n);
  lambda(0, 0) = 1.0;
  for (int k = 1; k < n; ++k) {
    double tail = 0.0;
    for (int j = k + 1; j < n; ++j) tail += pt(j);
    lambda(k, k) = 1.0 - (k + 1) * pt(k) - tail;
  }
  const double base = 1.0 - 2.0 * ch(1, 1) - pt(1);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      if (k == l) continue;
      const int top = std::max(k, l);
      lambda(k, l) = ch(k, l) - ch(l, k) + base - (pt_sum - pt(top));
    }
  return EigenChannel(std::move(lambda));
}

ConditionCheck ev_is_kf(const EigenChannel& ch) {
  if (!ch.is_trace_preserving()) {
    throw Error(ErrorKind::NotTracePreserving,
                fmt::format("EV channel has lambda_00 = {}", ch(0, 0)));
  }
  const int n = ch.dim();
  std::vector<Violation> v;
  check_columns(n, [&ch](int i, int j) { return ch.tilde(i, j); },
                "lambda~_jl != lambda~_kl", v);
  auto lt = [&ch](int l) { return ch.tilde(0, l); };
  for (int k = 2; k < n; ++k) {
    double partial = 0.0;
    for (int j = 1; j < k; ++j) partial += lt(j);
    const double rhs = ch(1, 1) + 0.5 * (lt(1) + partial - k * lt(k));
    const double d = ch(k, k) - rhs;
    if (std::abs(d) > tol::equality) v.push_back({"lambda_kk recursion", {k}, d});
  }
  return finish(std::move(v));
}

KrausChannel ev_to_kf(const EigenChannel& ch) {
  const ConditionCheck c = ev_is_kf(ch);
  if (!c.holds) {
    throw ConditionError(ErrorKind::NotKF, c.violations,
                         "EV channel has no Gell-Mann Kraus form");
  }
  const int n = ch.dim();
  const double nn = n;
  auto lt = [&ch](int l) { return ch.tilde(0, l); };
  double lt_sum = 0.0;
  for (int j = 1; j < n; ++j) lt_sum += lt(j);

  // Column sums p~_l recovered from the diagonal eigenvalues.
  std::vector<double> col(static_cast<std::size_t>(n), 0.0);
  for (int l = 1; l < n; ++l) {
    double s = 1.0 / nn - ch(l, l) / (l + 1.0);
    for (int j = l + 1; j < n; ++j) s += inv_kk1(j) * ch(j, j);
    col[static_cast<std::size_t>(l)] = s;
  }

  RealTable p(n, n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      if (k == l) continue;
      p(k, l) = 0.5 * col[static_cast<std::size_t>(std::max(k, l))] +
                0.25 * (ch(k, l) - ch(l, k));
    }
  const double diag_shift = 1.0 - ch(1, 1) - 0.5 * (lt(1) + lt_sum);
  for (int k = 1; k < n; ++k) p(k, k) = (diag_shift + nn * ch(k, k)) / (2.0 * nn);
  p(0, 0) = (1.0 + 0.5 * (nn - 1.0) * (2.0 * ch(1, 1) + lt(1) + lt_sum)) / (nn * nn);
  return KrausChannel(std::move(p));
}

}  // namespace gmc
