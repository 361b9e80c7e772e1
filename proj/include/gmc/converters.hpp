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

#ifndef GMC_CONVERTERS_HPP
#define GMC_CONVERTERS_HPP

#include <vector>

#include "gmc/channels.hpp"

namespace gmc {

// Outcome of a representability test. `holds` is true iff `violations` is
// empty.
struct ConditionCheck {
  bool holds = true;
  std::vector<Violation> violations;
};

// A trace-preserving KF channel is also an EV channel iff, for every column
// l, the sums p~_jl agree for all j < l. Violations are reported as (j, k, l)
// triples with p~_jl != p~_kl.
//
// Throws NotTracePreserving when the TP residuals exceed 1e-10.
ConditionCheck kf_is_ev(const KrausChannel& ch);

// Eigenvalues of an EV-compatible KF channel. With p~_l the common column
// sum:
//   lambda_kk = 1 - (k+1) p~_k - sum_{k<j<n} p~_j
//   lambda_kl = p_kl - p_lk + 1 - 2 p_11 - p~_1 - sum_{0<j<n, j != max(k,l)} p~_j
// Throws NotEV with the violation list.
EigenChannel kf_to_ev(const KrausChannel& ch);

// An EV channel with lambda_00 = 1 has a Gell-Mann Kraus form iff
//   lambda~_jl agree for all j < l, and
//   lambda_kk = lambda_11 + (lambda~_1 + sum_{0<j<k} lambda~_j - k lambda~_k) / 2.
// Throws NotTracePreserving when lambda_00 != 1.
ConditionCheck ev_is_kf(const EigenChannel& ch);

// Kraus coefficients of a KF-compatible EV channel. The result may have
// negative entries; those mark a map that is not realizable with Gell-Mann
// Kraus operators and are left for the caller to inspect.
// Throws NotKF with the violation list.
KrausChannel ev_to_kf(const EigenChannel& ch);

}  // namespace gmc

#endif  // GMC_CONVERTERS_HPP
