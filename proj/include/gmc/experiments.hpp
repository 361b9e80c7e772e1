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


#ifndef GMC_EXPERIMENTS_HPP
#define GMC_EXPERIMENTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "gmc/sampling.hpp"

namespace gmc {

enum class EvSampler { uniform, scaled };

struct CrossvalOptions {
  int n = 2;
  std::size_t samples = 10000;
  std::uint64_t seed = 7;
  EvSampler sampler = EvSampler::uniform;
  double range = 1.5;  // uniform sampler only
  // Samples with |min Choi eigenvalue| <= margin_filter are excluded.
  double margin_filter = 1e-8;
  double tolerance = tol::psd;
};

// Agreement of one method with the Choi oracle over the counted samples.
struct Agreement {
  std::string method;
  std::size_t agree = 0;
  std::size_t counted = 0;
  double rate() const { return counted ? static_cast<double>(agree) / counted : 1.0; }
};

struct CrossvalReport {
  CrossvalOptions options;
  std::size_t filtered = 0;   // excluded by the margin filter
  std::size_t counted = 0;
  std::size_t oracle_cp = 0;  // counted samples the oracle calls CP
  // paper, paper_literal_psd, paper_literal_det, normalized, and for n = 2
  // fujiwara_algoet and fujiwara_algoet_literal.
  std::vector<Agreement> agreements;
  // Counted samples on which paper, normalized and oracle (and the direct
  // qubit conditions at n = 2) all agree.
  std::size_t all_agree = 0;
  std::size_t det_psd_discrepancies = 0;          // derived A block
  std::size_t literal_det_psd_discrepancies = 0;  // typeset A block

  const Agreement& agreement(const std::string& method) const;
  nlohmann::ordered_json to_json() const;
};

CrossvalReport run_crossval(const CrossvalOptions& opts);

// One displayed identity compared numerically.
struct FormulaCheck {
  std::string label;
  double max_error = 0.0;
  bool ok = false;
};

struct ExampleReport {
  std::string name;
  std::vector<FormulaCheck> checks;
  std::vector<std::string> lines;  // human-readable rendering
  bool ok() const;
};

// n = 4 Kraus channel with p~_02 = p~_12 and p~_03 = p~_13 != p~_23, which is
// trace preserving but has no Gell-Mann eigenvectors. Checks the four TP
// relations, the failure of the EV conditions and the images of
// sigma_00, sigma_11, sigma_22, sigma_33 to `tolerance` entrywise.
// Throws InvalidChannel if `ch` is not of that shape.
ExampleReport example_kf_not_ev(const KrausChannel& ch, double tolerance = 1e-12);
KrausChannel example_kf_not_ev_channel();
KrausChannel random_kf_not_ev_channel(Sampler& s);

// n = 3 GKSL generator with arbitrary rates: checks the images of all nine
// Gell-Mann matrices, including the sigma_11 / sigma_22 mixing term
// sqrt(3) (gamma~_02 - gamma~_12), and the EV criterion.
ExampleReport example_lf_not_ev(const LindbladGenerator& gen, double tolerance = 1e-12);
LindbladGenerator example_lf_not_ev_generator();

}  // namespace gmc

#endif  // GMC_EXPERIMENTS_HPP
