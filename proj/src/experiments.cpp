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


#include "gmc/experiments.hpp"

#include <cmath>

#include <fmt/format.h>

namespace gmc {

const Agreement& CrossvalReport::agreement(const std::string& method) const {
  for (const auto& a : agreements)
    if (a.method == method) return a;
  throw Error(ErrorKind::IndexOutOfRange, fmt::format("no agreement entry \"{}\"", method));
}

nlohmann::ordered_json CrossvalReport::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = options.n;
  j["samples"] = options.samples;
  j["seed"] = options.seed;
  j["sampler"] = options.sampler == EvSampler::uniform ? "uniform" : "scaled";
  if (options.sampler == EvSampler::uniform) j["range"] = options.range;
  j["margin_filter"] = options.margin_filter;
  j["tolerance"] = options.tolerance;
  j["filtered"] = filtered;
  j["counted"] = counted;
  j["oracle_cp"] = oracle_cp;
  nlohmann::ordered_json agree = nlohmann::ordered_json::object();
  for (const auto& a : agreements) {
    agree[a.method] = {{"agree", a.agree}, {"counted", a.counted}, {"rate", a.rate()}};
  }
  j["agreement_with_oracle"] = agree;
  j["all_agree"] = all_agree;
  j["all_agree_rate"] = counted ? static_cast<double>(all_agree) / counted : 1.0;
  j["det_psd_discrepancies"] = det_psd_discrepancies;
  j["literal_det_psd_discrepancies"] = literal_det_psd_discrepancies;
  return j;
}

CrossvalReport run_crossval(const CrossvalOptions& opts) {
  if (opts.n < 2) throw Error(ErrorKind::BadDimension, "crossval: n must be >= 2");
  CrossvalReport rep;
  rep.options = opts;
  const bool qubit = opts.n == 2;
  std::vector<std::string> names = {"paper", "paper_literal_psd", "paper_literal_det",
                                    "normalized"};
  if (qubit) {
    names.push_back("fujiwara_algoet");
    names.push_back("fujiwara_algoet_literal");
  }
  for (const auto& name : names) rep.agreements.push_back({name, 0, 0});

  Sampler sampler(opts.seed);
  const double tol = opts.tolerance;
  for (std::size_t s = 0; s < opts.samples; ++s) {
    const EigenChannel ch = opts.sampler == EvSampler::uniform
                                ? sampler.ev_uniform(opts.n, opts.range)
                                : sampler.ev_scaled(opts.n);
    const CpReport oracle = cp_check_oracle(ch, tol);
    if (std::abs(oracle.margin) <= opts.margin_filter) {
      ++rep.filtered;
      continue;
    }
    ++rep.counted;
    if (oracle.is_cp()) ++rep.oracle_cp;

    const CpReport paper = cp_check_paper(ch, tol);
    const CpReport normalized = cp_check_normalized(ch, tol);
    std::vector<CpVerdict> verdicts = {paper.verdict, paper.literal->verdict_psd,
                                       paper.literal->verdict_det, normalized.verdict};
    if (qubit) {
      const FujiwaraAlgoet fa = fujiwara_algoet(ch);
      verdicts.push_back(fa.margin >= -tol ? CpVerdict::CP : CpVerdict::NotCP);
      verdicts.push_back(fa.literal_margin >= -tol ? CpVerdict::CP : CpVerdict::NotCP);
    }
    for (std::size_t k = 0; k < verdicts.size(); ++k) {
      ++rep.agreements[k].counted;
      if (verdicts[k] == oracle.verdict) ++rep.agreements[k].agree;
    }
    bool all = paper.verdict == oracle.verdict && normalized.verdict == oracle.verdict;
    if (qubit) all = all && verdicts[4] == oracle.verdict;
    if (all) ++rep.all_agree;
    if (paper.det_psd_discrepancy) ++rep.det_psd_discrepancies;
    const LiteralConditions& lit = *paper.literal;
    if (lit.det_a >= -tol && lit.a_spectrum.minCoeff() < -tol) ++rep.literal_det_psd_discrepancies;
  }
  return rep;
}

bool ExampleReport::ok() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return !checks.empty();
}

namespace {

MatrixC unit(int n, int i, int j) { return matrix_unit(n, i, j); }

void add_check(ExampleReport& rep, std::string label, double err, double tol) {
  rep.checks.push_back({std::move(label), err, err <= tol});
}

double max_diff(const MatrixC& a, const MatrixC& b) { return (a - b).cwiseAbs().maxCoeff(); }

// " + 0.25" / " - 0.25"
std::string signed_term(double x) {
  return fmt::format(" {} {:.12g}", x < 0 ? '-' : '+', std::abs(x));
}

std::string status(const FormulaCheck& c) {
  return fmt::format("[{}] {}  (max error {:.2e})", c.ok ? "ok" : "FAIL", c.label, c.max_error);
}

}  // namespace

KrausChannel example_kf_not_ev_channel() {
  RealTable p = RealTable::Zero(4, 4);
  p(0, 1) = p(1, 0) = 0.02;
  p(0, 2) = p(2, 0) = 0.02;
  p(2, 1) = 0.02;
  p(1, 2) = p(0, 2) + p(2, 0) - p(2, 1);
  p(0, 3) = p(3, 0) = 0.03;
  p(3, 1) = 0.03;
  p(1, 3) = p(0, 3) + p(3, 0) - p(3, 1);
  p(2, 3) = p(3, 2) = 0.01;
  return complete_tp(p, 0.02);
}

KrausChannel random_kf_not_ev_channel(Sampler& s) {
  for (;;) {
    RealTable p = RealTable::Zero(4, 4);
    p(0, 1) = s.uniform(0.0, 0.05);
    p(1, 0) = s.uniform(0.0, 0.05);
    p(0, 2) = s.uniform(0.0, 0.05);
    p(2, 0) = s.uniform(0.0, 0.05);
    p(2, 1) = s.uniform(0.0, p(0, 2) + p(2, 0));
    p(1, 2) = p(0, 2) + p(2, 0) - p(2, 1);
    p(0, 3) = s.uniform(0.0, 0.05);
    p(3, 0) = s.uniform(0.0, 0.05);
    p(3, 1) = s.uniform(0.0, p(0, 3) + p(3, 0));
    p(1, 3) = p(0, 3) + p(3, 0) - p(3, 1);
    p(2, 3) = s.uniform(0.0, 0.05);
    p(3, 2) = s.uniform(0.0, 0.05);
    if (std::abs(p(2, 3) + p(3, 2) - p(0, 3) - p(3, 0)) < 1e-3) continue;
    try {
      return complete_tp(p, s.uniform(0.0, 0.05));
    } catch (const EntryError&) {
    }
  }
}

ExampleReport example_kf_not_ev(const KrausChannel& ch, double tolerance) {
  const int n = 4;
  if (ch.dim() != n) throw Error(ErrorKind::InvalidChannel, "example channel must have n = 4");
  auto t = [&ch](int i, int j) { return ch.tilde(i, j); };
  const double tp = max_abs(tp_residuals(ch));
  if (tp > tol::tp || std::abs(t(0, 2) - t(1, 2)) > tol::equality ||
      std::abs(t(0, 3) - t(1, 3)) > tol::equality ||
      std::abs(t(0, 3) - t(2, 3)) <= tol::equality) {
    throw Error(ErrorKind::InvalidChannel,
                "example channel needs TP, p~_02 = p~_12 and p~_03 = p~_13 != p~_23");
  }

  ExampleReport rep;
  rep.name = "paper-1";
  const double p00 = ch(0, 0), p11 = ch(1, 1), p22 = ch(2, 2), p33 = ch(3, 3);
  add_check(rep, "p~_12 - p~_02 = p~_13 - p~_03",
            std::abs((t(1, 2) - t(0, 2)) - (t(1, 3) - t(0, 3))), tolerance);
  add_check(rep, "p_22 = p_11 + p~_01 - p~_12 + p~_03 - p~_23",
            std::abs(p22 - (p11 + t(0, 1) - t(1, 2) + t(0, 3) - t(2, 3))), tolerance);
  add_check(rep, "p_33 = p_11 + p~_01 - p~_23 + (3 p~_02 - 2 p~_12 - p~_03)/2",
            std::abs(p33 - (p11 + t(0, 1) - t(2, 3) +
                            0.5 * (3 * t(0, 2) - 2 * t(1, 2) - t(0, 3)))),
            tolerance);
  add_check(rep, "p_00 = 1 + (p~_12 + p~_23)/2 - 3(p_11 + p~_01)/2 - 5(p~_02 + p~_03)/4",
            std::abs(p00 - (1 + 0.5 * (t(1, 2) + t(2, 3)) - 1.5 * (p11 + t(0, 1)) -
                            1.25 * (t(0, 2) + t(0, 3)))),
            tolerance);
  const ConditionCheck ev = kf_is_ev(ch);
  rep.checks.push_back(
      {fmt::format("EV conditions fail (p~_03 - p~_23 = {:.6g})", t(0, 3) - t(2, 3)), 0.0,
       !ev.holds});

  const auto& b = GellMannBasis::shared(n);
  const double off = t(0, 3) - t(2, 3);
  const MatrixC diag = unit(n, 3, 3) - unit(n, 2, 2);
  const double c11 = 1 - 2 * t(0, 1) - t(0, 2) - t(0, 3);
  const double c22 = 1 - 3 * t(0, 2) - t(0, 3);
  const double c33 = 1 - 4 * t(0, 3);
  const double k22 = 2 * std::sqrt(3.0) / 3 * off;
  const double k33 = -2 * std::sqrt(6.0) / 3 * off;
  add_check(rep, "Lambda[sigma_00] = sigma_00", max_diff(apply_kf(ch, b(0, 0)), b(0, 0)),
            tolerance);
  add_check(rep, "Lambda[sigma_11] = (1 - 2 p~_01 - p~_02 - p~_03) sigma_11",
            max_diff(apply_kf(ch, b(1, 1)), c11 * b(1, 1)), tolerance);
  add_check(rep,
            "Lambda[sigma_22] = (1 - 3 p~_02 - p~_03) sigma_22 "
            "+ (2 sqrt3/3)(p~_03 - p~_23)(e_33 - e_22)",
            max_diff(apply_kf(ch, b(2, 2)), c22 * b(2, 2) + k22 * diag), tolerance);
  add_check(rep,
            "Lambda[sigma_33] = (1 - 4 p~_03) sigma_33 "
            "- (2 sqrt6/3)(p~_03 - p~_23)(e_33 - e_22)",
            max_diff(apply_kf(ch, b(3, 3)), c33 * b(3, 3) + k33 * diag), tolerance);

  rep.lines.push_back("n = 4 Kraus channel with p~_02 = p~_12, p~_03 = p~_13 != p~_23");
  rep.lines.push_back(fmt::format("  p~_01 = {:.6g}  p~_02 = {:.6g}  p~_03 = {:.6g}  p~_23 = {:.6g}",
                                  t(0, 1), t(0, 2), t(0, 3), t(2, 3)));
  rep.lines.push_back(fmt::format("Lambda[sigma_11] = {:.12g} sigma_11", c11));
  rep.lines.push_back(fmt::format(
      "Lambda[sigma_22] = {:.12g} sigma_22{} (e_33 - e_22)   "
      "[(2 sqrt3/3)(p~_03 - p~_23) = {:.12g}]",
      c22, signed_term(k22), k22));
  rep.lines.push_back(fmt::format(
      "Lambda[sigma_33] = {:.12g} sigma_33{} (e_33 - e_22)   "
      "[-(2 sqrt6/3)(p~_03 - p~_23) = {:.12g}]",
      c33, signed_term(k33), k33));
  for (const auto& c : rep.checks) rep.lines.push_back(status(c));
  return rep;
}

LindbladGenerator example_lf_not_ev_generator() {
  RealTable g(3, 3);
  g << 0.0, 0.3, 0.5,
       0.2, 0.4, 0.1,
       0.15, 0.25, 0.35;
  return LindbladGenerator(g);
}

ExampleReport example_lf_not_ev(const LindbladGenerator& gen, double tolerance) {
  const int n = 3;
  if (gen.dim() != n) throw Error(ErrorKind::InvalidChannel, "example generator must have n = 3");
  auto g = [&gen](int i, int j) { return gen(i, j); };
  auto t = [&gen](int i, int j) { return gen.tilde(i, j); };
  const auto& s = GellMannBasis::shared(n);
  const double r3 = std::sqrt(3.0);

  ExampleReport rep;
  rep.name = "paper-2";
  auto image = [&](int i, int j, const MatrixC& expected, const std::string& label) {
    add_check(rep, label, max_diff(apply_lf(gen, s(i, j)), expected), tolerance);
  };
  image(0, 0, MatrixC::Zero(n, n), "L[sigma_00] = 0");
  image(0, 1, -0.5 * (4 * g(1, 0) + 4 * g(1, 1) + t(0, 2) + t(1, 2)) * s(0, 1),
        "L[sigma_01] = -(4 g_10 + 4 g_11 + g~_02 + g~_12)/2 sigma_01");
  image(1, 0, -0.5 * (4 * g(0, 1) + 4 * g(1, 1) + t(0, 2) + t(1, 2)) * s(1, 0),
        "L[sigma_10] = -(4 g_01 + 4 g_11 + g~_02 + g~_12)/2 sigma_10");
  image(0, 2, -0.5 * (t(0, 1) + g(1, 1) + 4 * g(2, 0) + t(1, 2) + 3 * g(2, 2)) * s(0, 2),
        "L[sigma_02] = -(g~_01 + g_11 + 4 g_20 + g~_12 + 3 g_22)/2 sigma_02");
  image(2, 0, -0.5 * (t(0, 1) + g(1, 1) + 4 * g(0, 2) + t(1, 2) + 3 * g(2, 2)) * s(2, 0),
        "L[sigma_20] = -(g~_01 + g_11 + 4 g_02 + g~_12 + 3 g_22)/2 sigma_20");
  image(1, 2, -0.5 * (t(0, 1) + g(1, 1) + t(0, 2) + 4 * g(2, 1) + 3 * g(2, 2)) * s(1, 2),
        "L[sigma_12] = -(g~_01 + g_11 + g~_02 + 4 g_21 + 3 g_22)/2 sigma_12");
  image(2, 1, -0.5 * (t(0, 1) + g(1, 1) + t(0, 2) + 4 * g(1, 2) + 3 * g(2, 2)) * s(2, 1),
        "L[sigma_21] = -(g~_01 + g_11 + g~_02 + 4 g_12 + 3 g_22)/2 sigma_21");
  const double mix = r3 * (t(0, 2) - t(1, 2));
  const double c11 = 4 * t(0, 1) + t(0, 2) + t(1, 2);
  const double c22 = 3 * (t(0, 2) + t(1, 2));
  image(1, 1, -0.5 * (c11 * s(1, 1) + mix * s(2, 2)),
        "L[sigma_11] = -[(4 g~_01 + g~_02 + g~_12) sigma_11 + sqrt3 (g~_02 - g~_12) sigma_22]/2");
  image(2, 2, -0.5 * (mix * s(1, 1) + c22 * s(2, 2)),
        "L[sigma_22] = -[sqrt3 (g~_02 - g~_12) sigma_11 + 3 (g~_02 + g~_12) sigma_22]/2");
  const bool ev = lf_is_ev(gen).holds;
  const bool expect_ev = std::abs(t(0, 2) - t(1, 2)) <= tol::equality;
  rep.checks.push_back({fmt::format("EV iff g~_02 = g~_12 (g~_02 - g~_12 = {:.6g})",
                                   t(0, 2) - t(1, 2)),
                       0.0, ev == expect_ev});

  rep.lines.push_back("n = 3 GKSL generator, arbitrary rates");
  rep.lines.push_back(fmt::format("  g~_01 = {:.6g}  g~_02 = {:.6g}  g~_12 = {:.6g}", t(0, 1),
                                  t(0, 2), t(1, 2)));
  rep.lines.push_back(fmt::format(
      "L[sigma_11] = {:.12g} sigma_11{} sigma_22   [-sqrt3 (g~_02 - g~_12)/2]", -0.5 * c11,
      signed_term(-0.5 * mix)));
  rep.lines.push_back(fmt::format("L[sigma_22] = {:.12g} sigma_11{} sigma_22", -0.5 * mix,
                                  signed_term(-0.5 * c22)));
  for (const auto& c : rep.checks) rep.lines.push_back(status(c));
  return rep;
}

}  // namespace gmc
