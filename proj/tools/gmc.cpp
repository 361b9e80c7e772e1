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


// gmc: command-line front end for Gell-Mann channels and generators.
//
// Exit codes: 0 success, 1 I/O or parse failure, 2 negative validation
// result, 3 conversion precondition not met.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "gmc/experiments.hpp"
#include "gmc/io.hpp"

namespace {

using namespace gmc;

constexpr int kOk = 0;
constexpr int kIoError = 1;
constexpr int kNegative = 2;
constexpr int kPrecondition = 3;

double default_tolerance() {
  const char* env = std::getenv("GMC_TOLERANCE");
  if (env == nullptr || *env == '\0') return tol::psd;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (*end != '\0' || !(v >= 0.0)) {
    throw Error(ErrorKind::ParseError, fmt::format("GMC_TOLERANCE=\"{}\" is not a tolerance", env));
  }
  return v;
}

void print_warnings(const Loaded& l) {
  for (const auto& w : l.warnings) std::cerr << "warning: " << w << '\n';
}

void print_block_report(const CpReport& r) {
  std::cout << fmt::format("  {:<22} {:<6} margin {:.6e}\n", to_string(r.method),
                           to_string(r.verdict), r.margin);
  if (r.det_psd_discrepancy) std::cout << "    det A >= 0 but A is not PSD\n";
  if (r.literal) {
    std::cout << fmt::format("    as typeset: PSD reading {}, determinant reading {}\n",
                             to_string(r.literal->verdict_psd), to_string(r.literal->verdict_det));
  }
}

void print_ev_reports(const EigenChannel& ch, double tol) {
  print_block_report(cp_check_paper(ch, tol));
  print_block_report(cp_check_normalized(ch, tol));
}

int cmd_validate(const std::string& path, double tol) {
  const Loaded l = load(path);
  print_warnings(l);
  std::cout << fmt::format("{}: form {}, n = {}\n", path, to_string(l.file.form), l.file.n());

  std::optional<KrausChannel> kf;
  std::optional<EigenChannel> ev;
  if (const auto* k = std::get_if<KrausChannel>(&l.object)) {
    kf = *k;
  } else if (const auto* e = std::get_if<EigenChannel>(&l.object)) {
    ev = *e;
  } else {
    std::cerr << fmt::format("validate: expects a channel file (kf or ev), got {}\n",
                             to_string(l.file.form));
    return kIoError;
  }

  bool tp = false;
  std::cout << "trace preservation\n";
  if (kf) {
    const auto r = tp_residuals(*kf);
    for (std::size_t i = 0; i < r.size(); ++i)
      std::cout << fmt::format("  residual[{}] = {:.3e}\n", i, r[i]);
    tp = max_abs(r) <= tol::tp;
  } else {
    std::cout << fmt::format("  lambda_00 - 1 = {:.3e}\n", (*ev)(0, 0) - 1.0);
    tp = ev->is_trace_preserving();
  }
  std::cout << "  " << (tp ? "TP" : "not TP") << '\n';

  std::cout << "complete positivity\n";
  if (kf) {
    if (tp && kf_is_ev(*kf).holds) {
      print_ev_reports(kf_to_ev(*kf), tol);
    } else {
      std::cout << "  paper_conditions       n/a (no Gell-Mann eigenvectors)\n"
                << "  normalized_conditions  n/a (no Gell-Mann eigenvectors)\n";
    }
  } else {
    print_ev_reports(*ev, tol);
  }
  const CpReport oracle = kf ? cp_check_oracle(*kf, tol) : cp_check_oracle(*ev, tol);
  std::cout << fmt::format("  {:<22} {:<6} min eigenvalue {:.6e}\n", to_string(oracle.method),
                           to_string(oracle.verdict), *oracle.choi_min_eigenvalue);

  const bool ok = tp && oracle.is_cp();
  std::cout << (ok ? "valid channel\n" : "not a valid channel\n");
  return ok ? kOk : kNegative;
}

int cmd_convert(const std::string& path, const std::string& to, const std::string& out) {
  const Loaded l = load(path);
  print_warnings(l);
  const auto target = form_from_string(to);
  if (!target) {
    std::cerr << fmt::format("convert: unknown target form \"{}\"\n", to);
    return kIoError;
  }
  std::optional<AnyObject> result;
  try {
    if (l.file.form == Form::kf && *target == Form::ev) {
      result = kf_to_ev(std::get<KrausChannel>(l.object));
    } else if (l.file.form == Form::ev && *target == Form::kf) {
      result = ev_to_kf(std::get<EigenChannel>(l.object));
    } else if (l.file.form == Form::lf && *target == Form::ev_gen) {
      result = lf_to_ev(std::get<LindbladGenerator>(l.object));
    } else if (l.file.form == Form::ev_gen && *target == Form::lf) {
      result = ev_to_lf(std::get<EigenGenerator>(l.object));
    } else {
      std::cerr << fmt::format("convert: no conversion from {} to {}\n", to_string(l.file.form),
                               to);
      return kIoError;
    }
  } catch (const ConditionError& e) {
    std::cerr << fmt::format("convert: precondition failed ({})\n{}\n", to_string(e.kind()),
                             e.what());
    return kPrecondition;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotTracePreserving) throw;
    std::cerr << fmt::format("convert: precondition failed ({})\n{}\n", to_string(e.kind()),
                             e.what());
    return kPrecondition;
  }

  if (const auto* k = std::get_if<KrausChannel>(&*result)) {
    for (const IndexPair& at : k->negative_entries())
      std::cerr << fmt::format("warning: p_({},{}) = {} is negative; the map has no Gell-Mann "
                               "Kraus form with nonnegative weights\n",
                               at.row, at.col, (*k)(at.row, at.col));
  }
  nlohmann::ordered_json meta = l.file.metadata;
  meta["converted_from"] = std::string(to_string(l.file.form));
  const ChannelFile f = to_file(*result, std::move(meta));
  if (out.empty() || out == "-") {
    std::cout << render(f);
  } else {
    save(out, f);
  }
  return kOk;
}

int cmd_choi(const std::string& path, double tol) {
  const Loaded l = load(path);
  print_warnings(l);
  ChoiMatrix j;
  if (const auto* k = std::get_if<KrausChannel>(&l.object)) {
    j = choi(*k);
  } else if (const auto* e = std::get_if<EigenChannel>(&l.object)) {
    j = choi(*e);
  } else {
    std::cerr << fmt::format("choi: expects a channel file (kf or ev), got {}\n",
                             to_string(l.file.form));
    return kIoError;
  }
  std::cout << fmt::format("Choi matrix: {} x {}, trace {:.12g}\n", j.entries.rows(),
                           j.entries.cols(), j.trace());
  std::cout << "spectrum:";
  for (double v : j.spectrum) std::cout << ' ' << format_double(v);
  std::cout << fmt::format("\nmin eigenvalue: {}\n", format_double(j.min_eigenvalue));
  std::cout << fmt::format("CP: {}\n", j.min_eigenvalue >= -tol ? "yes" : "no");
  return kOk;
}

int cmd_crossval(const CrossvalOptions& opts) {
  std::cout << run_crossval(opts).to_json().dump(2) << '\n';
  return kOk;
}

std::string csv_number(double v) { return format_double(v); }

int cmd_evolve(const std::string& gen_path, const std::string& profile_spec, double t_end,
               std::size_t steps, const std::string& state_path, std::size_t stride,
               double tol) {
  const Loaded l = load(gen_path);
  print_warnings(l);
  const RateProfile f = parse_profile(profile_spec);
  const std::vector<double> grid = uniform_grid(t_end, steps + 1);
  const TrajectoryOptions opts{stride, tol};
  const bool constant = f.kind() == RateProfile::Kind::constant;

  std::optional<Trajectory> traj;
  if (const auto* g = std::get_if<LindbladGenerator>(&l.object)) {
    if (constant) {
      const EigenGenerator eta = lf_to_ev(*g);
      traj = evolve_semigroup(EigenGenerator(eta.eigenvalues() * f(0.0)), grid, opts);
    } else {
      traj = evolve_timedep_lf(ProfileTable::modulated(g->rates(), f), grid, opts);
    }
  } else if (const auto* e = std::get_if<EigenGenerator>(&l.object)) {
    if (constant) {
      traj = evolve_semigroup(EigenGenerator(e->eigenvalues() * f(0.0)), grid, opts);
    } else {
      traj = evolve_timedep(ProfileTable::modulated(e->eigenvalues(), f), grid, opts);
    }
  } else {
    std::cerr << fmt::format("evolve: expects a generator file (lf or ev-gen), got {}\n",
                             to_string(l.file.form));
    return kIoError;
  }

  std::optional<DensityMatrix> rho0;
  if (!state_path.empty()) {
    rho0 = load_state(state_path);
    if (rho0->dim() != traj->dim()) {
      std::cerr << fmt::format("evolve: state has n = {}, generator has n = {}\n", rho0->dim(),
                               traj->dim());
      return kIoError;
    }
  }

  const int n = traj->dim();
  std::string header = "t";
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i || j) header += fmt::format(",lambda_{}{}", i, j);
  header += ",cp_flag,choi_min,generator_singular";
  if (rho0) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) header += fmt::format(",rho_{}{}_re,rho_{}{}_im", i, j, i, j);
  }
  std::cout << header << '\n';

  for (std::size_t k = 0; k < traj->size(); ++k) {
    const EigenChannel& ch = traj->frame(k);
    std::string row = csv_number(traj->grid()[k]);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i || j) row += ',' + csv_number(ch(i, j));
    const auto& flag = traj->cp_flags()[k];
    row += ',' + std::string(flag ? to_string(*flag) : "-");
    const auto& cmin = traj->choi_min()[k];
    row += ',' + (cmin ? csv_number(*cmin) : std::string("-"));
    row += traj->generator_singular()[k] ? ",1" : ",0";
    if (rho0) {
      try {
        const MatrixC rho = evolve_state(*traj, *rho0, k).matrix();
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            row += ',' + csv_number(rho(i, j).real()) + ',' + csv_number(rho(i, j).imag());
      } catch (const TimeIndexError&) {
        for (int i = 0; i < 2 * n * n; ++i) row += ",NA";
      }
    }
    std::cout << row << '\n';
  }
  if (const auto bad = traj->first_not_cp()) {
    std::cerr << fmt::format("note: frame {} (t = {}) is the first that is not CP\n", *bad,
                             traj->grid()[*bad]);
  }
  return kOk;
}

int cmd_examples(const std::string& which) {
  const ExampleReport rep = which == "paper-1" ? example_kf_not_ev(example_kf_not_ev_channel())
                                               : example_lf_not_ev(example_lf_not_ev_generator());
  for (const auto& line : rep.lines) std::cout << line << '\n';
  std::cout << (rep.ok() ? "all displayed formulas reproduced\n" : "MISMATCH\n");
  return rep.ok() ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gell-Mann channels: validation, conversion, CP checks and evolution"};
  app.require_subcommand(1);
  double tolerance = 0.0;
  try {
    tolerance = default_tolerance();
  } catch (const gmc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoError;
  }
  app.add_option("--tolerance", tolerance,
                 "PSD tolerance for CP verdicts (default 1e-10, or $GMC_TOLERANCE)")
      ->check(CLI::NonNegativeNumber);

  std::string file;
  auto* validate = app.add_subcommand("validate", "TP residuals and CP reports of a channel");
  validate->add_option("file", file, "channel file (kf or ev)")->required();

  std::string to, out;
  auto* convert = app.add_subcommand("convert", "convert between KF/EV and LF/EV forms");
  convert->add_option("--to", to, "target form")
      ->required()
      ->check(CLI::IsMember({"ev", "kf", "lf", "ev-gen"}));
  convert->add_option("-o,--output", out, "output file (default stdout)");
  convert->add_option("file", file, "input file")->required();

  auto* choi_cmd = app.add_subcommand("choi", "Choi spectrum of a channel");
  choi_cmd->add_option("file", file, "channel file (kf or ev)")->required();

  gmc::CrossvalOptions cv;
  std::string sampler = "uniform";
  auto* crossval = app.add_subcommand("crossval", "CP agreement experiment (JSON report)");
  crossval->add_option("--n", cv.n, "dimension")->required()->check(CLI::Range(2, 16));
  crossval->add_option("--samples", cv.samples, "number of random channels")->required();
  crossval->add_option("--seed", cv.seed, "RNG seed")->required();
  crossval->add_option("--sampler", sampler, "uniform or scaled")
      ->check(CLI::IsMember({"uniform", "scaled"}));
  crossval->add_option("--range", cv.range, "half-width of the uniform sampler")
      ->check(CLI::PositiveNumber);
  crossval->add_option("--margin-filter", cv.margin_filter,
                       "exclude samples with |min Choi eigenvalue| at or below this")
      ->check(CLI::NonNegativeNumber);

  std::string gen_path, profile = "constant", state_path;
  double t_end = 1.0;
  std::size_t steps = 1000, stride = 1;
  auto* evolve = app.add_subcommand("evolve", "trajectory table of a generator");
  evolve->add_option("--generator", gen_path, "generator file (lf or ev-gen)")->required();
  evolve->add_option("--profile", profile,
                     "time modulation f(t): constant, const:c, exp:a, poly:c0,c1,..., "
                     "table:t0:y0,t1:y1,...");
  evolve->add_option("--t", t_end, "final time")->required()->check(CLI::PositiveNumber);
  evolve->add_option("--steps", steps, "grid steps (points = steps + 1)")
      ->check(CLI::PositiveNumber);
  evolve->add_option("--state", state_path, "initial density matrix file");
  evolve->add_option("--stride", stride, "certify CP every k-th frame")
      ->check(CLI::PositiveNumber);

  std::string which;
  auto* examples = app.add_subcommand("examples", "reproduce the worked examples");
  examples->add_option("name", which, "paper-1 or paper-2")
      ->required()
      ->check(CLI::IsMember({"paper-1", "paper-2"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kIoError;
  }

  try {
    if (*validate) return cmd_validate(file, tolerance);
    if (*convert) return cmd_convert(file, to, out);
    if (*choi_cmd) return cmd_choi(file, tolerance);
    if (*crossval) {
      cv.sampler = sampler == "scaled" ? gmc::EvSampler::scaled : gmc::EvSampler::uniform;
      cv.tolerance = tolerance;
      return cmd_crossval(cv);
    }
    if (*evolve) {
      return cmd_evolve(gen_path, profile, t_end, steps, state_path, stride, tolerance);
    }
    if (*examples) return cmd_examples(which);
  } catch (const gmc::Error& e) {
    std::cerr << fmt::format("error ({}): {}\n", gmc::to_string(e.kind()), e.what());
    return kIoError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoError;
  }
  return kIoError;
}
