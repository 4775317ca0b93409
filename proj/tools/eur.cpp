// Copyright 2026 The eur Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: bounds, sweeps, qutrit ensembles and verification.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eur/error.hpp"
#include "eur/scenario.hpp"
#include "eur/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct OutputTarget {
  std::unique_ptr<std::ofstream> file;
  std::ostream* stream = &std::cout;

  explicit OutputTarget(const std::string& path) {
    if (path.empty() || path == "-") return;
    file = std::make_unique<std::ofstream>(path);
    if (!*file) {
      throw eur::Error(eur::ErrorCode::ParseError, "cannot write " + path);
    }
    stream = file.get();
  }
};

eur::Units parse_units(const std::string& s) {
  return s == "bits" ? eur::Units::Bits : eur::Units::Nats;
}

// Saturation of each s_k as a report check: margin = achieved - s_k.
eur::Check saturation_check(std::span<const eur::Povm> povms) {
  eur::Check c{"saturating states reach every s_k",
               std::numeric_limits<double>::infinity(), 1e-8, {}};
  std::size_t total = 0;
  for (const auto& p : povms) total += p.size();
  for (std::size_t k = 1; k <= total; ++k) {
    const auto sat = eur::saturating_state(povms, k);
    c.record(sat.achieved - sat.target, sat.state);
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Majorization-based entropic uncertainty bounds for POVMs"};
  app.require_subcommand(1);

  std::string file, out, units;
  std::vector<double> alpha;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::size_t mix_count = 6;
  std::string force;
  std::optional<double> corrupt;

  auto* bounds = app.add_subcommand("bounds", "all bounds for a scenario file");
  bounds->add_option("file", file, "scenario JSON")->required()->check(CLI::ExistingFile);
  bounds->add_option("--out", out, "CSV output path (default stdout)");
  bounds->add_option("--units", units, "nats or bits")->check(CLI::IsMember({"nats", "bits"}));
  bounds->add_option("--alpha", alpha, "entropy orders (overrides the file)")->delimiter(',');

  auto* sweep = app.add_subcommand("sweep", "bounds over a qubit parameter grid");
  sweep->add_option("file", file, "sweep JSON")->required()->check(CLI::ExistingFile);
  sweep->add_option("--out", out, "CSV output path")->required();
  sweep->add_option("--units", units, "nats or bits")->check(CLI::IsMember({"nats", "bits"}));
  sweep->add_option("--alpha", alpha, "entropy orders (overrides the file)")->delimiter(',');

  auto* ensemble = app.add_subcommand("ensemble", "random smeared qutrit pairs");
  ensemble->add_option("--samples", samples, "number of POVM pairs")->default_val(100);
  ensemble->add_option("--seed", seed, "base seed")->default_val(20190301);
  ensemble->add_option("--out", out, "CSV output path")->required();
  ensemble->add_option("--mix-count", mix_count, "permutations per smearing matrix")
      ->check(CLI::PositiveNumber);
  ensemble->add_option("--force-smearing", force, "identity or uniform")
      ->check(CLI::IsMember({"identity", "uniform"}));

  auto* verify = app.add_subcommand("verify", "sample states and check every relation");
  verify->add_option("file", file, "scenario JSON")->required()->check(CLI::ExistingFile);
  auto* samples_opt = verify->add_option("--samples", samples, "sampled states");
  auto* seed_opt = verify->add_option("--seed", seed, "sampling seed");
  verify->add_option("--alpha", alpha, "entropy orders (overrides the file)")->delimiter(',');
  verify->add_option("--out", out, "also write the report as JSON");
  verify->add_option("--corrupt", corrupt,
                     "negative control: lower the leading W entry by this much");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (bounds->parsed()) {
      eur::Scenario sc = eur::load_scenario(file);
      if (!alpha.empty()) sc.alpha_grid = alpha;
      if (!units.empty()) sc.units = parse_units(units);
      OutputTarget target(out);
      if (sc.povms.size() == 2) {
        const auto report = eur::full_report(sc.povms[0], sc.povms[1],
                                             sc.alpha_grid, sc.family);
        eur::write_bounds_csv(*target.stream, report, sc.units);
      } else {
        eur::write_multi_bounds_csv(*target.stream, sc.povms, sc.alpha_grid,
                                    sc.family, sc.units);
      }
      return kExitOk;
    }

    if (sweep->parsed()) {
      eur::SweepSpec spec = eur::load_sweep(file);
      if (!alpha.empty()) spec.alpha_grid = alpha;
      if (!units.empty()) spec.units = parse_units(units);
      OutputTarget target(out);
      eur::write_sweep_csv(*target.stream, eur::run_sweep(spec), spec.units);
      std::ostream& summary = target.file ? std::cout : std::cerr;
      summary << "sweep " << spec.name << ": " << spec.steps << " points x "
              << spec.alpha_grid.size() << " orders\n";
      for (double x : eur::find_crossovers(spec)) {
        summary << "B_d2 = B_MU crossover at " << eur::format_number(x) << '\n';
      }
      return kExitOk;
    }

    if (ensemble->parsed()) {
      eur::EnsembleOptions opts;
      opts.samples = samples;
      opts.seed = seed;
      opts.mix_count = mix_count;
      if (force == "identity") opts.forced = eur::ForcedSmearing::Identity;
      if (force == "uniform") opts.forced = eur::ForcedSmearing::Uniform;
      OutputTarget target(out);
      const auto rows = eur::run_ensemble(opts);
      eur::write_ensemble_csv(*target.stream, rows);
      bool dominated = true;
      for (const auto& r : rows) dominated = dominated && r.diff >= -1e-9;
      std::ostream& summary = target.file ? std::cout : std::cerr;
      summary << rows.size() << " qutrit pairs; B_d2 >= B_t in "
              << (dominated ? "every row" : "NOT every row") << '\n';
      return dominated ? kExitOk : kExitFailure;
    }

    if (verify->parsed()) {
      const eur::Scenario sc = eur::load_scenario(file);
      const std::size_t n = samples_opt->count() ? samples : sc.samples;
      const std::uint64_t s = seed_opt->count() ? seed : sc.seed;
      const std::vector<double> grid = alpha.empty() ? sc.alpha_grid : alpha;

      eur::MajorizationOptions mopts;
      mopts.corrupt_w = corrupt;
      eur::VerificationReport report;
      eur::VerificationReport eur_part;
      if (sc.povms.size() == 2) {
        report = eur::check_majorization(sc.povms[0], sc.povms[1], n, s, mopts);
        eur_part = eur::check_eur(sc.povms[0], sc.povms[1], grid, n, s);
      } else {
        report = eur::check_multi_majorization(sc.povms, n, s, mopts);
        eur_part = eur::check_multi_eur(sc.povms, grid, n, s);
      }
      report.scenario = sc.name;
      report.checks.insert(report.checks.end(), eur_part.checks.begin(),
                           eur_part.checks.end());
      report.checks.push_back(saturation_check(sc.povms));

      eur::write_report(std::cout, report);
      if (!out.empty()) {
        OutputTarget target(out);
        *target.stream << eur::report_json(report) << '\n';
      }
      return report.passed() ? kExitOk : kExitFailure;
    }
  } catch (const eur::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == eur::ErrorCode::ParseError ? kExitUsage : kExitFailure;
  }
  return kExitUsage;
}
