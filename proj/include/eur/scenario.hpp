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

#ifndef EUR_SCENARIO_HPP
#define EUR_SCENARIO_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "eur/bounds.hpp"
#include "eur/entropy.hpp"
#include "eur/povm.hpp"
#include "eur/verify.hpp"

namespace eur {

enum class Units { Nats, Bits };

std::string_view to_string(Units u);
double convert(double nats, Units u);

/// A resolved scenario file: two or more measurements plus run settings.
struct Scenario {
  std::string name;
  std::vector<Povm> povms;
  std::vector<double> alpha_grid{1.0};
  EntropyFamily family = EntropyFamily::Renyi;
  Units units = Units::Nats;
  std::uint64_t seed = 20190301;
  std::size_t samples = 1000;
};

/// Parses scenario JSON. Failures raise ParseError naming the offending field.
Scenario parse_scenario(std::string_view json_text);
Scenario load_scenario(const std::filesystem::path& path);

enum class SweepVariable { Theta, Mu, Nu, MuNuLocked };

/// Grid over one parameter of the unsharp qubit pair X(theta), Z.
struct SweepSpec {
  std::string name;
  SweepVariable variable = SweepVariable::Theta;
  double start = 0.0;
  double stop = 1.0;
  std::size_t steps = 2;
  double theta = 1.5707963267948966;
  double mu = 1.0;
  double nu = 1.0;
  std::vector<double> alpha_grid{1.0};
  EntropyFamily family = EntropyFamily::Renyi;
  Units units = Units::Bits;

  /// (theta, mu, nu) at grid parameter x.
  void apply(double x, double& t, double& m, double& n) const;
  double grid_point(std::size_t i) const;
};

SweepSpec parse_sweep(std::string_view json_text);
SweepSpec load_sweep(const std::filesystem::path& path);

/// Bound values are stored in nats; `units` only affects output.
struct SweepRow {
  double theta;
  double mu;
  double nu;
  double alpha;
  double b_mu;
  std::optional<double> b_t;
  double b_d1;
  double b_d2;
};

std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// Parameter values where the Shannon-order B_d2 - B_MU changes sign,
/// located on the grid and refined by bisection to `resolution`.
std::vector<double> find_crossovers(const SweepSpec& spec,
                                    double resolution = 1e-4);

struct EnsembleRow {
  std::size_t seed_index;
  double d_f;
  double d_g;
  double d_avg;
  double b_d2;
  double b_t;
  double diff;
};

enum class ForcedSmearing { None, Identity, Uniform };

struct EnsembleOptions {
  std::size_t samples = 100;
  std::uint64_t seed = 20190301;
  std::size_t mix_count = 6;
  ForcedSmearing forced = ForcedSmearing::None;
};

/// Smeared qutrit pairs; Shannon-order B_d2 and B_t in nats.
std::vector<EnsembleRow> run_ensemble(const EnsembleOptions& options);

/// Independent substream seed for (seed, stream).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

// CSV output. Numbers use 12 significant digits and '.' as separator.
std::string format_number(double v);
void write_bounds_csv(std::ostream& os, const PairReport& report, Units units);
void write_multi_bounds_csv(std::ostream& os, std::span<const Povm> povms,
                            std::span<const double> alpha_grid,
                            EntropyFamily family, Units units);
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows,
                     Units units);
void write_ensemble_csv(std::ostream& os, const std::vector<EnsembleRow>& rows);

/// Human-readable rendering, one line per check.
void write_report(std::ostream& os, const VerificationReport& report);
/// Machine-readable rendering of the same report.
std::string report_json(const VerificationReport& report);

}  // namespace eur

#endif  // EUR_SCENARIO_HPP
