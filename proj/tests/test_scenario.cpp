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

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "doctest.h"
#include "eur/error.hpp"
#include "eur/scenario.hpp"

using namespace eur;

namespace {

std::string parse_error_of(std::string_view text) {
  try {
    parse_scenario(text);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) return e.what();
    return std::string("wrong code: ") + e.what();
  }
  return "no error";
}

bool contains(const std::string& s, const std::string& part) {
  return s.find(part) != std::string::npos;
}

}  // namespace

TEST_CASE("scenario parsing") {
  const Scenario sc = parse_scenario(R"({
    "name": "t",
    "povms": [
      {"family": "unsharp_qubit", "theta": "pi/2", "sharpness": 0.8},
      {"family": "unsharp_qubit", "theta": 0, "sharpness": 0.8}
    ],
    "alpha": [0.5, 1, 2],
    "entropy": "tsallis",
    "units": "bits",
    "seed": 7,
    "samples": 20
  })");
  CHECK(sc.name == "t");
  CHECK(sc.povms.size() == 2);
  CHECK(sc.alpha_grid == std::vector<double>{0.5, 1.0, 2.0});
  CHECK(sc.family == EntropyFamily::Tsallis);
  CHECK(sc.units == Units::Bits);
  CHECK(sc.seed == 7);
  CHECK(sc.samples == 20);
  const auto [a, b] = unsharp_qubit_pair(std::numbers::pi / 2, 0.8, 0.8);
  CHECK((sc.povms[0][0].matrix() - a[0].matrix()).norm() < 1e-15);
  CHECK((sc.povms[1][1].matrix() - b[1].matrix()).norm() < 1e-15);
}

TEST_CASE("pi expressions") {
  const Scenario sc = parse_scenario(R"({"povms": [
      {"family": "unsharp_qubit", "theta": "2*pi/3"},
      {"family": "unsharp_qubit", "theta": "-pi/4"}]})");
  const Povm want0 = unsharp_qubit(2 * std::numbers::pi / 3, 1.0);
  const Povm want1 = unsharp_qubit(-std::numbers::pi / 4, 1.0);
  CHECK((sc.povms[0][0].matrix() - want0[0].matrix()).norm() < 1e-15);
  CHECK((sc.povms[1][0].matrix() - want1[0].matrix()).norm() < 1e-15);
}

TEST_CASE("other families") {
  const Scenario sc = parse_scenario(R"({"povms": [
      {"family": "smeared_basis", "basis": "qutrit_u", "smearing": "uniform"},
      {"family": "smeared_basis", "smearing": {"random_seed": 3}},
      {"family": "trivial", "dim": 3}]})");
  CHECK(sc.povms.size() == 3);
  CHECK(sc.povms[2].size() == 1);
  CHECK(std::abs(device_uncertainty(sc.povms[0]) - std::log(3.0)) < 1e-10);

  const Scenario ex = parse_scenario(R"({"povms": [
      {"family": "explicit", "elements": [
        [[0.5, [0, -0.5]], [[0, 0.5], 0.5]],
        [[0.5, [0, 0.5]], [[0, -0.5], 0.5]]]},
      {"family": "explicit", "elements": [[[1, 0], [0, 0]], [[0, 0], [0, 1]]]}]})");
  CHECK(ex.povms[0][0](0, 1) == Complex(0, -0.5));
  CHECK(bound_mu(ex.povms[0], ex.povms[1]) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("malformed scenarios name the offending field") {
  CHECK(contains(parse_error_of("{"), "parse"));
  CHECK(contains(parse_error_of("[]"), "<root>"));
  CHECK(contains(parse_error_of(R"({"povms": []})"), "povms"));
  CHECK(contains(parse_error_of(R"({"povms": [{"family": "unsharp_qubit"},
      {"family": "bogus"}]})"),
                 "povms[1]"));
  CHECK(contains(parse_error_of(R"({"povms": [{"family": "unsharp_qubit", "theta": "tau"},
      {"family": "unsharp_qubit"}]})"),
                 "povms[0].theta"));
  CHECK(contains(parse_error_of(R"({"povms": [{"family": "unsharp_qubit", "sharpness": 1.5},
      {"family": "unsharp_qubit"}]})"),
                 "povms[0]"));
  CHECK(contains(parse_error_of(R"({"povms": [{"family": "unsharp_qubit"},
      {"family": "trivial", "dim": 3}]})"),
                 "dimension"));
  CHECK(contains(parse_error_of(R"({"povms": [{"family": "unsharp_qubit"},
      {"family": "unsharp_qubit"}], "alpha": [1, -2]})"),
                 "alpha[1]"));
  CHECK(contains(parse_error_of(R"({"povms": [{"family": "unsharp_qubit"},
      {"family": "unsharp_qubit"}], "units": 3})"),
                 "type"));
  CHECK(contains(parse_error_of(R"({"povms": [
      {"family": "explicit", "elements": [[[1, 0], [0, 0]], [[0, 0], [0, 0.5]]]},
      {"family": "unsharp_qubit"}]})"),
                 "povms[0]"));
  CHECK_THROWS_AS(load_scenario("/nonexistent/file.json"), Error);
}

TEST_CASE("sweep parsing and running") {
  const SweepSpec spec = parse_sweep(R"({"variable": "mu_nu_locked",
      "range": [0.2, 1, 5], "theta": "pi/3", "alpha": [1, 2]})");
  CHECK(spec.variable == SweepVariable::MuNuLocked);
  CHECK(spec.units == Units::Bits);
  const auto rows = run_sweep(spec);
  REQUIRE(rows.size() == 10);
  CHECK(rows[0].mu == doctest::Approx(0.2));
  CHECK(rows[0].nu == doctest::Approx(0.2));
  CHECK(rows[8].mu == doctest::Approx(1.0));
  CHECK(rows[3].alpha == 2.0);
  CHECK(rows[4].theta == doctest::Approx(std::numbers::pi / 3));

  CHECK_THROWS_AS(parse_sweep(R"({"variable": "phi", "range": [0, 1, 3]})"), Error);
  CHECK_THROWS_AS(parse_sweep(R"({"variable": "mu", "range": [0, 2, 3]})"), Error);
  CHECK_THROWS_AS(parse_sweep(R"({"variable": "theta", "range": [0, 1, 1]})"), Error);
}

TEST_CASE("crossovers of the sharp pair") {
  SweepSpec spec;
  spec.variable = SweepVariable::MuNuLocked;
  spec.start = 0.9;
  spec.stop = 1.0;
  spec.steps = 11;
  const auto xs = find_crossovers(spec);
  REQUIRE(xs.size() == 1);
  CHECK(xs[0] == doctest::Approx(0.967).epsilon(0.005));
}

TEST_CASE("units") {
  CHECK(convert(std::log(2.0), Units::Bits) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(convert(0.3, Units::Nats) == 0.3);
  const auto [a, b] = unsharp_qubit_pair(1.0, 0.9, 0.8);
  const double alphas[] = {1.0};
  const PairReport rep = full_report(a, b, alphas);
  std::ostringstream nats, bits;
  write_bounds_csv(nats, rep, Units::Nats);
  write_bounds_csv(bits, rep, Units::Bits);
  CHECK(contains(nats.str(), format_number(rep.rows[0].b_d2)));
  CHECK(contains(bits.str(), format_number(rep.rows[0].b_d2 / std::log(2.0))));
}

TEST_CASE("number formatting") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(std::log(2.0)) == "0.69314718056");
  CHECK(std::stod(format_number(1.0 / 3.0)) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("CSV output is deterministic") {
  EnsembleOptions opts;
  opts.samples = 5;
  opts.seed = 99;
  std::ostringstream first, second;
  write_ensemble_csv(first, run_ensemble(opts));
  write_ensemble_csv(second, run_ensemble(opts));
  CHECK(first.str() == second.str());
  CHECK(first.str().rfind("seed_index,D_F,D_G,D_avg,B_d2,B_t,diff\n", 0) == 0);

  opts.seed = 100;
  std::ostringstream other;
  write_ensemble_csv(other, run_ensemble(opts));
  CHECK(other.str() != first.str());

  SweepSpec spec;
  spec.steps = 7;
  std::ostringstream s1, s2;
  write_sweep_csv(s1, run_sweep(spec), Units::Bits);
  write_sweep_csv(s2, run_sweep(spec), Units::Bits);
  CHECK(s1.str() == s2.str());
}

TEST_CASE("ensemble controls") {
  EnsembleOptions opts;
  opts.samples = 3;
  opts.forced = ForcedSmearing::Identity;
  for (const auto& row : run_ensemble(opts)) {
    CHECK(row.d_avg == doctest::Approx(0.0));
    CHECK(row.b_d2 >= row.b_t - 1e-9);
  }
  opts.forced = ForcedSmearing::Uniform;
  for (const auto& row : run_ensemble(opts)) {
    CHECK(std::abs(row.d_avg - std::log(3.0)) < 1e-10);
  }
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 0) == derive_seed(1, 0));
}

TEST_CASE("report rendering") {
  const auto [a, b] = unsharp_qubit_pair(1.2, 0.9, 0.9);
  VerificationReport rep = check_majorization(a, b, 20, 1);
  rep.scenario = "x";
  std::ostringstream os;
  write_report(os, rep);
  CHECK(contains(os.str(), "PASS"));
  const std::string js = report_json(rep);
  CHECK(contains(js, "\"passed\": true"));
  CHECK(contains(js, "\"scenario\": \"x\""));
}
