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

#include "eur/scenario.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <regex>
#include <sstream>

#include "eur/error.hpp"
#include "json.hpp"

namespace eur {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& field, const std::string& msg) {
  throw Error(ErrorCode::ParseError, field + ": " + msg);
}

json parse_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Numbers may be written as JSON numbers or as "pi", "pi/2", "2*pi/3", "-pi/4".
double number_at(const json& j, const std::string& field) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    static const std::regex pi_expr(
        R"(^\s*(-?)\s*(?:([0-9]*\.?[0-9]+)\s*\*\s*)?pi\s*(?:/\s*([0-9]*\.?[0-9]+))?\s*$)");
    std::smatch m;
    const std::string s = j.get<std::string>();
    if (std::regex_match(s, m, pi_expr)) {
      double v = std::numbers::pi;
      if (m[2].matched) v *= std::stod(m[2].str());
      if (m[3].matched) v /= std::stod(m[3].str());
      return m[1].length() > 0 ? -v : v;
    }
  }
  parse_fail(field, "expected a number or a pi expression, got " + j.dump());
}

double number_field(const json& obj, const std::string& key,
                    const std::string& path, std::optional<double> fallback) {
  if (!obj.contains(key)) {
    if (fallback) return *fallback;
    parse_fail(path + "." + key, "missing required field");
  }
  return number_at(obj.at(key), path + "." + key);
}

std::size_t count_field(const json& obj, const std::string& key,
                        const std::string& path, std::size_t fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    parse_fail(path + "." + key, "expected a nonnegative integer");
  }
  return v.get<std::size_t>();
}

Complex complex_at(const json& j, const std::string& field) {
  if (j.is_array()) {
    if (j.size() != 2) parse_fail(field, "complex entries are [re, im] pairs");
    return {number_at(j[0], field + "[0]"), number_at(j[1], field + "[1]")};
  }
  return {number_at(j, field), 0.0};
}

Eigen::MatrixXcd complex_matrix_at(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) {
    parse_fail(field, "expected a nonempty list of rows");
  }
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].size();
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(rows),
                     static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string row_field = field + "[" + std::to_string(r) + "]";
    if (!j[r].is_array() || j[r].size() != cols) {
      parse_fail(row_field, "rows must all have " + std::to_string(cols) +
                                " entries");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          complex_at(j[r][c], row_field + "[" + std::to_string(c) + "]");
    }
  }
  return m;
}

DoublyStochastic smearing_at(const json& j, const std::string& field,
                             std::size_t n) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "identity") return DoublyStochastic::identity(n);
    if (s == "uniform") return DoublyStochastic::uniform(n);
    parse_fail(field, "unknown smearing '" + s + "'");
  }
  if (j.is_object()) {
    if (!j.contains("random_seed")) {
      parse_fail(field + ".random_seed", "missing required field");
    }
    return random_doubly_stochastic(
        n, count_field(j, "mix_count", field, 6),
        j.at("random_seed").get<std::uint64_t>());
  }
  const Eigen::MatrixXcd m = complex_matrix_at(j, field);
  if (m.imag().cwiseAbs().maxCoeff() > 0.0) {
    parse_fail(field, "smearing entries must be real");
  }
  try {
    return DoublyStochastic(m.real());
  } catch (const Error& e) {
    parse_fail(field, e.what());
  }
}

template <class F>
auto rethrow_as_parse(const std::string& field, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    parse_fail(field, e.what());
  } catch (const json::exception& e) {
    parse_fail(field, e.what());
  }
}

Povm povm_at(const json& j, const std::string& field) {
  if (!j.is_object() || !j.contains("family") || !j.at("family").is_string()) {
    parse_fail(field + ".family", "missing or not a string");
  }
  const std::string family = j.at("family").get<std::string>();
  if (family == "unsharp_qubit") {
    const double theta = number_field(j, "theta", field, 0.0);
    const double sharpness = number_field(j, "sharpness", field, 1.0);
    return rethrow_as_parse(field, [&] { return unsharp_qubit(theta, sharpness); });
  }
  if (family == "trivial") {
    const std::size_t dim = count_field(j, "dim", field, 2);
    const std::size_t outcomes = count_field(j, "outcomes", field, 1);
    return rethrow_as_parse(field, [&] { return trivial_povm(dim, outcomes); });
  }
  if (family == "smeared_basis") {
    Eigen::MatrixXcd basis;
    const json basis_j = j.value("basis", json("computational"));
    if (basis_j.is_string()) {
      const std::string b = basis_j.get<std::string>();
      if (b == "qutrit_u") {
        basis = qutrit_basis_unitary();
      } else if (b == "computational") {
        const std::size_t dim = count_field(j, "dim", field, 3);
        basis = Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(dim),
                                           static_cast<Eigen::Index>(dim));
      } else {
        parse_fail(field + ".basis", "unknown basis '" + b + "'");
      }
    } else {
      basis = complex_matrix_at(basis_j, field + ".basis");
    }
    const DoublyStochastic s = smearing_at(
        j.value("smearing", json("identity")), field + ".smearing",
        static_cast<std::size_t>(basis.cols()));
    return rethrow_as_parse(field, [&] { return smeared_basis(s, basis); });
  }
  if (family == "explicit") {
    if (!j.contains("elements") || !j.at("elements").is_array()) {
      parse_fail(field + ".elements", "expected a list of matrices");
    }
    std::vector<HermitianOperator> elements;
    for (std::size_t i = 0; i < j.at("elements").size(); ++i) {
      const std::string ef = field + ".elements[" + std::to_string(i) + "]";
      const Eigen::MatrixXcd m = complex_matrix_at(j.at("elements")[i], ef);
      elements.push_back(
          rethrow_as_parse(ef, [&] { return HermitianOperator(m); }));
    }
    return rethrow_as_parse(field, [&] { return Povm(std::move(elements)); });
  }
  parse_fail(field + ".family", "unknown family '" + family + "'");
}

std::vector<double> alpha_grid_at(const json& obj) {
  if (!obj.contains("alpha")) return {1.0};
  const json& a = obj.at("alpha");
  std::vector<double> grid;
  if (a.is_array()) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      grid.push_back(number_at(a[i], "alpha[" + std::to_string(i) + "]"));
    }
  } else {
    grid.push_back(number_at(a, "alpha"));
  }
  if (grid.empty()) parse_fail("alpha", "grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0) || !std::isfinite(grid[i])) {
      parse_fail("alpha[" + std::to_string(i) + "]", "orders must be positive");
    }
  }
  return grid;
}

EntropyFamily family_at(const json& obj) {
  const std::string f = obj.value("entropy", std::string("renyi"));
  if (f == "renyi") return EntropyFamily::Renyi;
  if (f == "tsallis") return EntropyFamily::Tsallis;
  parse_fail("entropy", "expected 'renyi' or 'tsallis', got '" + f + "'");
}

Units units_at(const json& obj, Units fallback) {
  if (!obj.contains("units")) return fallback;
  const std::string u = obj.at("units").get<std::string>();
  if (u == "nats") return Units::Nats;
  if (u == "bits") return Units::Bits;
  parse_fail("units", "expected 'nats' or 'bits', got '" + u + "'");
}

std::string name_at(const json& obj) {
  if (!obj.contains("name")) return "unnamed";
  if (!obj.at("name").is_string()) parse_fail("name", "expected a string");
  return obj.at("name").get<std::string>();
}

}  // namespace

std::string_view to_string(Units u) { return u == Units::Nats ? "nats" : "bits"; }

double convert(double nats, Units u) {
  return u == Units::Nats ? nats : nats_to_bits(nats);
}

namespace {

Scenario scenario_from(std::string_view json_text) {
  const json root = parse_text(json_text);
  if (!root.is_object()) parse_fail("<root>", "expected an object");
  Scenario sc;
  sc.name = name_at(root);
  if (!root.contains("povms") || !root.at("povms").is_array()) {
    parse_fail("povms", "expected a list of measurement declarations");
  }
  const json& povms = root.at("povms");
  if (povms.size() < 2) parse_fail("povms", "need at least two measurements");
  for (std::size_t i = 0; i < povms.size(); ++i) {
    sc.povms.push_back(povm_at(povms[i], "povms[" + std::to_string(i) + "]"));
  }
  for (std::size_t i = 1; i < sc.povms.size(); ++i) {
    if (sc.povms[i].dim() != sc.povms[0].dim()) {
      parse_fail("povms[" + std::to_string(i) + "]",
                 "dimension differs from povms[0]");
    }
  }
  sc.alpha_grid = alpha_grid_at(root);
  sc.family = family_at(root);
  sc.units = units_at(root, Units::Nats);
  if (root.contains("seed")) {
    if (!root.at("seed").is_number_unsigned()) {
      parse_fail("seed", "expected a nonnegative integer");
    }
    sc.seed = root.at("seed").get<std::uint64_t>();
  }
  sc.samples = count_field(root, "samples", "<root>", sc.samples);
  return sc;
}

}  // namespace

// Type mismatches surfaced by the JSON library become ParseError as well.
Scenario parse_scenario(std::string_view json_text) {
  try {
    return scenario_from(json_text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

Scenario load_scenario(const std::filesystem::path& path) {
  return parse_scenario(read_file(path));
}

void SweepSpec::apply(double x, double& t, double& m, double& n) const {
  t = theta;
  m = mu;
  n = nu;
  switch (variable) {
    case SweepVariable::Theta: t = x; break;
    case SweepVariable::Mu: m = x; break;
    case SweepVariable::Nu: n = x; break;
    case SweepVariable::MuNuLocked: m = n = x; break;
  }
}

double SweepSpec::grid_point(std::size_t i) const {
  if (i + 1 == steps) return stop;
  return start + (stop - start) * static_cast<double>(i) /
                     static_cast<double>(steps - 1);
}

namespace {

SweepSpec sweep_from(std::string_view json_text) {
  const json root = parse_text(json_text);
  if (!root.is_object()) parse_fail("<root>", "expected an object");
  SweepSpec spec;
  spec.name = name_at(root);
  const std::string var = root.value("variable", std::string());
  if (var == "theta") {
    spec.variable = SweepVariable::Theta;
  } else if (var == "mu") {
    spec.variable = SweepVariable::Mu;
  } else if (var == "nu") {
    spec.variable = SweepVariable::Nu;
  } else if (var == "mu_nu_locked") {
    spec.variable = SweepVariable::MuNuLocked;
  } else {
    parse_fail("variable",
               "expected one of theta, mu, nu, mu_nu_locked; got '" + var + "'");
  }
  if (!root.contains("range") || !root.at("range").is_array() ||
      root.at("range").size() != 3) {
    parse_fail("range", "expected [start, stop, steps]");
  }
  const json& range = root.at("range");
  spec.start = number_at(range[0], "range[0]");
  spec.stop = number_at(range[1], "range[1]");
  if (!range[2].is_number_integer() || range[2].get<long long>() < 2) {
    parse_fail("range[2]", "steps must be an integer >= 2");
  }
  spec.steps = range[2].get<std::size_t>();
  spec.theta = number_field(root, "theta", "<root>", spec.theta);
  spec.mu = number_field(root, "mu", "<root>", spec.mu);
  spec.nu = number_field(root, "nu", "<root>", spec.nu);
  if (spec.variable != SweepVariable::Theta) {
    const double lo = std::min(spec.start, spec.stop);
    const double hi = std::max(spec.start, spec.stop);
    if (lo < 0.0 || hi > 1.0) {
      parse_fail("range", "unsharpness parameters must lie in [0,1]");
    }
  }
  for (const char* key : {"mu", "nu"}) {
    const double v = key == std::string("mu") ? spec.mu : spec.nu;
    if (v < 0.0 || v > 1.0) parse_fail(key, "must lie in [0,1]");
  }
  spec.alpha_grid = alpha_grid_at(root);
  spec.family = family_at(root);
  spec.units = units_at(root, Units::Bits);
  return spec;
}

}  // namespace

SweepSpec parse_sweep(std::string_view json_text) {
  try {
    return sweep_from(json_text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

SweepSpec load_sweep(const std::filesystem::path& path) {
  return parse_sweep(read_file(path));
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  std::vector<SweepRow> rows;
  rows.reserve(spec.steps * spec.alpha_grid.size());
  for (std::size_t i = 0; i < spec.steps; ++i) {
    double t, m, n;
    spec.apply(spec.grid_point(i), t, m, n);
    const auto [a, b] = unsharp_qubit_pair(t, m, n);
    const PairReport pr = full_report(a, b, spec.alpha_grid, spec.family);
    for (const auto& r : pr.rows) {
      rows.push_back({t, m, n, r.alpha, r.b_mu, r.b_t, r.b_d1, r.b_d2});
    }
  }
  return rows;
}

std::vector<double> find_crossovers(const SweepSpec& spec, double resolution) {
  const auto gap = [&](double x) {
    double t, m, n;
    spec.apply(x, t, m, n);
    const auto [a, b] = unsharp_qubit_pair(t, m, n);
    const Povm pair[] = {a, b};
    return direct_new_bound(multi_majorizing_W(pair),
                            {1.0, EntropyFamily::Renyi}) -
           bound_mu(a, b);
  };
  constexpr double kZero = 1e-12;
  const auto sign = [](double v) { return v > kZero ? 1 : (v < -kZero ? -1 : 0); };

  std::vector<double> crossings;
  double prev_x = spec.grid_point(0);
  int prev_sign = sign(gap(prev_x));
  for (std::size_t i = 1; i < spec.steps; ++i) {
    const double x = spec.grid_point(i);
    const int s = sign(gap(x));
    if (s != 0 && prev_sign != 0 && s != prev_sign) {
      double lo = prev_x, hi = x;
      int lo_sign = prev_sign;
      while (std::abs(hi - lo) > resolution) {
        const double mid = 0.5 * (lo + hi);
        const int ms = sign(gap(mid));
        if (ms == 0) {
          lo = hi = mid;
          break;
        }
        if (ms == lo_sign) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      crossings.push_back(0.5 * (lo + hi));
    }
    if (s != 0) {
      prev_sign = s;
    }
    prev_x = x;
  }
  return crossings;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer over a stream-offset state
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::vector<EnsembleRow> run_ensemble(const EnsembleOptions& options) {
  std::vector<EnsembleRow> rows;
  rows.reserve(options.samples);
  const EntropyOrder shannon_order{1.0, EntropyFamily::Renyi};
  for (std::size_t i = 0; i < options.samples; ++i) {
    const auto smearing = [&](std::uint64_t stream) {
      switch (options.forced) {
        case ForcedSmearing::Identity: return DoublyStochastic::identity(3);
        case ForcedSmearing::Uniform: return DoublyStochastic::uniform(3);
        case ForcedSmearing::None: break;
      }
      return random_doubly_stochastic(3, options.mix_count,
                                      derive_seed(options.seed, 2 * i + stream));
    };
    const auto [f, g] = qutrit_pair(smearing(0), smearing(1));
    const MajorizingVectors mv = majorizing_vectors(f, g);
    EnsembleRow row;
    row.seed_index = i;
    row.d_f = device_uncertainty(f);
    row.d_g = device_uncertainty(g);
    row.d_avg = 0.5 * (row.d_f + row.d_g);
    row.b_d2 = direct_new_bound(mv.W, shannon_order);
    row.b_t = tensor_bound(mv.wt, shannon_order);
    row.diff = row.b_d2 - row.b_t;
    rows.push_back(row);
  }
  return rows;
}

std::string format_number(double v) {
  if (v == 0.0) return "0";  // also folds -0
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

namespace {

std::string optional_number(const std::optional<double>& v, Units u) {
  return v ? format_number(convert(*v, u)) : std::string();
}

}  // namespace

void write_bounds_csv(std::ostream& os, const PairReport& report, Units units) {
  os << "alpha,entropy,units,B_MU,B_t,B_d1,B_d2,B_d1_high_alpha,"
        "B_d2_high_alpha\n";
  for (const auto& r : report.rows) {
    os << format_number(r.alpha) << ',' << to_string(r.family) << ','
       << to_string(units) << ',' << format_number(convert(r.b_mu, units))
       << ',' << optional_number(r.b_t, units) << ','
       << format_number(convert(r.b_d1, units)) << ','
       << format_number(convert(r.b_d2, units)) << ','
       << optional_number(r.b_d1_high_alpha, units) << ','
       << optional_number(r.b_d2_high_alpha, units) << '\n';
  }
}

void write_multi_bounds_csv(std::ostream& os, std::span<const Povm> povms,
                            std::span<const double> alpha_grid,
                            EntropyFamily family, Units units) {
  const ProbVector w = multi_majorizing_W(povms);
  os << "alpha,entropy,units,measurements,B_multi\n";
  for (double alpha : alpha_grid) {
    std::optional<double> b;
    if (family == EntropyFamily::Tsallis) {
      b = multi_bound(w, povms.size(), alpha, MultiFamily::Tsallis);
    } else if (alpha <= 1.0 + kShannonAlphaWindow) {
      b = multi_bound(w, povms.size(), alpha, MultiFamily::Renyi);
    }
    os << format_number(alpha) << ',' << to_string(family) << ','
       << to_string(units) << ',' << povms.size() << ','
       << optional_number(b, units) << '\n';
  }
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows,
                     Units units) {
  os << "theta,mu,nu,alpha,B_MU,B_t,B_d1,B_d2\n";
  for (const auto& r : rows) {
    os << format_number(r.theta) << ',' << format_number(r.mu) << ','
       << format_number(r.nu) << ',' << format_number(r.alpha) << ','
       << format_number(convert(r.b_mu, units)) << ','
       << optional_number(r.b_t, units) << ','
       << format_number(convert(r.b_d1, units)) << ','
       << format_number(convert(r.b_d2, units)) << '\n';
  }
}

void write_ensemble_csv(std::ostream& os, const std::vector<EnsembleRow>& rows) {
  os << "seed_index,D_F,D_G,D_avg,B_d2,B_t,diff\n";
  for (const auto& r : rows) {
    os << r.seed_index << ',' << format_number(r.d_f) << ','
       << format_number(r.d_g) << ',' << format_number(r.d_avg) << ','
       << format_number(r.b_d2) << ',' << format_number(r.b_t) << ','
       << format_number(r.diff) << '\n';
  }
}

void write_report(std::ostream& os, const VerificationReport& report) {
  os << "scenario " << report.scenario << ": " << report.n_samples
     << " samples, seed " << report.seed << '\n';
  for (const auto& c : report.checks) {
    os << (c.passed() ? "  PASS  " : "  FAIL  ") << c.name
       << "  worst margin " << format_number(c.worst_margin) << '\n';
  }
  os << (report.passed() ? "all checks passed" : "VIOLATIONS FOUND")
     << " (worst margin " << format_number(report.worst_margin()) << ")\n";
  if (const DensityMatrix* v = report.violator()) {
    os << "violating state:\n";
    const auto& m = v->matrix();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      os << "  ";
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        os << '[' << format_number(m(r, c).real()) << ','
           << format_number(m(r, c).imag()) << ']'
           << (c + 1 < m.cols() ? " " : "");
      }
      os << '\n';
    }
  }
}

std::string report_json(const VerificationReport& report) {
  json j;
  j["scenario"] = report.scenario;
  j["n_samples"] = report.n_samples;
  j["seed"] = report.seed;
  j["passed"] = report.passed();
  j["worst_margin"] = report.worst_margin();
  j["checks"] = json::array();
  for (const auto& c : report.checks) {
    j["checks"].push_back({{"name", c.name},
                           {"worst_margin", c.worst_margin},
                           {"tolerance", c.tolerance},
                           {"passed", c.passed()}});
  }
  if (const DensityMatrix* v = report.violator()) {
    json rows = json::array();
    const auto& m = v->matrix();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        row.push_back({m(r, c).real(), m(r, c).imag()});
      }
      rows.push_back(row);
    }
    j["violator"] = rows;
  }
  return j.dump(2);
}

}  // namespace eur
