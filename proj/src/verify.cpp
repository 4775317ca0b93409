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

#include "eur/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "eur/error.hpp"

namespace eur {

namespace {

Eigen::MatrixXcd ginibre(std::size_t rows, std::size_t cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXcd g(static_cast<Eigen::Index>(rows),
                     static_cast<Eigen::Index>(cols));
  for (Eigen::Index j = 0; j < g.cols(); ++j) {
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

std::string format_alpha(double alpha) {
  std::ostringstream os;
  os << alpha;
  return os.str();
}

// min_k (prefix(q)_k - prefix(p)_k) without sorting either side.
double prefix_margin(const std::vector<double>& q_prefix,
                     const std::vector<double>& p_prefix) {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < std::min(q_prefix.size(), p_prefix.size()); ++k) {
    m = std::min(m, q_prefix[k] - p_prefix[k]);
  }
  return m;
}

std::vector<double> running_sum(const std::vector<double>& v) {
  std::vector<double> out(v.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = acc += v[i];
  return out;
}

ProbVector direct_sum_of(std::span<const Povm> povms, const DensityMatrix& rho) {
  std::vector<ProbVector> parts;
  parts.reserve(povms.size());
  for (const auto& p : povms) parts.push_back(outcome_probs(p, rho));
  return direct_sum(parts);
}

}  // namespace

DensityMatrix::DensityMatrix(HermitianOperator rho) : rho_(std::move(rho)) {
  if (!is_psd(rho_, kPsdTolerance)) {
    throw Error(ErrorCode::NotPsd, "density matrix is not positive");
  }
  if (std::abs(rho_.trace() - 1.0) > 1e-10) {
    std::ostringstream os;
    os << "density matrix has trace " << rho_.trace();
    throw Error(ErrorCode::ParamOutOfRange, os.str());
  }
}

DensityMatrix DensityMatrix::pure(const Eigen::VectorXcd& psi) {
  const Eigen::VectorXcd v = psi.normalized();
  return DensityMatrix(HermitianOperator(v * v.adjoint()));
}

DensityMatrix random_pure_state(std::size_t dim, Rng& rng) {
  return DensityMatrix::pure(ginibre(dim, 1, rng).col(0));
}

DensityMatrix random_pure_state(std::size_t dim, std::uint64_t seed) {
  Rng rng(seed);
  return random_pure_state(dim, rng);
}

DensityMatrix random_mixed_state(std::size_t dim, Rng& rng) {
  const Eigen::MatrixXcd g = ginibre(dim, dim, rng);
  Eigen::MatrixXcd rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(HermitianOperator(rho));
}

DensityMatrix random_mixed_state(std::size_t dim, std::uint64_t seed) {
  Rng rng(seed);
  return random_mixed_state(dim, rng);
}

Eigen::MatrixXcd random_unitary(std::size_t dim, Rng& rng) {
  const Eigen::MatrixXcd g = ginibre(dim, dim, rng);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < q.cols(); ++i) {
    const Complex diag = r(i, i);
    if (std::abs(diag) > 0.0) q.col(i) *= diag / std::abs(diag);
  }
  return q;
}

Povm random_povm(std::size_t dim, std::size_t outcomes, Rng& rng) {
  std::vector<Eigen::MatrixXcd> wishart;
  Eigen::MatrixXcd total = Eigen::MatrixXcd::Zero(
      static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < outcomes; ++i) {
    const Eigen::MatrixXcd g = ginibre(dim, dim, rng);
    wishart.push_back(g * g.adjoint());
    total += wishart.back();
  }
  const EigenSystem es = eigh(HermitianOperator(total));
  const Eigen::MatrixXcd inv_root =
      es.vectors *
      es.values.cwiseSqrt().cwiseInverse().cast<Complex>().asDiagonal() *
      es.vectors.adjoint();
  std::vector<HermitianOperator> elements;
  for (const auto& w : wishart) {
    const Eigen::MatrixXcd e = inv_root * w * inv_root;
    elements.emplace_back(0.5 * (e + e.adjoint()));
  }
  return Povm(std::move(elements));
}

Povm basis_pvm(const Eigen::MatrixXcd& unitary) {
  std::vector<HermitianOperator> elements;
  for (Eigen::Index k = 0; k < unitary.cols(); ++k) {
    const auto col = unitary.col(k);
    elements.emplace_back(col * col.adjoint());
  }
  return Povm(std::move(elements));
}

ProbVector outcome_probs(const Povm& p, const DensityMatrix& rho) {
  if (p.dim() != rho.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "state and measurement dimensions differ");
  }
  std::vector<double> probs;
  probs.reserve(p.size());
  for (const auto& e : p.elements()) {
    // Tr[rho E] = sum_ij rho_ij E_ji
    probs.push_back(
        (rho.matrix().transpose().cwiseProduct(e.matrix())).sum().real());
  }
  return ProbVector(std::move(probs), 1.0);
}

void Check::record(double margin, const DensityMatrix& state) {
  if (margin < worst_margin) {
    worst_margin = margin;
    if (margin < -tolerance) violator = state;
  }
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.passed(); });
}

double VerificationReport::worst_margin() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& c : checks) m = std::min(m, c.worst_margin);
  return m;
}

const DensityMatrix* VerificationReport::violator() const {
  const Check* worst = nullptr;
  for (const auto& c : checks) {
    if (c.violator && (!worst || c.worst_margin < worst->worst_margin)) {
      worst = &c;
    }
  }
  return worst ? &*worst->violator : nullptr;
}

std::vector<DensityMatrix> sample_states(std::span<const Povm> povms,
                                         std::size_t n, std::uint64_t seed,
                                         const SamplingOptions& options) {
  const std::size_t dim = povms.front().dim();
  Rng rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<DensityMatrix> states;
  states.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (unit(rng) < options.pure_fraction) {
      states.push_back(random_pure_state(dim, rng));
    } else {
      states.push_back(random_mixed_state(dim, rng));
    }
  }
  if (options.include_witnesses) {
    std::size_t total = 0;
    for (const auto& p : povms) total += p.size();
    for (std::size_t k = 1; k < total; ++k) {
      states.push_back(saturating_state(povms, k).state);
    }
  }
  return states;
}

ProbVector corrupt_leading(const ProbVector& w, double delta) {
  std::vector<double> v = w.values();
  v.front() -= delta;
  v.back() += delta;
  return ProbVector(std::move(v), w.mass());
}

VerificationReport check_majorization(const Povm& a, const Povm& b,
                                      std::size_t n_samples,
                                      std::uint64_t seed,
                                      const MajorizationOptions& options) {
  const Povm pair[] = {a, b};
  const MajorizingVectors mv = majorizing_vectors(a, b);
  const ProbVector w =
      options.corrupt_w ? corrupt_leading(mv.W, *options.corrupt_w) : mv.W;
  const std::vector<double> w_prefix = running_sum(w.values());
  const std::vector<double> prev_prefix = running_sum(mv.one_plus_wd.values());
  const double tol = options.sampling.tolerance;

  VerificationReport report;
  report.n_samples = n_samples;
  report.seed = seed;
  Check direct_w{"direct-sum p^A+p^B < W",
                 std::numeric_limits<double>::infinity(), tol, {}};
  Check direct_prev{"direct-sum p^A+p^B < (1)+w_d",
                    std::numeric_limits<double>::infinity(), tol, {}};
  Check tensor{"tensor p^A x p^B < w_t",
               std::numeric_limits<double>::infinity(), tol, {}};
  Check prefix{"prefix sum z <= sum W_i",
               std::numeric_limits<double>::infinity(), tol, {}};
  Check chain{"prefix chain sum W_i <= sum ((1)+w_d)_i",
              prefix_margin(prev_prefix, w_prefix), tol, {}};

  for (const auto& rho : sample_states(pair, n_samples, seed, options.sampling)) {
    const ProbVector pa = outcome_probs(a, rho);
    const ProbVector pb = outcome_probs(b, rho);
    const ProbVector z = direct_sum(pa, pb);
    direct_w.record(majorization_margin(w, z), rho);
    direct_prev.record(majorization_margin(mv.one_plus_wd, z), rho);
    tensor.record(majorization_margin(mv.wt, tensor_product(pa, pb)), rho);
    prefix.record(prefix_margin(w_prefix, partial_sums(z)), rho);
  }
  report.checks = {direct_w, direct_prev, tensor, prefix, chain};
  return report;
}

VerificationReport check_multi_majorization(
    std::span<const Povm> povms, std::size_t n_samples, std::uint64_t seed,
    const MajorizationOptions& options) {
  const ProbVector w_true = multi_majorizing_W(povms);
  const ProbVector w =
      options.corrupt_w ? corrupt_leading(w_true, *options.corrupt_w) : w_true;
  const std::vector<double> w_prefix = running_sum(w.values());

  VerificationReport report;
  report.n_samples = n_samples;
  report.seed = seed;
  Check direct{"multi direct-sum (+)_l P_l < W",
               std::numeric_limits<double>::infinity(),
               options.sampling.tolerance, {}};
  Check prefix{"multi prefix sum Z <= sum W_i",
               std::numeric_limits<double>::infinity(),
               options.sampling.tolerance, {}};
  for (const auto& rho :
       sample_states(povms, n_samples, seed, options.sampling)) {
    const ProbVector z = direct_sum_of(povms, rho);
    direct.record(majorization_margin(w, z), rho);
    prefix.record(prefix_margin(w_prefix, partial_sums(z)), rho);
  }
  report.checks = {direct, prefix};
  return report;
}

VerificationReport check_eur(const Povm& a, const Povm& b,
                             std::span<const double> alpha_grid,
                             std::size_t n_samples, std::uint64_t seed,
                             const SamplingOptions& options) {
  struct Target {
    EntropyOrder order;
    double bound;
    std::size_t check;
  };
  VerificationReport report;
  report.n_samples = n_samples;
  report.seed = seed;
  std::vector<Target> targets;
  const auto add = [&](const EntropyOrder& order, const std::string& label,
                       double bound) {
    targets.push_back({order, bound, report.checks.size()});
    report.checks.push_back({std::string(to_string(order.family)) + " alpha=" +
                                 format_alpha(order.alpha) + " " + label,
                             std::numeric_limits<double>::infinity(),
                             options.tolerance,
                             {}});
  };
  for (EntropyFamily family : {EntropyFamily::Renyi, EntropyFamily::Tsallis}) {
    const PairReport pr = full_report(a, b, alpha_grid, family);
    for (const auto& row : pr.rows) {
      const EntropyOrder order{row.alpha, family};
      if (mu_applies(order)) add(order, "B_MU", row.b_mu);
      if (row.b_t) add(order, "B_t", *row.b_t);
      add(order, "B_d1", row.b_d1);
      add(order, "B_d2", row.b_d2);
    }
  }

  const Povm pair[] = {a, b};
  for (const auto& rho : sample_states(pair, n_samples, seed, options)) {
    const ProbVector pa = outcome_probs(a, rho);
    const ProbVector pb = outcome_probs(b, rho);
    for (const auto& t : targets) {
      const double lhs = entropy(pa, t.order) + entropy(pb, t.order);
      report.checks[t.check].record(lhs - t.bound, rho);
    }
  }
  return report;
}

VerificationReport check_multi_eur(std::span<const Povm> povms,
                                   std::span<const double> alpha_grid,
                                   std::size_t n_samples, std::uint64_t seed,
                                   const SamplingOptions& options) {
  struct Target {
    EntropyOrder order;
    double bound;
  };
  const ProbVector w = multi_majorizing_W(povms);
  const std::size_t l = povms.size();

  VerificationReport report;
  report.n_samples = n_samples;
  report.seed = seed;
  std::vector<Target> targets;
  const auto add = [&](const EntropyOrder& order, const std::string& label,
                       double bound) {
    targets.push_back({order, bound});
    report.checks.push_back({label, std::numeric_limits<double>::infinity(),
                             options.tolerance, {}});
  };
  add({1.0, EntropyFamily::Renyi}, "multi shannon",
      multi_bound(w, l, 1.0, MultiFamily::Shannon));
  for (double alpha : alpha_grid) {
    require_valid_alpha(alpha);
    if (alpha < 1.0) {
      add({alpha, EntropyFamily::Renyi}, "multi renyi alpha=" + format_alpha(alpha),
          multi_bound(w, l, alpha, MultiFamily::Renyi));
    }
    add({alpha, EntropyFamily::Tsallis},
        "multi tsallis alpha=" + format_alpha(alpha),
        multi_bound(w, l, alpha, MultiFamily::Tsallis));
  }

  for (const auto& rho : sample_states(povms, n_samples, seed, options)) {
    std::vector<ProbVector> dists;
    for (const auto& p : povms) dists.push_back(outcome_probs(p, rho));
    for (std::size_t t = 0; t < targets.size(); ++t) {
      double lhs = 0.0;
      for (const auto& d : dists) lhs += entropy(d, targets[t].order);
      report.checks[t].record(lhs - targets[t].bound, rho);
    }
  }
  return report;
}

SaturationResult saturating_state(std::span<const Povm> povms, std::size_t k) {
  const CoefficientSequence s = multi_s_coefficients(povms);
  if (k < 1 || k > s.size()) {
    throw Error(ErrorCode::ParamOutOfRange,
                "k must lie in [1, " + std::to_string(s.size()) + "]");
  }
  const EigenSystem es = eigh(selection_sum(povms, s.maximizers[k - 1]));
  const Eigen::Index top = es.values.size() - 1;
  const bool degenerate =
      top > 0 && es.values(top) - es.values(top - 1) < 1e-10;
  DensityMatrix rho = DensityMatrix::pure(es.vectors.col(top));
  const std::vector<double> ps = partial_sums(direct_sum_of(povms, rho));
  return {std::move(rho), ps[k - 1], s.at(k), degenerate};
}

SaturationResult saturating_state(const Povm& a, const Povm& b, std::size_t k) {
  const Povm pair[] = {a, b};
  return saturating_state(pair, k);
}

double empirical_min_entropy_sum(const Povm& a, const Povm& b,
                                 const EntropyOrder& order,
                                 std::size_t n_samples, std::uint64_t seed) {
  require_valid_alpha(order.alpha);
  const Povm pair[] = {a, b};
  double best = std::numeric_limits<double>::infinity();
  for (const auto& rho : sample_states(pair, n_samples, seed)) {
    best = std::min(best, entropy(outcome_probs(a, rho), order) +
                              entropy(outcome_probs(b, rho), order));
  }
  return best;
}

}  // namespace eur
