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

#ifndef EUR_VERIFY_HPP
#define EUR_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "eur/bounds.hpp"
#include "eur/coeffs.hpp"
#include "eur/entropy.hpp"
#include "eur/majorize.hpp"
#include "eur/matops.hpp"
#include "eur/povm.hpp"

namespace eur {

using Rng = std::mt19937_64;

/// Unit-trace positive operator.
class DensityMatrix {
 public:
  explicit DensityMatrix(HermitianOperator rho);

  /// |psi><psi| for a vector normalized here.
  static DensityMatrix pure(const Eigen::VectorXcd& psi);

  std::size_t dim() const { return rho_.dim(); }
  const HermitianOperator& op() const { return rho_; }
  const Eigen::MatrixXcd& matrix() const { return rho_.matrix(); }

 private:
  HermitianOperator rho_;
};

DensityMatrix random_pure_state(std::size_t dim, Rng& rng);
DensityMatrix random_pure_state(std::size_t dim, std::uint64_t seed);
DensityMatrix random_mixed_state(std::size_t dim, Rng& rng);
DensityMatrix random_mixed_state(std::size_t dim, std::uint64_t seed);

/// Haar unitary from the QR decomposition of a Ginibre matrix, with the
/// phases of R's diagonal absorbed into Q.
Eigen::MatrixXcd random_unitary(std::size_t dim, Rng& rng);

/// Random POVM: S^{-1/2} G_i S^{-1/2} with G_i Wishart-distributed and
/// S = sum_i G_i.
Povm random_povm(std::size_t dim, std::size_t outcomes, Rng& rng);

/// Rank-1 PVM from the columns of a unitary.
Povm basis_pvm(const Eigen::MatrixXcd& unitary);

/// Born probabilities Tr[rho P_i].
ProbVector outcome_probs(const Povm& p, const DensityMatrix& rho);

/// A named relation checked over many states. Margins are signed slack:
/// positive means the relation held with room to spare.
struct Check {
  std::string name;
  double worst_margin = std::numeric_limits<double>::infinity();
  double tolerance = 1e-9;
  std::optional<DensityMatrix> violator;

  bool passed() const { return worst_margin >= -tolerance; }
  void record(double margin, const DensityMatrix& state);
};

struct VerificationReport {
  std::string scenario;
  std::size_t n_samples = 0;
  std::uint64_t seed = 0;
  std::vector<Check> checks;

  bool passed() const;
  double worst_margin() const;
  /// The state behind the most negative margin, if any check recorded one.
  const DensityMatrix* violator() const;
};

struct SamplingOptions {
  double pure_fraction = 0.7;
  double tolerance = 1e-9;
  /// Also evaluate the analytic saturating states of every s_k.
  bool include_witnesses = true;
};

/// Draws `n` states from one stream seeded by `seed`: Haar pure states with
/// probability pure_fraction, normalized Ginibre G G^dagger otherwise. The
/// saturating states of `povms` are appended when requested.
std::vector<DensityMatrix> sample_states(std::span<const Povm> povms,
                                         std::size_t n, std::uint64_t seed,
                                         const SamplingOptions& options = {});

/// Moves `delta` of mass from the first (largest) entry to the last one,
/// lowering the first descending partial sum that the entry participates in.
ProbVector corrupt_leading(const ProbVector& w, double delta);

struct MajorizationOptions {
  SamplingOptions sampling;
  /// Negative control: corrupt W by this amount before checking.
  std::optional<double> corrupt_w;
};

/// Two measurements: p^A + p^B < W, p^A + p^B < (1) + w_d,
/// p^A x p^B < w_t, descending prefix sums of z bounded by s_k, and the
/// state-independent prefix chain sum W_i <= sum ((1) + w_d)_i.
VerificationReport check_majorization(const Povm& a, const Povm& b,
                                      std::size_t n_samples,
                                      std::uint64_t seed,
                                      const MajorizationOptions& options = {});

/// Any number of measurements: the direct sum of all outcome distributions is
/// majorized by the multi-measurement W.
VerificationReport check_multi_majorization(
    std::span<const Povm> povms, std::size_t n_samples, std::uint64_t seed,
    const MajorizationOptions& options = {});

/// Every applicable two-measurement bound against sampled entropy sums, for
/// each alpha in the grid and both entropy families.
VerificationReport check_eur(const Povm& a, const Povm& b,
                             std::span<const double> alpha_grid,
                             std::size_t n_samples, std::uint64_t seed,
                             const SamplingOptions& options = {});

/// Multi-measurement Shannon, Renyi (alpha < 1) and Tsallis bounds.
VerificationReport check_multi_eur(std::span<const Povm> povms,
                                   std::span<const double> alpha_grid,
                                   std::size_t n_samples, std::uint64_t seed,
                                   const SamplingOptions& options = {});

struct SaturationResult {
  DensityMatrix state;
  /// Sum of the k largest entries of the direct-sum distribution.
  double achieved;
  double target;
  /// Top eigenvalue of the maximizing element sum is degenerate within 1e-10;
  /// the returned state is then one of several maximizers.
  bool degenerate;
};

/// Top eigenvector of the element sum that attains s_k (1 <= k <= N).
SaturationResult saturating_state(std::span<const Povm> povms, std::size_t k);
SaturationResult saturating_state(const Povm& a, const Povm& b, std::size_t k);

/// Minimum of H(A) + H(B) over sampled states (witnesses included).
double empirical_min_entropy_sum(const Povm& a, const Povm& b,
                                 const EntropyOrder& order,
                                 std::size_t n_samples, std::uint64_t seed);

}  // namespace eur

#endif  // EUR_VERIFY_HPP
