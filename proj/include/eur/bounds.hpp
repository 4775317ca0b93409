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

#ifndef EUR_BOUNDS_HPP
#define EUR_BOUNDS_HPP

#include <optional>
#include <span>
#include <vector>

#include "eur/coeffs.hpp"
#include "eur/entropy.hpp"
#include "eur/povm.hpp"

namespace eur {

// State-independent lower bounds on H(A) + H(B) (or the L-measurement sum),
// in nats. Each function below is a pure function of the measurements.

/// -2 ln max_ij ||sqrt(A_i) sqrt(B_j)||. A Shannon-entropy bound, hence also
/// valid for Renyi and Tsallis orders alpha <= 1.
double bound_mu(const Povm& a, const Povm& b);

/// Renyi entropy of the tensor-product majorizing vector w_t.
double bound_tensor(const Povm& a, const Povm& b, double alpha);

/// Bounds from (1) + w_d. Renyi alpha <= 1: H_alpha(w_d); Renyi alpha > 1:
/// 2/(1-alpha) ln(1/2 + 1/2 sum w_d^alpha); Tsallis: T_alpha(w_d).
double bound_direct_prev(const Povm& a, const Povm& b, double alpha,
                         EntropyFamily family);

/// Bounds from W. Renyi alpha < 1: 1/(1-alpha) ln(sum W^alpha - 1);
/// alpha = 1: -sum W ln W; alpha > 1: 2/(1-alpha) ln(sum W^alpha / 2).
/// Tsallis: (sum W^alpha - 2)/(1-alpha).
double bound_direct_new(const Povm& a, const Povm& b, double alpha,
                        EntropyFamily family);

enum class MultiFamily { Shannon, Renyi, Tsallis };

/// L-measurement bound from the multi-measurement W. The Renyi branch only
/// exists for alpha < 1; larger orders raise UnsupportedRegime.
double bound_multi(std::span<const Povm> povms, double alpha,
                   MultiFamily family);

// Vector-level forms shared by the Povm entry points and full_report.
double tensor_bound(const ProbVector& wt, const EntropyOrder& order);
double direct_prev_bound(const ProbVector& wd, const EntropyOrder& order);
double direct_new_bound(const ProbVector& w, const EntropyOrder& order);
double multi_bound(const ProbVector& w, std::size_t measurements, double alpha,
                   MultiFamily family);

/// Whether the Maassen-Uffink constant bounds this entropy order.
bool mu_applies(const EntropyOrder& order);
/// Whether the tensor bound has a formula for this order (Tsallis needs
/// alpha >= 1, where T(p x q) <= T(p) + T(q)).
bool tensor_applies(const EntropyOrder& order);

struct BoundReport {
  double alpha = 1.0;
  EntropyFamily family = EntropyFamily::Renyi;
  double b_mu = 0.0;
  std::optional<double> b_t;
  double b_d1 = 0.0;
  double b_d2 = 0.0;
  // Renyi alpha > 1 only: the w_d and W forms of the high-order bounds.
  // These repeat b_d1 and b_d2 under explicit names.
  std::optional<double> b_d1_high_alpha;
  std::optional<double> b_d2_high_alpha;
};

struct PairReport {
  MajorizingVectors vectors;
  std::vector<BoundReport> rows;
};

/// One row per alpha, all computed from a single MajorizingVectors.
PairReport full_report(const Povm& a, const Povm& b,
                       std::span<const double> alpha_grid,
                       EntropyFamily family = EntropyFamily::Renyi);

}  // namespace eur

#endif  // EUR_BOUNDS_HPP
