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

#ifndef EUR_COEFFS_HPP
#define EUR_COEFFS_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "eur/majorize.hpp"
#include "eur/matops.hpp"
#include "eur/povm.hpp"

namespace eur {

enum class CoefficientKind { S, C, MultiS };

/// A choice of outcome indices from each measurement. For s and multi-s
/// sequences there is one index list per POVM; for c sequences `indices[0]`
/// are the block rows (first POVM) and `indices[1]` the block columns.
struct SubsetChoice {
  std::vector<std::vector<std::size_t>> indices;

  std::size_t total() const;
};

/// values[k-1] is the k-th coefficient; maximizers[k-1] attains it.
struct CoefficientSequence {
  CoefficientKind kind = CoefficientKind::S;
  std::vector<double> values;
  std::vector<SubsetChoice> maximizers;

  std::size_t size() const { return values.size(); }
  /// 1-based access matching the usual s_k / c_k indexing.
  double at(std::size_t k) const { return values.at(k - 1); }
};

/// Exhaustive enumeration refuses instances beyond these sizes.
struct EnumerationLimits {
  std::size_t max_outcomes = 16;
  std::size_t max_submatrices = std::size_t{1} << 16;
};

/// s_k = max over |R| + |S| = k of ||sum_R A_i + sum_S B_j||, k = 1..N.
CoefficientSequence s_coefficients(const Povm& a, const Povm& b,
                                   const EnumerationLimits& limits = {});

/// Same maximization over any number of measurements; the last value is L.
CoefficientSequence multi_s_coefficients(std::span<const Povm> povms,
                                         const EnumerationLimits& limits = {});

/// Block matrix with (i, j) block sqrt(A_i) sqrt(B_j).
ComplexMatrix build_X(const Povm& a, const Povm& b);

/// c_k = max spectral norm over block submatrices of X with r block rows and
/// r' block columns, r + r' - 1 = k, for k = 1..N-1.
CoefficientSequence c_coefficients(const Povm& a, const Povm& b,
                                   const EnumerationLimits& limits = {});

/// Sum of the selected elements (`choice.indices[l]` picks from povms[l]).
HermitianOperator selection_sum(std::span<const Povm> povms,
                                const SubsetChoice& choice);

struct MajorizingVectors {
  /// (s_1, s_2 - s_1, ..., s_N - s_{N-1}); mass 2.
  ProbVector W;
  /// (1, c_1, c_2 - c_1, ..., c_{N-1} - c_{N-2}); mass 2.
  ProbVector one_plus_wd;
  /// (s_2^2/4, (s_3^2 - s_2^2)/4, ..., 0, ..., 0) of length n_A n_B; mass 1.
  ProbVector wt;
  CoefficientSequence s;
  std::optional<CoefficientSequence> c;

  /// one_plus_wd without its leading 1; mass 1.
  ProbVector wd() const;
};

MajorizingVectors majorizing_vectors(const Povm& a, const Povm& b,
                                     const EnumerationLimits& limits = {});

/// Differences of a nondecreasing coefficient sequence, with `mass` declared.
ProbVector differences(const std::vector<double>& values, double mass);

/// (S_1, S_2 - S_1, ..., S_N - S_{N-1}); mass L.
ProbVector multi_majorizing_W(std::span<const Povm> povms,
                              const EnumerationLimits& limits = {});

}  // namespace eur

#endif  // EUR_COEFFS_HPP
