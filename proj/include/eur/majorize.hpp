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

#ifndef EUR_MAJORIZE_HPP
#define EUR_MAJORIZE_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace eur {

/// Nonnegative vector with a declared total mass. Outcome distributions have
/// mass 1; direct sums of L distributions (and their majorizing vectors) have
/// mass L.
class ProbVector {
 public:
  static constexpr double kMassTolerance = 1e-9;
  static constexpr double kNegativeTolerance = 1e-12;

  ProbVector() = default;
  /// Entries in [-1e-12, 0) are clamped to 0; the sum must match `mass`
  /// within 1e-9.
  explicit ProbVector(std::vector<double> entries, double mass = 1.0);

  /// Takes the mass from the entry sum.
  static ProbVector from_entries(std::vector<double> entries);

  std::size_t size() const { return entries_.size(); }
  double mass() const { return mass_; }
  double operator[](std::size_t i) const { return entries_[i]; }
  std::span<const double> entries() const { return entries_; }
  const std::vector<double>& values() const { return entries_; }

 private:
  std::vector<double> entries_;
  double mass_ = 0.0;
};

/// Nonincreasing rearrangement. Ties keep their original order.
ProbVector sort_desc(const ProbVector& p);

/// Cumulative sums of the descending rearrangement.
std::vector<double> partial_sums(const ProbVector& p);

/// min_k (Q_k - P_k) over descending partial sums, with the shorter vector
/// zero-padded. Nonnegative iff p is majorized by q.
double majorization_margin(const ProbVector& q, const ProbVector& p);

/// True iff p is majorized by q (p < q) up to `tol` on every partial sum.
/// Throws MassMismatch when the declared masses differ by more than 1e-9.
bool majorizes(const ProbVector& q, const ProbVector& p, double tol = 1e-9);

/// Concatenation; mass is the sum of the masses.
ProbVector direct_sum(std::span<const ProbVector> parts);
ProbVector direct_sum(const ProbVector& a, const ProbVector& b);

/// Outer product flattened row-major (a_1 b_1, a_1 b_2, ...).
ProbVector tensor_product(const ProbVector& a, const ProbVector& b);

}  // namespace eur

#endif  // EUR_MAJORIZE_HPP
