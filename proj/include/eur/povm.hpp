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

#ifndef EUR_POVM_HPP
#define EUR_POVM_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "eur/matops.hpp"

namespace eur {

/// Ordered list of positive operators summing to the identity. The element
/// order is the outcome labelling and is never changed.
class Povm {
 public:
  /// Validates positivity of each element and completeness within `tol`.
  explicit Povm(std::vector<HermitianOperator> elements,
                double tol = kPsdTolerance);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return elements_.size(); }
  const HermitianOperator& operator[](std::size_t i) const {
    return elements_[i];
  }
  const std::vector<HermitianOperator>& elements() const { return elements_; }

  /// Largest elementwise deviation of the element sum from the identity.
  double completeness_error() const;

 private:
  std::size_t dim_ = 0;
  std::vector<HermitianOperator> elements_;
};

Povm validate_povm(std::vector<HermitianOperator> elements,
                   double tol = kPsdTolerance);

/// Real n x n matrix with entries in [0,1] whose rows and columns each sum
/// to one (within 1e-12).
class DoublyStochastic {
 public:
  explicit DoublyStochastic(Eigen::MatrixXd entries);

  static DoublyStochastic identity(std::size_t n);
  static DoublyStochastic uniform(std::size_t n);

  std::size_t size() const { return static_cast<std::size_t>(s_.rows()); }
  double operator()(std::size_t i, std::size_t j) const {
    return s_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  const Eigen::MatrixXd& matrix() const { return s_; }

 private:
  Eigen::MatrixXd s_;
};

/// Two-outcome qubit POVM (I +- sharpness * (sin t sigma_x + cos t sigma_z))/2.
/// At theta = 0 this is the unsharp sigma_z measurement.
Povm unsharp_qubit(double theta, double sharpness);

/// The pair X(theta) with unsharpness mu and Z with unsharpness nu.
std::pair<Povm, Povm> unsharp_qubit_pair(double theta, double mu, double nu);

/// Fixed qutrit unitary whose columns form the second reference basis.
Eigen::Matrix3cd qutrit_basis_unitary();

/// Smeared basis POVM: element i is sum_k S_ik |u_k><u_k| where |u_k> is
/// column k of `basis`.
Povm smeared_basis(const DoublyStochastic& smearing,
                   const Eigen::MatrixXcd& basis);

/// F from the computational basis smeared by sf, G from the
/// qutrit_basis_unitary() basis smeared by sg.
std::pair<Povm, Povm> qutrit_pair(const DoublyStochastic& sf,
                                  const DoublyStochastic& sg);

/// Convex mixture of `mix_count` uniformly drawn permutation matrices with
/// weights uniform on the simplex. Deterministic for a fixed seed.
DoublyStochastic random_doubly_stochastic(std::size_t n, std::size_t mix_count,
                                          std::uint64_t seed);

/// n outcomes, each equal to I/n.
Povm trivial_povm(std::size_t dim, std::size_t outcomes = 1);

bool is_rank1_pvm(const Povm& p, double tol = 1e-9);

}  // namespace eur

#endif  // EUR_POVM_HPP
