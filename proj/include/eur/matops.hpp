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

#ifndef EUR_MATOPS_HPP
#define EUR_MATOPS_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace eur {

using Complex = std::complex<double>;

/// Eigenvalues at or above -kPsdTolerance count as nonnegative.
inline constexpr double kPsdTolerance = 1e-10;

/// Relative asymmetry accepted (and symmetrized away) by HermitianOperator.
inline constexpr double kHermiticityTolerance = 1e-12;

/// Dense complex matrix with finite entries.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(Eigen::MatrixXcd m);

  static ComplexMatrix zeros(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return static_cast<std::size_t>(m_.rows()); }
  std::size_t cols() const { return static_cast<std::size_t>(m_.cols()); }
  Complex operator()(std::size_t r, std::size_t c) const {
    return m_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  }
  const Eigen::MatrixXcd& matrix() const { return m_; }

 private:
  Eigen::MatrixXcd m_;
};

/// Square complex matrix equal to its conjugate transpose.
///
/// Construction accepts inputs whose asymmetry max|M_ij - conj(M_ji)| is at
/// most kHermiticityTolerance * max(1, max|M_ij|) and stores the symmetrized
/// (M + M^dagger)/2. Anything less Hermitian than that is rejected.
class HermitianOperator {
 public:
  HermitianOperator() = default;
  explicit HermitianOperator(const Eigen::MatrixXcd& m);

  static HermitianOperator identity(std::size_t dim);
  static HermitianOperator zero(std::size_t dim);
  static HermitianOperator diagonal(const std::vector<double>& diag);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  Complex operator()(std::size_t r, std::size_t c) const {
    return m_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  }
  const Eigen::MatrixXcd& matrix() const { return m_; }

  double trace() const { return m_.trace().real(); }

  HermitianOperator& operator+=(const HermitianOperator& other);
  HermitianOperator& operator-=(const HermitianOperator& other);
  HermitianOperator& operator*=(double scale);

  friend HermitianOperator operator+(HermitianOperator a,
                                     const HermitianOperator& b) {
    return a += b;
  }
  friend HermitianOperator operator-(HermitianOperator a,
                                     const HermitianOperator& b) {
    return a -= b;
  }
  friend HermitianOperator operator*(double s, HermitianOperator a) {
    return a *= s;
  }

 private:
  struct Trusted {};
  HermitianOperator(Eigen::MatrixXcd m, Trusted) : m_(std::move(m)) {}

  Eigen::MatrixXcd m_;
};

/// Eigenvalues in ascending order with orthonormal eigenvectors as columns.
struct EigenSystem {
  Eigen::VectorXd values;
  Eigen::MatrixXcd vectors;
};

EigenSystem eigh(const HermitianOperator& m);

bool is_psd(const HermitianOperator& m, double tol = kPsdTolerance);

/// Largest singular value of a Hermitian operator, i.e. max |eigenvalue|.
/// For PSD input this is the largest eigenvalue.
double operator_norm(const HermitianOperator& m);

/// Largest singular value of an arbitrary complex matrix (SVD route).
double spectral_norm(const ComplexMatrix& m);
double spectral_norm(const Eigen::MatrixXcd& m);

/// Principal square root. Eigenvalues in [-tol, 0) are clamped to zero;
/// anything below -tol raises NotPsd.
HermitianOperator psd_sqrt(const HermitianOperator& m,
                           double tol = kPsdTolerance);

/// Pauli matrices and friends used throughout the measurement families.
HermitianOperator pauli_x();
HermitianOperator pauli_y();
HermitianOperator pauli_z();

}  // namespace eur

#endif  // EUR_MATOPS_HPP
