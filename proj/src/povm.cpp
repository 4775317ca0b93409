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

#include "eur/povm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "eur/error.hpp"

namespace eur {

Povm::Povm(std::vector<HermitianOperator> elements, double tol)
    : elements_(std::move(elements)) {
  if (elements_.empty()) {
    throw Error(ErrorCode::DimensionMismatch, "POVM needs at least one element");
  }
  dim_ = elements_.front().dim();
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].dim() != dim_) {
      throw Error(ErrorCode::DimensionMismatch,
                  "POVM element " + std::to_string(i) + " has a different dim");
    }
    if (!is_psd(elements_[i], tol)) {
      throw Error(ErrorCode::NotPsd,
                  "POVM element " + std::to_string(i) + " is not positive");
    }
  }
  const double dev = completeness_error();
  if (dev > tol) {
    std::ostringstream os;
    os << "elements sum to identity only within " << dev;
    throw Error(ErrorCode::NotComplete, os.str());
  }
}

double Povm::completeness_error() const {
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(
      static_cast<Eigen::Index>(dim_), static_cast<Eigen::Index>(dim_));
  for (const auto& e : elements_) sum += e.matrix();
  sum -= Eigen::MatrixXcd::Identity(sum.rows(), sum.cols());
  return sum.cwiseAbs().maxCoeff();
}

Povm validate_povm(std::vector<HermitianOperator> elements, double tol) {
  return Povm(std::move(elements), tol);
}

DoublyStochastic::DoublyStochastic(Eigen::MatrixXd entries)
    : s_(std::move(entries)) {
  constexpr double kSumTol = 1e-12;
  if (s_.rows() != s_.cols() || s_.rows() == 0) {
    throw Error(ErrorCode::DimensionMismatch,
                "doubly stochastic matrix must be square and nonempty");
  }
  if (!s_.allFinite() || s_.minCoeff() < -kSumTol ||
      s_.maxCoeff() > 1.0 + kSumTol) {
    throw Error(ErrorCode::NotDoublyStochastic, "entries must lie in [0,1]");
  }
  const double row_dev = (s_.rowwise().sum().array() - 1.0).abs().maxCoeff();
  const double col_dev = (s_.colwise().sum().array() - 1.0).abs().maxCoeff();
  if (row_dev > kSumTol || col_dev > kSumTol) {
    std::ostringstream os;
    os << "row/column sums deviate from 1 by " << std::max(row_dev, col_dev);
    throw Error(ErrorCode::NotDoublyStochastic, os.str());
  }
  s_ = s_.cwiseMax(0.0).cwiseMin(1.0);
}

DoublyStochastic DoublyStochastic::identity(std::size_t n) {
  const auto k = static_cast<Eigen::Index>(n);
  return DoublyStochastic(Eigen::MatrixXd::Identity(k, k));
}

DoublyStochastic DoublyStochastic::uniform(std::size_t n) {
  const auto k = static_cast<Eigen::Index>(n);
  return DoublyStochastic(
      Eigen::MatrixXd::Constant(k, k, 1.0 / static_cast<double>(n)));
}

Povm unsharp_qubit(double theta, double sharpness) {
  if (!std::isfinite(theta)) {
    throw Error(ErrorCode::ParamOutOfRange, "theta must be finite");
  }
  if (!(sharpness >= 0.0 && sharpness <= 1.0)) {
    throw Error(ErrorCode::ParamOutOfRange,
                "unsharpness parameter must lie in [0,1]");
  }
  const HermitianOperator dir =
      std::sin(theta) * pauli_x() + std::cos(theta) * pauli_z();
  const HermitianOperator id = HermitianOperator::identity(2);
  return Povm({0.5 * (id + sharpness * dir), 0.5 * (id - sharpness * dir)});
}

std::pair<Povm, Povm> unsharp_qubit_pair(double theta, double mu, double nu) {
  return {unsharp_qubit(theta, mu), unsharp_qubit(0.0, nu)};
}

Eigen::Matrix3cd qutrit_basis_unitary() {
  const double r2 = std::sqrt(2.0);
  const double r3 = std::sqrt(3.0);
  const double r6 = std::sqrt(6.0);
  Eigen::Matrix3cd u;
  u << 1 / r3, 1 / r3, 1 / r3,
       1 / r2, 0, -1 / r2,
       1 / r6, -std::sqrt(2.0 / 3.0), 1 / r6;
  return u;
}

Povm smeared_basis(const DoublyStochastic& smearing,
                   const Eigen::MatrixXcd& basis) {
  const std::size_t n = smearing.size();
  if (basis.rows() != basis.cols() ||
      static_cast<std::size_t>(basis.cols()) != n) {
    throw Error(ErrorCode::DimensionMismatch,
                "smearing matrix and basis sizes differ");
  }
  std::vector<HermitianOperator> elements;
  elements.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(basis.rows(), basis.cols());
    for (std::size_t k = 0; k < n; ++k) {
      const auto col = basis.col(static_cast<Eigen::Index>(k));
      e += smearing(i, k) * (col * col.adjoint());
    }
    elements.emplace_back(e);
  }
  return Povm(std::move(elements));
}

std::pair<Povm, Povm> qutrit_pair(const DoublyStochastic& sf,
                                  const DoublyStochastic& sg) {
  if (sf.size() != 3 || sg.size() != 3) {
    throw Error(ErrorCode::DimensionMismatch,
                "qutrit smearing matrices must be 3x3");
  }
  return {smeared_basis(sf, Eigen::MatrixXcd::Identity(3, 3)),
          smeared_basis(sg, qutrit_basis_unitary())};
}

DoublyStochastic random_doubly_stochastic(std::size_t n, std::size_t mix_count,
                                          std::uint64_t seed) {
  if (n == 0 || mix_count == 0) {
    throw Error(ErrorCode::ParamOutOfRange,
                "need n >= 1 and mix_count >= 1");
  }
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> expo(1.0);

  // Normalized i.i.d. exponentials are uniform on the simplex.
  std::vector<double> weights(mix_count);
  for (auto& w : weights) w = expo(rng);
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  for (auto& w : weights) w /= total;

  const auto k = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(k, k);
  std::vector<std::size_t> perm(n);
  for (std::size_t m = 0; m < mix_count; ++m) {
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (std::size_t i = n - 1; i > 0; --i) {
      std::uniform_int_distribution<std::size_t> pick(0, i);
      std::swap(perm[i], perm[pick(rng)]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      s(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(perm[i])) +=
          weights[m];
    }
  }
  return DoublyStochastic(std::move(s));
}

Povm trivial_povm(std::size_t dim, std::size_t outcomes) {
  if (dim == 0 || outcomes == 0) {
    throw Error(ErrorCode::ParamOutOfRange, "need dim >= 1 and outcomes >= 1");
  }
  const HermitianOperator e =
      (1.0 / static_cast<double>(outcomes)) * HermitianOperator::identity(dim);
  return Povm(std::vector<HermitianOperator>(outcomes, e));
}

bool is_rank1_pvm(const Povm& p, double tol) {
  for (const auto& e : p.elements()) {
    const Eigen::VectorXd ev = eigh(e).values;
    const auto n = ev.size();
    if (std::abs(ev(n - 1) - 1.0) > tol) return false;
    if (n > 1 && ev.head(n - 1).cwiseAbs().maxCoeff() > tol) return false;
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (spectral_norm(p[i].matrix() * p[j].matrix()) > tol) return false;
    }
  }
  return true;
}

}  // namespace eur
