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

#include "eur/matops.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "eur/error.hpp"

namespace eur {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotFinite: return "NotFinite";
    case ErrorCode::NotPsd: return "NotPsd";
    case ErrorCode::NotComplete: return "NotComplete";
    case ErrorCode::NotDoublyStochastic: return "NotDoublyStochastic";
    case ErrorCode::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::MassMismatch: return "MassMismatch";
    case ErrorCode::EnumerationCapExceeded: return "EnumerationCapExceeded";
    case ErrorCode::AlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorCode::NonpositiveLogArgument: return "NonpositiveLogArgument";
    case ErrorCode::UnsupportedRegime: return "UnsupportedRegime";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

void require_finite(const Eigen::MatrixXcd& m) {
  if (!m.allFinite()) {
    throw Error(ErrorCode::NotFinite, "matrix has NaN or infinite entries");
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(Eigen::MatrixXcd m) : m_(std::move(m)) {
  require_finite(m_);
}

ComplexMatrix ComplexMatrix::zeros(std::size_t rows, std::size_t cols) {
  return ComplexMatrix(Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(rows),
                                              static_cast<Eigen::Index>(cols)));
}

HermitianOperator::HermitianOperator(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error(ErrorCode::DimensionMismatch,
                "Hermitian operator must be a nonempty square matrix");
  }
  require_finite(m);
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (asym > kHermiticityTolerance * scale) {
    std::ostringstream os;
    os << "asymmetry " << asym << " exceeds " << kHermiticityTolerance * scale;
    throw Error(ErrorCode::NotHermitian, os.str());
  }
  m_ = 0.5 * (m + m.adjoint());
}

HermitianOperator HermitianOperator::identity(std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  return {Eigen::MatrixXcd::Identity(d, d), Trusted{}};
}

HermitianOperator HermitianOperator::zero(std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  return {Eigen::MatrixXcd::Zero(d, d), Trusted{}};
}

HermitianOperator HermitianOperator::diagonal(const std::vector<double>& diag) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(diag.size()));
  for (std::size_t i = 0; i < diag.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = diag[i];
  }
  return HermitianOperator(Eigen::MatrixXcd(v.asDiagonal()));
}

HermitianOperator& HermitianOperator::operator+=(const HermitianOperator& o) {
  if (o.dim() != dim()) {
    throw Error(ErrorCode::DimensionMismatch, "operator sum of unequal dims");
  }
  m_ += o.m_;
  return *this;
}

HermitianOperator& HermitianOperator::operator-=(const HermitianOperator& o) {
  if (o.dim() != dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "operator difference of unequal dims");
  }
  m_ -= o.m_;
  return *this;
}

HermitianOperator& HermitianOperator::operator*=(double scale) {
  m_ *= scale;
  return *this;
}

EigenSystem eigh(const HermitianOperator& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m.matrix());
  return {solver.eigenvalues(), solver.eigenvectors()};
}

bool is_psd(const HermitianOperator& m, double tol) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m.matrix(),
                                                         Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0) >= -tol;
}

double operator_norm(const HermitianOperator& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m.matrix(),
                                                         Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

double spectral_norm(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues()(0);
}

double spectral_norm(const ComplexMatrix& m) { return spectral_norm(m.matrix()); }

HermitianOperator psd_sqrt(const HermitianOperator& m, double tol) {
  const EigenSystem es = eigh(m);
  if (es.values(0) < -tol) {
    std::ostringstream os;
    os << "smallest eigenvalue " << es.values(0) << " below -" << tol;
    throw Error(ErrorCode::NotPsd, os.str());
  }
  const Eigen::VectorXd roots = es.values.cwiseMax(0.0).cwiseSqrt();
  const Eigen::MatrixXcd s =
      es.vectors * roots.cast<Complex>().asDiagonal() * es.vectors.adjoint();
  return HermitianOperator(s);
}

HermitianOperator pauli_x() {
  Eigen::MatrixXcd m(2, 2);
  m << 0, 1, 1, 0;
  return HermitianOperator(m);
}

HermitianOperator pauli_y() {
  Eigen::MatrixXcd m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return HermitianOperator(m);
}

HermitianOperator pauli_z() {
  Eigen::MatrixXcd m(2, 2);
  m << 1, 0, 0, -1;
  return HermitianOperator(m);
}

}  // namespace eur
