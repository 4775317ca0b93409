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

#include "eur/coeffs.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

#include "eur/error.hpp"

namespace eur {

namespace {

constexpr double kDifferenceNoise = 1e-12;

void require_same_dim(std::span<const Povm> povms) {
  if (povms.empty()) {
    throw Error(ErrorCode::DimensionMismatch, "need at least one POVM");
  }
  for (const auto& p : povms) {
    if (p.dim() != povms.front().dim()) {
      throw Error(ErrorCode::DimensionMismatch,
                  "all POVMs must act on the same space");
    }
  }
}

void require_outcome_cap(std::size_t total, const EnumerationLimits& limits) {
  if (total > limits.max_outcomes || total >= 63) {
    throw Error(ErrorCode::EnumerationCapExceeded,
                std::to_string(total) + " outcomes exceed the cap of " +
                    std::to_string(limits.max_outcomes));
  }
}

std::vector<std::size_t> bits_of(std::uint64_t mask, std::size_t width) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < width; ++i) {
    if ((mask >> i) & 1U) out.push_back(i);
  }
  return out;
}

}  // namespace

std::size_t SubsetChoice::total() const {
  std::size_t n = 0;
  for (const auto& v : indices) n += v.size();
  return n;
}

CoefficientSequence multi_s_coefficients(std::span<const Povm> povms,
                                         const EnumerationLimits& limits) {
  require_same_dim(povms);

  // Flatten to (povm, outcome) labels so one bitmask covers every selection.
  struct Label {
    std::size_t povm;
    std::size_t outcome;
  };
  std::vector<Label> labels;
  std::vector<const HermitianOperator*> ops;
  for (std::size_t l = 0; l < povms.size(); ++l) {
    for (std::size_t i = 0; i < povms[l].size(); ++i) {
      labels.push_back({l, i});
      ops.push_back(&povms[l][i]);
    }
  }
  const std::size_t n = labels.size();
  require_outcome_cap(n, limits);

  const auto d = static_cast<Eigen::Index>(povms.front().dim());
  std::vector<double> best(n, -1.0);
  std::vector<std::uint64_t> best_mask(n, 0);
  Eigen::MatrixXcd sum(d, d);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(d);

  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < end; ++mask) {
    sum.setZero();
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) sum += ops[i]->matrix();
    }
    solver.compute(sum, Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    const double norm = std::max(std::abs(ev(0)), std::abs(ev(d - 1)));
    const std::size_t k = static_cast<std::size_t>(std::popcount(mask)) - 1;
    if (norm > best[k]) {
      best[k] = norm;
      best_mask[k] = mask;
    }
  }

  CoefficientSequence seq;
  seq.kind = povms.size() == 2 ? CoefficientKind::S : CoefficientKind::MultiS;
  seq.values = best;
  seq.maximizers.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    SubsetChoice choice;
    choice.indices.resize(povms.size());
    for (std::size_t i : bits_of(best_mask[k], n)) {
      choice.indices[labels[i].povm].push_back(labels[i].outcome);
    }
    seq.maximizers.push_back(std::move(choice));
  }
  return seq;
}

CoefficientSequence s_coefficients(const Povm& a, const Povm& b,
                                   const EnumerationLimits& limits) {
  const Povm pair[] = {a, b};
  CoefficientSequence seq = multi_s_coefficients(pair, limits);
  seq.kind = CoefficientKind::S;
  return seq;
}

ComplexMatrix build_X(const Povm& a, const Povm& b) {
  const Povm pair[] = {a, b};
  require_same_dim(pair);
  const auto d = static_cast<Eigen::Index>(a.dim());
  std::vector<Eigen::MatrixXcd> ra, rb;
  for (const auto& e : a.elements()) ra.push_back(psd_sqrt(e).matrix());
  for (const auto& e : b.elements()) rb.push_back(psd_sqrt(e).matrix());

  Eigen::MatrixXcd x(static_cast<Eigen::Index>(a.size()) * d,
                     static_cast<Eigen::Index>(b.size()) * d);
  for (std::size_t i = 0; i < ra.size(); ++i) {
    for (std::size_t j = 0; j < rb.size(); ++j) {
      x.block(static_cast<Eigen::Index>(i) * d, static_cast<Eigen::Index>(j) * d,
              d, d) = ra[i] * rb[j];
    }
  }
  return ComplexMatrix(std::move(x));
}

CoefficientSequence c_coefficients(const Povm& a, const Povm& b,
                                   const EnumerationLimits& limits) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  require_outcome_cap(na + nb, limits);
  const std::uint64_t row_masks = (std::uint64_t{1} << na) - 1;
  const std::uint64_t col_masks = (std::uint64_t{1} << nb) - 1;
  if (row_masks * col_masks > limits.max_submatrices) {
    throw Error(ErrorCode::EnumerationCapExceeded,
                std::to_string(row_masks * col_masks) +
                    " block submatrices exceed the cap of " +
                    std::to_string(limits.max_submatrices));
  }

  const Eigen::MatrixXcd x = build_X(a, b).matrix();
  const auto d = static_cast<Eigen::Index>(a.dim());
  const std::size_t n = na + nb;
  std::vector<double> best(n - 1, -1.0);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> best_masks(n - 1);

  for (std::uint64_t rm = 1; rm <= row_masks; ++rm) {
    const auto rows = bits_of(rm, na);
    for (std::uint64_t cm = 1; cm <= col_masks; ++cm) {
      const auto cols = bits_of(cm, nb);
      Eigen::MatrixXcd z(static_cast<Eigen::Index>(rows.size()) * d,
                         static_cast<Eigen::Index>(cols.size()) * d);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
          z.block(static_cast<Eigen::Index>(r) * d,
                  static_cast<Eigen::Index>(c) * d, d, d) =
              x.block(static_cast<Eigen::Index>(rows[r]) * d,
                      static_cast<Eigen::Index>(cols[c]) * d, d, d);
        }
      }
      const double norm = spectral_norm(z);
      const std::size_t k = rows.size() + cols.size() - 2;
      if (norm > best[k]) {
        best[k] = norm;
        best_masks[k] = {rm, cm};
      }
    }
  }

  CoefficientSequence seq;
  seq.kind = CoefficientKind::C;
  seq.values = best;
  for (const auto& [rm, cm] : best_masks) {
    seq.maximizers.push_back(SubsetChoice{{bits_of(rm, na), bits_of(cm, nb)}});
  }
  return seq;
}

HermitianOperator selection_sum(std::span<const Povm> povms,
                                const SubsetChoice& choice) {
  if (choice.indices.size() != povms.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "subset choice does not match the number of POVMs");
  }
  HermitianOperator sum = HermitianOperator::zero(povms.front().dim());
  for (std::size_t l = 0; l < povms.size(); ++l) {
    for (std::size_t i : choice.indices[l]) sum += povms[l][i];
  }
  return sum;
}

ProbVector differences(const std::vector<double>& values, double mass) {
  std::vector<double> out(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    out[k] = k == 0 ? values[0] : values[k] - values[k - 1];
    // Equal coefficients differ by eigensolver roundoff; a stray 1e-15 entry
    // would still contribute (1e-15)^alpha to power sums at small alpha.
    if (std::abs(out[k]) <= kDifferenceNoise) out[k] = 0.0;
  }
  return ProbVector(std::move(out), mass);
}

ProbVector MajorizingVectors::wd() const {
  const auto& v = one_plus_wd.values();
  return ProbVector(std::vector<double>(v.begin() + 1, v.end()),
                    one_plus_wd.mass() - 1.0);
}

MajorizingVectors majorizing_vectors(const Povm& a, const Povm& b,
                                     const EnumerationLimits& limits) {
  CoefficientSequence s = s_coefficients(a, b, limits);
  CoefficientSequence c = c_coefficients(a, b, limits);
  const std::size_t n = s.size();

  ProbVector w = differences(s.values, 2.0);

  std::vector<double> shifted_c{1.0};
  for (double ck : c.values) shifted_c.push_back(1.0 + ck);
  ProbVector one_plus_wd = differences(shifted_c, 2.0);

  std::vector<double> wt(a.size() * b.size(), 0.0);
  for (std::size_t k = 1; k < n; ++k) {
    const double prev = k == 1 ? 0.0 : s.values[k - 1] * s.values[k - 1];
    wt[k - 1] = (s.values[k] * s.values[k] - prev) / 4.0;
  }

  return MajorizingVectors{std::move(w), std::move(one_plus_wd),
                           ProbVector(std::move(wt), 1.0), std::move(s),
                           std::move(c)};
}

ProbVector multi_majorizing_W(std::span<const Povm> povms,
                              const EnumerationLimits& limits) {
  const CoefficientSequence s = multi_s_coefficients(povms, limits);
  return differences(s.values, static_cast<double>(povms.size()));
}

}  // namespace eur
