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

// Brute-force reference enumerators used to cross-check the coefficient
// sequences. They deliberately take a different route from the library:
// recursive per-measurement subset construction, norms through a different
// decomposition (SVD for element sums, Gram-matrix eigenvalues for blocks).

#ifndef EUR_TESTS_ORACLES_HPP
#define EUR_TESTS_ORACLES_HPP

#include <algorithm>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "eur/povm.hpp"

namespace eur::oracle {

inline double svd_norm(const Eigen::MatrixXcd& m) {
  return Eigen::JacobiSVD<Eigen::MatrixXcd>(m).singularValues()(0);
}

inline double gram_norm(const Eigen::MatrixXcd& m) {
  const Eigen::MatrixXcd g =
      m.rows() <= m.cols() ? Eigen::MatrixXcd(m * m.adjoint())
                           : Eigen::MatrixXcd(m.adjoint() * m);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

// All subsets of {0..n-1} as index lists, built recursively.
inline std::vector<std::vector<int>> subsets(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    rec(i + 1);
    cur.push_back(i);
    rec(i + 1);
    cur.pop_back();
  };
  rec(0);
  return out;
}

// max over choices of subsets R_l with sum |R_l| = k of ||sum_l sum_R_l M||.
inline std::vector<double> multi_s(const std::vector<Povm>& povms) {
  int total = 0;
  for (const auto& p : povms) total += static_cast<int>(p.size());
  const auto d = static_cast<Eigen::Index>(povms.front().dim());
  std::vector<double> best(static_cast<std::size_t>(total), 0.0);
  std::function<void(std::size_t, int, Eigen::MatrixXcd)> rec =
      [&](std::size_t l, int count, Eigen::MatrixXcd acc) {
        if (l == povms.size()) {
          if (count > 0) {
            auto& b = best[static_cast<std::size_t>(count - 1)];
            b = std::max(b, svd_norm(acc));
          }
          return;
        }
        for (const auto& sub : subsets(static_cast<int>(povms[l].size()))) {
          Eigen::MatrixXcd next = acc;
          for (int i : sub) next += povms[l][static_cast<std::size_t>(i)].matrix();
          rec(l + 1, count + static_cast<int>(sub.size()), next);
        }
      };
  rec(0, 0, Eigen::MatrixXcd::Zero(d, d));
  return best;
}

inline Eigen::MatrixXcd root(const HermitianOperator& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m.matrix());
  return es.operatorSqrt();
}

// c_k from explicit submatrices of the block cross matrix.
inline std::vector<double> c_values(const Povm& a, const Povm& b) {
  const auto d = static_cast<Eigen::Index>(a.dim());
  const int na = static_cast<int>(a.size());
  const int nb = static_cast<int>(b.size());
  std::vector<double> best(static_cast<std::size_t>(na + nb - 1), 0.0);
  for (const auto& rows : subsets(na)) {
    if (rows.empty()) continue;
    for (const auto& cols : subsets(nb)) {
      if (cols.empty()) continue;
      Eigen::MatrixXcd z(static_cast<Eigen::Index>(rows.size()) * d,
                         static_cast<Eigen::Index>(cols.size()) * d);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
          z.block(static_cast<Eigen::Index>(r) * d,
                  static_cast<Eigen::Index>(c) * d, d, d) =
              root(a[static_cast<std::size_t>(rows[r])]) *
              root(b[static_cast<std::size_t>(cols[c])]);
        }
      }
      auto& slot = best[rows.size() + cols.size() - 2];
      slot = std::max(slot, gram_norm(z));
    }
  }
  return best;
}

}  // namespace eur::oracle

#endif  // EUR_TESTS_ORACLES_HPP
