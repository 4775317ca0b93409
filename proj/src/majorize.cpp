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

#include "eur/majorize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "eur/error.hpp"

namespace eur {

ProbVector::ProbVector(std::vector<double> entries, double mass)
    : entries_(std::move(entries)), mass_(mass) {
  double sum = 0.0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    double& v = entries_[i];
    if (!std::isfinite(v) || v < -kNegativeTolerance) {
      std::ostringstream os;
      os << "entry " << i << " = " << v << " is negative or not finite";
      throw Error(ErrorCode::ParamOutOfRange, os.str());
    }
    v = std::max(v, 0.0);
    sum += v;
  }
  if (std::abs(sum - mass_) > kMassTolerance) {
    std::ostringstream os;
    os << "entries sum to " << sum << ", declared mass " << mass_;
    throw Error(ErrorCode::MassMismatch, os.str());
  }
}

ProbVector ProbVector::from_entries(std::vector<double> entries) {
  double sum = 0.0;
  for (double v : entries) sum += std::max(v, 0.0);
  return ProbVector(std::move(entries), sum);
}

ProbVector sort_desc(const ProbVector& p) {
  std::vector<double> v = p.values();
  std::stable_sort(v.begin(), v.end(), std::greater<>());
  return ProbVector(std::move(v), p.mass());
}

std::vector<double> partial_sums(const ProbVector& p) {
  std::vector<double> v = sort_desc(p).values();
  std::partial_sum(v.begin(), v.end(), v.begin());
  return v;
}

double majorization_margin(const ProbVector& q, const ProbVector& p) {
  std::vector<double> qs = partial_sums(q);
  std::vector<double> ps = partial_sums(p);
  const std::size_t n = std::max(qs.size(), ps.size());
  // Zero padding extends partial sums by their last value.
  qs.resize(n, qs.empty() ? 0.0 : qs.back());
  ps.resize(n, ps.empty() ? 0.0 : ps.back());
  double margin = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) margin = std::min(margin, qs[k] - ps[k]);
  return n == 0 ? 0.0 : margin;
}

bool majorizes(const ProbVector& q, const ProbVector& p, double tol) {
  if (std::abs(q.mass() - p.mass()) > ProbVector::kMassTolerance) {
    std::ostringstream os;
    os << "cannot compare vectors of mass " << q.mass() << " and " << p.mass();
    throw Error(ErrorCode::MassMismatch, os.str());
  }
  return majorization_margin(q, p) >= -tol;
}

ProbVector direct_sum(std::span<const ProbVector> parts) {
  std::vector<double> v;
  double mass = 0.0;
  for (const auto& p : parts) {
    v.insert(v.end(), p.values().begin(), p.values().end());
    mass += p.mass();
  }
  return ProbVector(std::move(v), mass);
}

ProbVector direct_sum(const ProbVector& a, const ProbVector& b) {
  const ProbVector parts[] = {a, b};
  return direct_sum(parts);
}

ProbVector tensor_product(const ProbVector& a, const ProbVector& b) {
  std::vector<double> v;
  v.reserve(a.size() * b.size());
  for (double x : a.values()) {
    for (double y : b.values()) v.push_back(x * y);
  }
  return ProbVector(std::move(v), a.mass() * b.mass());
}

}  // namespace eur
