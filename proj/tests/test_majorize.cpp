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

#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "eur/error.hpp"
#include "eur/majorize.hpp"

using namespace eur;

namespace {

ProbVector random_prob(std::size_t n, double mass, std::mt19937_64& rng,
                       double sparsity = 0.0) {
  std::exponential_distribution<double> e(1.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> v(n);
  double s = 0.0;
  for (auto& x : v) {
    x = u(rng) < sparsity ? 0.0 : e(rng);
    s += x;
  }
  if (s == 0.0) {
    v[0] = 1.0;
    s = 1.0;
  }
  for (auto& x : v) x *= mass / s;
  return ProbVector(v, mass);
}

}  // namespace

TEST_CASE("ProbVector invariants") {
  CHECK(ProbVector({0.5, 0.5}).mass() == 1.0);
  CHECK(ProbVector({1.0, -1e-13}, 1.0)[1] == 0.0);
  CHECK_THROWS_AS(ProbVector({1.0, -1e-6}, 1.0), Error);
  CHECK_THROWS_AS(ProbVector({0.5, 0.4}, 1.0), Error);
  CHECK(ProbVector::from_entries({1.0, 0.5, 0.5}).mass() == 2.0);
}

TEST_CASE("sort_desc") {
  CHECK(sort_desc(ProbVector({0.1, 0.7, 0.2})).values() ==
        std::vector<double>{0.7, 0.2, 0.1});
  CHECK(sort_desc(ProbVector({0.5, 0.5})).values() ==
        std::vector<double>{0.5, 0.5});
  const std::vector<double> sorted{1.0, 0.7071, 0.2929, 0.0};
  CHECK(sort_desc(ProbVector(sorted, 2.0)).values() == sorted);
}

TEST_CASE("partial_sums") {
  const auto a = partial_sums(ProbVector({0.5, 0.3, 0.2}));
  CHECK(a[0] == doctest::Approx(0.5));
  CHECK(a[1] == doctest::Approx(0.8));
  CHECK(a[2] == doctest::Approx(1.0));
  CHECK(partial_sums(ProbVector({0.0, 0.0, 1.0})) ==
        std::vector<double>{1.0, 1.0, 1.0});
}

TEST_CASE("majorizes") {
  const double third = 1.0 / 3.0;
  const ProbVector uniform({third, third, third});
  const ProbVector point({1.0, 0.0, 0.0});
  CHECK(majorizes(point, uniform));
  CHECK_FALSE(majorizes(uniform, point));

  // rho = |0><0| under X(pi/2), Z at mu = nu = 0.8: p^A = (0.5, 0.5),
  // p^B = (0.9, 0.1); W from s = (0.9, 1 + sqrt(1.28)/2, 1.9, 2).
  const double s2 = 1.0 + 0.5 * std::sqrt(1.28);
  const ProbVector w({0.9, s2 - 0.9, 1.9 - s2, 0.1}, 2.0);
  const ProbVector z = direct_sum(ProbVector({0.5, 0.5}), ProbVector({0.9, 0.1}));
  CHECK(majorizes(w, z));
  CHECK(majorization_margin(w, z) == doctest::Approx(0.0).epsilon(1e-12));

  try {
    majorizes(point, ProbVector({1.0, 1.0}, 2.0));
    FAIL("expected MassMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MassMismatch);
  }
}

TEST_CASE("majorization order properties") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> sizes(1, 7);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto n = static_cast<std::size_t>(sizes(rng));
    const ProbVector p = random_prob(n, 1.0, rng, 0.2);
    const ProbVector q = random_prob(n, 1.0, rng, 0.2);
    const ProbVector r = random_prob(n, 1.0, rng, 0.2);

    CHECK(majorizes(p, p));
    if (majorizes(q, p) && majorizes(r, q)) CHECK(majorizes(r, p));
    if (majorizes(q, p) && majorizes(p, q)) {
      const auto ps = sort_desc(p).values();
      const auto qs = sort_desc(q).values();
      for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(ps[i] - qs[i]) < 1e-8);
    }

    // Zero padding never changes the verdict.
    std::vector<double> padded = p.values();
    padded.resize(n + 3, 0.0);
    const ProbVector pp(padded, 1.0);
    CHECK(majorizes(q, p) == majorizes(q, pp));
    CHECK(majorizes(p, q) == majorizes(pp, q));

    // Every distribution lies between uniform and a point mass.
    CHECK(majorizes(ProbVector::from_entries({1.0}), p));
    CHECK(majorizes(p, ProbVector(std::vector<double>(n, 1.0 / static_cast<double>(n)))));
  }
}

TEST_CASE("direct and tensor products") {
  const ProbVector a({0.25, 0.75});
  const ProbVector b({0.5, 0.3, 0.2});
  const ProbVector ds = direct_sum(a, b);
  CHECK(ds.mass() == 2.0);
  CHECK(ds.size() == 5);
  const ProbVector tp = tensor_product(a, b);
  CHECK(tp.size() == 6);
  CHECK(tp[1] == doctest::Approx(0.25 * 0.3));
  CHECK(tp[3] == doctest::Approx(0.75 * 0.5));
}
