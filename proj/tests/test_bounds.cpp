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

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "eur/bounds.hpp"
#include "eur/error.hpp"
#include "eur/verify.hpp"

using namespace eur;

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;
constexpr auto kRenyi = EntropyFamily::Renyi;
constexpr auto kTsallis = EntropyFamily::Tsallis;

template <class F>
void check_code(F&& f, ErrorCode code) {
  try {
    f();
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == code);
  }
}

}  // namespace

TEST_CASE("sharp perpendicular qubit pair") {
  const auto [a, b] = unsharp_qubit_pair(kHalfPi, 1.0, 1.0);
  const double r = 1 / std::sqrt(2.0);
  const double h_wd = -(r * std::log(r) + (1 - r) * std::log(1 - r));

  CHECK(bound_mu(a, b) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  const double t = std::pow(1 + r, 2) / 4;
  CHECK(bound_tensor(a, b, 1.0) ==
        doctest::Approx(-(t * std::log(t) + (1 - t) * std::log(1 - t))).epsilon(1e-12));
  CHECK(bound_tensor(a, b, 1.0) == doctest::Approx(0.584692).epsilon(1e-6));
  CHECK(bound_direct_prev(a, b, 1.0, kRenyi) == doctest::Approx(h_wd).epsilon(1e-12));
  CHECK(bound_direct_new(a, b, 1.0, kRenyi) == doctest::Approx(h_wd).epsilon(1e-10));
  CHECK(h_wd == doctest::Approx(0.60469).epsilon(2e-5));

  const double alphas[] = {1.0};
  const PairReport rep = full_report(a, b, alphas);
  REQUIRE(rep.rows.size() == 1);
  const BoundReport& row = rep.rows[0];
  CHECK(row.b_mu > row.b_d2);
  CHECK(row.b_d2 == doctest::Approx(row.b_d1).epsilon(1e-9));
  CHECK(row.b_d2 > *row.b_t);
  CHECK_FALSE(row.b_d1_high_alpha.has_value());
}

TEST_CASE("closed-form evaluations away from order one") {
  const auto [a, b] = unsharp_qubit_pair(kHalfPi, 1.0, 1.0);
  const double r = 1 / std::sqrt(2.0);
  // W = (1, r, 1-r, 0)
  const double p2 = 1 + r * r + (1 - r) * (1 - r);
  CHECK(bound_direct_new(a, b, 2.0, kRenyi) ==
        doctest::Approx(-2.0 * std::log(p2 / 2)).epsilon(1e-10));
  const double p05 = 1 + std::sqrt(r) + std::sqrt(1 - r);
  CHECK(bound_direct_new(a, b, 0.5, kRenyi) ==
        doctest::Approx(2.0 * std::log(p05 - 1)).epsilon(1e-10));
  CHECK(bound_direct_new(a, b, 2.0, kTsallis) ==
        doctest::Approx(2.0 - p2).epsilon(1e-10));
  // w_d = (r, 1-r)
  const double q2 = r * r + (1 - r) * (1 - r);
  CHECK(bound_direct_prev(a, b, 2.0, kRenyi) ==
        doctest::Approx(-2.0 * std::log(0.5 + 0.5 * q2)).epsilon(1e-10));
  CHECK(bound_direct_prev(a, b, 2.0, kTsallis) == doctest::Approx(1 - q2).epsilon(1e-10));
}

TEST_CASE("trivial measurements give zero bounds") {
  const Povm id = trivial_povm(2, 1);
  for (double alpha : {0.5, 1.0, 2.0}) {
    CHECK(bound_mu(id, id) == 0.0);
    CHECK(bound_tensor(id, id, alpha) == doctest::Approx(0.0));
    for (auto fam : {kRenyi, kTsallis}) {
      CHECK(bound_direct_prev(id, id, alpha, fam) == doctest::Approx(0.0));
      CHECK(bound_direct_new(id, id, alpha, fam) == doctest::Approx(0.0));
    }
  }
  const Povm three[] = {id, id, id};
  CHECK(bound_multi(three, 1.0, MultiFamily::Shannon) == doctest::Approx(0.0));
  CHECK(bound_multi(three, 0.5, MultiFamily::Renyi) == doctest::Approx(0.0));
  CHECK(bound_multi(three, 2.0, MultiFamily::Tsallis) == doctest::Approx(0.0));
}

TEST_CASE("unsharp perpendicular pair at mu = 0.8") {
  const double mu = 0.8;
  const auto [a, b] = unsharp_qubit_pair(kHalfPi, mu, mu);
  const double c1 = (mu + std::sqrt(2 - mu * mu)) / (2 * std::sqrt(2.0));
  const double c2 = std::sqrt(0.9);
  const ProbVector wd({c1, c2 - c1, 1 - c2});
  CHECK(bound_direct_prev(a, b, 1.0, kRenyi) ==
        doctest::Approx(shannon(wd)).epsilon(1e-10));

  const double alphas[] = {1.0};
  const BoundReport row = full_report(a, b, alphas).rows[0];
  CHECK(row.b_d2 >= row.b_mu);
  CHECK(row.b_d2 >= row.b_d1);
  CHECK(row.b_d2 >= *row.b_t);
}

TEST_CASE("most refined bound at theta = pi/3") {
  const double alphas[] = {1.0};
  for (double mu = 0.2; mu <= 1.0 + 1e-12; mu += 0.1) {
    const auto [a, b] = unsharp_qubit_pair(std::numbers::pi / 3, mu, mu);
    const BoundReport row = full_report(a, b, alphas).rows[0];
    CHECK(row.b_d2 >= row.b_mu - 1e-9);
    CHECK(row.b_d2 >= row.b_d1 - 1e-9);
    CHECK(row.b_d2 >= *row.b_t - 1e-9);
  }
}

TEST_CASE("rank-1 coincidence of the two direct-sum bounds") {
  Rng rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    const Povm a = basis_pvm(random_unitary(3, rng));
    const Povm b = basis_pvm(random_unitary(3, rng));
    for (double alpha : {0.3, 0.7, 1.0}) {
      CHECK(std::abs(bound_direct_new(a, b, alpha, kRenyi) -
                     bound_direct_prev(a, b, alpha, kRenyi)) < 1e-9);
    }
  }
}

TEST_CASE("report shape across orders") {
  const auto [a, b] = unsharp_qubit_pair(1.0, 0.9, 0.7);
  const double alphas[] = {0.5, 1.0, 2.0};
  const PairReport ren = full_report(a, b, alphas, kRenyi);
  REQUIRE(ren.rows.size() == 3);
  CHECK(ren.rows[0].b_t.has_value());
  CHECK_FALSE(ren.rows[0].b_d2_high_alpha.has_value());
  CHECK(ren.rows[2].b_d1_high_alpha == ren.rows[2].b_d1);
  CHECK(ren.rows[2].b_d2_high_alpha == ren.rows[2].b_d2);

  const PairReport ts = full_report(a, b, alphas, kTsallis);
  CHECK_FALSE(ts.rows[0].b_t.has_value());
  CHECK(ts.rows[2].b_t.has_value());
  CHECK_FALSE(ts.rows[2].b_d1_high_alpha.has_value());

  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(ren.rows[i].b_d2 ==
          doctest::Approx(bound_direct_new(a, b, alphas[i], kRenyi)).epsilon(1e-14));
    CHECK(ts.rows[i].b_d1 ==
          doctest::Approx(bound_direct_prev(a, b, alphas[i], kTsallis)).epsilon(1e-14));
  }
  CHECK(mu_applies({0.5, kRenyi}));
  CHECK_FALSE(mu_applies({2.0, kRenyi}));
  CHECK(tensor_applies({0.5, kRenyi}));
  CHECK_FALSE(tensor_applies({0.5, kTsallis}));
}

TEST_CASE("errors") {
  // sum W^alpha + 1 - L = sqrt(3) - 2 < 0: not a vector any measurements yield
  const ProbVector lone({3.0}, 3.0);
  check_code([&] { multi_bound(lone, 3, 0.5, MultiFamily::Renyi); },
             ErrorCode::NonpositiveLogArgument);
  const ProbVector flat({1.0, 1.0}, 2.0);
  CHECK(direct_new_bound(flat, {0.5, kRenyi}) == doctest::Approx(0.0));

  const auto [a, b] = unsharp_qubit_pair(0.4, 1.0, 1.0);
  const Povm pair[] = {a, b};
  check_code([&] { bound_multi(pair, 2.0, MultiFamily::Renyi); },
             ErrorCode::UnsupportedRegime);
  check_code([&] { bound_direct_new(a, b, -1.0, kRenyi); },
             ErrorCode::AlphaOutOfRange);
}

TEST_CASE("multi-measurement reduction and sanity") {
  const auto [a, b] = unsharp_qubit_pair(0.9, 0.8, 0.6);
  const Povm pair[] = {a, b};
  CHECK(bound_multi(pair, 1.0, MultiFamily::Shannon) ==
        doctest::Approx(bound_direct_new(a, b, 1.0, kRenyi)).epsilon(1e-13));
  CHECK(bound_multi(pair, 0.5, MultiFamily::Renyi) ==
        doctest::Approx(bound_direct_new(a, b, 0.5, kRenyi)).epsilon(1e-13));
  CHECK(bound_multi(pair, 2.0, MultiFamily::Tsallis) ==
        doctest::Approx(bound_direct_new(a, b, 2.0, kTsallis)).epsilon(1e-13));

  const Povm three[] = {unsharp_qubit(0.0, 1.0),
                        unsharp_qubit(std::numbers::pi / 3, 1.0),
                        unsharp_qubit(2 * std::numbers::pi / 3, 1.0)};
  const double b3 = bound_multi(three, 1.0, MultiFamily::Shannon);
  CHECK(b3 > 0.0);
  const double sampled = [&] {
    double best = INFINITY;
    for (const auto& rho : sample_states(three, 10000, 9)) {
      double sum = 0.0;
      for (const auto& m : three) sum += shannon(outcome_probs(m, rho));
      best = std::min(best, sum);
    }
    return best;
  }();
  CHECK(b3 <= sampled + 1e-9);
}

TEST_CASE("bounds do not depend on outcome labels") {
  const auto [a, b] = unsharp_qubit_pair(0.6, 0.9, 0.5);
  const Povm a_swapped({a[1], a[0]});
  for (double alpha : {0.5, 1.0, 2.0}) {
    CHECK(bound_direct_new(a, b, alpha, kRenyi) ==
          doctest::Approx(bound_direct_new(b, a_swapped, alpha, kRenyi)).epsilon(1e-12));
    CHECK(bound_tensor(a, b, alpha) ==
          doctest::Approx(bound_tensor(a_swapped, b, alpha)).epsilon(1e-12));
  }
  CHECK(bound_mu(a, b) == doctest::Approx(bound_mu(b, a_swapped)).epsilon(1e-12));
}
