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

#ifndef EUR_ENTROPY_HPP
#define EUR_ENTROPY_HPP

#include <string_view>

#include "eur/majorize.hpp"
#include "eur/povm.hpp"

namespace eur {

enum class EntropyFamily { Renyi, Tsallis };

std::string_view to_string(EntropyFamily f);

/// Orders within this distance of 1 use the Shannon formula.
inline constexpr double kShannonAlphaWindow = 1e-9;

struct EntropyOrder {
  double alpha = 1.0;
  EntropyFamily family = EntropyFamily::Renyi;

  bool is_shannon() const;
};

/// Throws AlphaOutOfRange unless alpha is finite and positive.
void require_valid_alpha(double alpha);

// All entropies are in nats. Zero entries contribute nothing. Vectors of mass
// other than one are accepted since several bounds evaluate these sums on
// mass-2 majorizing vectors.

double shannon(const ProbVector& p);
double renyi(const ProbVector& p, double alpha);
double tsallis(const ProbVector& p, double alpha);
double entropy(const ProbVector& p, const EntropyOrder& order);

/// sum_i p_i^alpha over the nonzero entries.
double power_sum(const ProbVector& p, double alpha);

/// -(1/d) sum_i Tr[F_i ln F_i], computed from the spectrum of each element.
double device_uncertainty(const Povm& p);

inline constexpr double kLn2 = 0.69314718055994530942;
inline double nats_to_bits(double nats) { return nats / kLn2; }

}  // namespace eur

#endif  // EUR_ENTROPY_HPP
