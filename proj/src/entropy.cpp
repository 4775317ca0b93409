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

#include "eur/entropy.hpp"

#include <cmath>
#include <sstream>

#include "eur/error.hpp"
#include "eur/matops.hpp"

namespace eur {

std::string_view to_string(EntropyFamily f) {
  return f == EntropyFamily::Renyi ? "renyi" : "tsallis";
}

bool EntropyOrder::is_shannon() const {
  return std::abs(alpha - 1.0) < kShannonAlphaWindow;
}

void require_valid_alpha(double alpha) {
  if (!std::isfinite(alpha) || alpha <= 0.0) {
    std::ostringstream os;
    os << "entropy order must be positive, got " << alpha;
    throw Error(ErrorCode::AlphaOutOfRange, os.str());
  }
}

namespace {

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

}  // namespace

double shannon(const ProbVector& p) {
  double h = 0.0;
  for (double x : p.values()) h -= xlogx(x);
  return h;
}

double power_sum(const ProbVector& p, double alpha) {
  double s = 0.0;
  for (double x : p.values()) {
    if (x > 0.0) s += std::pow(x, alpha);
  }
  return s;
}

double renyi(const ProbVector& p, double alpha) {
  require_valid_alpha(alpha);
  if (std::abs(alpha - 1.0) < kShannonAlphaWindow) return shannon(p);
  return std::log(power_sum(p, alpha)) / (1.0 - alpha);
}

double tsallis(const ProbVector& p, double alpha) {
  require_valid_alpha(alpha);
  if (std::abs(alpha - 1.0) < kShannonAlphaWindow) return shannon(p);
  return (power_sum(p, alpha) - 1.0) / (1.0 - alpha);
}

double entropy(const ProbVector& p, const EntropyOrder& order) {
  return order.family == EntropyFamily::Renyi ? renyi(p, order.alpha)
                                              : tsallis(p, order.alpha);
}

double device_uncertainty(const Povm& p) {
  double total = 0.0;
  for (const auto& e : p.elements()) {
    const Eigen::VectorXd ev = eigh(e).values;
    for (Eigen::Index i = 0; i < ev.size(); ++i) total -= xlogx(ev(i));
  }
  return total / static_cast<double>(p.dim());
}

}  // namespace eur
