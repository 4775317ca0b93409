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

#include "eur/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "eur/error.hpp"
#include "eur/matops.hpp"

namespace eur {

namespace {

double log_checked(double arg, const char* what) {
  if (!(arg > 0.0)) {
    std::ostringstream os;
    os << what << " log argument " << arg << " is not positive";
    throw Error(ErrorCode::NonpositiveLogArgument, os.str());
  }
  return std::log(arg);
}

bool near_one(double alpha) { return std::abs(alpha - 1.0) < kShannonAlphaWindow; }

}  // namespace

bool mu_applies(const EntropyOrder& order) {
  return order.alpha <= 1.0 + kShannonAlphaWindow;
}

bool tensor_applies(const EntropyOrder& order) {
  return order.family == EntropyFamily::Renyi ||
         order.alpha >= 1.0 - kShannonAlphaWindow;
}

double bound_mu(const Povm& a, const Povm& b) {
  double overlap = 0.0;
  std::vector<Eigen::MatrixXcd> rb;
  for (const auto& e : b.elements()) rb.push_back(psd_sqrt(e).matrix());
  for (const auto& ea : a.elements()) {
    const Eigen::MatrixXcd ra = psd_sqrt(ea).matrix();
    for (const auto& r : rb) overlap = std::max(overlap, spectral_norm(ra * r));
  }
  // + 0.0 turns -0.0 into 0.0 for compatible pairs.
  return -2.0 * log_checked(overlap, "Maassen-Uffink") + 0.0;
}

double tensor_bound(const ProbVector& wt, const EntropyOrder& order) {
  require_valid_alpha(order.alpha);
  if (!tensor_applies(order)) {
    throw Error(ErrorCode::UnsupportedRegime,
                "tensor-product Tsallis bound needs alpha >= 1");
  }
  return entropy(wt, order);
}

double direct_prev_bound(const ProbVector& wd, const EntropyOrder& order) {
  require_valid_alpha(order.alpha);
  if (order.family == EntropyFamily::Tsallis) return tsallis(wd, order.alpha);
  if (order.alpha <= 1.0 || near_one(order.alpha)) return renyi(wd, order.alpha);
  const double arg = 0.5 + 0.5 * power_sum(wd, order.alpha);
  return 2.0 / (1.0 - order.alpha) * log_checked(arg, "direct-sum (w_d)");
}

double multi_bound(const ProbVector& w, std::size_t measurements, double alpha,
                   MultiFamily family) {
  require_valid_alpha(alpha);
  const double l = static_cast<double>(measurements);
  if (family == MultiFamily::Shannon || near_one(alpha)) return shannon(w);
  if (family == MultiFamily::Tsallis) {
    return (power_sum(w, alpha) - l) / (1.0 - alpha);
  }
  if (alpha > 1.0) {
    throw Error(ErrorCode::UnsupportedRegime,
                "multi-measurement Renyi bound is only available for alpha < 1");
  }
  return log_checked(power_sum(w, alpha) + 1.0 - l, "direct-sum (W)") /
         (1.0 - alpha);
}

double direct_new_bound(const ProbVector& w, const EntropyOrder& order) {
  require_valid_alpha(order.alpha);
  if (order.family == EntropyFamily::Tsallis) {
    return multi_bound(w, 2, order.alpha, MultiFamily::Tsallis);
  }
  if (order.alpha <= 1.0 || near_one(order.alpha)) {
    return multi_bound(w, 2, order.alpha, MultiFamily::Renyi);
  }
  const double arg = 0.5 * power_sum(w, order.alpha);
  return 2.0 / (1.0 - order.alpha) * log_checked(arg, "direct-sum (W)");
}

double bound_tensor(const Povm& a, const Povm& b, double alpha) {
  return tensor_bound(majorizing_vectors(a, b).wt, {alpha, EntropyFamily::Renyi});
}

double bound_direct_prev(const Povm& a, const Povm& b, double alpha,
                         EntropyFamily family) {
  return direct_prev_bound(majorizing_vectors(a, b).wd(), {alpha, family});
}

double bound_direct_new(const Povm& a, const Povm& b, double alpha,
                        EntropyFamily family) {
  require_valid_alpha(alpha);
  const Povm pair[] = {a, b};
  return direct_new_bound(multi_majorizing_W(pair), {alpha, family});
}

double bound_multi(std::span<const Povm> povms, double alpha,
                   MultiFamily family) {
  require_valid_alpha(alpha);
  if (family == MultiFamily::Renyi && alpha > 1.0 && !near_one(alpha)) {
    throw Error(ErrorCode::UnsupportedRegime,
                "multi-measurement Renyi bound is only available for alpha < 1");
  }
  return multi_bound(multi_majorizing_W(povms), povms.size(), alpha, family);
}

PairReport full_report(const Povm& a, const Povm& b,
                       std::span<const double> alpha_grid,
                       EntropyFamily family) {
  PairReport report{majorizing_vectors(a, b), {}};
  const double mu = bound_mu(a, b);
  const ProbVector wd = report.vectors.wd();
  for (double alpha : alpha_grid) {
    const EntropyOrder order{alpha, family};
    require_valid_alpha(alpha);
    BoundReport row;
    row.alpha = alpha;
    row.family = family;
    row.b_mu = mu;
    if (tensor_applies(order)) row.b_t = tensor_bound(report.vectors.wt, order);
    row.b_d1 = direct_prev_bound(wd, order);
    row.b_d2 = direct_new_bound(report.vectors.W, order);
    if (family == EntropyFamily::Renyi && alpha > 1.0 && !near_one(alpha)) {
      row.b_d1_high_alpha = row.b_d1;
      row.b_d2_high_alpha = row.b_d2;
    }
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace eur
