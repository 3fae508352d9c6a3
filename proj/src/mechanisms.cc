// Copyright 2026 The dpdense Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dpdense/mechanisms.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"

namespace dpdense {
namespace {

constexpr double kTwoPow53 = 9007199254740992.0;

double StandardGumbel(RngStream& rng) {
  return -std::log(-std::log(rng.NextUniform()));
}

// x = ln U / ln(1 - p) > 0, as ln x. For p below the smallest normal double,
// -ln(1 - p) == p to full precision, so ln(-ln(1 - p)) is just log_p.
double LogRaceTime(double log_p, double uniform) {
  const double log_neg_log_u = std::log(-std::log(uniform));
  double log_rate;
  if (log_p > -700.0) {
    log_rate = std::log(-std::log1p(-std::exp(log_p)));
  } else {
    log_rate = log_p;
  }
  return log_neg_log_u - log_rate;
}

}  // namespace

absl::Status PrivacyParams::Validate() const {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    return absl::InvalidArgumentError(
        absl::StrCat("epsilon must be positive and finite, got ", epsilon));
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("delta must lie in (0, 1), got ", delta));
  }
  return absl::OkStatus();
}

absl::StatusOr<double> SampleLaplace(double scale, RngStream& rng) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    return absl::InvalidArgumentError(
        absl::StrCat("Laplace scale must be positive, got ", scale));
  }
  const double centered = rng.NextUniform() - 0.5;
  const double magnitude = -scale * std::log1p(-2.0 * std::fabs(centered));
  return centered < 0.0 ? -magnitude : magnitude;
}

absl::StatusOr<size_t> ExpSelectLogWeights(std::span<const double> log_weights,
                                           RngStream& rng) {
  if (log_weights.empty()) {
    return absl::InvalidArgumentError("exponential mechanism over no options");
  }
  size_t best = 0;
  double best_score = -std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < log_weights.size(); ++i) {
    if (std::isnan(log_weights[i])) {
      return absl::InvalidArgumentError(absl::StrCat("utility ", i, " is NaN"));
    }
    const double score = log_weights[i] + StandardGumbel(rng);
    if (score > best_score) {
      best_score = score;
      best = i;
    }
  }
  return best;
}

absl::StatusOr<size_t> ExpSelect(std::span<const double> utilities, double coef,
                                 RngStream& rng) {
  if (std::isnan(coef)) return absl::InvalidArgumentError("coef is NaN");
  std::vector<double> log_weights(utilities.size());
  for (size_t i = 0; i < utilities.size(); ++i) {
    if (!std::isfinite(utilities[i])) {
      return absl::InvalidArgumentError(
          absl::StrCat("utility ", i, " is not finite"));
    }
    log_weights[i] = coef * utilities[i];
  }
  return ExpSelectLogWeights(log_weights, rng);
}

absl::StatusOr<int64_t> SampleGeometric(double p, RngStream& rng) {
  if (!(p > 0.0 && p <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("geometric p must be in (0, 1], got ", p));
  }
  const double uniform = rng.NextUniform();
  if (p == 1.0) return 1;
  const double x = std::log(uniform) / std::log1p(-p);
  if (!(x < 9.2e18)) return std::numeric_limits<int64_t>::max();
  return std::max<int64_t>(1, static_cast<int64_t>(std::ceil(x)));
}

absl::StatusOr<double> SampleGeometricLog(double log_p, RngStream& rng) {
  if (!(log_p <= 0.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("geometric log_p must be <= 0, got ", log_p));
  }
  const double uniform = rng.NextUniform();
  if (log_p == 0.0) return 0.0;
  if (log_p > -700.0) {
    const double x = std::log(uniform) / std::log1p(-std::exp(log_p));
    if (x < kTwoPow53) {
      return std::log(std::max(1.0, std::ceil(x)));
    }
  }
  // Beyond 2^53 the ceiling no longer changes the value.
  return LogRaceTime(log_p, uniform);
}

}  // namespace dpdense
