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

#ifndef DPDENSE_MECHANISMS_H_
#define DPDENSE_MECHANISMS_H_

#include <cstdint>
#include <span>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "dpdense/random.h"

namespace dpdense {

struct PrivacyParams {
  double epsilon = 1.0;
  double delta = 1e-6;

  // epsilon > 0 and finite; 0 < delta < 1.
  absl::Status Validate() const;
};

// One draw from Laplace(0, scale) by inverting the CDF of a single uniform.
absl::StatusOr<double> SampleLaplace(double scale, RngStream& rng);

// Exponential mechanism: returns i with probability
// exp(coef * u_i) / sum_j exp(coef * u_j).
//
// Sampled as argmax_i (coef * u_i + G_i) with G_i i.i.d. standard Gumbel, so
// large coef * u never overflows. Ties go to the lowest index. One uniform is
// consumed per utility, in index order.
absl::StatusOr<size_t> ExpSelect(std::span<const double> utilities, double coef,
                                 RngStream& rng);

// Same, with the unnormalised log-probabilities given directly.
absl::StatusOr<size_t> ExpSelectLogWeights(std::span<const double> log_weights,
                                           RngStream& rng);

// Geometric on {1, 2, ...}: Pr[T = t] = (1 - p)^(t - 1) p, drawn as
// ceil(ln U / ln(1 - p)). Saturates at INT64_MAX.
absl::StatusOr<int64_t> SampleGeometric(double p, RngStream& rng);

// ln T for T ~ Geometric(exp(log_p)), without materialising T. Uses the same
// single uniform as SampleGeometric, so for equal streams
// SampleGeometricLog(ln p) == ln(SampleGeometric(p)) whenever T fits.
// Valid for any log_p <= 0, including values where exp(log_p) underflows.
absl::StatusOr<double> SampleGeometricLog(double log_p, RngStream& rng);

}  // namespace dpdense

#endif  // DPDENSE_MECHANISMS_H_
