// Copyright 2026 The lgtwp Authors
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

#ifndef LGTWP_STATS_HPP
#define LGTWP_STATS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "lgtwp/simulate.hpp"

namespace lgtwp {

struct DensityProfile {
  std::vector<double> chi;
  std::vector<double> err;  // empty for exact states
};

// chi_n = <n_n> on even sites, 1 - <n_n> on odd sites.
DensityProfile staggered_density(const PhysicalBasis& basis, std::span<const double> probabilities);
DensityProfile staggered_density(const PhysicalBasis& basis, const Vec& psi);
// With per-label standard deviations propagated linearly into chi.
DensityProfile staggered_density(const PhysicalBasis& basis, std::span<const double> probabilities,
                                 std::span<const double> stddev);

std::vector<double> probabilities(const Vec& psi);

struct TruncMetrics {
  double fidelity = 0.0;
  double delta_e = 0.0;  // |E_trunc - E_exact| / |E_exact|
};
TruncMetrics trunc_metrics(const Vec& psi_trunc, const Vec& psi_exact, const Mat& h);

// sqrt(sum_i (a_i - b_i)^2 / len).
double rms_error(std::span<const double> a, std::span<const double> b);

struct BootstrapReport {
  std::size_t n_resamples = 0;
  std::size_t n_used = 0;  // resamples with at least one ancilla-1 event
  std::vector<double> mean;    // per canonical index
  std::vector<double> stddev;
  DensityProfile chi;          // mean chi, propagated errors
};

// Resamples the physical events with replacement. Resample r draws from its
// own stream seeded from (seed, r), so a run with fewer resamples is a prefix
// of a longer one and the result does not depend on the worker count.
BootstrapReport bootstrap(std::span<const PhysicalEvent> events, const PhysicalBasis& basis,
                          std::size_t n_resamples = 10000, std::uint64_t seed = 0, int jobs = 1);

// Second moment of chi about mu using the minimal periodic distance.
double positional_spread(std::span<const double> chi, double mu);

}  // namespace lgtwp

#endif  // LGTWP_STATS_HPP
