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

#ifndef LGTWP_OPTIMIZE_HPP
#define LGTWP_OPTIMIZE_HPP

#include <functional>
#include <span>
#include <vector>

namespace lgtwp {

using Objective = std::function<double(std::span<const double>)>;

struct MinimizeResult {
  std::vector<double> x;
  double value = 0.0;
  int evaluations = 0;
  bool converged = false;
};

// Derivative-free simplex refinement (GSL nmsimplex2). Stops when the
// simplex characteristic size drops below `size_tol` or after `budget`
// objective evaluations; the best point seen is returned either way.
MinimizeResult simplex_minimize(const Objective& f, std::vector<double> x0,
                                std::vector<double> step, double size_tol, int budget);

}  // namespace lgtwp

#endif  // LGTWP_OPTIMIZE_HPP
