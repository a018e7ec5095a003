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

#include "lgtwp/optimize.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include <limits>
#include <memory>
#include <stdexcept>

namespace lgtwp {

namespace {

struct Tracker {
  const Objective* f;
  int calls = 0;
  double best = std::numeric_limits<double>::infinity();
  std::vector<double> best_x;
};

double trampoline(const gsl_vector* v, void* params) {
  auto* t = static_cast<Tracker*>(params);
  std::span<const double> x(v->data, v->size);
  const double y = (*t->f)(x);
  ++t->calls;
  if (y < t->best) {
    t->best = y;
    t->best_x.assign(x.begin(), x.end());
  }
  return y;
}

struct VectorFree {
  void operator()(gsl_vector* v) const { gsl_vector_free(v); }
};
struct MinimizerFree {
  void operator()(gsl_multimin_fminimizer* m) const { gsl_multimin_fminimizer_free(m); }
};

}  // namespace

MinimizeResult simplex_minimize(const Objective& f, std::vector<double> x0,
                                std::vector<double> step, double size_tol, int budget) {
  if (x0.empty() || x0.size() != step.size()) throw std::invalid_argument("bad simplex setup");
  gsl_set_error_handler_off();
  const std::size_t n = x0.size();
  std::unique_ptr<gsl_vector, VectorFree> x(gsl_vector_alloc(n)), ss(gsl_vector_alloc(n));
  for (std::size_t i = 0; i < n; ++i) {
    gsl_vector_set(x.get(), i, x0[i]);
    gsl_vector_set(ss.get(), i, step[i]);
  }
  Tracker tracker{&f, 0, std::numeric_limits<double>::infinity(), x0};
  gsl_multimin_function fn{&trampoline, n, &tracker};
  std::unique_ptr<gsl_multimin_fminimizer, MinimizerFree> m(
      gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, n));
  gsl_multimin_fminimizer_set(m.get(), &fn, x.get(), ss.get());

  MinimizeResult r;
  while (tracker.calls < budget) {
    if (gsl_multimin_fminimizer_iterate(m.get()) != GSL_SUCCESS) break;
    if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(m.get()), size_tol) == GSL_SUCCESS) {
      r.converged = true;
      break;
    }
  }
  r.x = tracker.best_x;
  r.value = tracker.best;
  r.evaluations = tracker.calls;
  return r;
}

}  // namespace lgtwp
