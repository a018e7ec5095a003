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

#ifndef LGTWP_HAMILTONIAN_HPP
#define LGTWP_HAMILTONIAN_HPP

#include <vector>

#include "lgtwp/operators.hpp"

namespace lgtwp {

// Hopping amplitude t in  t xi^dag_n U_n xi_{n+1} + h.c.
// Unitarily equivalent to a real 1/2; this phase makes the staggered
// plane-wave spinors exact free eigenmodes.
inline const cplx kHopping{0.0, -0.5};

struct Hamiltonian {
  std::vector<OperatorSum> hopping;  // one entry per link n (sites n, n+1)
  std::vector<OperatorSum> mass;     // one entry per site
  std::vector<OperatorSum> electric; // one entry per link

  OperatorSum hopping_total() const;
  OperatorSum mass_total() const;
  OperatorSum electric_total() const;
  OperatorSum total() const;
};

Hamiltonian build_hamiltonian(const LatticeSpec& spec);

// Jordan-Wigner image of xi^dag_m xi_n for m != n with the string on the
// given interior sites; includes (-1)^{Q+1} when `wraps` is set.
Term fermion_bilinear(const LatticeSpec& spec, int m, int n, const std::vector<int>& interior,
                      bool wraps);

// Two-site translation T2 as a signed permutation on the physical basis.
SparseMat translation_operator(const PhysicalBasis& basis);

// P_k = (2/N) sum_j e^{2ikj} T2^j.
Mat momentum_projector(const PhysicalBasis& basis, const SparseMat& t2, const Momentum& k);

}  // namespace lgtwp

#endif  // LGTWP_HAMILTONIAN_HPP
