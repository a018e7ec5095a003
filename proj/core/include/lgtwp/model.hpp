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

#ifndef LGTWP_MODEL_HPP
#define LGTWP_MODEL_HPP

#include <vector>

#include "lgtwp/hamiltonian.hpp"

namespace lgtwp {

// Everything derived from a LatticeSpec that downstream stages share:
// physical basis, Hamiltonian pieces as dense/sparse matrices, T2 and the
// exact interacting vacuum. Immutable after construction.
class LatticeModel {
 public:
  explicit LatticeModel(const LatticeSpec& spec);

  const LatticeSpec& spec() const { return basis_.spec(); }
  const PhysicalBasis& basis() const { return basis_; }
  const Hamiltonian& hamiltonian() const { return ops_; }
  std::size_t dim() const { return basis_.size(); }

  const Mat& h() const { return h_; }
  const std::vector<SparseMat>& hopping() const { return hopping_; }
  const Mat& mass() const { return mass_; }
  const Mat& electric() const { return electric_; }
  const SparseMat& translation() const { return t2_; }
  std::vector<Momentum> zone() const { return brillouin_zone(spec().n_sites); }
  Mat projector(const Momentum& k) const { return momentum_projector(basis_, t2_, k); }

  // Exact ground state, phased so its strong-coupling-vacuum amplitude is real
  // and positive.
  const Vec& vacuum() const { return vacuum_; }
  double ground_energy() const { return ground_energy_; }
  Vec strong_coupling_state() const;

  double energy(const Vec& psi) const { return psi.dot(h_ * psi).real(); }

 private:
  PhysicalBasis basis_;
  Hamiltonian ops_;
  Mat h_;
  std::vector<SparseMat> hopping_;
  Mat mass_;
  Mat electric_;
  SparseMat t2_;
  Vec vacuum_;
  double ground_energy_ = 0.0;
};

}  // namespace lgtwp

#endif  // LGTWP_MODEL_HPP
