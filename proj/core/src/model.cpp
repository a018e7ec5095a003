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

#include "lgtwp/model.hpp"

#include "lgtwp/spectra.hpp"

namespace lgtwp {

LatticeModel::LatticeModel(const LatticeSpec& spec)
    : basis_(spec), ops_(build_hamiltonian(spec)), t2_(translation_operator(basis_)) {
  const int d = static_cast<int>(basis_.size());
  h_ = Mat::Zero(d, d);
  for (const auto& hop : ops_.hopping) {
    hopping_.push_back(to_sparse(hop, basis_));
    h_ += Mat(hopping_.back());
  }
  mass_ = to_dense(ops_.mass_total(), basis_);
  electric_ = to_dense(ops_.electric_total(), basis_);
  h_ += mass_ + electric_;

  SpectrumResult s = diagonalize(h_);
  ground_energy_ = s.values(0);
  vacuum_ = s.vectors.col(0);
  const cplx a = vacuum_(static_cast<int>(basis_.vacuum_index()));
  if (std::abs(a) > 1e-14) vacuum_ *= std::conj(a) / std::abs(a);
}

Vec LatticeModel::strong_coupling_state() const {
  Vec v = Vec::Zero(static_cast<int>(dim()));
  v(static_cast<int>(basis_.vacuum_index())) = 1.0;
  return v;
}

}  // namespace lgtwp
