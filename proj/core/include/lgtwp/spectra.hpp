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

#ifndef LGTWP_SPECTRA_HPP
#define LGTWP_SPECTRA_HPP

#include <optional>
#include <string_view>

#include "lgtwp/model.hpp"

namespace lgtwp {

struct SpectrumResult {
  Eigen::VectorXd values;  // ascending
  Mat vectors;             // columns, over the full physical basis
  std::optional<Momentum> sector;
};

// Dense Hermitian diagonalization. Within a degenerate cluster the vectors are
// rebuilt by projecting canonical basis states 0, 1, 2, ... onto the cluster
// and orthonormalizing, so the output does not depend on solver internals.
SpectrumResult diagonalize(const Mat& h);
// Restricts h to range(P_k) first.
SpectrumResult diagonalize(const LatticeModel& model, const Momentum& k);

struct SectorState {
  double energy = 0.0;
  Vec state;
};

// Lowest eigenstate of sector k with |<Omega|k>| < 1e-8.
SectorState momentum_eigenstate(const LatticeModel& model, const Momentum& k);

double fidelity(const Vec& a, const Vec& b);

// Weight of v on span{W|Omega>, W^dag|Omega>}, W = prod_n U_n.
double winding_weight(const LatticeModel& model, const Vec& v);
// Weight of v on span{M_{m,n}|Omega>}.
double meson_weight(const LatticeModel& model, const Vec& v);

// Lowest sector-k eigenstate orthogonal to Omega whose winding weight is
// below one half.
SectorState mesonic_eigenstate(const LatticeModel& model, const Momentum& k);

enum class Excitation { mesonic, non_mesonic, ambiguous };
std::string_view to_string(Excitation e);

struct Classification {
  Excitation kind = Excitation::mesonic;
  double winding = 0.0;
  double meson = 0.0;
  double energy = 0.0;
};

// Classifies the first excited k = 0 state: non_mesonic when its winding
// weight reaches one half.
Classification classify_k0_excitation(const LatticeModel& model);

}  // namespace lgtwp

#endif  // LGTWP_SPECTRA_HPP
