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

#include "lgtwp/hamiltonian.hpp"

#include <bit>

namespace lgtwp {

namespace {

OperatorSum sum_of(const std::vector<OperatorSum>& parts) {
  OperatorSum out;
  for (const auto& p : parts) out += p;
  return out;
}

}  // namespace

OperatorSum Hamiltonian::hopping_total() const { return sum_of(hopping); }
OperatorSum Hamiltonian::mass_total() const { return sum_of(mass); }
OperatorSum Hamiltonian::electric_total() const { return sum_of(electric); }
OperatorSum Hamiltonian::total() const {
  return hopping_total() + mass_total() + electric_total();
}

Term fermion_bilinear(const LatticeSpec& spec, int m, int n, const std::vector<int>& interior,
                      bool wraps) {
  Term t{wraps ? static_cast<double>(spec.boundary_sign()) : 1.0, {}};
  t.factors.push_back(fermion(m, FermionOp::Raise));
  for (int j : interior) t.factors.push_back(fermion(j, FermionOp::Z));
  t.factors.push_back(fermion(n, FermionOp::Lower));
  return t;
}

Hamiltonian build_hamiltonian(const LatticeSpec& spec) {
  spec.validate();
  const int n_sites = spec.n_sites;
  Hamiltonian h;
  for (int n = 0; n < n_sites; ++n) {
    const int next = (n + 1) % n_sites;
    const bool wraps = next == 0;
    // xi^dag_n U_n xi_{n+1}: the fermion moves down one site, the link lowers.
    Term fwd = fermion_bilinear(spec, n, next, {}, wraps);
    fwd.coeff *= kHopping;
    fwd.factors.insert(fwd.factors.begin() + 1, link(n, LinkOp::Lower));
    OperatorSum hop(fwd);
    hop += hop.adjoint();
    h.hopping.push_back(std::move(hop));

    const double stagger = n % 2 ? -1.0 : 1.0;
    h.mass.emplace_back(Term{spec.m_f * stagger, {fermion(n, FermionOp::Number)}});
    h.electric.emplace_back(
        Term{spec.epsilon, {link(n, spec.group == Group::Z2 ? LinkOp::E : LinkOp::E2)}});
  }
  return h;
}

SparseMat translation_operator(const PhysicalBasis& basis) {
  const LatticeSpec& spec = basis.spec();
  const int n_sites = spec.n_sites;
  const int q = spec.charge();
  std::vector<Eigen::Triplet<cplx>> trips;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const BasisState& s = basis[i];
    BasisState t;
    t.links.resize(n_sites);
    for (int n = 0; n < n_sites; ++n) {
      const int to = (n + 2) % n_sites;
      if (s.occupied(n)) t.occ |= 1u << to;
      t.links[to] = s.links[n];
    }
    // Fermions on the last two sites wrap past the other Q - w creators.
    const int w = std::popcount(s.occ >> (n_sites - 2));
    const double sign = (w * (q - w)) % 2 ? -1.0 : 1.0;
    trips.emplace_back(static_cast<int>(*basis.index_of(t)), static_cast<int>(i), sign);
  }
  const int d = static_cast<int>(basis.size());
  SparseMat m(d, d);
  m.setFromTriplets(trips.begin(), trips.end());
  return m;
}

Mat momentum_projector(const PhysicalBasis& basis, const SparseMat& t2, const Momentum& k) {
  const int d = static_cast<int>(basis.size());
  const int n_sites = basis.spec().n_sites;
  if (k.n_sites() != n_sites) throw std::invalid_argument("momentum grid does not match lattice");
  Mat p = Mat::Zero(d, d);
  Mat power = Mat::Identity(d, d);
  for (int j = 0; j < n_sites / 2; ++j) {
    p += std::polar(1.0, 2.0 * k.value() * j) * power;
    power = t2 * power;
  }
  return p * (2.0 / n_sites);
}

}  // namespace lgtwp
