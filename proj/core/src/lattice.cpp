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

#include "lgtwp/lattice.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace lgtwp {

std::string_view to_string(Group g) { return g == Group::Z2 ? "Z2" : "U1"; }

Group parse_group(std::string_view s) {
  if (s == "Z2" || s == "z2") return Group::Z2;
  if (s == "U1" || s == "u1") return Group::U1;
  throw std::invalid_argument("unknown gauge group: " + std::string(s));
}

void LatticeSpec::validate() const {
  if (n_sites <= 0 || n_sites % 2 != 0)
    throw std::invalid_argument("n_sites must be a positive even integer");
  if (n_sites > 16) throw std::invalid_argument("n_sites above 16 is not supported");
  if (group == Group::U1 && cutoff < 1) throw std::invalid_argument("U1 cutoff must be >= 1");
  if (m_f < 0) throw std::invalid_argument("m_f must be non-negative");
}

int fermion_number(const BasisState& s) { return std::popcount(s.occ); }

bool satisfies_gauss(const LatticeSpec& spec, const BasisState& s) {
  const int n_sites = spec.n_sites;
  if (static_cast<int>(s.links.size()) != n_sites) return false;
  for (int n = 0; n < n_sites; ++n) {
    const int e = s.links[n];
    const int e_prev = s.links[(n + n_sites - 1) % n_sites];
    const int q = (s.occupied(n) ? 1 : 0) - (n % 2);
    if (spec.group == Group::Z2) {
      if (e * e != 1) return false;
      if (e * e_prev * (q % 2 == 0 ? 1 : -1) != 1) return false;
    } else {
      if (e < -spec.cutoff || e > spec.cutoff) return false;
      if (e - e_prev + q != 0) return false;
    }
  }
  return true;
}

namespace {

constexpr int kZ2Table[40][12] = {
    {0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0},
    {1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0},
    {0, 0, 0, 1, 1, 0, 1, 0, 0, 0, 1, 0},
    {0, 0, 1, 0, 1, 1, 0, 0, 0, 0, 1, 0},
    {1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0},
    {1, 1, 1, 1, 0, 1, 0, 0, 0, 0, 1, 0},
    {0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 1, 0},
    {1, 1, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0},
    {0, 0, 0, 1, 1, 0, 0, 1, 1, 0, 1, 0},
    {0, 0, 0, 1, 0, 1, 1, 1, 1, 0, 1, 0},
    {0, 0, 1, 0, 0, 0, 1, 0, 1, 1, 0, 0},
    {1, 1, 0, 0, 0, 0, 1, 0, 1, 1, 0, 0},
    {0, 0, 0, 1, 1, 0, 1, 0, 1, 1, 0, 0},
    {0, 0, 1, 0, 1, 1, 0, 0, 1, 1, 0, 0},
    {1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0},
    {1, 1, 1, 1, 0, 1, 0, 0, 1, 1, 0, 0},
    {1, 1, 1, 1, 1, 0, 0, 1, 0, 1, 0, 0},
    {0, 0, 1, 0, 1, 1, 1, 1, 0, 1, 0, 0},
    {1, 1, 0, 0, 1, 1, 1, 1, 0, 1, 0, 0},
    {1, 1, 1, 1, 0, 1, 1, 1, 0, 1, 0, 0},
    {1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1},
    {1, 0, 0, 1, 1, 0, 1, 0, 0, 0, 0, 1},
    {0, 1, 1, 1, 1, 0, 1, 0, 0, 0, 0, 1},
    {1, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 1},
    {1, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 1},
    {1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1},
    {0, 1, 1, 1, 1, 0, 0, 1, 1, 0, 0, 1},
    {0, 1, 0, 0, 1, 1, 1, 1, 1, 0, 0, 1},
    {1, 0, 0, 1, 0, 1, 1, 1, 1, 0, 0, 1},
    {0, 1, 1, 1, 0, 1, 1, 1, 1, 0, 0, 1},
    {0, 1, 0, 0, 0, 0, 1, 0, 1, 1, 1, 1},
    {0, 1, 0, 0, 1, 1, 0, 0, 1, 1, 1, 1},
    {1, 0, 0, 1, 0, 1, 0, 0, 1, 1, 1, 1},
    {0, 1, 1, 1, 0, 1, 0, 0, 1, 1, 1, 1},
    {1, 0, 1, 0, 0, 0, 0, 1, 0, 1, 1, 1},
    {1, 0, 0, 1, 1, 0, 0, 1, 0, 1, 1, 1},
    {0, 1, 1, 1, 1, 0, 0, 1, 0, 1, 1, 1},
    {0, 1, 0, 0, 1, 1, 1, 1, 0, 1, 1, 1},
    {1, 0, 0, 1, 0, 1, 1, 1, 0, 1, 1, 1},
    {0, 1, 1, 1, 0, 1, 1, 1, 0, 1, 1, 1}};

constexpr int kU1Table[38][12] = {
    {1, 0, 1, 0, 1, -1, 0, 0, 0, 0, 0, 1},
    {1, -1, 1, -1, 0, -1, 1, -1, 0, -1, 0, 0},
    {1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1},
    {1, -1, 0, 0, 1, -1, 1, -1, 0, -1, 0, 0},
    {1, 0, 0, 1, 1, 0, 1, 0, 0, 0, 0, 1},
    {0, 0, 1, 0, 1, -1, 1, -1, 0, -1, 0, 0},
    {0, 1, 1, 1, 1, 0, 1, 0, 0, 0, 0, 1},
    {1, -1, 1, -1, 0, -1, 0, 0, 1, -1, 0, 0},
    {1, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 1},
    {1, -1, 0, 0, 1, -1, 0, 0, 1, -1, 0, 0},
    {1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1},
    {0, 0, 1, 0, 1, -1, 0, 0, 1, -1, 0, 0},
    {0, 1, 1, 1, 1, 0, 0, 1, 1, 0, 0, 1},
    {1, -1, 0, 0, 0, 0, 1, 0, 1, -1, 0, 0},
    {1, 0, 0, 1, 0, 1, 1, 1, 1, 0, 0, 1},
    {0, 0, 1, 0, 0, 0, 1, 0, 1, -1, 0, 0},
    {0, 1, 1, 1, 0, 1, 1, 1, 1, 0, 0, 1},
    {0, 0, 0, 1, 1, 0, 1, 0, 1, -1, 0, 0},
    {1, -1, 1, -1, 0, -1, 0, 0, 0, 0, 1, 0},
    {1, 0, 1, 0, 0, 0, 0, 1, 0, 1, 1, 1},
    {1, -1, 0, 0, 1, -1, 0, 0, 0, 0, 1, 0},
    {1, 0, 0, 1, 1, 0, 0, 1, 0, 1, 1, 1},
    {0, 0, 1, 0, 1, -1, 0, 0, 0, 0, 1, 0},
    {0, 1, 1, 1, 1, 0, 0, 1, 0, 1, 1, 1},
    {1, -1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0},
    {1, 0, 0, 1, 0, 1, 1, 1, 0, 1, 1, 1},
    {0, -1, 1, -1, 0, -1, 1, -1, 0, -1, 1, -1},
    {0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0},
    {0, 1, 1, 1, 0, 1, 1, 1, 0, 1, 1, 1},
    {0, -1, 0, 0, 1, -1, 1, -1, 0, -1, 1, -1},
    {0, 0, 0, 1, 1, 0, 1, 0, 0, 0, 1, 0},
    {1, -1, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0},
    {0, -1, 1, -1, 0, -1, 0, 0, 1, -1, 1, -1},
    {0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 1, 0},
    {0, -1, 0, 0, 1, -1, 0, 0, 1, -1, 1, -1},
    {0, 0, 0, 1, 1, 0, 0, 1, 1, 0, 1, 0},
    {0, -1, 0, 0, 0, 0, 1, 0, 1, -1, 1, -1},
    {0, 0, 0, 1, 0, 1, 1, 1, 1, 0, 1, 0}};

template <std::size_t Rows>
BasisState row_state(const int (&table)[Rows][12], std::size_t r, Group group) {
  BasisState s;
  s.links.resize(6);
  for (int n = 0; n < 6; ++n) {
    if (table[r][2 * n]) s.occ |= 1u << n;
    const int b = table[r][2 * n + 1];
    s.links[n] = group == Group::Z2 ? 1 - 2 * b : b;
  }
  return s;
}

std::uint32_t big_endian_occ(std::uint32_t occ, int n_sites) {
  std::uint32_t out = 0;
  for (int n = 0; n < n_sites; ++n)
    if ((occ >> n) & 1u) out |= 1u << (n_sites - 1 - n);
  return out;
}

}  // namespace

PhysicalBasis::PhysicalBasis(LatticeSpec spec) : spec_(spec) {
  spec_.validate();
  const int n_sites = spec_.n_sites;
  std::vector<int> start_values;
  if (spec_.group == Group::Z2) {
    start_values = {1, -1};
  } else {
    for (int l = -spec_.cutoff; l <= spec_.cutoff; ++l) start_values.push_back(l);
  }
  for (std::uint32_t occ = 0; occ < (1u << n_sites); ++occ) {
    if (std::popcount(occ) != spec_.charge()) continue;
    for (int last : start_values) {
      BasisState s{occ, std::vector<int>(n_sites)};
      int prev = last;
      bool ok = true;
      for (int n = 0; n < n_sites && ok; ++n) {
        const int q = (s.occupied(n) ? 1 : 0) - (n % 2);
        int e = 0;
        if (spec_.group == Group::Z2) {
          e = q % 2 == 0 ? prev : -prev;
        } else {
          e = prev - q;
          ok = e >= -spec_.cutoff && e <= spec_.cutoff;
        }
        s.links[n] = e;
        prev = e;
      }
      if (ok && prev == last) states_.push_back(std::move(s));
    }
  }
  std::sort(states_.begin(), states_.end(), [n_sites](const BasisState& a, const BasisState& b) {
    const auto ka = big_endian_occ(a.occ, n_sites), kb = big_endian_occ(b.occ, n_sites);
    if (ka != kb) return ka < kb;
    return a.links < b.links;
  });
  for (std::size_t i = 0; i < states_.size(); ++i) index_.emplace(key(states_[i]), i);

  labels_.resize(states_.size());
  for (std::size_t i = 0; i < states_.size(); ++i) labels_[i] = static_cast<int>(i);
  auto apply_table = [&]<std::size_t Rows>(const int (&table)[Rows][12]) {
    if (Rows != states_.size()) return;
    std::vector<int> labels(states_.size(), -1);
    for (std::size_t r = 0; r < Rows; ++r) {
      auto idx = index_of(row_state(table, r, spec_.group));
      if (!idx || labels[*idx] != -1) return;
      labels[*idx] = static_cast<int>(r);
    }
    labels_ = std::move(labels);
    reference_labels_ = true;
  };
  if (n_sites == 6 && spec_.group == Group::Z2) apply_table(kZ2Table);
  if (n_sites == 6 && spec_.group == Group::U1 && spec_.cutoff == 1) apply_table(kU1Table);
  by_label_.resize(states_.size());
  for (std::size_t i = 0; i < states_.size(); ++i) by_label_[labels_[i]] = i;
}

std::uint64_t PhysicalBasis::key(const BasisState& s) const {
  std::uint64_t k = 0;
  const int d = spec_.link_dim();
  for (int n = spec_.n_sites - 1; n >= 0; --n) {
    const int v = spec_.group == Group::Z2 ? (1 - s.links[n]) / 2 : s.links[n] + spec_.cutoff;
    k = k * d + static_cast<std::uint64_t>(v);
  }
  return (k << spec_.n_sites) | s.occ;
}

std::optional<std::size_t> PhysicalBasis::index_of(const BasisState& s) const {
  if (static_cast<int>(s.links.size()) != spec_.n_sites) return std::nullopt;
  for (int v : s.links)
    if (v < spec_.link_min() || v > spec_.link_max()) return std::nullopt;
  auto it = index_.find(key(s));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

BasisState PhysicalBasis::strong_coupling_vacuum() const {
  BasisState s;
  for (int n = 1; n < spec_.n_sites; n += 2) s.occ |= 1u << n;
  s.links.assign(spec_.n_sites, spec_.group == Group::Z2 ? 1 : 0);
  return s;
}

std::size_t PhysicalBasis::vacuum_index() const { return *index_of(strong_coupling_vacuum()); }

PhysicalBasis enumerate_physical_basis(const LatticeSpec& spec) { return PhysicalBasis(spec); }

Momentum::Momentum(int index, int n_sites) : index_(index), n_sites_(n_sites) {
  if (4 * index < -n_sites || 4 * index >= n_sites)
    throw std::invalid_argument("momentum index outside the reduced zone");
}

std::vector<Momentum> brillouin_zone(int n_sites) {
  std::vector<Momentum> out;
  for (int j = -n_sites; j <= n_sites; ++j)
    if (4 * j >= -n_sites && 4 * j < n_sites) out.emplace_back(j, n_sites);
  return out;
}

Momentum momentum_from_value(double k, int n_sites) {
  const double j = k * n_sites / (2.0 * kPi);
  const double r = std::round(j);
  if (std::abs(j - r) > 1e-9 * std::max(1.0, std::abs(j)))
    throw std::invalid_argument("momentum is not on the 2pi/N grid");
  return Momentum(static_cast<int>(r), n_sites);
}

QubitLayout::QubitLayout(const LatticeSpec& spec, bool with_ancilla)
    : group_(spec.group), n_sites_(spec.n_sites), cutoff_(spec.cutoff), has_ancilla_(with_ancilla) {
  if (group_ == Group::Z2) {
    link_bits_ = 1;
  } else {
    link_bits_ = 0;
    while ((1 << link_bits_) < 2 * cutoff_ + 1) ++link_bits_;
  }
}

int QubitLayout::ancilla() const {
  if (!has_ancilla_) throw std::logic_error("layout has no ancilla");
  return n_sites_ * (1 + link_bits_);
}

std::uint64_t QubitLayout::encode(const BasisState& s) const {
  std::uint64_t bits = 0;
  for (int n = 0; n < n_sites_; ++n) {
    if (s.occupied(n)) bits |= 1ull << fermion(n);
    const int v = group_ == Group::Z2 ? (1 - s.links[n]) / 2 : s.links[n] + cutoff_;
    for (int j = 0; j < link_bits_; ++j)
      if ((v >> j) & 1) bits |= 1ull << link(n, j);
  }
  return bits;
}

std::optional<BasisState> QubitLayout::decode(std::uint64_t bits) const {
  BasisState s;
  s.links.resize(n_sites_);
  for (int n = 0; n < n_sites_; ++n) {
    if ((bits >> fermion(n)) & 1ull) s.occ |= 1u << n;
    int v = 0;
    for (int j = 0; j < link_bits_; ++j) v |= static_cast<int>((bits >> link(n, j)) & 1ull) << j;
    if (group_ == Group::Z2) {
      s.links[n] = 1 - 2 * v;
    } else {
      if (v > 2 * cutoff_) return std::nullopt;
      s.links[n] = v - cutoff_;
    }
  }
  return s;
}

std::string QubitLayout::bitstring(std::uint64_t bits) const {
  std::string out(n_qubits(), '0');
  for (int q = 0; q < n_qubits(); ++q)
    if ((bits >> q) & 1ull) out[q] = '1';
  return out;
}

}  // namespace lgtwp
