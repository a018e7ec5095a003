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

#ifndef LGTWP_LATTICE_HPP
#define LGTWP_LATTICE_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

namespace lgtwp {

using cplx = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

inline constexpr double kPi = 3.14159265358979323846;

enum class Group { Z2, U1 };

std::string_view to_string(Group g);
Group parse_group(std::string_view s);

struct LatticeSpec {
  Group group = Group::Z2;
  int n_sites = 6;
  double m_f = 1.0;
  double epsilon = -0.3;
  int cutoff = 1;  // U1 only

  // Throws std::invalid_argument on odd/non-positive N or U1 cutoff < 1.
  void validate() const;
  int charge() const { return n_sites / 2; }
  int link_dim() const { return group == Group::Z2 ? 2 : 2 * cutoff + 1; }
  int link_min() const { return group == Group::Z2 ? -1 : -cutoff; }
  int link_max() const { return group == Group::Z2 ? 1 : cutoff; }
  // (-1)^{Q+1}; +1 whenever N = 2 mod 4.
  int boundary_sign() const { return (charge() + 1) % 2 == 0 ? 1 : -1; }
  bool efficient_jw() const { return n_sites % 4 == 2; }
};

// Z2 links store the E eigenvalue (+1 / -1), U1 links store l in [-cutoff, cutoff].
struct BasisState {
  std::uint32_t occ = 0;  // bit n = occupation of staggered site n
  std::vector<int> links;

  bool occupied(int n) const { return (occ >> n) & 1u; }
  friend bool operator==(const BasisState&, const BasisState&) = default;
};

bool satisfies_gauss(const LatticeSpec& spec, const BasisState& s);
int fermion_number(const BasisState& s);

// Physical (Gauss law + Q = N/2) configurations in canonical order: fermion
// occupations read as a big-endian integer (site 0 most significant), then
// link values lexicographically.
class PhysicalBasis {
 public:
  explicit PhysicalBasis(LatticeSpec spec);

  const LatticeSpec& spec() const { return spec_; }
  std::size_t size() const { return states_.size(); }
  const BasisState& operator[](std::size_t i) const { return states_[i]; }
  const std::vector<BasisState>& states() const { return states_; }
  std::optional<std::size_t> index_of(const BasisState& s) const;

  // Strong-coupling vacuum: odd sites filled, every link in its lowest
  // electric state (E = +1 for Z2, l = 0 for U1).
  BasisState strong_coupling_vacuum() const;
  std::size_t vacuum_index() const;

  // Output label per canonical index. For the 6-site Z2 and U1 (cutoff 1)
  // lattices this follows the reference configuration tables; otherwise
  // labels equal canonical indices.
  int label(std::size_t i) const { return labels_[i]; }
  std::size_t index_of_label(int label) const { return by_label_[label]; }
  bool has_reference_labels() const { return reference_labels_; }

  std::uint64_t key(const BasisState& s) const;

 private:
  LatticeSpec spec_;
  std::vector<BasisState> states_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  std::vector<int> labels_;
  std::vector<std::size_t> by_label_;
  bool reference_labels_ = false;
};

PhysicalBasis enumerate_physical_basis(const LatticeSpec& spec);

// Staggered momentum k = 2 pi j / N restricted to [-pi/2, pi/2).
class Momentum {
 public:
  Momentum(int index, int n_sites);
  int index() const { return index_; }
  int n_sites() const { return n_sites_; }
  double value() const { return 2.0 * kPi * index_ / n_sites_; }
  Momentum operator-() const { return Momentum(-index_, n_sites_); }
  friend bool operator==(const Momentum&, const Momentum&) = default;

 private:
  int index_;
  int n_sites_;
};

std::vector<Momentum> brillouin_zone(int n_sites);
// Nearest zone momentum to a real value; throws if it is off the grid by > 1e-9.
Momentum momentum_from_value(double k, int n_sites);

// Qubit layout: f_n = 2n-th register, then b_n bits, optional ancilla last.
// Z2 links take one qubit (bit 0 <-> E = +1). U1 links take ceil(log2(2L+1))
// qubits holding l + L in binary.
class QubitLayout {
 public:
  QubitLayout(const LatticeSpec& spec, bool with_ancilla);

  int n_sites() const { return n_sites_; }
  int link_bits() const { return link_bits_; }
  int fermion(int n) const { return n * (1 + link_bits_); }
  int link(int n, int j = 0) const { return n * (1 + link_bits_) + 1 + j; }
  bool has_ancilla() const { return has_ancilla_; }
  int ancilla() const;
  int n_qubits() const { return n_sites_ * (1 + link_bits_) + (has_ancilla_ ? 1 : 0); }

  std::uint64_t encode(const BasisState& s) const;
  // Returns nullopt for bit patterns that are not valid link encodings.
  std::optional<BasisState> decode(std::uint64_t bits) const;
  std::string bitstring(std::uint64_t bits) const;  // qubit 0 first

 private:
  Group group_;
  int n_sites_;
  int cutoff_;
  int link_bits_;
  bool has_ancilla_;
};

}  // namespace lgtwp

#endif  // LGTWP_LATTICE_HPP
