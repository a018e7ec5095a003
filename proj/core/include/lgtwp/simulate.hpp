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

#ifndef LGTWP_SIMULATE_HPP
#define LGTWP_SIMULATE_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "lgtwp/circuit.hpp"

namespace lgtwp {

class StateVector {
 public:
  explicit StateVector(int n_qubits);  // |0...0>
  static StateVector from_physical(const QubitLayout& layout, const PhysicalBasis& basis,
                                   const Vec& psi, int ancilla_bit = 0);

  int n_qubits() const { return n_qubits_; }
  const std::vector<cplx>& amplitudes() const { return amps_; }
  cplx operator[](std::uint64_t i) const { return amps_[i]; }
  double norm() const;

  void apply(const Gate& g);
  // Physical-basis amplitudes at the given ancilla value (ignored without one).
  Vec physical(const QubitLayout& layout, const PhysicalBasis& basis, int ancilla_bit = 0) const;
  // Probability outside (physical space) x (ancilla).
  double leakage(const QubitLayout& layout, const PhysicalBasis& basis) const;

 private:
  int n_qubits_;
  std::vector<cplx> amps_;
};

StateVector run(const Circuit& circuit, StateVector state);

// Post-selects ancilla = 1 and renormalizes; returns the physical-basis state
// and the post-selection probability.
struct PostSelected {
  Vec state;
  double probability = 0.0;
};
PostSelected post_select_ancilla(const StateVector& s, const QubitLayout& layout,
                                 const PhysicalBasis& basis);

struct ShotRecord {
  int n_qubits = 0;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> outcomes;  // bit q = qubit q
  std::size_t n_shots() const { return outcomes.size(); }
};

ShotRecord sample(const StateVector& state, std::size_t n_shots, std::uint64_t seed);

// Each gate is followed, with probability p_1q (p_2q for CX), by a uniformly
// random non-identity Pauli on its operands. One noisy trajectory per shot.
ShotRecord depolarized_sample(const Circuit& circuit, const StateVector& initial, double p_1q,
                              double p_2q, std::size_t n_shots, std::uint64_t seed);

// Flips each measured bit independently with probability p (readout-style
// noise used to exercise mitigation).
ShotRecord flip_bits(const ShotRecord& r, double p, std::uint64_t seed);

struct PhysicalEvent {
  std::size_t index = 0;  // canonical physical index
  int ancilla = 1;
};

struct MitigatedResult {
  std::vector<double> probabilities;  // canonical order, sums to 1
  std::vector<PhysicalEvent> events;  // every Gauss-respecting shot
  std::size_t n_shots = 0;
  std::size_t n_physical = 0;
  std::size_t n_ancilla1 = 0;
};

// Drops Gauss-violating and ancilla-0 shots and renormalizes the rest.
MitigatedResult mitigate(const ShotRecord& r, const PhysicalBasis& basis, const QubitLayout& layout);

}  // namespace lgtwp

#endif  // LGTWP_SIMULATE_HPP
