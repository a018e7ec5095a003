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

#include "lgtwp/simulate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace lgtwp {

namespace {

using Mat2 = std::array<cplx, 4>;  // row major

Mat2 matrix_of(const Gate& g) {
  const double h = 0.5 * g.angle;
  const cplx i(0, 1);
  switch (g.kind) {
    case GateKind::H: {
      const double r = 1.0 / std::sqrt(2.0);
      return {r, r, r, -r};
    }
    case GateKind::X: return {0.0, 1.0, 1.0, 0.0};
    case GateKind::Rz: return {std::exp(-i * h), 0.0, 0.0, std::exp(i * h)};
    case GateKind::Rx: return {std::cos(h), -i * std::sin(h), -i * std::sin(h), std::cos(h)};
    case GateKind::Ry: return {std::cos(h), -std::sin(h), std::sin(h), std::cos(h)};
    case GateKind::Phase: return {1.0, 0.0, 0.0, std::exp(i * g.angle)};
    case GateKind::CX: break;
  }
  throw std::logic_error("no 2x2 matrix for CX");
}

void apply_pauli(StateVector& s, int q, int which) {
  // which: 1 = X, 2 = Y, 3 = Z
  if (which == 1) {
    s.apply({GateKind::X, q, -1, 0.0});
  } else if (which == 2) {
    s.apply({GateKind::Ry, q, -1, kPi});  // Y up to a global phase
  } else {
    s.apply({GateKind::Rz, q, -1, kPi});  // Z up to a global phase
  }
}

}  // namespace

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > 26) throw std::invalid_argument("unsupported qubit count");
  amps_.assign(std::size_t{1} << n_qubits, cplx(0.0));
  amps_[0] = 1.0;
}

StateVector StateVector::from_physical(const QubitLayout& layout, const PhysicalBasis& basis,
                                       const Vec& psi, int ancilla_bit) {
  if (psi.size() != static_cast<int>(basis.size())) throw std::invalid_argument("dimension mismatch");
  StateVector s(layout.n_qubits());
  s.amps_[0] = 0.0;
  const std::uint64_t anc = layout.has_ancilla() && ancilla_bit ? 1ull << layout.ancilla() : 0;
  for (std::size_t i = 0; i < basis.size(); ++i) s.amps_[layout.encode(basis[i]) | anc] = psi(static_cast<int>(i));
  return s;
}

double StateVector::norm() const {
  double acc = 0.0;
  for (const auto& a : amps_) acc += std::norm(a);
  return std::sqrt(acc);
}

void StateVector::apply(const Gate& g) {
  const std::size_t dim = amps_.size();
  if (g.q0 < 0 || g.q0 >= n_qubits_) throw std::out_of_range("gate qubit");
  if (g.kind == GateKind::CX) {
    if (g.q1 < 0 || g.q1 >= n_qubits_) throw std::out_of_range("gate qubit");
    const std::size_t c = std::size_t{1} << g.q0, t = std::size_t{1} << g.q1;
    for (std::size_t i = 0; i < dim; ++i)
      if ((i & c) && !(i & t)) std::swap(amps_[i], amps_[i | t]);
    return;
  }
  const Mat2 m = matrix_of(g);
  const std::size_t bit = std::size_t{1} << g.q0;
  for (std::size_t i = 0; i < dim; ++i) {
    if (i & bit) continue;
    const cplx a0 = amps_[i], a1 = amps_[i | bit];
    amps_[i] = m[0] * a0 + m[1] * a1;
    amps_[i | bit] = m[2] * a0 + m[3] * a1;
  }
}

Vec StateVector::physical(const QubitLayout& layout, const PhysicalBasis& basis, int ancilla_bit) const {
  if (layout.n_qubits() != n_qubits_) throw std::invalid_argument("layout does not match state");
  const std::uint64_t anc = layout.has_ancilla() && ancilla_bit ? 1ull << layout.ancilla() : 0;
  Vec v(static_cast<int>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) v(static_cast<int>(i)) = amps_[layout.encode(basis[i]) | anc];
  return v;
}

double StateVector::leakage(const QubitLayout& layout, const PhysicalBasis& basis) const {
  double inside = physical(layout, basis, 0).squaredNorm();
  if (layout.has_ancilla()) inside += physical(layout, basis, 1).squaredNorm();
  return std::max(0.0, norm() * norm() - inside);
}

StateVector run(const Circuit& circuit, StateVector state) {
  if (circuit.layout().n_qubits() != state.n_qubits()) throw std::invalid_argument("qubit count mismatch");
  for (const auto& g : circuit.gates()) state.apply(g);
  return state;
}

PostSelected post_select_ancilla(const StateVector& s, const QubitLayout& layout,
                                 const PhysicalBasis& basis) {
  PostSelected out;
  out.state = s.physical(layout, basis, 1);
  out.probability = out.state.squaredNorm();
  if (out.probability <= 0) throw std::domain_error("ancilla-1 branch is empty");
  out.state /= std::sqrt(out.probability);
  return out;
}

namespace {

std::uint64_t draw(const std::vector<double>& cdf, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, cdf.back());
  const double x = u(rng);
  return static_cast<std::uint64_t>(std::upper_bound(cdf.begin(), cdf.end(), x) - cdf.begin());
}

std::vector<double> cumulative(const StateVector& s) {
  std::vector<double> cdf(s.amplitudes().size());
  double acc = 0.0;
  for (std::size_t i = 0; i < cdf.size(); ++i) cdf[i] = acc += std::norm(s.amplitudes()[i]);
  return cdf;
}

}  // namespace

ShotRecord sample(const StateVector& state, std::size_t n_shots, std::uint64_t seed) {
  ShotRecord r{state.n_qubits(), seed, {}};
  const auto cdf = cumulative(state);
  std::mt19937_64 rng(seed);
  r.outcomes.reserve(n_shots);
  for (std::size_t s = 0; s < n_shots; ++s)
    r.outcomes.push_back(std::min<std::uint64_t>(draw(cdf, rng), cdf.size() - 1));
  return r;
}

ShotRecord depolarized_sample(const Circuit& circuit, const StateVector& initial, double p_1q,
                              double p_2q, std::size_t n_shots, std::uint64_t seed) {
  if (p_1q < 0 || p_1q >= 1 || p_2q < 0 || p_2q >= 1) throw std::invalid_argument("noise rate outside [0, 1)");
  if (p_1q == 0 && p_2q == 0) return sample(run(circuit, initial), n_shots, seed);
  ShotRecord r{initial.n_qubits(), seed, {}};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::size_t shot = 0; shot < n_shots; ++shot) {
    StateVector s = initial;
    for (const auto& g : circuit.gates()) {
      s.apply(g);
      if (g.kind == GateKind::CX) {
        if (u(rng) < p_2q) {
          const int which = 1 + static_cast<int>(rng() % 15);  // non-identity pair
          if (which % 4) apply_pauli(s, g.q0, which % 4);
          if (which / 4) apply_pauli(s, g.q1, which / 4);
        }
      } else if (u(rng) < p_1q) {
        apply_pauli(s, g.q0, 1 + static_cast<int>(rng() % 3));
      }
    }
    const auto cdf = cumulative(s);
    r.outcomes.push_back(std::min<std::uint64_t>(draw(cdf, rng), cdf.size() - 1));
  }
  return r;
}

ShotRecord flip_bits(const ShotRecord& r, double p, std::uint64_t seed) {
  ShotRecord out = r;
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution flip(p);
  for (auto& o : out.outcomes)
    for (int q = 0; q < r.n_qubits; ++q)
      if (flip(rng)) o ^= 1ull << q;
  return out;
}

MitigatedResult mitigate(const ShotRecord& r, const PhysicalBasis& basis, const QubitLayout& layout) {
  MitigatedResult m;
  m.n_shots = r.n_shots();
  m.probabilities.assign(basis.size(), 0.0);
  const std::uint64_t anc = layout.has_ancilla() ? 1ull << layout.ancilla() : 0;
  for (auto bits : r.outcomes) {
    const auto s = layout.decode(bits & ~anc);
    if (!s) continue;
    const auto idx = basis.index_of(*s);
    if (!idx) continue;
    const int a = anc ? ((bits & anc) ? 1 : 0) : 1;
    m.events.push_back({*idx, a});
    ++m.n_physical;
    if (a == 1) {
      ++m.n_ancilla1;
      m.probabilities[*idx] += 1.0;
    }
  }
  if (m.n_ancilla1 == 0) throw std::domain_error("no shot survives mitigation");
  for (auto& p : m.probabilities) p /= static_cast<double>(m.n_ancilla1);
  return m;
}

}  // namespace lgtwp
