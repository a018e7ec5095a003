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

// Independent reference constructions used by the test suites. Nothing here
// goes through the Pauli-string machinery of the library.

#ifndef LGTWP_TESTS_ORACLES_HPP
#define LGTWP_TESTS_ORACLES_HPP

#include <bit>
#include <complex>
#include <map>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lgtwp/circuit.hpp"
#include "lgtwp/simulate.hpp"

namespace lgtwp::oracle {

// c_n / c^dag_n on an occupation bitmask with the usual ordering sign
// (-1)^{# occupied sites below n}.
inline std::optional<std::pair<std::uint32_t, double>> annihilate(std::uint32_t occ, int n) {
  if (!((occ >> n) & 1u)) return std::nullopt;
  const double s = std::popcount(occ & ((1u << n) - 1)) % 2 ? -1.0 : 1.0;
  return std::pair{occ & ~(1u << n), s};
}
inline std::optional<std::pair<std::uint32_t, double>> create(std::uint32_t occ, int n) {
  if ((occ >> n) & 1u) return std::nullopt;
  const double s = std::popcount(occ & ((1u << n) - 1)) % 2 ? -1.0 : 1.0;
  return std::pair{occ | (1u << n), s};
}

// Shifts link `l` by `delta` (Z2: any nonzero delta flips). nullopt past the cutoff.
inline std::optional<std::vector<int>> shift_link(const LatticeSpec& spec, std::vector<int> links, int l,
                                                  int delta) {
  if (spec.group == Group::Z2) {
    links[l] = -links[l];
    return links;
  }
  links[l] += delta;
  if (links[l] < -spec.cutoff || links[l] > spec.cutoff) return std::nullopt;
  return links;
}

// c^dag_m (links shifted by delta) c_n applied to basis state `s`, fermionic
// signs counted directly.
inline std::optional<std::pair<BasisState, double>> pair_op(const LatticeSpec& spec, const BasisState& s,
                                                            int m, int n, const std::vector<int>& links,
                                                            int delta) {
  auto a = annihilate(s.occ, n);
  if (!a) return std::nullopt;
  auto c = create(a->first, m);
  if (!c) return std::nullopt;
  std::optional<std::vector<int>> l = s.links;
  for (int link : links) {
    l = shift_link(spec, *l, link, delta);
    if (!l) return std::nullopt;
  }
  return std::pair{BasisState{c->first, *l}, a->second * c->second};
}

// Dense H over the physical basis written straight from the lattice
// definition: t c^dag_n U_n c_{n+1} + h.c. (U lowers), staggered mass,
// electric energy.
inline Mat hamiltonian(const PhysicalBasis& basis) {
  const LatticeSpec& spec = basis.spec();
  const int n_sites = spec.n_sites;
  const cplx t(0.0, -0.5);
  const int d = static_cast<int>(basis.size());
  Mat h = Mat::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    const BasisState& s = basis[i];
    for (int n = 0; n < n_sites; ++n) {
      if (s.occupied(n)) h(i, i) += (n % 2 ? -1.0 : 1.0) * spec.m_f;
      const int e = s.links[n];
      h(i, i) += spec.epsilon * (spec.group == Group::Z2 ? e : e * e);
      const int next = (n + 1) % n_sites;
      if (auto r = pair_op(spec, s, n, next, {n}, -1)) h(static_cast<int>(*basis.index_of(r->first)), i) += t * r->second;
      if (auto r = pair_op(spec, s, next, n, {n}, +1))
        h(static_cast<int>(*basis.index_of(r->first)), i) += std::conj(t) * r->second;
    }
  }
  return h;
}

// Two-site translation j -> j + 2 acting on creation operators.
inline Mat translation(const PhysicalBasis& basis) {
  const int n_sites = basis.spec().n_sites;
  const int d = static_cast<int>(basis.size());
  Mat t = Mat::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    const BasisState& s = basis[i];
    // The basis ket is c^dag_{a1} ... c^dag_{aQ} |0> with a1 < ... < aQ; shift
    // each index and normal-order the product.
    std::uint32_t occ = 0;
    double sign = 1.0;
    std::vector<int> sites;
    for (int n = 0; n < n_sites; ++n)
      if (s.occupied(n)) sites.push_back((n + 2) % n_sites);
    for (auto it = sites.rbegin(); it != sites.rend(); ++it) {
      auto c = create(occ, *it);
      occ = c->first;
      sign *= c->second;
    }
    BasisState out{occ, std::vector<int>(n_sites)};
    for (int n = 0; n < n_sites; ++n) out.links[(n + 2) % n_sites] = s.links[n];
    t(static_cast<int>(*basis.index_of(out)), i) = sign;
  }
  return t;
}

// Meson c^dag_m (string) c_n with the string on the forward arc (links
// m..n-1, lowered) or the backward arc (links n..m-1, raised).
inline Mat meson(const PhysicalBasis& basis, int m, int n, bool forward) {
  const LatticeSpec& spec = basis.spec();
  const int n_sites = spec.n_sites;
  std::vector<int> links;
  if (forward)
    for (int l = m; l != n; l = (l + 1) % n_sites) links.push_back(l);
  else
    for (int l = n; l != m; l = (l + 1) % n_sites) links.push_back(l);
  const int d = static_cast<int>(basis.size());
  Mat out = Mat::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    if (m == n) {
      if (basis[i].occupied(m)) out(i, i) = 1.0;
      continue;
    }
    if (auto r = pair_op(spec, basis[i], m, n, links, forward ? -1 : +1)) {
      const auto j = basis.index_of(r->first);
      if (j) out(static_cast<int>(*j), i) += r->second;
    }
  }
  return out;
}

inline Vec random_state(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Vec v(dim);
  for (int i = 0; i < dim; ++i) v(i) = cplx(g(rng), g(rng));
  return v.normalized();
}

// Hermitian matrix exponential exp(-i theta A) by eigendecomposition.
inline Mat expm_hermitian(const Mat& a, double theta) {
  Eigen::SelfAdjointEigenSolver<Mat> es(a);
  const Eigen::VectorXcd phases = (es.eigenvalues().cast<cplx>() * cplx(0.0, -theta)).array().exp();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

// Kronecker product of single-qubit matrices; ops[q] acts on qubit q and
// qubit q is bit q of the index.
inline Mat kron_qubits(const std::vector<Eigen::Matrix2cd>& ops) {
  Mat out = Mat::Identity(1, 1);
  for (const auto& op : ops) {
    Mat next(out.rows() * 2, out.cols() * 2);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) next.block(a * out.rows(), b * out.cols(), out.rows(), out.cols()) = op(a, b) * out;
    out = next;
  }
  return out;
}

using M2 = Eigen::Matrix2cd;

inline M2 pauli(char c) {
  M2 m;
  switch (c) {
    case 'X': m << 0, 1, 1, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    case '+': m << 0, 0, 1, 0; break;  // |1><0|
    case '-': m << 0, 1, 0, 0; break;  // |0><1|
    case 'n': m << 0, 0, 0, 1; break;
    default: m.setIdentity();
  }
  return m;
}

// Qubits touched by a term, in increasing order.
inline std::vector<int> support(const QubitLayout& layout, const ThetaTerm& t) {
  std::vector<int> q{layout.fermion(t.m), layout.fermion(t.n), layout.ancilla()};
  for (int s : t.interior) q.push_back(layout.fermion(s));
  for (int l : t.links) q.push_back(layout.link(l));
  std::sort(q.begin(), q.end());
  q.erase(std::unique(q.begin(), q.end()), q.end());
  return q;
}

// Theta = coeff * Raise_m Z_interior Lower_n X_links (x) |1><0|_a + h.c. on the support.
inline Mat theta_dense(const QubitLayout& layout, const ThetaTerm& t, const std::vector<int>& sup) {
  std::map<int, char> ops;
  if (t.m == t.n) {
    ops[layout.fermion(t.m)] = 'n';
  } else {
    ops[layout.fermion(t.m)] = '+';
    ops[layout.fermion(t.n)] = '-';
    for (int s : t.interior) ops[layout.fermion(s)] = 'Z';
    for (int l : t.links) ops[layout.link(l)] = 'X';
  }
  ops[layout.ancilla()] = '+';
  std::vector<M2> f;
  for (int q : sup) f.push_back(pauli(ops.count(q) ? ops[q] : 'I'));
  const Mat a = t.coeff * oracle::kron_qubits(f);
  return a + a.adjoint();
}

// Unitary of a gate list restricted to `sup` (gates must stay inside it).
inline Mat fragment_unitary(const std::vector<Gate>& gates, const std::vector<int>& sup) {
  std::map<int, int> local;
  for (std::size_t i = 0; i < sup.size(); ++i) local[sup[i]] = static_cast<int>(i);
  const int k = static_cast<int>(sup.size());
  const int d = 1 << k;
  Mat u(d, d);
  for (int col = 0; col < d; ++col) {
    StateVector s(k);
    for (int q = 0; q < k; ++q)
      if ((col >> q) & 1) s.apply({GateKind::X, q, -1, 0.0});
    for (Gate g : gates) {
      g.q0 = local.at(g.q0);
      if (g.kind == GateKind::CX) g.q1 = local.at(g.q1);
      s.apply(g);
    }
    for (int r = 0; r < d; ++r) u(r, col) = s[r];
  }
  return u;
}

// Readable names for specs used as test parameters, e.g. Z2_N6_0.
template <class Info>
std::string spec_name(const Info& info) {
  const LatticeSpec& s = info.param;
  return std::string(to_string(s.group)) + "_N" + std::to_string(s.n_sites) + "_" + std::to_string(info.index);
}

}  // namespace lgtwp::oracle

#endif  // LGTWP_TESTS_ORACLES_HPP
