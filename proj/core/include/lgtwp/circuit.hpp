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

#ifndef LGTWP_CIRCUIT_HPP
#define LGTWP_CIRCUIT_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lgtwp/ansatz.hpp"

namespace lgtwp {

enum class GateKind { H, X, Rz, Rx, Ry, CX, Phase };
std::string_view to_string(GateKind k);

// Rz(a) = exp(-i a Z / 2), likewise Rx, Ry; Phase(a) = diag(1, e^{ia}).
struct Gate {
  GateKind kind = GateKind::H;
  int q0 = 0;
  int q1 = -1;  // CX target
  double angle = 0.0;
};

struct CircuitMetadata {
  int n_trotter = 0;
  int n_order = 0;
  double theta_c = 0.0;
  std::string ordering;
  long predicted_cnots = -1;
  int n_terms = 0;
};

class Circuit {
 public:
  explicit Circuit(QubitLayout layout) : layout_(layout) {}

  const QubitLayout& layout() const { return layout_; }
  const std::vector<Gate>& gates() const { return gates_; }
  CircuitMetadata& metadata() { return meta_; }
  const CircuitMetadata& metadata() const { return meta_; }

  void add(const Gate& g);
  void append(const std::vector<Gate>& gs) {
    for (const auto& g : gs) add(g);
  }
  void append(const Circuit& c) { append(c.gates()); }
  long cnot_count() const;
  std::map<std::string, long> counts_by_kind() const;

 private:
  QubitLayout layout_;
  std::vector<Gate> gates_;
  CircuitMetadata meta_;
};

struct GsLayer {
  double theta_h = 0.0;
  double theta_m = 0.0;
  double theta_eps = 0.0;
};

struct GsParams {
  std::vector<GsLayer> layers{GsLayer{}};
  int n_layers() const { return static_cast<int>(layers.size()); }
};

// Prepares |Omega>_0 from |0...0> and applies, per layer,
// prod_n exp(i th_h H_{n,n+1}) then exp(i th_m H^m_n / 2) then exp(i th_eps H^eps_n / 2).
// Z2 only; 6 CNOTs per link.
Circuit gs_circuit(const LatticeSpec& spec, const GsParams& params, bool with_ancilla = false);

struct VqeResult {
  GsParams params;
  double energy = 0.0;
  double infidelity = 0.0;   // 1 - |<Omega|psi>|^2
  double delta_e = 0.0;      // |E_vqe - E_0|
  double theta_eps_period = 0.0;
  double theta_eps_mod_2pi = 0.0;
  int evaluations = 0;
  bool converged = false;
  Vec state;  // physical basis
};

// One-layer VQE over (theta_h <= 0, theta_eps), theta_m = 0; theta_eps is
// folded into [0, 2 pi / |eps|).
VqeResult vqe_ground_state(const LatticeModel& model);

// One ancilla-encoded summand: coeff * M~ (x) |1><0|_a + h.c. for one path of
// a bare meson (the path weight and boundary sign folded into coeff).
struct ThetaTerm {
  int m = 0;
  int n = 0;
  int branch = 0;
  cplx coeff;
  std::vector<int> links;
  std::vector<int> interior;
  int length() const { return static_cast<int>(links.size()); }
};

// All branches of every (m, n) entry, with |coeff| >= theta_c, ordered by
// descending |coeff| then (m, n, branch).
std::vector<ThetaTerm> theta_terms(const LatticeSpec& spec, const CoefficientTable& table,
                                   double theta_c);

// exp(-i theta Theta_term) as U^dag exp(-i theta D) U.
std::vector<Gate> svd_block(const QubitLayout& layout, const ThetaTerm& term, double theta);
long svd_block_cnots(int length);

// Second-order Trotterization of exp(-i (pi/2) sum Theta).
Circuit wp_circuit(const LatticeSpec& spec, const CoefficientTable& table, int n_trotter,
                   double theta_c);

enum class CountMode { gs, full, one_meson_truncated };

struct GateCounts {
  int qubits = 0;
  long cnots = 0;
};

GateCounts predict_gate_counts(const LatticeSpec& spec, CountMode mode, int n_trotter);

}  // namespace lgtwp

#endif  // LGTWP_CIRCUIT_HPP
