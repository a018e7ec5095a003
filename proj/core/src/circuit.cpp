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

#include "lgtwp/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lgtwp/optimize.hpp"
#include "lgtwp/simulate.hpp"

namespace lgtwp {

std::string_view to_string(GateKind k) {
  switch (k) {
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::Rz: return "rz";
    case GateKind::Rx: return "rx";
    case GateKind::Ry: return "ry";
    case GateKind::CX: return "cx";
    case GateKind::Phase: return "p";
  }
  return "";
}

void Circuit::add(const Gate& g) {
  const int nq = layout_.n_qubits();
  if (g.q0 < 0 || g.q0 >= nq) throw std::out_of_range("gate operand outside layout");
  if (g.kind == GateKind::CX && (g.q1 < 0 || g.q1 >= nq || g.q1 == g.q0))
    throw std::out_of_range("bad CX target");
  if (!std::isfinite(g.angle)) throw std::invalid_argument("non-finite gate angle");
  gates_.push_back(g);
}

long Circuit::cnot_count() const {
  return std::count_if(gates_.begin(), gates_.end(), [](const Gate& g) { return g.kind == GateKind::CX; });
}

std::map<std::string, long> Circuit::counts_by_kind() const {
  std::map<std::string, long> out;
  for (const auto& g : gates_) ++out[std::string(to_string(g.kind))];
  return out;
}

namespace {

Gate cx(int c, int t) { return {GateKind::CX, c, t, 0.0}; }
Gate one(GateKind k, int q, double a = 0.0) { return {k, q, -1, a}; }

void require_z2(const LatticeSpec& spec) {
  if (spec.group != Group::Z2) throw std::invalid_argument("circuits are synthesized for Z2 only");
}

// exp(i theta H_{n,n+1}), H = (s/4)(X_n Y_{n+1} - Y_n X_{n+1}) X~_n.
void hopping_gate(Circuit& c, int n, double theta, double sign) {
  const QubitLayout& lay = c.layout();
  const int f = lay.fermion(n);
  const int g = lay.fermion((n + 1) % lay.n_sites());
  const int b = lay.link(n);
  const double beta = sign * theta / 4.0;
  c.add(cx(f, g));
  c.add(cx(f, b));
  // Now the two strings read Y_f Z_g and -Y_f.
  c.add(one(GateKind::Ry, f, 2.0 * beta));
  c.add(one(GateKind::Rx, f, kPi / 2));
  c.add(cx(g, f));
  c.add(one(GateKind::Rz, f, -2.0 * beta));
  c.add(cx(g, f));
  c.add(one(GateKind::Rx, f, -kPi / 2));
  c.add(cx(f, b));
  c.add(cx(f, g));
}

}  // namespace

Circuit gs_circuit(const LatticeSpec& spec, const GsParams& params, bool with_ancilla) {
  require_z2(spec);
  spec.validate();
  Circuit c(QubitLayout(spec, with_ancilla));
  const int n_sites = spec.n_sites;
  for (int n = 1; n < n_sites; n += 2) c.add(one(GateKind::X, c.layout().fermion(n)));
  for (const GsLayer& layer : params.layers) {
    for (int n = 0; n < n_sites; ++n)
      hopping_gate(c, n, layer.theta_h, n == n_sites - 1 ? spec.boundary_sign() : 1.0);
    if (layer.theta_m != 0.0)
      for (int n = 0; n < n_sites; ++n)
        c.add(one(GateKind::Rz, c.layout().fermion(n), layer.theta_m * spec.m_f * (n % 2 ? -0.5 : 0.5)));
    for (int n = 0; n < n_sites; ++n)
      c.add(one(GateKind::Rz, c.layout().link(n), -layer.theta_eps * spec.epsilon));
  }
  c.metadata().predicted_cnots = 6L * n_sites * params.n_layers();
  return c;
}

VqeResult vqe_ground_state(const LatticeModel& model) {
  const LatticeSpec& spec = model.spec();
  require_z2(spec);
  const QubitLayout layout(spec, false);
  const bool has_eps = std::abs(spec.epsilon) > 0;
  const double period = has_eps ? 2.0 * kPi / std::abs(spec.epsilon) : 0.0;

  auto state_for = [&](double th, double te) {
    GsParams p;
    p.layers[0].theta_h = th;
    p.layers[0].theta_eps = te;
    return run(gs_circuit(spec, p), StateVector(layout.n_qubits())).physical(layout, model.basis());
  };
  auto objective = [&](std::span<const double> x) {
    return model.energy(state_for(x[0], has_eps ? x[1] : 0.0));
  };

  constexpr int kGrid = 16;
  double best = 1e300;
  std::vector<double> seed{0.0, 0.0};
  for (int i = 0; i < kGrid; ++i)
    for (int j = 0; j < (has_eps ? kGrid : 1); ++j) {
      const std::vector<double> x{-kPi / 2 * (i + 0.5) / kGrid, period * j / kGrid};
      const double e = objective(x);
      if (e < best) {
        best = e;
        seed = x;
      }
    }
  std::vector<double> x0 = has_eps ? seed : std::vector<double>{seed[0]};
  std::vector<double> step = has_eps ? std::vector<double>{0.05, period / kGrid}
                                     : std::vector<double>{0.05};
  const MinimizeResult r = simplex_minimize(
      [&](std::span<const double> x) {
        return model.energy(state_for(x[0], x.size() > 1 ? x[1] : 0.0));
      },
      x0, step, 1e-10, 2000);

  VqeResult out;
  double te = has_eps ? r.x[1] : 0.0;
  if (has_eps) te = std::fmod(std::fmod(te, period) + period, period);
  out.params.layers[0] = {r.x[0], 0.0, te};
  out.state = state_for(r.x[0], te);
  out.energy = model.energy(out.state);
  out.infidelity = 1.0 - std::norm(model.vacuum().dot(out.state));
  out.delta_e = std::abs(out.energy - model.ground_energy());
  out.theta_eps_period = period;
  out.theta_eps_mod_2pi = std::fmod(te, 2.0 * kPi);
  out.evaluations = r.evaluations + kGrid * (has_eps ? kGrid : 1);
  out.converged = r.converged;
  return out;
}

std::vector<ThetaTerm> theta_terms(const LatticeSpec& spec, const CoefficientTable& table,
                                   double theta_c) {
  std::vector<ThetaTerm> out;
  for (int m = 0; m < table.n_sites; ++m)
    for (int n = 0; n < table.n_sites; ++n) {
      const BareMeson meson = build_bare_meson(spec, m, n);
      for (std::size_t b = 0; b < meson.branches.size(); ++b) {
        const MesonBranch& br = meson.branches[b];
        ThetaTerm t{m, n, static_cast<int>(b), table.c(m, n) * br.term.coeff, br.links, br.interior};
        if (std::abs(t.coeff) >= theta_c && std::abs(t.coeff) > 0) out.push_back(std::move(t));
      }
    }
  std::stable_sort(out.begin(), out.end(), [](const ThetaTerm& a, const ThetaTerm& b) {
    const double x = std::abs(a.coeff), y = std::abs(b.coeff);
    if (x != y) return x > y;
    if (a.m != b.m) return a.m < b.m;
    if (a.n != b.n) return a.n < b.n;
    return a.branch < b.branch;
  });
  return out;
}

long svd_block_cnots(int length) { return length == 0 ? 2 : 4L * length + 8; }

std::vector<Gate> svd_block(const QubitLayout& layout, const ThetaTerm& term, double theta) {
  std::vector<Gate> g;
  const double mag = std::abs(term.coeff);
  if (mag == 0.0) return g;
  const double phi = std::arg(term.coeff);
  const int a = layout.ancilla();
  const int fm = layout.fermion(term.m);
  const int fn = layout.fermion(term.n);

  // U: ancilla-controlled flips, then rotate the ancilla's c|1><0| + h.c. to Z.
  std::vector<Gate> u;
  if (term.m != term.n) {
    u.push_back(cx(a, fm));
    u.push_back(cx(a, fn));
    for (int l : term.links) u.push_back(cx(a, layout.link(l)));
  }
  u.push_back(one(GateKind::Rz, a, -phi));
  u.push_back(one(GateKind::H, a));
  g = u;

  if (term.m == term.n) {
    // D = |c| (Z_a - Z_m Z_a) / 2
    g.push_back(one(GateKind::Rz, a, theta * mag));
    g.push_back(cx(fm, a));
    g.push_back(one(GateKind::Rz, a, -theta * mag));
    g.push_back(cx(fm, a));
  } else {
    // D = |c|/4 (1 + Z_m)(1 - Z_n) S,  S = prod_interior Z (x) Z_a
    const double q = theta * mag / 2.0;
    for (int s : term.interior) g.push_back(cx(layout.fermion(s), a));
    g.push_back(cx(fn, a));
    g.push_back(one(GateKind::Rz, a, -q));  // -Z_n S
    g.push_back(cx(fm, a));
    g.push_back(one(GateKind::Rz, a, -q));  // -Z_m Z_n S
    g.push_back(cx(fn, a));
    g.push_back(one(GateKind::Rz, a, q));   // Z_m S
    g.push_back(cx(fm, a));
    g.push_back(one(GateKind::Rz, a, q));   // S
    g.push_back(cx(fn, a));
    // mirror of the collection step
    g.push_back(cx(fn, a));
    for (auto it = term.interior.rbegin(); it != term.interior.rend(); ++it)
      g.push_back(cx(layout.fermion(*it), a));
  }

  for (auto it = u.rbegin(); it != u.rend(); ++it) {
    Gate inv = *it;
    if (inv.kind == GateKind::Rz) inv.angle = -inv.angle;
    g.push_back(inv);
  }
  return g;
}

Circuit wp_circuit(const LatticeSpec& spec, const CoefficientTable& table, int n_trotter,
                   double theta_c) {
  require_z2(spec);
  if (!spec.efficient_jw()) throw std::invalid_argument("wave-packet circuits need N = 2 mod 4");
  if (n_trotter < 1) throw std::invalid_argument("n_trotter must be >= 1");
  const auto terms = theta_terms(spec, table, theta_c);
  if (terms.empty()) throw std::invalid_argument("no coefficient survives the truncation");
  Circuit c(QubitLayout(spec, true));
  const double tau = (kPi / 2.0) / (2.0 * n_trotter);
  long per_pass = 0;
  for (const auto& t : terms) per_pass += svd_block_cnots(t.length());
  for (int step = 0; step < n_trotter; ++step) {
    for (const auto& t : terms) c.append(svd_block(c.layout(), t, tau));
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) c.append(svd_block(c.layout(), *it, tau));
  }
  auto& meta = c.metadata();
  meta.n_trotter = n_trotter;
  meta.n_order = 2;
  meta.theta_c = theta_c;
  meta.ordering = "descending |C_mn * w|, ties by (m, n, branch); symmetric second-order sweep";
  meta.predicted_cnots = per_pass * 2 * n_trotter;
  meta.n_terms = static_cast<int>(terms.size());
  return c;
}

GateCounts predict_gate_counts(const LatticeSpec& spec, CountMode mode, int n_trotter) {
  spec.validate();
  const long n = spec.n_sites;
  if (mode == CountMode::gs) return {static_cast<int>(2 * n), 6 * n};
  if (!spec.efficient_jw()) throw std::invalid_argument("closed forms assume N = 2 mod 4");
  if (mode == CountMode::full) return {static_cast<int>(2 * n + 1), (n * n * n + 10 * n * n + 2 * n) * 2 * n_trotter};
  return {static_cast<int>(2 * n + 1), 26 * n * 2 * n_trotter};
}

}  // namespace lgtwp
