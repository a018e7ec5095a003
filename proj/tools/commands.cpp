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

#include "commands.hpp"

#include <atomic>
#include <cmath>
#include <fstream>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "lgtwp/circuit.hpp"
#include "lgtwp/export.hpp"
#include "lgtwp/simulate.hpp"
#include "lgtwp/spectra.hpp"
#include "lgtwp/stats.hpp"

namespace lgtwp::cli {

namespace {

namespace fs = std::filesystem;

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(strip_header(text));
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (header) {
      header = false;
      continue;
    }
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  return rows;
}

class Emitter {
 public:
  explicit Emitter(const RunConfig& cfg) : cfg_(cfg), header_(header_block(standard_header(cfg))) {}

  void text(const std::string& name, const std::string& body, const KeyValues& extra = {}) {
    write_atomic(cfg_.out / name, header_ + header_block(extra) + body);
  }
  void raw(const std::string& name, const std::string& body) { write_atomic(cfg_.out / name, body); }
  void qasm_file(const std::string& name, const Circuit& c) {
    write_atomic(cfg_.out / name, header_block(standard_header(cfg_), "//") + qasm(c));
  }

 private:
  const RunConfig& cfg_;
  std::string header_;
};

// Lazily built shared state for one configuration.
class Session {
 public:
  explicit Session(const RunConfig& cfg) : cfg_(cfg) { cfg.validate(); }

  const LatticeModel& model() {
    if (!model_) model_ = std::make_unique<LatticeModel>(cfg_.lattice);
    return *model_;
  }
  const MesonAnsatz& ansatz() {
    if (!ansatz_) ansatz_ = std::make_unique<MesonAnsatz>(model());
    return *ansatz_;
  }
  // Reuses ansatz_params.csv from the output directory when present.
  const std::vector<SectorFit>& fits(bool allow_cached = true) {
    if (fits_) return *fits_;
    const auto cached = cfg_.out / "ansatz_params.csv";
    if (allow_cached && fs::exists(cached)) {
      std::vector<SectorFit> out;
      for (const auto& row : csv_rows(read_file(cached))) {
        if (row.size() < 10) throw std::runtime_error("malformed ansatz_params.csv");
        SectorFit f;
        f.k = Momentum(std::stoi(row[0]), cfg_.lattice.n_sites);
        f.params = {std::stod(row[2]), std::stod(row[3])};
        f.energy = std::stod(row[4]);
        f.exact_energy = std::stod(row[5]);
        f.fidelity = std::stod(row[6]);
        f.mesonic_fidelity = std::stod(row[7]);
        f.evaluations = std::stoi(row[8]);
        f.converged = row[9] == "1";
        out.push_back(f);
      }
      if (out.size() != model().zone().size()) throw std::runtime_error("ansatz_params.csv does not cover the zone");
      fits_ = std::move(out);
    } else {
      fits_ = optimize_all(ansatz());
    }
    return *fits_;
  }
  const CoefficientTable& table() {
    if (!table_) table_ = build_cmn(ansatz(), cfg_.packet, fits());
    return *table_;
  }
  const Vec& exact_packet() {
    if (!exact_) exact_ = wavepacket_exact(ansatz(), cfg_.packet, fits());
    return *exact_;
  }
  const VqeResult& vqe() {
    if (!vqe_) vqe_ = vqe_ground_state(model());
    return *vqe_;
  }
  // Ground-state preparation followed by wave-packet creation, from |0...0>.
  Circuit full_circuit(int n_trotter, double theta_c) {
    Circuit wp = wp_circuit(cfg_.lattice, table(), n_trotter, theta_c);
    Circuit c = gs_circuit(cfg_.lattice, vqe().params, true);
    c.append(wp);
    c.metadata() = wp.metadata();
    c.metadata().predicted_cnots = wp.metadata().predicted_cnots + 6L * cfg_.lattice.n_sites;
    return c;
  }

 private:
  const RunConfig& cfg_;
  std::unique_ptr<LatticeModel> model_;
  std::unique_ptr<MesonAnsatz> ansatz_;
  std::optional<std::vector<SectorFit>> fits_;
  std::optional<CoefficientTable> table_;
  std::optional<Vec> exact_;
  std::optional<VqeResult> vqe_;
};

struct SeriesResult {
  std::vector<double> probabilities;
  double fidelity = 0.0;
  double postselect = 0.0;
  long cnots = 0;
};

SeriesResult circuit_series(Session& s, int n_trotter, double theta_c) {
  const auto& model = s.model();
  Circuit c = s.full_circuit(n_trotter, theta_c);
  const StateVector out = run(c, StateVector(c.layout().n_qubits()));
  const auto ps = post_select_ancilla(out, c.layout(), model.basis());
  return {probabilities(ps.state), fidelity(ps.state, s.exact_packet()), ps.probability, c.cnot_count()};
}

ShotRecord read_shots(const fs::path& p, const QubitLayout& layout) {
  ShotRecord r;
  r.n_qubits = layout.n_qubits();
  for (const auto& row : csv_rows(read_file(p))) {
    if (row.size() != 2 || static_cast<int>(row[1].size()) != layout.n_qubits())
      throw std::runtime_error("malformed shots.csv");
    std::uint64_t bits = 0;
    for (int q = 0; q < layout.n_qubits(); ++q)
      if (row[1][q] == '1') bits |= 1ull << q;
    r.outcomes.push_back(bits);
  }
  if (r.outcomes.empty()) throw std::runtime_error("shots.csv holds no shots");
  return r;
}

std::string json_number(double v) { return std::isfinite(v) ? format_real(v) : "null"; }

template <class F>
auto stage(const char* name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("[") + name + "] " + e.what());
  }
}

}  // namespace

std::string cmd_basis(const RunConfig& cfg) {
  cfg.lattice.validate();
  const PhysicalBasis basis(cfg.lattice);
  Emitter(cfg).text("basis.csv", basis_csv(basis));
  return std::to_string(basis.size()) + " physical states";
}

std::string cmd_hamiltonian(const RunConfig& cfg) {
  Session s(cfg);
  const auto& m = s.model();
  const auto& b = m.basis();
  std::ostringstream os;
  os << "row_label,col_label,re,im\n";
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) {
      const cplx v = m.h()(b.index_of_label(static_cast<int>(r)), b.index_of_label(static_cast<int>(c)));
      if (std::abs(v) > 1e-15) os << r << "," << c << "," << format_real(v.real()) << "," << format_real(v.imag()) << "\n";
    }
  Emitter(cfg).text("hamiltonian.csv", os.str());
  return "dimension " + std::to_string(m.dim());
}

std::string cmd_spectrum(const RunConfig& cfg) {
  Session s(cfg);
  const auto& m = s.model();
  std::ostringstream os;
  os << "k_index,k,level,energy\n";
  for (const auto& k : m.zone()) {
    const auto sp = diagonalize(m, k);
    for (int i = 0; i < sp.values.size(); ++i)
      os << k.index() << "," << format_real(k.value()) << "," << i << "," << format_real(sp.values(i)) << "\n";
  }
  Emitter em(cfg);
  em.text("spectrum.csv", os.str());
  std::ostringstream gs;
  gs << "{\n  \"ground_energy\": " << json_number(m.ground_energy()) << ",\n  \"dimension\": " << m.dim() << "\n}\n";
  em.raw("spectrum.json", gs.str());
  return "ground energy " + format_real(m.ground_energy());
}

std::string cmd_optimize(const RunConfig& cfg) {
  Session s(cfg);
  const auto& fits = s.fits(false);
  Emitter(cfg).text("ansatz_params.csv", fits_csv(fits),
                    {{"vacuum_policy", "Omega component projected out before normalization"}});
  double worst = 1.0;
  for (const auto& f : fits) worst = std::min(worst, f.fidelity);
  return "min fidelity " + format_real(worst);
}

std::string cmd_cmn(const RunConfig& cfg) {
  Session s(cfg);
  Emitter em(cfg);
  const bool had_params = fs::exists(cfg.out / "ansatz_params.csv");
  const auto& fits = s.fits();
  if (!had_params) em.text("ansatz_params.csv", fits_csv(fits));
  const auto diag = encoding_diagnostics(s.ansatz(), s.table());
  em.text("cmn.csv", table_csv(s.table()),
          {{"annihilation_residual", format_real(diag.annihilation)},
           {"commutator_residual", format_real(diag.commutator)}});
  return "C table written";
}

std::string cmd_circuit(const RunConfig& cfg) {
  Session s(cfg);
  Emitter em(cfg);
  const Circuit wp = wp_circuit(cfg.lattice, s.table(), cfg.n_trotter, cfg.theta_c);
  em.qasm_file("wp_circuit.qasm", wp);
  em.text("wp_circuit_gates.csv", gate_list_csv(wp));
  em.raw("wp_circuit.json", circuit_json(wp, standard_header(cfg)));
  const Circuit gs = gs_circuit(cfg.lattice, s.vqe().params);
  em.qasm_file("gs_circuit.qasm", gs);
  em.raw("gs_circuit.json", circuit_json(gs, standard_header(cfg)));
  return "wave-packet circuit: " + std::to_string(wp.cnot_count()) + " CNOTs, ground-state circuit: " +
         std::to_string(gs.cnot_count()) + " CNOTs";
}

std::string cmd_simulate(const RunConfig& cfg) {
  const auto seed = cfg.require_seed();
  Session s(cfg);
  Emitter em(cfg);
  const auto& basis = s.model().basis();
  Circuit c = s.full_circuit(cfg.n_trotter, cfg.theta_c);
  const StateVector init(c.layout().n_qubits());
  const StateVector out = run(c, init);
  const auto ps = post_select_ancilla(out, c.layout(), basis);
  em.text("probabilities_trunc.csv", probabilities_csv(basis, probabilities(ps.state)));
  const ShotRecord shots = depolarized_sample(c, init, cfg.noise_1q, cfg.noise_2q, cfg.n_shots, seed);
  em.text("shots.csv", shots_csv(shots, c.layout()));
  return std::to_string(shots.n_shots()) + " shots sampled";
}

std::string cmd_analyze(const RunConfig& cfg) {
  const auto seed = cfg.require_seed();
  Session s(cfg);
  Emitter em(cfg);
  const auto& basis = s.model().basis();
  const QubitLayout layout(cfg.lattice, true);
  const ShotRecord shots = read_shots(cfg.out / "shots.csv", layout);
  const MitigatedResult mit = mitigate(shots, basis, layout);
  const BootstrapReport rep = bootstrap(mit.events, basis, 10000, seed, cfg.jobs);
  em.text("probabilities_shots.csv", probabilities_csv(basis, mit.probabilities, rep.stddev),
          {{"n_shots", std::to_string(mit.n_shots)},
           {"n_physical", std::to_string(mit.n_physical)},
           {"n_ancilla1", std::to_string(mit.n_ancilla1)},
           {"bootstrap_resamples", std::to_string(rep.n_resamples)}});
  em.text("density_shots.csv", density_csv(staggered_density(basis, mit.probabilities, rep.stddev)));
  return std::to_string(mit.n_physical) + " physical, " + std::to_string(mit.n_ancilla1) + " with ancilla 1";
}

std::string cmd_pipeline(const RunConfig& cfg) {
  const auto seed = cfg.require_seed();
  Session s(cfg);
  Emitter em(cfg);
  stage("basis", [&] { return cmd_basis(cfg); });

  const auto& vqe = stage("ground_state", [&]() -> const VqeResult& {
    const auto& v = s.vqe();
    const auto& l = v.params.layers.front();
    std::ostringstream os;
    os << "{\n  \"theta_h\": " << json_number(l.theta_h) << ",\n  \"theta_eps\": " << json_number(l.theta_eps)
       << ",\n  \"theta_eps_mod_2pi\": " << json_number(v.theta_eps_mod_2pi)
       << ",\n  \"energy\": " << json_number(v.energy) << ",\n  \"exact_energy\": " << json_number(s.model().ground_energy())
       << ",\n  \"infidelity\": " << json_number(v.infidelity) << ",\n  \"delta_e\": " << json_number(v.delta_e)
       << ",\n  \"cnots\": " << gs_circuit(cfg.lattice, v.params).cnot_count() << "\n}\n";
    em.raw("ground_state.json", os.str());
    em.qasm_file("gs_circuit.qasm", gs_circuit(cfg.lattice, v.params));
    return v;
  });

  stage("ansatz", [&] {
    em.text("ansatz_params.csv", fits_csv(s.fits(false)),
            {{"vacuum_policy", "Omega component projected out before normalization"}});
    return 0;
  });
  const auto diag = stage("cmn", [&] {
    const auto d = encoding_diagnostics(s.ansatz(), s.table());
    em.text("cmn.csv", table_csv(s.table()));
    return d;
  });
  const Circuit wp = stage("circuit", [&] {
    Circuit c = wp_circuit(cfg.lattice, s.table(), cfg.n_trotter, cfg.theta_c);
    em.qasm_file("wp_circuit.qasm", c);
    em.text("wp_circuit_gates.csv", gate_list_csv(c));
    em.raw("wp_circuit.json", circuit_json(c, standard_header(cfg)));
    return c;
  });

  const auto& basis = s.model().basis();
  const Vec& exact = s.exact_packet();
  const auto p_exact = probabilities(exact);
  SeriesResult ideal, trunc;
  stage("simulate", [&] {
    ideal = circuit_series(s, 10, 0.0);
    trunc = circuit_series(s, cfg.n_trotter, cfg.theta_c);
    em.text("probabilities_exact.csv", probabilities_csv(basis, p_exact));
    em.text("probabilities_ideal.csv", probabilities_csv(basis, ideal.probabilities));
    em.text("probabilities_trunc.csv", probabilities_csv(basis, trunc.probabilities));
    em.text("density_exact.csv", density_csv(staggered_density(basis, p_exact)));
    em.text("density_ideal.csv", density_csv(staggered_density(basis, ideal.probabilities)));
    em.text("density_trunc.csv", density_csv(staggered_density(basis, trunc.probabilities)));
    return 0;
  });

  MitigatedResult mit;
  BootstrapReport rep;
  stage("shots", [&] {
    Circuit c = s.full_circuit(cfg.n_trotter, cfg.theta_c);
    const StateVector init(c.layout().n_qubits());
    const ShotRecord shots = depolarized_sample(c, init, cfg.noise_1q, cfg.noise_2q, cfg.n_shots, seed);
    em.text("shots.csv", shots_csv(shots, c.layout()));
    mit = mitigate(shots, basis, c.layout());
    rep = bootstrap(mit.events, basis, 10000, seed, cfg.jobs);
    em.text("probabilities_shots.csv", probabilities_csv(basis, mit.probabilities, rep.stddev));
    em.text("density_shots.csv", density_csv(staggered_density(basis, mit.probabilities, rep.stddev)));
    return 0;
  });

  // F and delta E of the truncated circuit acting on the exact vacuum.
  const auto direct = stage("report", [&] {
    Circuit c = wp_circuit(cfg.lattice, s.table(), cfg.n_trotter, cfg.theta_c);
    const auto init = StateVector::from_physical(c.layout(), basis, s.model().vacuum(), 0);
    const auto ps = post_select_ancilla(run(c, init), c.layout(), basis);
    return trunc_metrics(ps.state, exact, s.model().h());
  });

  double worst_fit = 1.0;
  for (const auto& f : s.fits()) worst_fit = std::min(worst_fit, f.fidelity);
  std::ostringstream os;
  os << "{\n"
     << "  \"ground_state\": {\"infidelity\": " << json_number(vqe.infidelity)
     << ", \"delta_e\": " << json_number(vqe.delta_e) << "},\n"
     << "  \"ansatz_min_fidelity\": " << json_number(worst_fit) << ",\n"
     << "  \"encoding\": {\"annihilation\": " << json_number(diag.annihilation)
     << ", \"commutator\": " << json_number(diag.commutator) << "},\n"
     << "  \"wp_circuit\": {\"cnots\": " << wp.cnot_count() << ", \"predicted_cnots\": " << wp.metadata().predicted_cnots
     << ", \"terms\": " << wp.metadata().n_terms << "},\n"
     << "  \"trunc_from_exact_vacuum\": {\"fidelity\": " << json_number(direct.fidelity)
     << ", \"delta_e\": " << json_number(direct.delta_e) << "},\n"
     << "  \"trunc_full_algorithm\": {\"fidelity\": " << json_number(trunc.fidelity)
     << ", \"postselect_probability\": " << json_number(trunc.postselect) << "},\n"
     << "  \"ideal_full_algorithm\": {\"fidelity\": " << json_number(ideal.fidelity)
     << ", \"postselect_probability\": " << json_number(ideal.postselect) << "},\n"
     << "  \"shots\": {\"n_shots\": " << mit.n_shots << ", \"n_physical\": " << mit.n_physical
     << ", \"n_ancilla1\": " << mit.n_ancilla1 << ", \"bootstrap_resamples\": " << rep.n_resamples << "},\n"
     << "  \"eps_rms_shots_vs_trunc\": " << json_number(rms_error(mit.probabilities, trunc.probabilities)) << ",\n"
     << "  \"eps_rms_trunc_vs_exact\": " << json_number(rms_error(trunc.probabilities, p_exact)) << "\n"
     << "}\n";
  em.raw("report.json", os.str());
  return "F_trunc " + format_real(direct.fidelity) + ", " + std::to_string(wp.cnot_count()) + " CNOTs";
}

std::string cmd_sweep(const RunConfig& cfg) {
  cfg.validate();
  if (cfg.sweep_m_f.empty() || cfg.sweep_epsilon.empty())
    throw std::invalid_argument("sweep needs sweep_m_f and sweep_epsilon lists");
  struct Point {
    double m_f, eps;
  };
  std::vector<Point> points;
  for (double e : cfg.sweep_epsilon)
    for (double m : cfg.sweep_m_f) points.push_back({m, e});

  std::vector<std::string> rows(points.size());
  std::atomic<std::size_t> next{0};
  std::mutex err_mu;
  std::string first_error;
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      try {
        RunConfig pc = cfg;
        pc.lattice.m_f = points[i].m_f;
        pc.lattice.epsilon = points[i].eps;
        const LatticeModel model(pc.lattice);
        const MesonAnsatz ansatz(model);
        const auto fits = optimize_all(ansatz);
        const auto cls = classify_k0_excitation(model);
        std::ostringstream os;
        for (const auto& f : fits)
          os << format_real(points[i].m_f) << "," << format_real(points[i].eps) << "," << f.k.index() << ","
             << format_real(f.k.value()) << "," << format_real(f.fidelity) << "," << format_real(f.mesonic_fidelity)
             << "," << to_string(cls.kind) << "," << format_real(cls.winding) << "\n";
        rows[i] = os.str();
        write_atomic(cfg.out / "points" / ("point_" + std::to_string(i) + ".csv"), rows[i]);
      } catch (const std::exception& e) {
        std::lock_guard lock(err_mu);
        if (first_error.empty()) first_error = "point " + std::to_string(i) + ": " + e.what();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const int n = std::min<int>(cfg.jobs, static_cast<int>(points.size()));
    for (int w = 0; w < n; ++w) pool.emplace_back(worker);
  }
  if (!first_error.empty()) throw std::runtime_error(first_error);
  std::string body = "m_f,epsilon,k_index,k,fidelity,mesonic_fidelity,k0_class,k0_winding\n";
  for (const auto& r : rows) body += r;
  Emitter(cfg).text("heatmap.csv", body);
  return std::to_string(points.size()) + " sweep points";
}

}  // namespace lgtwp::cli
