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

#include "lgtwp/export.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace lgtwp {

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string header_block(const KeyValues& entries, std::string_view comment) {
  std::string out;
  for (const auto& [k, v] : entries) out += std::string(comment) + " " + k + ": " + v + "\n";
  return out;
}

KeyValues standard_header(const RunConfig& cfg) {
  KeyValues kv{{"tool", "lgtwp " + std::string(kToolVersion)}};
  for (auto& e : describe(cfg)) kv.push_back(std::move(e));
  kv.emplace_back("basis_order", "label order (reference tables at N=6, canonical index otherwise)");
  kv.emplace_back("qubit_order", "f_0 b_0 f_1 b_1 ... f_{N-1} b_{N-1} ancilla; bit q = qubit q");
  kv.emplace_back("term_order", "descending |coeff|, then (m, n, branch)");
  return kv;
}

void write_atomic(const std::filesystem::path& path, std::string_view content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string basis_csv(const PhysicalBasis& basis) {
  const auto& spec = basis.spec();
  std::ostringstream os;
  os << "label";
  for (int n = 0; n < spec.n_sites; ++n) os << ",f_" << n << ",b_" << n;
  os << "\n";
  for (std::size_t l = 0; l < basis.size(); ++l) {
    const auto& s = basis[basis.index_of_label(static_cast<int>(l))];
    os << l;
    for (int n = 0; n < spec.n_sites; ++n) {
      const int b = spec.group == Group::Z2 ? (s.links[n] == 1 ? 0 : 1) : s.links[n];
      os << "," << (s.occupied(n) ? 1 : 0) << "," << b;
    }
    os << "\n";
  }
  return os.str();
}

std::string strip_header(std::string_view text) {
  while (!text.empty() && text.front() == '#') {
    const auto nl = text.find('\n');
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
  }
  return std::string(text);
}

std::string qasm(const Circuit& c) {
  std::ostringstream os;
  os << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  os << "qreg q[" << c.layout().n_qubits() << "];\n";
  os << "creg c[" << c.layout().n_qubits() << "];\n";
  char buf[40];
  for (const auto& g : c.gates()) {
    switch (g.kind) {
      case GateKind::H:
      case GateKind::X:
        os << to_string(g.kind) << " q[" << g.q0 << "];\n";
        break;
      case GateKind::CX:
        os << "cx q[" << g.q0 << "],q[" << g.q1 << "];\n";
        break;
      default:
        std::snprintf(buf, sizeof buf, "%.17g", g.angle);
        os << to_string(g.kind) << "(" << buf << ") q[" << g.q0 << "];\n";
    }
  }
  os << "measure q -> c;\n";
  return os.str();
}

std::string gate_list_csv(const Circuit& c) {
  std::ostringstream os;
  os << "index,gate,q0,q1,angle\n";
  char buf[40];
  for (std::size_t i = 0; i < c.gates().size(); ++i) {
    const auto& g = c.gates()[i];
    std::snprintf(buf, sizeof buf, "%.17g", g.angle);
    os << i << "," << to_string(g.kind) << "," << g.q0 << "," << g.q1 << "," << buf << "\n";
  }
  return os.str();
}

std::string circuit_json(const Circuit& c, const KeyValues& extra) {
  nlohmann::ordered_json j;
  const auto& m = c.metadata();
  j["n_qubits"] = c.layout().n_qubits();
  j["n_gates"] = c.gates().size();
  j["cnots"] = c.cnot_count();
  j["predicted_cnots"] = m.predicted_cnots;
  j["n_trotter"] = m.n_trotter;
  j["trotter_order"] = m.n_order;
  j["theta_c"] = m.theta_c;
  j["n_terms"] = m.n_terms;
  j["ordering"] = m.ordering;
  nlohmann::ordered_json counts;
  for (const auto& [k, v] : c.counts_by_kind()) counts[k] = v;
  j["counts"] = counts;
  for (const auto& [k, v] : extra) j["meta"][k] = v;
  return j.dump(2) + "\n";
}

std::string probabilities_csv(const PhysicalBasis& basis, std::span<const double> p,
                              std::span<const double> se) {
  if (p.size() != basis.size() || (!se.empty() && se.size() != p.size()))
    throw std::invalid_argument("probability vector length mismatch");
  std::ostringstream os;
  os << (se.empty() ? "label,probability\n" : "label,probability,stderr\n");
  for (std::size_t l = 0; l < p.size(); ++l) {
    const auto i = basis.index_of_label(static_cast<int>(l));
    os << l << "," << format_real(p[i]);
    if (!se.empty()) os << "," << format_real(se[i]);
    os << "\n";
  }
  return os.str();
}

std::string density_csv(const DensityProfile& d) {
  std::ostringstream os;
  os << (d.err.empty() ? "site,chi\n" : "site,chi,err\n");
  for (std::size_t n = 0; n < d.chi.size(); ++n) {
    os << n << "," << format_real(d.chi[n]);
    if (!d.err.empty()) os << "," << format_real(d.err[n]);
    os << "\n";
  }
  return os.str();
}

std::string shots_csv(const ShotRecord& r, const QubitLayout& layout) {
  std::ostringstream os;
  os << "shot_index,bitstring\n";
  for (std::size_t s = 0; s < r.outcomes.size(); ++s) os << s << "," << layout.bitstring(r.outcomes[s]) << "\n";
  return os.str();
}

std::string fits_csv(std::span<const SectorFit> fits) {
  std::ostringstream os;
  os << "k_index,k,sigma_a,mu_a,energy,exact_energy,fidelity,mesonic_fidelity,evaluations,converged\n";
  for (const auto& f : fits) {
    os << f.k.index() << "," << format_real(f.k.value()) << "," << format_real(f.params.sigma_a) << ","
       << format_real(f.params.mu_a) << "," << format_real(f.energy) << "," << format_real(f.exact_energy) << ","
       << format_real(f.fidelity) << "," << format_real(f.mesonic_fidelity) << "," << f.evaluations << ","
       << (f.converged ? 1 : 0) << "\n";
  }
  return os.str();
}

std::string table_csv(const CoefficientTable& t) {
  std::ostringstream os;
  os << "m,n,re,im,abs,phase\n";
  for (int m = 0; m < t.n_sites; ++m)
    for (int n = 0; n < t.n_sites; ++n) {
      const cplx c = t.c(m, n);
      os << m << "," << n << "," << format_real(c.real()) << "," << format_real(c.imag()) << ","
         << format_real(std::abs(c)) << "," << format_real(std::arg(c)) << "\n";
    }
  return os.str();
}

}  // namespace lgtwp
