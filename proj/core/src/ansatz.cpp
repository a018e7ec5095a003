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

#include "lgtwp/ansatz.hpp"

#include <cmath>
#include <stdexcept>

#include "lgtwp/optimize.hpp"
#include "lgtwp/spectra.hpp"

namespace lgtwp {

double dispersion(double k, double m_f) { return std::sqrt(m_f * m_f + std::sin(k) * std::sin(k)); }

double spinor_ratio(double k, double m_f) { return std::sin(k) / (m_f + dispersion(k, m_f)); }

cplx spinor_weight(const Momentum& p, int site, SpinorRole role, double m_f) {
  const double k = p.value();
  const double w = dispersion(k, m_f);
  if (w <= 0) throw std::domain_error("spinor weights need m_f > 0 at k = 0");
  const double a = std::sqrt((m_f + w) / (2.0 * kPi * w));
  const bool even = site % 2 == 0;
  const double v = spinor_ratio(k, m_f);
  const double part = role == SpinorRole::C ? (even ? 1.0 : v) : (even ? v : 1.0);
  return a * part * std::polar(1.0, k * site);
}

std::string_view to_string(Wrapping w) {
  switch (w) {
    case Wrapping::none: return "none";
    case Wrapping::forward: return "forward";
    case Wrapping::backward: return "backward";
    case Wrapping::both_halved: return "both_halved";
  }
  return "";
}

namespace {

MesonBranch make_branch(const LatticeSpec& spec, int m, int n, bool forward, double weight) {
  const int n_sites = spec.n_sites;
  MesonBranch b;
  b.forward = forward;
  b.weight = weight;
  const int from = forward ? m : n;
  const int len = forward ? (n - m + n_sites) % n_sites : (m - n + n_sites) % n_sites;
  for (int j = 0; j < len; ++j) b.links.push_back((from + j) % n_sites);
  for (int j = 1; j < len; ++j) b.interior.push_back((from + j) % n_sites);
  b.wraps = forward ? n < m : m < n;
  b.term = fermion_bilinear(spec, m, n, b.interior, b.wraps);
  b.term.coeff *= weight;
  const LinkOp op = forward ? LinkOp::Lower : LinkOp::Raise;
  auto pos = b.term.factors.begin() + 1 + static_cast<long>(b.interior.size());
  for (int l : b.links) pos = b.term.factors.insert(pos, link(l, op)) + 1;
  return b;
}

}  // namespace

BareMeson build_bare_meson(const LatticeSpec& spec, int m, int n) {
  const int n_sites = spec.n_sites;
  if (m < 0 || n < 0 || m >= n_sites || n >= n_sites) throw std::out_of_range("meson site");
  BareMeson out;
  out.m = m;
  out.n = n;
  if (m == n) {
    MesonBranch b;
    b.term = Term{1.0, {fermion(m, FermionOp::Number)}};
    out.branches.push_back(b);
  } else {
    const int d = (n - m + n_sites) % n_sites;
    if (2 * d < n_sites) {
      out.wrapping = Wrapping::forward;
      out.branches.push_back(make_branch(spec, m, n, true, 1.0));
    } else if (2 * d > n_sites) {
      out.wrapping = Wrapping::backward;
      out.branches.push_back(make_branch(spec, m, n, false, 1.0));
    } else {
      out.wrapping = Wrapping::both_halved;
      out.branches.push_back(make_branch(spec, m, n, true, 1.0 / std::sqrt(2.0)));
      out.branches.push_back(make_branch(spec, m, n, false, 1.0 / std::sqrt(2.0)));
    }
  }
  for (const auto& b : out.branches) out.op.add(b.term);
  return out;
}

MesonAnsatz::MesonAnsatz(const LatticeModel& model)
    : model_(&model), n_sites_(model.spec().n_sites) {
  for (int m = 0; m < n_sites_; ++m)
    for (int n = 0; n < n_sites_; ++n)
      on_vacuum_.push_back(to_sparse(build_bare_meson(model.spec(), m, n).op, model.basis()) *
                           model.vacuum());
}

std::vector<std::pair<Momentum, Momentum>> MesonAnsatz::pairs(const Momentum& k) const {
  std::vector<std::pair<Momentum, Momentum>> out;
  const auto zone = model_->zone();
  for (const auto& p : zone)
    for (const auto& q : zone)
      if (p.index() + q.index() == k.index()) out.emplace_back(p, q);
  return out;
}

std::vector<cplx> MesonAnsatz::eta(const Momentum& k, const AnsatzParams& a) const {
  if (a.sigma_a <= 0) throw std::invalid_argument("sigma_A must be positive");
  std::vector<cplx> out;
  double norm = 0.0;
  for (const auto& [p, q] : pairs(k)) {
    const double dk = p.value() - q.value();
    out.push_back(std::polar(std::exp(-dk * dk / (4.0 * a.sigma_a * a.sigma_a)), a.mu_a * dk / 2.0));
    norm += std::norm(out.back());
  }
  if (norm <= 0) throw std::domain_error("eta vanishes for every admitted pair");
  for (auto& e : out) e /= std::sqrt(norm);
  return out;
}

Mat MesonAnsatz::position_weights(const Momentum& k, const AnsatzParams& a) const {
  const double m_f = model_->spec().m_f;
  const auto ps = pairs(k);
  const auto etas = eta(k, a);
  Mat w = Mat::Zero(n_sites_, n_sites_);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    Vec c(n_sites_), d(n_sites_);
    for (int s = 0; s < n_sites_; ++s) {
      c(s) = spinor_weight(ps[i].first, s, SpinorRole::C, m_f);
      d(s) = spinor_weight(ps[i].second, s, SpinorRole::D, m_f);
    }
    w += etas[i] * c * d.transpose();
  }
  return w;
}

Vec MesonAnsatz::raw(const Momentum& k, const AnsatzParams& a) const {
  const Mat w = position_weights(k, a);
  Vec out = Vec::Zero(static_cast<int>(model_->dim()));
  for (int m = 0; m < n_sites_; ++m)
    for (int n = 0; n < n_sites_; ++n) out += w(m, n) * meson_on_vacuum(m, n);
  return out;
}

Vec MesonAnsatz::state(const Momentum& k, const AnsatzParams& a) const {
  Vec r = raw(k, a);
  const Vec& omega = model_->vacuum();
  r -= omega * omega.dot(r);
  const double nrm = r.norm();
  if (nrm < 1e-12) throw std::domain_error("ansatz state has zero norm");
  return r / nrm;
}

double MesonAnsatz::energy(const Momentum& k, const AnsatzParams& a) const {
  return model_->energy(state(k, a));
}

SectorFit optimize_ansatz(const MesonAnsatz& ansatz, const Momentum& k, const OptimizerOptions& opt) {
  const int n_sites = ansatz.model().spec().n_sites;
  auto objective = [&](std::span<const double> x) {
    try {
      return ansatz.energy(k, {std::exp(x[0]), x[1]});
    } catch (const std::domain_error&) {
      return 1e300;
    }
  };
  const double lo = std::log(0.1), hi = std::log(2.0 * kPi);
  double best = 1e300;
  std::vector<double> seed{0.0, 0.0};
  for (int i = 0; i < opt.grid; ++i) {
    for (int j = 0; j < opt.grid; ++j) {
      const double t = opt.grid > 1 ? static_cast<double>(i) / (opt.grid - 1) : 0.0;
      const double u = opt.grid > 1 ? static_cast<double>(j) / (opt.grid - 1) : 0.5;
      const std::vector<double> x{lo + t * (hi - lo), -n_sites / 2.0 + u * n_sites};
      const double e = objective(x);
      if (e < best) {
        best = e;
        seed = x;
      }
    }
  }
  const MinimizeResult r = simplex_minimize(objective, seed, {0.3, 0.5}, opt.size_tol, opt.budget);

  SectorFit fit;
  fit.k = k;
  fit.params = {std::exp(r.x[0]), r.x[1]};
  fit.energy = r.value;
  fit.evaluations = r.evaluations + opt.grid * opt.grid;
  fit.converged = r.converged;
  const Vec psi = ansatz.state(k, fit.params);
  const SectorState exact = momentum_eigenstate(ansatz.model(), k);
  fit.exact_energy = exact.energy;
  fit.fidelity = fidelity(psi, exact.state);
  fit.mesonic_fidelity = fidelity(psi, mesonic_eigenstate(ansatz.model(), k).state);
  return fit;
}

std::vector<SectorFit> optimize_all(const MesonAnsatz& ansatz, const OptimizerOptions& opt) {
  std::vector<SectorFit> out;
  for (const auto& k : ansatz.model().zone()) out.push_back(optimize_ansatz(ansatz, k, opt));
  return out;
}

std::vector<cplx> wave_profile(const WavePacketSpec& wp, std::span<const Momentum> zone) {
  if (!(wp.sigma > 0)) throw std::invalid_argument("wave-packet width must be positive");
  std::vector<cplx> psi;
  double norm = 0.0;
  for (const auto& k : zone) {
    const double dk = k.value() - wp.k0;
    psi.push_back(std::polar(std::exp(-dk * dk / (4.0 * wp.sigma * wp.sigma)), -k.value() * wp.mu));
    norm += std::norm(psi.back());
  }
  if (!(norm > 0)) throw std::domain_error("wave-packet profile vanishes on the zone");
  for (auto& v : psi) v /= std::sqrt(norm);
  return psi;
}

namespace {

const SectorFit& fit_for(std::span<const SectorFit> fits, const Momentum& k) {
  for (const auto& f : fits)
    if (f.k == k) return f;
  throw std::invalid_argument("missing optimized parameters for a zone momentum");
}

}  // namespace

CoefficientTable build_cmn(const MesonAnsatz& ansatz, const WavePacketSpec& wp,
                           std::span<const SectorFit> fits) {
  const auto zone = ansatz.model().zone();
  const auto psi = wave_profile(wp, zone);
  const int n_sites = ansatz.model().spec().n_sites;
  CoefficientTable t{n_sites, Mat::Zero(n_sites, n_sites)};
  for (std::size_t i = 0; i < zone.size(); ++i) {
    const AnsatzParams& a = fit_for(fits, zone[i]).params;
    const double s = 1.0 / ansatz.raw(zone[i], a).norm();
    t.c += psi[i] * s * ansatz.position_weights(zone[i], a);
  }
  return t;
}

Vec apply_table(const MesonAnsatz& ansatz, const CoefficientTable& table) {
  Vec out = Vec::Zero(static_cast<int>(ansatz.model().dim()));
  for (int m = 0; m < table.n_sites; ++m)
    for (int n = 0; n < table.n_sites; ++n) out += table.c(m, n) * ansatz.meson_on_vacuum(m, n);
  return out;
}

Vec wavepacket_exact(const MesonAnsatz& ansatz, const WavePacketSpec& wp,
                     std::span<const SectorFit> fits) {
  const auto zone = ansatz.model().zone();
  const auto psi = wave_profile(wp, zone);
  Vec out = Vec::Zero(static_cast<int>(ansatz.model().dim()));
  for (std::size_t i = 0; i < zone.size(); ++i) {
    const Vec r = ansatz.raw(zone[i], fit_for(fits, zone[i]).params);
    out += psi[i] * r / r.norm();
  }
  const double nrm = out.norm();
  if (nrm < 1e-12) throw std::domain_error("wave packet has zero norm");
  return out / nrm;
}

EncodingDiagnostics encoding_diagnostics(const MesonAnsatz& ansatz, const CoefficientTable& table) {
  const LatticeModel& model = ansatz.model();
  OperatorSum create;
  for (int m = 0; m < table.n_sites; ++m)
    for (int n = 0; n < table.n_sites; ++n)
      create += build_bare_meson(model.spec(), m, n).op * table.c(m, n);
  const SparseMat bdag = to_sparse(create, model.basis());
  const SparseMat b = bdag.adjoint();
  const Vec& omega = model.vacuum();
  EncodingDiagnostics d;
  d.annihilation = (b * omega).norm();
  d.commutator = (b * (bdag * omega) - bdag * (b * omega) - omega).norm();
  return d;
}

}  // namespace lgtwp
