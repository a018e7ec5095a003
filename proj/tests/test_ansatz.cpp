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

#include <gtest/gtest.h>

#include "lgtwp/ansatz.hpp"
#include "lgtwp/spectra.hpp"
#include "oracles.hpp"

namespace lgtwp {
namespace {

LatticeSpec z2(int n = 6) {
  LatticeSpec s;
  s.n_sites = n;
  return s;
}

LatticeSpec u1(int n = 6) {
  LatticeSpec s;
  s.group = Group::U1;
  s.n_sites = n;
  s.epsilon = 1.0;
  return s;
}

// Single-particle staggered Hamiltonian with the same hopping phase.
Mat single_particle(int n_sites, double m_f) {
  Mat h = Mat::Zero(n_sites, n_sites);
  const cplx t(0.0, -0.5);
  for (int n = 0; n < n_sites; ++n) {
    h(n, n) = n % 2 ? -m_f : m_f;
    const int next = (n + 1) % n_sites;
    h(n, next) += t;
    h(next, n) += std::conj(t);
  }
  return h;
}

TEST(Ansatz, SpinorsAreFreeModes) {
  for (int n_sites : {6, 10}) {
    for (double m_f : {0.3, 1.0, 2.5}) {
      const Mat h = single_particle(n_sites, m_f);
      for (const auto& k : brillouin_zone(n_sites)) {
        Vec c(n_sites), d(n_sites);
        for (int s = 0; s < n_sites; ++s) {
          c(s) = spinor_weight(k, s, SpinorRole::C, m_f);
          d(s) = spinor_weight(k, s, SpinorRole::D, m_f);
        }
        const double w = dispersion(k.value(), m_f);
        EXPECT_LT((h * c - w * c).norm(), 1e-12) << "k index " << k.index();
        EXPECT_LT((h.transpose() * d + w * d).norm(), 1e-12) << "k index " << k.index();
      }
    }
  }
}

TEST(Ansatz, SpinorNeedsGap) {
  EXPECT_THROW(spinor_weight(Momentum(0, 6), 0, SpinorRole::C, 0.0), std::domain_error);
}

class MesonOracle : public ::testing::TestWithParam<LatticeSpec> {};

TEST_P(MesonOracle, StringFormEqualsFermionicOperator) {
  const PhysicalBasis basis(GetParam());
  const int n_sites = GetParam().n_sites;
  for (int m = 0; m < n_sites; ++m)
    for (int n = 0; n < n_sites; ++n) {
      const BareMeson bm = build_bare_meson(GetParam(), m, n);
      Mat ref = Mat::Zero(basis.size(), basis.size());
      for (const auto& br : bm.branches) ref += br.weight * oracle::meson(basis, m, n, br.forward || m == n);
      // to_dense keeps only physical-to-physical elements; a meson is gauge invariant
      EXPECT_LT((to_dense(bm.op, basis) - ref).cwiseAbs().maxCoeff(), 1e-14) << m << "," << n;
    }
}

INSTANTIATE_TEST_SUITE_P(Specs, MesonOracle, ::testing::Values(z2(4), z2(6), z2(8), u1(4), u1(6)),
                         oracle::spec_name<::testing::TestParamInfo<LatticeSpec>>);

TEST(Ansatz, MesonShapes) {
  const auto s = z2();
  EXPECT_EQ(build_bare_meson(s, 2, 2).wrapping, Wrapping::none);
  EXPECT_EQ(build_bare_meson(s, 2, 2).length(), 0);
  const auto f = build_bare_meson(s, 0, 1);
  EXPECT_EQ(f.wrapping, Wrapping::forward);
  EXPECT_EQ(f.branches.front().links, std::vector<int>({0}));
  const auto w = build_bare_meson(s, 5, 1);
  EXPECT_EQ(w.wrapping, Wrapping::forward);
  EXPECT_TRUE(w.branches.front().wraps);
  EXPECT_EQ(w.branches.front().links, std::vector<int>({5, 0}));
  EXPECT_EQ(w.branches.front().interior, std::vector<int>({0}));
  const auto b = build_bare_meson(s, 1, 5);
  EXPECT_EQ(b.wrapping, Wrapping::backward);
  EXPECT_EQ(b.branches.front().links, std::vector<int>({5, 0}));
  const auto t = build_bare_meson(s, 0, 3);
  EXPECT_EQ(t.wrapping, Wrapping::both_halved);
  ASSERT_EQ(t.branches.size(), 2u);
  EXPECT_NEAR(t.branches[0].weight, 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_EQ(t.length(), 3);
  EXPECT_THROW(build_bare_meson(s, 0, 6), std::out_of_range);
}

TEST(Ansatz, PairsAndEta) {
  const LatticeModel model(z2());
  const MesonAnsatz a(model);
  for (const auto& k : model.zone()) {
    const auto ps = a.pairs(k);
    EXPECT_FALSE(ps.empty());
    for (const auto& [p, q] : ps) EXPECT_EQ(p.index() + q.index(), k.index());
    const auto eta = a.eta(k, {0.7, 1.3});
    double norm = 0.0;
    for (const auto& e : eta) norm += std::norm(e);
    EXPECT_NEAR(norm, 1.0, 1e-14);
  }
  EXPECT_THROW(a.eta(Momentum(0, 6), {0.0, 0.0}), std::invalid_argument);
}

TEST(Ansatz, StateLiesInSector) {
  const LatticeModel model(z2());
  const MesonAnsatz a(model);
  for (const auto& k : model.zone()) {
    const Vec v = a.state(k, {0.9, 0.4});
    EXPECT_NEAR(v.norm(), 1.0, 1e-12);
    EXPECT_LT((model.projector(k) * v - v).norm(), 1e-10);
    EXPECT_LT(std::abs(model.vacuum().dot(v)), 1e-12);
  }
}

TEST(Ansatz, BenchmarkFidelities) {
  const LatticeModel model(z2());
  const MesonAnsatz a(model);
  const auto fits = optimize_all(a);
  ASSERT_EQ(fits.size(), 3u);
  for (const auto& f : fits) {
    EXPECT_GT(f.fidelity, 0.98) << "k index " << f.k.index();
    EXPECT_GE(f.energy, f.exact_energy - 1e-10);  // variational
  }
}

TEST(Ansatz, WaveProfileNormalized) {
  const auto zone = brillouin_zone(6);
  const auto psi = wave_profile({kPi / 6, 3.0, 0.0}, zone);
  double norm = 0.0;
  for (const auto& p : psi) norm += std::norm(p);
  EXPECT_NEAR(norm, 1.0, 1e-14);
  // peaked at k0
  EXPECT_GT(std::abs(psi[1]), std::abs(psi[0]));
  EXPECT_NEAR(std::abs(psi[0]), std::abs(psi[2]), 1e-14);
}

TEST(Ansatz, CoefficientTableReproducesPacket) {
  const LatticeModel model(z2());
  const MesonAnsatz a(model);
  const auto fits = optimize_all(a);
  for (double sigma : {kPi / 6, kPi / 10}) {
    const WavePacketSpec wp{sigma, 3.0, 0.0};
    const auto table = build_cmn(a, wp, fits);
    const Vec direct = apply_table(a, table);
    const Vec exact = wavepacket_exact(a, wp, fits);
    EXPECT_NEAR(fidelity(direct.normalized(), exact), 1.0, 1e-12);
    EXPECT_NEAR(direct.norm(), 1.0, 1e-10);
  }
}

TEST(Ansatz, U1ProbabilitiesMatchExact) {
  const LatticeModel m(u1());
  const MesonAnsatz a(m);
  for (const auto& f : optimize_all(a)) {
    const Vec got = a.state(f.k, f.params);
    const Vec want = momentum_eigenstate(m, f.k).state;
    for (int i = 0; i < got.size(); ++i) EXPECT_NEAR(std::norm(got(i)), std::norm(want(i)), 1e-2) << f.k.index();
  }
}

TEST(Ansatz, OptimizerBeatsDenseGrid) {
  // strong coupling: the optimum is at least as good as a brute-force 80 x 80 scan
  LatticeSpec s;
  s.m_f = 1.0;
  s.epsilon = -1.5;
  const LatticeModel m(s);
  const MesonAnsatz a(m);
  for (const auto& f : optimize_all(a)) {
    const Vec exact = momentum_eigenstate(m, f.k).state;
    double best = 0.0;
    for (int i = 0; i < 80; ++i)
      for (int j = 0; j < 80; ++j) {
        const AnsatzParams p{0.1 * std::pow(20 * kPi, i / 79.0), -3.0 + 6.0 * j / 79};
        best = std::max(best, fidelity(a.state(f.k, p), exact));
      }
    EXPECT_GE(f.fidelity, 0.95);
    EXPECT_GE(f.fidelity, best - 1e-3) << f.k.index();
  }
}

TEST(Ansatz, TenSiteEdgeMomentaAreHardest) {
  LatticeSpec s;
  s.n_sites = 10;
  s.m_f = 0.5;
  s.epsilon = -0.6;
  const LatticeModel m(s);
  const MesonAnsatz a(m);
  for (const auto& f : optimize_all(a)) {
    if (std::abs(f.k.index()) == 2) {
      EXPECT_LT(f.fidelity, 0.95);
      EXPECT_NEAR(f.fidelity, 0.90, 0.05);
    } else {
      EXPECT_GT(f.fidelity, 0.95);
    }
  }
}

}  // namespace
}  // namespace lgtwp
