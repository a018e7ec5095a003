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

#include <algorithm>

#include <gtest/gtest.h>

#include "lgtwp/model.hpp"
#include "lgtwp/spectra.hpp"
#include "oracles.hpp"

namespace lgtwp {
namespace {

LatticeSpec spec(Group g, int n, double m_f, double eps, int cutoff = 1) {
  LatticeSpec s;
  s.group = g;
  s.n_sites = n;
  s.m_f = m_f;
  s.epsilon = eps;
  s.cutoff = cutoff;
  return s;
}

class DenseOracle : public ::testing::TestWithParam<LatticeSpec> {};

// The Pauli-string Hamiltonian must equal the sign-counted fermionic one entry
// by entry, including the boundary hopping term.
TEST_P(DenseOracle, HamiltonianEntries) {
  const LatticeModel model(GetParam());
  const Mat ref = oracle::hamiltonian(model.basis());
  EXPECT_LT((model.h() - ref).cwiseAbs().maxCoeff(), 1e-14);
}

TEST_P(DenseOracle, SpectrumMatches) {
  const LatticeModel model(GetParam());
  const auto a = diagonalize(model.h()).values;
  Eigen::SelfAdjointEigenSolver<Mat> es(oracle::hamiltonian(model.basis()));
  EXPECT_LT((a - es.eigenvalues()).cwiseAbs().maxCoeff(), 1e-10);
}

TEST_P(DenseOracle, TranslationMatchesFermionicShift) {
  const LatticeModel model(GetParam());
  const Mat t = Mat(model.translation());
  EXPECT_LT((t - oracle::translation(model.basis())).cwiseAbs().maxCoeff(), 1e-15);
}

INSTANTIATE_TEST_SUITE_P(Specs, DenseOracle,
                         ::testing::Values(spec(Group::Z2, 6, 1.0, -0.3), spec(Group::U1, 6, 1.0, 1.0),
                                           spec(Group::Z2, 4, 0.7, -1.2), spec(Group::Z2, 8, 0.4, -0.5),
                                           spec(Group::U1, 4, 0.5, 0.3, 2), spec(Group::U1, 8, 1.0, 1.0)),
                         oracle::spec_name<::testing::TestParamInfo<LatticeSpec>>);

TEST(Model, Hermitian) {
  for (const auto& s : {spec(Group::Z2, 6, 1.0, -0.3), spec(Group::U1, 6, 1.0, 1.0)}) {
    const LatticeModel m(s);
    EXPECT_LT((m.h() - m.h().adjoint()).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(Model, BenchmarkGroundEnergy) {
  const LatticeModel m(spec(Group::Z2, 6, 1.0, -0.3));
  EXPECT_NEAR(m.ground_energy(), -5.3248, 5e-4);
  EXPECT_NEAR(m.energy(m.vacuum()), m.ground_energy(), 1e-12);
}

TEST(Model, NoHoppingLimit) {
  // m_f sum (-1)^n n_n gives -3 and the six links give 6 eps = -1.8.
  const LatticeModel m(spec(Group::Z2, 6, 1.0, -0.3));
  const Vec v = m.strong_coupling_state();
  EXPECT_NEAR(v.dot(m.electric() * v).real(), -1.8, 1e-14);
  EXPECT_NEAR(v.dot(m.mass() * v).real(), -3.0, 1e-14);
  EXPECT_NEAR(v.dot((m.mass() + m.electric()) * v).real(), -4.8, 1e-14);
  // Hopping never acts diagonally.
  for (const auto& hop : m.hopping()) EXPECT_NEAR(std::abs(v.dot(hop * v)), 0.0, 1e-15);
}

TEST(Model, VacuumPhaseConvention) {
  const LatticeModel m(spec(Group::Z2, 6, 1.0, -0.3));
  const cplx a = m.vacuum()(static_cast<int>(m.basis().vacuum_index()));
  EXPECT_GT(a.real(), 0.0);
  EXPECT_NEAR(a.imag(), 0.0, 1e-14);
}

TEST(Model, GaussLawCommutes) {
  // Full product space, N = 4, so that the check is not automatic.
  for (const auto& s : {spec(Group::Z2, 4, 0.8, -0.4), spec(Group::U1, 4, 0.8, 0.4)}) {
    const ProductSpace space(s);
    const auto h = to_sparse(build_hamiltonian(s).total(), space);
    for (int n = 0; n < s.n_sites; ++n) {
      const auto g = to_sparse(gauss_operator(s, n), space);
      const SparseMat c = h * g - g * h;
      EXPECT_LT(Mat(c).cwiseAbs().maxCoeff(), 1e-14) << "site " << n;
    }
    const auto q = to_sparse(charge_operator(s), space);
    EXPECT_LT(Mat(SparseMat(h * q - q * h)).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(Model, PhysicalSpaceClosure) {
  // Spectrum of H on the enumerated basis equals that of H on the product
  // space restricted to Gauss-law eigenvalue 1 (Z2) / 0 (U1) and Q = N/2.
  for (const auto& s : {spec(Group::Z2, 4, 0.8, -0.4), spec(Group::U1, 4, 0.8, 0.4), spec(Group::Z2, 6, 1.0, -0.3)}) {
    const ProductSpace space(s);
    std::vector<int> keep;
    for (std::size_t i = 0; i < space.size(); ++i) {
      const BasisState st = space[i];
      if (fermion_number(st) == s.charge() && satisfies_gauss(s, st)) keep.push_back(static_cast<int>(i));
    }
    const SparseMat full = to_sparse(build_hamiltonian(s).total(), space);
    std::vector<int> pos(space.size(), -1);
    for (std::size_t a = 0; a < keep.size(); ++a) pos[keep[a]] = static_cast<int>(a);
    Mat sub = Mat::Zero(keep.size(), keep.size());
    // The kept block must be closed: no amplitude leaks to dropped states.
    double leak = 0.0;
    for (int col = 0; col < full.outerSize(); ++col)
      for (SparseMat::InnerIterator it(full, col); it; ++it) {
        if (pos[col] < 0) continue;
        if (pos[it.row()] < 0)
          leak = std::max(leak, std::abs(it.value()));
        else
          sub(pos[it.row()], pos[col]) = it.value();
      }
    EXPECT_EQ(leak, 0.0);
    const LatticeModel m(s);
    Eigen::SelfAdjointEigenSolver<Mat> es(sub);
    EXPECT_LT((es.eigenvalues() - diagonalize(m.h()).values).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(Model, NonGaugeInvariantOperatorRejected) {
  const LatticeSpec s = spec(Group::Z2, 6, 1.0, -0.3);
  const PhysicalBasis b(s);
  EXPECT_THROW(to_sparse(OperatorSum(Term{1.0, {fermion(0, FermionOp::Raise), fermion(1, FermionOp::Lower)}}), b),
               std::domain_error);
}

TEST(Model, TranslationCommutesAndCycles) {
  for (const auto& s : {spec(Group::Z2, 6, 1.0, -0.3), spec(Group::U1, 6, 1.0, 1.0), spec(Group::Z2, 8, 0.3, -0.2)}) {
    const LatticeModel m(s);
    const Mat t = Mat(m.translation());
    EXPECT_LT((t * m.h() - m.h() * t).cwiseAbs().maxCoeff(), 1e-13);
    Mat p = Mat::Identity(m.dim(), m.dim());
    for (int j = 0; j < s.n_sites / 2; ++j) p = t * p;
    EXPECT_LT((p - Mat::Identity(m.dim(), m.dim())).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LT((t.adjoint() * t - Mat::Identity(m.dim(), m.dim())).cwiseAbs().maxCoeff(), 1e-15);
  }
}

TEST(Model, ProjectorAlgebra) {
  for (const auto& s : {spec(Group::Z2, 6, 1.0, -0.3), spec(Group::U1, 6, 1.0, 1.0)}) {
    const LatticeModel m(s);
    const auto zone = m.zone();
    const int d = static_cast<int>(m.dim());
    Mat sum = Mat::Zero(d, d);
    for (const auto& k : zone) {
      const Mat p = m.projector(k);
      EXPECT_LT((p * p - p).cwiseAbs().maxCoeff(), 1e-12);
      EXPECT_LT((p - p.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
      EXPECT_LT((p * m.h() - m.h() * p).cwiseAbs().maxCoeff(), 1e-12);
      for (const auto& k2 : zone)
        if (!(k2 == k)) {
          EXPECT_LT((p * m.projector(k2)).cwiseAbs().maxCoeff(), 1e-12);
        }
      sum += p;
    }
    EXPECT_LT((sum - Mat::Identity(d, d)).cwiseAbs().maxCoeff(), 1e-12);
  }
}

// rank(P_0) = number of T2 orbits whose accumulated sign around the orbit is +1.
TEST(Model, ZeroMomentumRankByOrbits) {
  for (const auto& s : {spec(Group::Z2, 6, 1.0, -0.3), spec(Group::U1, 6, 1.0, 1.0), spec(Group::Z2, 4, 1.0, -0.3),
                        spec(Group::Z2, 8, 1.0, -0.3)}) {
    const LatticeModel m(s);
    const Mat t = oracle::translation(m.basis());
    const int d = static_cast<int>(m.dim());
    std::vector<bool> seen(d, false);
    int orbits_plus = 0;
    for (int i = 0; i < d; ++i) {
      if (seen[i]) continue;
      int j = i;
      double sign = 1.0;
      do {
        seen[j] = true;
        int next = 0;
        t.col(j).cwiseAbs().maxCoeff(&next);
        sign *= t(next, j).real();
        j = next;
      } while (j != i);
      if (sign > 0) ++orbits_plus;
    }
    const Mat p0 = m.projector(Momentum(0, s.n_sites));
    EXPECT_NEAR(p0.trace().real(), orbits_plus, 1e-10);
  }
}

}  // namespace
}  // namespace lgtwp
