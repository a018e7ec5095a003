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

#include "lgtwp/circuit.hpp"
#include "lgtwp/simulate.hpp"
#include "lgtwp/spectra.hpp"
#include "lgtwp/stats.hpp"
#include "oracles.hpp"

namespace lgtwp {
namespace {

using M2 = Eigen::Matrix2cd;

M2 defining_matrix(GateKind k, double a) {
  const cplx i(0, 1);
  M2 m;
  switch (k) {
    case GateKind::H: m << 1, 1, 1, -1; return m / std::sqrt(2.0);
    case GateKind::X: m << 0, 1, 1, 0; return m;
    case GateKind::Rz: m << std::exp(-i * a / 2.0), 0, 0, std::exp(i * a / 2.0); return m;
    case GateKind::Rx: m << std::cos(a / 2), -i * std::sin(a / 2), -i * std::sin(a / 2), std::cos(a / 2); return m;
    case GateKind::Ry: m << std::cos(a / 2), -std::sin(a / 2), std::sin(a / 2), std::cos(a / 2); return m;
    case GateKind::Phase: m << 1, 0, 0, std::exp(i * a); return m;
    default: break;
  }
  throw std::logic_error("not single-qubit");
}

Vec amplitudes(const StateVector& s) {
  Vec v(static_cast<int>(s.amplitudes().size()));
  for (int i = 0; i < v.size(); ++i) v(i) = s[i];
  return v;
}

TEST(Simulate, GateMatricesOnRandomStates) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  const int n = 3;
  const M2 id = M2::Identity();
  // Random start: a fixed sequence of rotations from |000>.
  for (int trial = 0; trial < 20; ++trial) {
    StateVector s(n);
    for (int q = 0; q < n; ++q) {
      s.apply({GateKind::Ry, q, -1, u(rng)});
      s.apply({GateKind::Rz, q, -1, u(rng)});
    }
    s.apply({GateKind::CX, 0, 2, 0.0});
    s.apply({GateKind::Rx, 1, -1, u(rng)});
    const Vec before = amplitudes(s);
    for (GateKind k : {GateKind::H, GateKind::X, GateKind::Rz, GateKind::Rx, GateKind::Ry, GateKind::Phase}) {
      for (int q = 0; q < n; ++q) {
        const double a = u(rng);
        StateVector t = s;
        t.apply({k, q, -1, a});
        std::vector<M2> ops(n, id);
        ops[q] = defining_matrix(k, a);
        EXPECT_LT((amplitudes(t) - oracle::kron_qubits(ops) * before).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_NEAR(t.norm(), 1.0, 1e-12);
      }
    }
    for (int c = 0; c < n; ++c)
      for (int t = 0; t < n; ++t) {
        if (c == t) continue;
        StateVector x = s;
        x.apply({GateKind::CX, c, t, 0.0});
        M2 p0, p1, xm;
        p0 << 1, 0, 0, 0;
        p1 << 0, 0, 0, 1;
        xm << 0, 1, 1, 0;
        std::vector<M2> a(n, id), b(n, id);
        a[c] = p0;
        b[c] = p1;
        b[t] = xm;
        const Mat cx = oracle::kron_qubits(a) + oracle::kron_qubits(b);
        EXPECT_LT((amplitudes(x) - cx * before).cwiseAbs().maxCoeff(), 1e-12);
      }
  }
}

TEST(Simulate, EmptyCircuitIsIdentity) {
  LatticeSpec spec;
  const LatticeModel m(spec);
  const Circuit c{QubitLayout(spec, true)};
  const auto init = StateVector::from_physical(c.layout(), m.basis(), m.vacuum(), 1);
  const auto out = run(c, init);
  EXPECT_EQ(out.amplitudes(), init.amplitudes());
  EXPECT_THROW(run(c, StateVector(3)), std::invalid_argument);
}

TEST(Simulate, BasisStateSamplesAreConstant) {
  StateVector s(4);
  s.apply({GateKind::X, 2, -1, 0.0});
  const auto r = sample(s, 1000, 1);
  EXPECT_EQ(r.n_shots(), 1000u);
  for (auto o : r.outcomes) EXPECT_EQ(o, 4u);
}

TEST(Simulate, MultinomialBounds) {
  StateVector s(2);
  s.apply({GateKind::Ry, 0, -1, 1.1});
  s.apply({GateKind::Ry, 1, -1, 2.3});
  s.apply({GateKind::CX, 0, 1, 0.0});
  const std::size_t n = 1000000;
  const auto r = sample(s, n, 99);
  std::vector<double> counts(4, 0.0);
  for (auto o : r.outcomes) counts[o] += 1.0;
  for (int i = 0; i < 4; ++i) {
    const double p = std::norm(s[i]);
    const double sd = std::sqrt(n * p * (1 - p));
    EXPECT_LE(std::abs(counts[i] - n * p), 3 * sd + 1e-9) << "outcome " << i;
  }
}

TEST(Simulate, SamplingIsDeterministicUnderSeed) {
  StateVector s(3);
  for (int q = 0; q < 3; ++q) s.apply({GateKind::H, q, -1, 0.0});
  EXPECT_EQ(sample(s, 500, 42).outcomes, sample(s, 500, 42).outcomes);
  EXPECT_NE(sample(s, 500, 42).outcomes, sample(s, 500, 43).outcomes);
}

TEST(Simulate, PostSelectionNeedsWeight) {
  LatticeSpec spec;
  const LatticeModel m(spec);
  const QubitLayout layout(spec, true);
  const auto s = StateVector::from_physical(layout, m.basis(), m.vacuum(), 0);
  EXPECT_THROW(post_select_ancilla(s, layout, m.basis()), std::domain_error);
  const auto t = StateVector::from_physical(layout, m.basis(), m.vacuum(), 1);
  const auto ps = post_select_ancilla(t, layout, m.basis());
  EXPECT_NEAR(ps.probability, 1.0, 1e-12);
  EXPECT_NEAR(fidelity(ps.state, m.vacuum()), 1.0, 1e-12);
}

class Pipeline : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    model_ = new LatticeModel(LatticeSpec{});
    const MesonAnsatz a(*model_);
    const auto fits = optimize_all(a);
    circuit_ = new Circuit(wp_circuit(model_->spec(), build_cmn(a, {kPi / 6, 3.0, 0.0}, fits), 1, 0.1));
    init_ = new StateVector(StateVector::from_physical(circuit_->layout(), model_->basis(), model_->vacuum(), 0));
    out_ = new StateVector(run(*circuit_, *init_));
  }
  static void TearDownTestSuite() {
    delete out_;
    delete init_;
    delete circuit_;
    delete model_;
  }
  static inline LatticeModel* model_ = nullptr;
  static inline Circuit* circuit_ = nullptr;
  static inline StateVector* init_ = nullptr;
  static inline StateVector* out_ = nullptr;
};

TEST_F(Pipeline, NoiselessMitigation) {
  const auto r = sample(*out_, 2000, 3);
  const auto mit = mitigate(r, model_->basis(), circuit_->layout());
  EXPECT_EQ(mit.n_physical, mit.n_shots);  // gauge preserving
  EXPECT_LT(mit.n_ancilla1, mit.n_shots);   // truncation residual
  double total = 0.0;
  for (double p : mit.probabilities) total += p;
  EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST_F(Pipeline, HardwareFixtureCounts) {
  // Synthetic hardware record with known acceptance numbers: 356 of 500 shots
  // physical, 306 of those with ancilla 1.
  const auto& layout = circuit_->layout();
  const auto& basis = model_->basis();
  const std::uint64_t anc = 1ull << layout.ancilla();
  const std::uint64_t phys = layout.encode(basis[basis.vacuum_index()]);
  const std::uint64_t unphys = phys ^ (1ull << layout.link(0));  // one flipped link breaks Gauss
  ShotRecord r{layout.n_qubits(), 0, {}};
  for (int i = 0; i < 306; ++i) r.outcomes.push_back(phys | anc);
  for (int i = 0; i < 50; ++i) r.outcomes.push_back(phys);
  for (int i = 0; i < 144; ++i) r.outcomes.push_back(unphys | (i % 2 ? anc : 0));
  const auto mit = mitigate(r, basis, layout);
  EXPECT_EQ(mit.n_shots, 500u);
  EXPECT_EQ(mit.n_physical, 356u);
  EXPECT_EQ(mit.n_ancilla1, 306u);
  EXPECT_NEAR(mit.probabilities[basis.vacuum_index()], 1.0, 1e-15);
  ShotRecord none{layout.n_qubits(), 0, {unphys, unphys}};
  EXPECT_THROW(mitigate(none, basis, layout), std::domain_error);
}

TEST_F(Pipeline, BitFlipsReduceAcceptance) {
  const auto r = sample(*out_, 4000, 8);
  double prev = 1.1;
  for (double p : {0.0, 0.01, 0.03, 0.1, 0.3}) {
    const auto mit = mitigate(flip_bits(r, p, 17), model_->basis(), circuit_->layout());
    const double frac = static_cast<double>(mit.n_physical) / mit.n_shots;
    EXPECT_LT(frac, prev) << "p = " << p;
    prev = frac;
  }
}

TEST_F(Pipeline, DepolarizingChannel) {
  // p = 0 is noiseless sampling under the same seed.
  EXPECT_EQ(depolarized_sample(*circuit_, *init_, 0.0, 0.0, 300, 4).outcomes, sample(*out_, 300, 4).outcomes);
  EXPECT_THROW(depolarized_sample(*circuit_, *init_, 1.0, 0.0, 1, 0), std::invalid_argument);
  const auto noisy = depolarized_sample(*circuit_, *init_, 0.0, 0.01, 500, 21);
  const auto mit = mitigate(noisy, model_->basis(), circuit_->layout());
  EXPECT_LT(mit.n_physical, mit.n_shots);  // Gauss violations appear ...
  for (const auto& e : mit.events) EXPECT_LT(e.index, model_->dim());  // ... and are dropped
}

TEST_F(Pipeline, NoiseRaisesRmsError) {
  const auto ps = post_select_ancilla(*out_, circuit_->layout(), model_->basis());
  const auto truth = probabilities(ps.state);
  double clean = 0.0, noisy = 0.0;
  const int seeds = 5;
  for (int s = 0; s < seeds; ++s) {
    const auto a = mitigate(sample(*out_, 500, 100 + s), model_->basis(), circuit_->layout());
    const auto b = mitigate(depolarized_sample(*circuit_, *init_, 0.002, 0.02, 500, 100 + s), model_->basis(),
                            circuit_->layout());
    clean += rms_error(a.probabilities, truth);
    noisy += rms_error(b.probabilities, truth);
  }
  EXPECT_GT(noisy, clean);
}

TEST_F(Pipeline, NoiselessLeakage) { EXPECT_LT(out_->leakage(circuit_->layout(), model_->basis()), 1e-10); }

}  // namespace
}  // namespace lgtwp
