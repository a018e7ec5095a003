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

#include <benchmark/benchmark.h>

#include "lgtwp/circuit.hpp"
#include "lgtwp/simulate.hpp"
#include "lgtwp/spectra.hpp"
#include "lgtwp/stats.hpp"

namespace lgtwp {
namespace {

void BM_BuildModel(benchmark::State& state) {
  LatticeSpec s;
  s.n_sites = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(LatticeModel(s).dim());
}
BENCHMARK(BM_BuildModel)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_Diagonalize(benchmark::State& state) {
  LatticeSpec s;
  s.n_sites = static_cast<int>(state.range(0));
  const LatticeModel m(s);
  for (auto _ : state) benchmark::DoNotOptimize(diagonalize(m.h()).values(0));
}
BENCHMARK(BM_Diagonalize)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_OptimizeAnsatz(benchmark::State& state) {
  const LatticeModel m{LatticeSpec{}};
  const MesonAnsatz a(m);
  for (auto _ : state) benchmark::DoNotOptimize(optimize_all(a).size());
}
BENCHMARK(BM_OptimizeAnsatz)->Unit(benchmark::kMillisecond);

struct Packet {
  LatticeModel model{LatticeSpec{}};
  MesonAnsatz ansatz{model};
  std::vector<SectorFit> fits = optimize_all(ansatz);
  CoefficientTable table = build_cmn(ansatz, {}, fits);
};

const Packet& packet() {
  static const Packet p;
  return p;
}

void BM_SimulateWavePacket(benchmark::State& state) {
  const auto& p = packet();
  const Circuit c = wp_circuit(p.model.spec(), p.table, static_cast<int>(state.range(0)), 0.0);
  const auto init = StateVector::from_physical(c.layout(), p.model.basis(), p.model.vacuum(), 0);
  for (auto _ : state) benchmark::DoNotOptimize(run(c, init).norm());
  state.counters["gates"] = static_cast<double>(c.gates().size());
}
BENCHMARK(BM_SimulateWavePacket)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Bootstrap(benchmark::State& state) {
  const auto& p = packet();
  const Circuit c = wp_circuit(p.model.spec(), p.table, 1, 0.1);
  const auto out = run(c, StateVector::from_physical(c.layout(), p.model.basis(), p.model.vacuum(), 0));
  const auto mit = mitigate(sample(out, 500, 1), p.model.basis(), c.layout());
  for (auto _ : state)
    benchmark::DoNotOptimize(bootstrap(mit.events, p.model.basis(), 10000, 1, static_cast<int>(state.range(0))).mean);
}
BENCHMARK(BM_Bootstrap)->Arg(1)->Arg(2)->UseRealTime()->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace lgtwp

BENCHMARK_MAIN();
