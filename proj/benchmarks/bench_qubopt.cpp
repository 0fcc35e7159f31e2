// Copyright 2026 The qubopt authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "qubopt/gcp.hpp"
#include "qubopt/pmsp.hpp"
#include "qubopt/sampler.hpp"
#include "qubopt/spectrum.hpp"

using namespace qubopt;

static void BM_BuildGcpQubo(benchmark::State& state) {
  const auto nodes = static_cast<std::size_t>(state.range(0));
  GcpInstance inst = gen_complete_kpartite(nodes, 3);
  for (auto _ : state) {
    QuboModel model = build_gcp_qubo(inst, {4.0, 10.0});
    benchmark::DoNotOptimize(model);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildGcpQubo)->Arg(6)->Arg(12)->Arg(24)->Arg(48)->Arg(96)->Complexity();

static void BM_QuboEnergy(benchmark::State& state) {
  GcpInstance inst = gen_complete_kpartite(static_cast<std::size_t>(state.range(0)), 3);
  QuboModel model = build_gcp_qubo(inst, {1.0, 1.0});
  SpinVector x(model.n_vars(), VarDomain::Binary);
  for (std::size_t v = 0; v < inst.n_nodes; ++v) x.set_bit(v * 3, true);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qubo_energy(model, x));
  }
}
BENCHMARK(BM_QuboEnergy)->Arg(6)->Arg(24)->Arg(96);

static void BM_EnumerateSpectrum(benchmark::State& state) {
  PmspInstance inst = gen_balanced_instance({7, 6, 5, 4, 3, 1}, 2, 3);
  QuboModel model = build_pmsp_qubo(inst, {320.0, 2.0});
  EnumerationLimits limits;
  limits.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    SpectrumReport report = enumerate_spectrum(model, limits);
    benchmark::DoNotOptimize(report);
  }
  state.SetItemsProcessed(state.iterations() * 16384);
}
BENCHMARK(BM_EnumerateSpectrum)->Arg(1)->Arg(2);

static void BM_SaSample(benchmark::State& state) {
  GcpInstance inst = gen_complete_kpartite(6, 3);
  QuboModel model = build_gcp_qubo(inst, {1.0, 1.0});
  SaConfig cfg;
  cfg.n_reads = 100;
  cfg.sweeps_per_read = static_cast<std::uint64_t>(state.range(0));
  cfg.seed = 12345;
  cfg.threads = 1;
  for (auto _ : state) {
    SampleSet set = sa_sample(model, cfg);
    benchmark::DoNotOptimize(set);
  }
  state.SetItemsProcessed(state.iterations() * 100 * state.range(0));
}
BENCHMARK(BM_SaSample)->Arg(50)->Arg(200)->Arg(800);

BENCHMARK_MAIN();
