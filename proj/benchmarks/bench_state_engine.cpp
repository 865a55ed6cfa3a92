// Copyright 2026 The Spincast Authors
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

#include "spincast/state_vector.hpp"

using namespace spincast;

static void BM_ApplyCz(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    StateVector psi = plus_state(n);
    for (auto _ : state) {
        psi.apply_cz_inplace(0, n - 1);
        benchmark::DoNotOptimize(psi.mutable_amplitudes().data());
    }
    state.SetItemsProcessed(state.iterations() * (int64_t{1} << n));
}
BENCHMARK(BM_ApplyCz)->Arg(12)->Arg(16)->Arg(20);

static void BM_ApplyLocal(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    StateVector psi = plus_state(n);
    const SingleQubitOp h = SingleQubitOp::hadamard();
    for (auto _ : state) {
        psi.apply_local_inplace(n / 2, h);
        benchmark::DoNotOptimize(psi.mutable_amplitudes().data());
    }
    state.SetItemsProcessed(state.iterations() * (int64_t{1} << n));
}
BENCHMARK(BM_ApplyLocal)->Arg(12)->Arg(16)->Arg(20);

static void BM_ClusterState(benchmark::State& state) {
    const int rows = 4;
    const int cols = static_cast<int>(state.range(0));
    const LatticeGraph lattice(rows, cols);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cluster_state(lattice));
    }
}
BENCHMARK(BM_ClusterState)->Arg(3)->Arg(4)->Arg(5);

static void BM_BasisMarginal(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const StateVector psi = cluster_state(LatticeGraph(2, n / 2));
    std::vector<int> keep;
    for (int q = 0; q < n / 2; ++q) keep.push_back(q);
    for (auto _ : state) {
        benchmark::DoNotOptimize(basis_marginal(psi, keep));
    }
}
BENCHMARK(BM_BasisMarginal)->Arg(12)->Arg(16)->Arg(20);

BENCHMARK_MAIN();
