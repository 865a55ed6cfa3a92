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

#include "spincast/compiler.hpp"
#include "spincast/hamiltonian.hpp"

using namespace spincast;

namespace {

const SpinModel kTriangle(3, {{{0, 1}, -1.0}, {{0, 2}, 0.9}, {{1, 2}, -0.6}});

struct TriangleSetup {
    ClusterLayout layout = compile_layout(CliqueSystem(kTriangle));
    OmegaDeformation omega = smooth(layout, 0.1);
    LambdaDeformation lambda = lattice_lambda(layout, 0.8);
    SparseOperator hamiltonian = assemble(layout, omega, lambda);
    StateVector target = build_deformed_cluster(layout, omega, lambda);
};

TriangleSetup& setup() {
    static TriangleSetup instance;
    return instance;
}

}  // namespace

static void BM_CompileTriangle(benchmark::State& state) {
    const CliqueSystem system(kTriangle);
    CompileOptions options;
    options.verify = false;  // routing cost only
    for (auto _ : state) {
        benchmark::DoNotOptimize(compile_layout(system, options));
    }
}
BENCHMARK(BM_CompileTriangle);

static void BM_VerifyCarving(benchmark::State& state) {
    const ClusterLayout& layout = setup().layout;
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate_carving(layout));
    }
}
BENCHMARK(BM_VerifyCarving);

static void BM_AssembleTerms(benchmark::State& state) {
    const TriangleSetup& s = setup();
    for (auto _ : state) {
        benchmark::DoNotOptimize(assemble(s.layout, s.omega, s.lambda));
    }
}
BENCHMARK(BM_AssembleTerms);

static void BM_MatrixFreeApply(benchmark::State& state) {
    const TriangleSetup& s = setup();
    StateVector out(s.target.n_qubits());
    for (auto _ : state) {
        s.hamiltonian.apply(s.target.amplitudes(), out.mutable_amplitudes());
        benchmark::DoNotOptimize(out.mutable_amplitudes().data());
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<int64_t>(s.hamiltonian.dimension()));
}
BENCHMARK(BM_MatrixFreeApply);

static void BM_GroundStatePair(benchmark::State& state) {
    const SpinModel pair(2, {{{0, 1}, -1.0}});
    const ClusterLayout layout = compile_layout(CliqueSystem(pair));
    const OmegaDeformation omega = smooth(layout, 0.05);
    const LambdaDeformation lambda = lattice_lambda(layout, 1.0);
    const SparseOperator hamiltonian = assemble(layout, omega, lambda);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            lanczos_smallest(hamiltonian.as_apply_fn(), hamiltonian.dimension()));
    }
}
BENCHMARK(BM_GroundStatePair);

BENCHMARK_MAIN();
