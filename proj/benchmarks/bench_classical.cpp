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

#include "spincast/pipeline.hpp"
#include "spincast/spin_model.hpp"

using namespace spincast;

namespace {

// Nearest-neighbor chain with fields: a dense-enough term set for the
// brute-force loop to chew on.
SpinModel chain_model(int n) {
    std::vector<ParityTerm> terms;
    for (int i = 0; i + 1 < n; ++i) {
        terms.push_back({{i, i + 1}, (i % 2) ? 0.8 : -1.0});
    }
    for (int i = 0; i < n; ++i) {
        terms.push_back({{i}, 0.3});
    }
    return SpinModel(n, std::move(terms));
}

}  // namespace

static void BM_PartitionFunction(benchmark::State& state) {
    const SpinModel model = chain_model(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(partition_function(model, 1.0));
    }
    state.SetItemsProcessed(state.iterations() * (int64_t{1} << model.n_spins()));
}
BENCHMARK(BM_PartitionFunction)->Arg(12)->Arg(16)->Arg(20);

static void BM_ParityTransform(benchmark::State& state) {
    std::vector<double> table(std::size_t{1} << state.range(0));
    for (std::size_t i = 0; i < table.size(); ++i) {
        table[i] = static_cast<double>((i * 2654435761u) % 1000) / 1000.0;
    }
    for (auto _ : state) {
        std::vector<double> copy = table;
        parity_transform(copy);
        benchmark::DoNotOptimize(copy.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(table.size()));
}
BENCHMARK(BM_ParityTransform)->Arg(10)->Arg(16)->Arg(20);

static void BM_EncodeGeneral(benchmark::State& state) {
    GeneralModel gm;
    gm.n_sites = 3;
    gm.q = 4;
    std::vector<double> table(16);
    for (std::size_t i = 0; i < table.size(); ++i) {
        table[i] = static_cast<double>(i % 7) * 0.3 - 1.0;
    }
    gm.interactions.push_back({{0, 1}, table});
    gm.interactions.push_back({{1, 2}, table});
    for (auto _ : state) {
        benchmark::DoNotOptimize(encode_general(gm));
    }
}
BENCHMARK(BM_EncodeGeneral);

BENCHMARK_MAIN();
