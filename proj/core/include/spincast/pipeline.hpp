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

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "spincast/spin_model.hpp"

namespace spincast {

enum class PipelineStage { classical, clique, compile, hamiltonian, full };

PipelineStage stage_from_string(const std::string& name);
std::string stage_to_string(PipelineStage stage);

struct ResourceCaps {
    int dense_cap = 26;
    int brute_cap = kBruteForceCap;
    int census_cap = 20;
    int max_lattice = 20;
};

struct PipelineConfig {
    std::filesystem::path model_path;
    double beta = 1.0;
    double epsilon = 0.05;
    PipelineStage stage = PipelineStage::full;
    ResourceCaps caps;
    std::uint64_t seed = 1;
    int verbosity = 0;
    bool include_probabilities = false;
};

/// One numeric verdict. `comparison` is "<=" or ">=" between value and
/// threshold; every check carries the tolerance it was judged against.
struct NumericCheck {
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    std::string comparison = "<=";
    bool pass = false;
};

/// Structured pipeline outcome. Stage metrics are flat name -> value maps;
/// report_json renders everything with deterministic key order so that two
/// runs with the same config and seed produce identical reports up to the
/// timestamp.
struct RunReport {
    bool all_pass = false;
    std::vector<NumericCheck> checks;
    std::map<std::string, std::map<std::string, double>> stage_metrics;
    std::map<std::string, std::string> provenance;
    std::vector<double> probabilities;  // populated when requested and small

    std::string report_json(bool with_timestamp = true) const;
};

/// Run the pipeline through the requested stage (stages are cumulative:
/// clique implies classical, and so on). Hard failures (parse errors, cap
/// violations, verification failures, non-convergence) throw; soft numeric
/// check failures are recorded in the report.
RunReport run_pipeline(const PipelineConfig& config);

struct FixtureOptions {
    std::uint64_t seed = 1;
    int count = 10;
    int max_spins = 4;
    int max_arity = 3;
};

/// Deterministic pseudo-random spin models for the property suites.
/// Couplings are uniform in [-2, 2]; the same options produce byte-identical
/// files. Returns the written paths.
std::vector<std::string> fixture_generate(const FixtureOptions& options,
                                          const std::filesystem::path& directory);

/// A deterministic pseudo-random model (the in-memory version of one
/// generated fixture file).
SpinModel random_model(std::uint64_t seed, int max_spins, int max_arity);

}  // namespace spincast
