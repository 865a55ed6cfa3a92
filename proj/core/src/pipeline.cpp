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

#include "spincast/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <set>

#include <json.hpp>

#include "spincast/clique.hpp"
#include "spincast/compiler.hpp"
#include "spincast/hamiltonian.hpp"
#include "spincast/model_io.hpp"
#include "spincast/version.hpp"

namespace spincast {

namespace {

using nlohmann::json;

// Pinned pipeline tolerances; the acceptance suite asserts the same numbers.
constexpr double kReadoutTolerance = 1e-10;
constexpr double kZRelativeTolerance = 1e-10;
constexpr double kCarveFidelityTolerance = 1e-10;
constexpr double kBranchTolerance = 1e-10;
constexpr double kEndToEndTolerance = 1e-9;
constexpr double kGroundEnergyRelTolerance = 1e-8;
constexpr double kGapFloor = 1e-6;
constexpr double kGroundFidelityTolerance = 1e-8;
constexpr double kTermPsdFloor = -1e-10;

double uniform_from_bits(std::uint64_t bits, double lo, double hi) {
    const double unit = static_cast<double>(bits >> 11) * 0x1.0p-53;
    return lo + unit * (hi - lo);
}

std::string iso_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm_utc{};
    gmtime_r(&t, &tm_utc);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

struct CheckRecorder {
    std::vector<NumericCheck>& checks;

    bool leq(const std::string& name, double value, double threshold) {
        const bool pass = value <= threshold;
        checks.push_back({name, value, threshold, "<=", pass});
        return pass;
    }
    bool geq(const std::string& name, double value, double threshold) {
        const bool pass = value >= threshold;
        checks.push_back({name, value, threshold, ">=", pass});
        return pass;
    }
};

}  // namespace

PipelineStage stage_from_string(const std::string& name) {
    if (name == "classical") return PipelineStage::classical;
    if (name == "clique") return PipelineStage::clique;
    if (name == "compile") return PipelineStage::compile;
    if (name == "hamiltonian") return PipelineStage::hamiltonian;
    if (name == "full") return PipelineStage::full;
    throw InputError("unknown pipeline stage \"" + name + "\"");
}

std::string stage_to_string(PipelineStage stage) {
    switch (stage) {
        case PipelineStage::classical: return "classical";
        case PipelineStage::clique: return "clique";
        case PipelineStage::compile: return "compile";
        case PipelineStage::hamiltonian: return "hamiltonian";
        case PipelineStage::full: return "full";
    }
    return "full";
}

std::string RunReport::report_json(bool with_timestamp) const {
    json j;
    j["pass"] = all_pass;
    j["checks"] = json::array();
    for (const NumericCheck& c : checks) {
        j["checks"].push_back({{"name", c.name},
                               {"value", c.value},
                               {"tolerance", c.threshold},
                               {"comparison", c.comparison},
                               {"pass", c.pass}});
    }
    j["stages"] = json::object();
    for (const auto& [stage, metrics] : stage_metrics) {
        json m = json::object();
        for (const auto& [name, value] : metrics) m[name] = value;
        j["stages"][stage] = m;
    }
    json prov = json::object();
    for (const auto& [key, value] : provenance) {
        if (!with_timestamp && key == "timestamp") continue;
        prov[key] = value;
    }
    j["provenance"] = prov;
    if (!probabilities.empty()) {
        j["probabilities"] = probabilities;
    }
    return j.dump(2) + "\n";
}

RunReport run_pipeline(const PipelineConfig& config) {
    RunReport report;
    CheckRecorder check{report.checks};

    report.provenance["version"] = kVersion;
    report.provenance["seed"] = std::to_string(config.seed);
    report.provenance["stage"] = stage_to_string(config.stage);
    report.provenance["model"] = config.model_path.string();
    report.provenance["model_hash"] = file_hash_hex(config.model_path);
    report.provenance["timestamp"] = iso_timestamp();

    const SpinModel model = load_model(config.model_path);
    const int upto = static_cast<int>(config.stage == PipelineStage::full
                                          ? PipelineStage::hamiltonian
                                          : config.stage);

    // classical ------------------------------------------------------------
    const ThermalSummary oracle = partition_function(model, config.beta, config.caps.brute_cap);
    auto& classical = report.stage_metrics["classical"];
    classical["n_spins"] = model.n_spins();
    classical["beta"] = config.beta;
    classical["z"] = oracle.z;
    double prob_sum = 0.0;
    for (double p : oracle.probabilities) prob_sum += p;
    check.leq("classical.probability_sum_deviation", std::abs(prob_sum - 1.0), 1e-12);
    if (config.include_probabilities && model.n_spins() <= 16) {
        report.probabilities = oracle.probabilities;
    }

    // clique ----------------------------------------------------------------
    if (upto >= static_cast<int>(PipelineStage::clique)) {
        auto [system, phi] = build_clique_state(model, config.caps.dense_cap);
        clique_stabilizers_verified(system, phi);
        const DeformedCliqueState deformed = apply_lambda(system, phi, config.beta);

        const ThermalSummary offset_free =
            partition_function(model.with_offset(0.0), config.beta, config.caps.brute_cap);
        auto& clique = report.stage_metrics["clique"];
        clique["n_qubits"] = system.n_qubits();
        clique["z_quantum"] = deformed.normalizer;
        clique["z_oracle"] = offset_free.z;
        check.leq("clique.z_relative_deviation",
                  std::abs(deformed.normalizer - offset_free.z) / offset_free.z,
                  kZRelativeTolerance);

        const std::vector<double> readout = thermal_readout(system, deformed.state);
        double max_dev = 0.0;
        for (std::size_t s = 0; s < readout.size(); ++s) {
            max_dev = std::max(max_dev, std::abs(readout[s] - oracle.probabilities[s]));
        }
        clique["readout_max_abs_deviation"] = max_dev;
        check.leq("clique.readout_max_abs_deviation", max_dev, kReadoutTolerance);
    }

    // compile ---------------------------------------------------------------
    ClusterLayout* layout_ptr = nullptr;
    ClusterLayout layout_storage{LatticeGraph(1, 1), {Role::C}, {}, {},
                                 CliqueSystem(SpinModel(1, {})), 0.05};
    if (upto >= static_cast<int>(PipelineStage::compile)) {
        CliqueSystem system(model);
        CompileOptions copts;
        copts.max_lattice_qubits = config.caps.max_lattice;
        copts.dense_cap = config.caps.dense_cap;
        copts.epsilon = config.epsilon;
        layout_storage = compile_layout(system, copts);
        layout_ptr = &layout_storage;
        const ClusterLayout& layout = layout_storage;

        const CarvingCertificate cert = evaluate_carving(layout, config.caps.dense_cap);
        auto& compile = report.stage_metrics["compile"];
        compile["rows"] = layout.lattice.rows;
        compile["cols"] = layout.lattice.cols;
        compile["lattice_qubits"] = layout.lattice.n_sites();
        compile["a_size"] = cert.a_size;
        compile["fidelity"] = cert.fidelity;
        compile["branch_norm"] = cert.branch_norm;
        compile["pauli_pattern"] = cert.pauli_pattern ? 1.0 : 0.0;
        compile["one_a_neighbor"] = one_a_neighbor_condition(layout) ? 1.0 : 0.0;
        check.leq("compile.carving_infidelity", std::abs(1.0 - cert.fidelity),
                  kCarveFidelityTolerance);
        if (cert.pauli_pattern) {
            check.leq("compile.branch_norm_deviation",
                      std::abs(cert.branch_norm - cert.expected_branch_norm), kBranchTolerance);
            if (cert.a_size <= config.caps.census_cap) {
                const std::vector<double> census =
                    branch_norm_census(layout, config.caps.census_cap, config.caps.dense_cap);
                const double uniform = std::pow(2.0, -cert.a_size);
                double census_dev = 0.0;
                double census_sum = 0.0;
                for (double b : census) {
                    census_dev = std::max(census_dev, std::abs(b - uniform));
                    census_sum += b;
                }
                compile["census_branches"] = static_cast<double>(census.size());
                check.leq("compile.census_uniformity_deviation", census_dev, kBranchTolerance);
                check.leq("compile.census_sum_deviation", std::abs(census_sum - 1.0),
                          kBranchTolerance);
            }
        }

        // End-to-end Boltzmann consistency through the exact projection path.
        const LambdaDeformation lambda = lattice_lambda(layout, config.beta);
        const StateVector projected = carve_project(layout, lambda, config.caps.dense_cap);
        const std::vector<double> readout = lattice_thermal_readout(layout, projected);
        double e2e_dev = 0.0;
        for (std::size_t s = 0; s < readout.size(); ++s) {
            e2e_dev = std::max(e2e_dev, std::abs(readout[s] - oracle.probabilities[s]));
        }
        compile["endtoend_readout_deviation"] = e2e_dev;
        check.leq("compile.endtoend_readout_deviation", e2e_dev, kEndToEndTolerance);
    }

    // hamiltonian -----------------------------------------------------------
    if (upto >= static_cast<int>(PipelineStage::hamiltonian)) {
        const ClusterLayout& layout = *layout_ptr;
        const OmegaDeformation omega = smooth(layout, config.epsilon);
        const LambdaDeformation lambda = lattice_lambda(layout, config.beta);
        const SparseOperator hamiltonian = assemble(layout, omega, lambda);
        const StateVector target =
            build_deformed_cluster(layout, omega, lambda, config.caps.dense_cap);
        const GroundReport ground = ground_analysis(hamiltonian, target);

        auto& ham = report.stage_metrics["hamiltonian"];
        ham["term_count"] = static_cast<double>(hamiltonian.terms().size());
        ham["max_term_norm"] = hamiltonian.max_term_norm();
        ham["e0"] = ground.e0;
        ham["e1"] = ground.e1;
        ham["gap"] = ground.gap;
        ham["fidelity"] = ground.fidelity;
        ham["operator_norm"] = ground.operator_norm;
        ham["matvecs"] = ground.matvecs;
        ham["epsilon"] = config.epsilon;

        double min_eig = 0.0;
        double max_support = 0.0;
        for (const LocalTerm& term : hamiltonian.terms()) {
            min_eig = std::min(min_eig, term.min_eigenvalue());
            max_support = std::max(max_support, static_cast<double>(term.support.size()));
        }
        ham["min_term_eigenvalue"] = min_eig;
        ham["max_support"] = max_support;

        check.leq("hamiltonian.ground_energy_relative", std::abs(ground.e0) / ground.operator_norm,
                  kGroundEnergyRelTolerance);
        check.geq("hamiltonian.gap", ground.gap, kGapFloor);
        check.leq("hamiltonian.ground_fidelity_deficit", std::abs(1.0 - ground.fidelity),
                  kGroundFidelityTolerance);
        check.geq("hamiltonian.min_term_eigenvalue", min_eig, kTermPsdFloor);
        check.leq("hamiltonian.max_support", max_support, 5.0);
    }

    report.all_pass = true;
    for (const NumericCheck& c : report.checks) {
        report.all_pass = report.all_pass && c.pass;
    }
    return report;
}

SpinModel random_model(std::uint64_t seed, int max_spins, int max_arity) {
    if (max_spins < 1 || max_arity < 1) {
        throw InputError("fixture bounds must be positive");
    }
    std::mt19937_64 rng(seed);
    const int n_spins = max_spins == 1 ? 1 : 2 + static_cast<int>(rng() % (max_spins - 1));
    const int n_terms = 1 + static_cast<int>(rng() % (2 * n_spins));

    // Distinct site sets keep every coupling inside [-2, 2]; merging two
    // draws on the same subset could leave the range.
    std::set<std::vector<int>> used;
    std::vector<ParityTerm> terms;
    for (int t = 0; t < n_terms; ++t) {
        const int arity =
            1 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::min(max_arity, n_spins)));
        std::vector<int> sites;
        while (static_cast<int>(sites.size()) < arity) {
            const int s = static_cast<int>(rng() % n_spins);
            if (std::find(sites.begin(), sites.end(), s) == sites.end()) {
                sites.push_back(s);
            }
        }
        std::sort(sites.begin(), sites.end());
        const double coupling = uniform_from_bits(rng(), -2.0, 2.0);
        if (!used.insert(sites).second) {
            continue;
        }
        terms.push_back(ParityTerm{std::move(sites), coupling});
    }
    return SpinModel(n_spins, std::move(terms), 0.0, max_arity);
}

std::vector<std::string> fixture_generate(const FixtureOptions& options,
                                          const std::filesystem::path& directory) {
    std::filesystem::create_directories(directory);
    std::vector<std::string> paths;
    for (int i = 0; i < options.count; ++i) {
        const SpinModel model =
            random_model(options.seed * 1000003ULL + static_cast<std::uint64_t>(i),
                         options.max_spins, options.max_arity);
        char name[64];
        std::snprintf(name, sizeof(name), "fixture_%llu_%03d.json",
                      static_cast<unsigned long long>(options.seed), i);
        const std::filesystem::path path = directory / name;
        save_model(model, path);
        paths.push_back(path.string());
    }
    return paths;
}

}  // namespace spincast
