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

// Command line driver. Exit codes: 0 success, 1 usage or malformed input,
// 2 resource cap exceeded, 3 verification failure, 4 numerical
// non-convergence.

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "spincast/clique.hpp"
#include "spincast/compiler.hpp"
#include "spincast/errors.hpp"
#include "spincast/hamiltonian.hpp"
#include "spincast/model_io.hpp"
#include "spincast/pipeline.hpp"
#include "spincast/spin_model.hpp"
#include "spincast/version.hpp"

namespace {

using nlohmann::json;
using namespace spincast;

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::input: return 1;
        case ErrorKind::resource: return 2;
        case ErrorKind::verification: return 3;
        case ErrorKind::convergence: return 4;
    }
    return 1;
}

int env_cap(const char* name, int fallback) {
    const char* value = std::getenv(name);
    if (value == nullptr) return fallback;
    try {
        return std::stoi(value);
    } catch (...) {
        throw InputError(std::string(name) + " must be an integer, got \"" + value + "\"");
    }
}

ResourceCaps caps_from_env() {
    ResourceCaps caps;
    caps.dense_cap = env_cap("SPINCAST_DENSE_CAP", caps.dense_cap);
    caps.brute_cap = env_cap("SPINCAST_BRUTE_CAP", caps.brute_cap);
    caps.census_cap = env_cap("SPINCAST_CENSUS_CAP", caps.census_cap);
    caps.max_lattice = env_cap("SPINCAST_MAX_LATTICE", caps.max_lattice);
    return caps;
}

void emit(const json& j, const std::string& output_path) {
    const std::string text = j.dump(2) + "\n";
    if (output_path.empty()) {
        std::cout << text;
    } else {
        write_file(output_path, text);
    }
}

// Observable spec: "energy" or "parity:<comma separated sites>".
std::function<double(const SpinConfig&)> parse_observable(const std::string& spec,
                                                          const SpinModel& model) {
    if (spec == "energy") {
        return [model](const SpinConfig& s) { return model.energy(s); };
    }
    if (spec.rfind("parity:", 0) == 0) {
        std::vector<int> sites;
        std::string rest = spec.substr(7);
        std::size_t pos = 0;
        while (pos < rest.size()) {
            std::size_t comma = rest.find(',', pos);
            if (comma == std::string::npos) comma = rest.size();
            try {
                sites.push_back(std::stoi(rest.substr(pos, comma - pos)));
            } catch (...) {
                throw InputError("bad parity observable site list: " + spec);
            }
            pos = comma + 1;
        }
        if (sites.empty()) {
            throw InputError("parity observable needs at least one site");
        }
        for (int s : sites) {
            if (s < 0 || s >= model.n_spins()) {
                throw InputError("parity observable site out of range");
            }
        }
        return [sites](const SpinConfig& s) {
            int p = 0;
            for (int site : sites) p ^= s.bit(site);
            return p ? -1.0 : 1.0;
        };
    }
    throw InputError("unknown observable \"" + spec + "\" (use energy or parity:<sites>)");
}

json certificate_to_json(const CarvingCertificate& cert) {
    json j;
    j["verified"] = cert.verified;
    j["valid"] = cert.valid;
    j["fidelity"] = cert.fidelity;
    j["branch_norm"] = cert.branch_norm;
    j["expected_branch_norm"] = cert.expected_branch_norm;
    j["pauli_pattern"] = cert.pauli_pattern;
    j["a_size"] = cert.a_size;
    j["local_corrections"] = cert.local_corrections;
    return j;
}

struct HamiltonianSetup {
    ClusterLayout layout;
    OmegaDeformation omega;
    LambdaDeformation lambda;
    SparseOperator hamiltonian;
};

HamiltonianSetup setup_hamiltonian(const std::string& layout_path, double beta, double epsilon) {
    ClusterLayout layout = load_layout(layout_path);
    OmegaDeformation omega = smooth(layout, epsilon);
    LambdaDeformation lambda = lattice_lambda(layout, beta);
    SparseOperator hamiltonian = assemble(layout, omega, lambda);
    return {std::move(layout), std::move(omega), std::move(lambda), std::move(hamiltonian)};
}

json hamiltonian_summary(const HamiltonianSetup& setup) {
    json j;
    j["term_count"] = setup.hamiltonian.terms().size();
    j["max_term_norm"] = setup.hamiltonian.max_term_norm();
    j["beta"] = setup.lambda.beta;
    j["epsilon"] = setup.omega.epsilon;
    j["one_a_neighbor"] = one_a_neighbor_condition(setup.layout);
    double min_eig = 0.0;
    std::size_t max_support = 0;
    double hermiticity = 0.0;
    for (const LocalTerm& term : setup.hamiltonian.terms()) {
        min_eig = std::min(min_eig, term.min_eigenvalue());
        max_support = std::max(max_support, term.support.size());
        hermiticity = std::max(hermiticity, term.hermiticity_defect());
    }
    j["min_term_eigenvalue"] = min_eig;
    j["max_support"] = max_support;
    j["hermiticity_defect"] = hermiticity;
    return j;
}

int run(CLI::App& app, int argc, char** argv) {
    const ResourceCaps caps = caps_from_env();
    int exit_code = 0;

    app.require_subcommand(1);

    // --- model validate / encode -------------------------------------------
    auto* model_cmd = app.add_subcommand("model", "Inspect and convert model files");
    model_cmd->require_subcommand(1);

    auto* validate_cmd = model_cmd->add_subcommand("validate", "Check a model file");
    std::string validate_path;
    std::optional<int> validate_arity;
    validate_cmd->add_option("file", validate_path, "model JSON file")->required();
    validate_cmd->add_option("--max-arity", validate_arity, "enforce an arity cap");
    validate_cmd->callback([&] {
        const SpinModel model = load_model(validate_path);
        if (validate_arity && model.max_arity() > *validate_arity) {
            throw InputError("model uses arity " + std::to_string(model.max_arity()) +
                             " above the requested cap");
        }
        json j;
        j["valid"] = true;
        j["n_spins"] = model.n_spins();
        j["terms"] = model.terms().size();
        j["max_arity"] = model.max_arity();
        j["canonical"] = model_to_json_string(model) == read_file(validate_path);
        emit(j, "");
    });

    auto* encode_cmd = model_cmd->add_subcommand("encode", "Encode a general q-level model");
    std::string encode_input, encode_output;
    std::optional<int> encode_arity;
    encode_cmd->add_option("file", encode_input, "general model JSON file")->required();
    encode_cmd->add_option("-o,--output", encode_output, "output model file")->required();
    encode_cmd->add_option("--max-arity", encode_arity, "cap on decomposed term arity");
    encode_cmd->callback([&] {
        const GeneralModel general = load_general(encode_input);
        const SpinModel model = encode_general(general, encode_arity);
        save_model(model, encode_output);
        json j;
        j["n_spins"] = model.n_spins();
        j["terms"] = model.terms().size();
        j["offset"] = model.offset();
        j["output"] = encode_output;
        emit(j, "");
    });

    // --- classical thermal ---------------------------------------------------
    auto* classical_cmd = app.add_subcommand("classical", "Classical brute-force oracle");
    classical_cmd->require_subcommand(1);
    auto* thermal_cmd = classical_cmd->add_subcommand("thermal", "Exact thermal summary");
    std::string thermal_path, thermal_observable, thermal_output;
    double thermal_beta = 1.0;
    bool thermal_probabilities = false;
    thermal_cmd->add_option("file", thermal_path, "model JSON file")->required();
    thermal_cmd->add_option("--beta", thermal_beta, "inverse temperature")->required();
    thermal_cmd->add_option("--observable", thermal_observable,
                            "energy or parity:<comma separated sites>");
    thermal_cmd->add_flag("--probabilities", thermal_probabilities,
                          "include the full probability table");
    thermal_cmd->add_option("-o,--output", thermal_output, "write the report to a file");
    thermal_cmd->callback([&] {
        const SpinModel model = load_model(thermal_path);
        const ThermalSummary summary = partition_function(model, thermal_beta, caps.brute_cap);
        json j;
        j["Z"] = summary.z;
        j["beta"] = summary.beta;
        j["n_spins"] = model.n_spins();
        if (thermal_probabilities) {
            j["probabilities"] = summary.probabilities;
        }
        if (!thermal_observable.empty()) {
            const auto f = parse_observable(thermal_observable, model);
            double acc = 0.0;
            for (std::uint32_t w = 0; w < summary.probabilities.size(); ++w) {
                acc += f(SpinConfig(w, model.n_spins())) * summary.probabilities[w];
            }
            j["expectation"] = acc;
            j["observable"] = thermal_observable;
        }
        emit(j, thermal_output);
    });

    // --- quantum clique ------------------------------------------------------
    auto* quantum_cmd = app.add_subcommand("quantum", "Deformed clique-state checks");
    quantum_cmd->require_subcommand(1);
    auto* clique_cmd = quantum_cmd->add_subcommand("clique", "Thermal readout of the clique state");
    std::string clique_path, clique_observable, clique_output;
    double clique_beta = 1.0;
    bool clique_compare = false;
    clique_cmd->add_option("file", clique_path, "model JSON file")->required();
    clique_cmd->add_option("--beta", clique_beta, "inverse temperature")->required();
    clique_cmd->add_flag("--compare-oracle", clique_compare,
                         "compare against the classical oracle");
    clique_cmd->add_option("--observable", clique_observable,
                           "energy or parity:<comma separated sites>");
    clique_cmd->add_option("-o,--output", clique_output, "write the report to a file");
    clique_cmd->callback([&] {
        const SpinModel model = load_model(clique_path);
        auto [system, phi] = build_clique_state(model, caps.dense_cap);
        clique_stabilizers_verified(system, phi);
        const DeformedCliqueState deformed = apply_lambda(system, phi, clique_beta);
        json j;
        j["Z_quantum"] = deformed.normalizer;
        j["beta"] = clique_beta;
        j["n_qubits"] = system.n_qubits();
        if (clique_compare) {
            const ThermalSummary oracle =
                partition_function(model.with_offset(0.0), clique_beta, caps.brute_cap);
            j["Z_oracle"] = oracle.z;
            j["z_relative_deviation"] = std::abs(deformed.normalizer - oracle.z) / oracle.z;
            const std::vector<double> readout = thermal_readout(system, deformed.state);
            double max_dev = 0.0;
            for (std::size_t s = 0; s < readout.size(); ++s) {
                max_dev = std::max(max_dev, std::abs(readout[s] - oracle.probabilities[s]));
            }
            j["max_abs_deviation"] = max_dev;
            if (max_dev > 1e-10) {
                emit(j, clique_output);
                throw VerificationError("clique readout deviates from the oracle by " +
                                        std::to_string(max_dev));
            }
        }
        if (!clique_observable.empty()) {
            const auto f = parse_observable(clique_observable, model);
            j["expectation"] = readout_observable(system, deformed.state, f);
            j["observable"] = clique_observable;
        }
        emit(j, clique_output);
    });

    // --- compile -------------------------------------------------------------
    auto* compile_cmd = app.add_subcommand("compile", "Compile a model onto a 2D lattice");
    std::string compile_path, compile_output;
    double compile_epsilon = 0.05;
    bool compile_verify = true;
    compile_cmd->add_option("file", compile_path, "model JSON file")->required();
    compile_cmd->add_option("-o,--output", compile_output, "layout JSON file")->required();
    compile_cmd->add_option("--epsilon", compile_epsilon, "default smoothing parameter");
    compile_cmd->add_flag("--verify,!--no-verify", compile_verify,
                          "verify the layout by dense projection (default on)");
    compile_cmd->callback([&] {
        const SpinModel model = load_model(compile_path);
        CliqueSystem system(model);
        CompileOptions options;
        options.max_lattice_qubits = caps.max_lattice;
        options.dense_cap = caps.dense_cap;
        options.epsilon = compile_epsilon;
        options.verify = compile_verify;
        const ClusterLayout layout = compile_layout(system, options);
        save_layout(layout, compile_output);
        json j;
        j["rows"] = layout.lattice.rows;
        j["cols"] = layout.lattice.cols;
        j["lattice_qubits"] = layout.lattice.n_sites();
        j["a_size"] = layout.a_qubits().size();
        j["verified"] = compile_verify && layout.lattice.n_sites() <= caps.dense_cap;
        j["output"] = compile_output;
        emit(j, "");
    });

    // --- carve verify ----------------------------------------------------------
    auto* carve_cmd = app.add_subcommand("carve", "Carving pattern checks");
    carve_cmd->require_subcommand(1);
    auto* carve_verify_cmd = carve_cmd->add_subcommand("verify", "Verify a layout file");
    std::string carve_path;
    carve_verify_cmd->add_option("file", carve_path, "layout JSON file")->required();
    carve_verify_cmd->callback([&] {
        const ClusterLayout layout = load_layout(carve_path);
        const CarvingCertificate cert = evaluate_carving(layout, caps.dense_cap);
        emit(certificate_to_json(cert), "");
        if (!cert.verified) {
            throw ResourceError("layout exceeds the dense verification cap");
        }
        if (!cert.valid) {
            throw VerificationError("carving certificate invalid: fidelity " +
                                    std::to_string(cert.fidelity));
        }
    });

    // --- hamiltonian build / verify ---------------------------------------------
    auto* ham_cmd = app.add_subcommand("hamiltonian", "Parent Hamiltonian construction");
    ham_cmd->require_subcommand(1);

    auto* ham_build_cmd = ham_cmd->add_subcommand("build", "Assemble the local terms");
    std::string hb_layout, hb_output, hb_terms;
    double hb_beta = 1.0, hb_epsilon = 0.05;
    ham_build_cmd->add_option("file", hb_layout, "layout JSON file")->required();
    ham_build_cmd->add_option("--beta", hb_beta, "inverse temperature")->required();
    ham_build_cmd->add_option("--epsilon", hb_epsilon, "smoothing parameter")->required();
    ham_build_cmd->add_option("-o,--output", hb_output, "report JSON file");
    ham_build_cmd->add_option("--dump-terms", hb_terms, "write all local term blocks");
    ham_build_cmd->callback([&] {
        const HamiltonianSetup setup = setup_hamiltonian(hb_layout, hb_beta, hb_epsilon);
        json report = hamiltonian_summary(setup);
        if (!hb_terms.empty()) {
            json terms = json::array();
            for (const LocalTerm& term : setup.hamiltonian.terms()) {
                json entries = json::array();
                for (Eigen::Index r = 0; r < term.block.rows(); ++r) {
                    for (Eigen::Index c = 0; c < term.block.cols(); ++c) {
                        entries.push_back({term.block(r, c).real(), term.block(r, c).imag()});
                    }
                }
                terms.push_back({{"support", term.support},
                                 {"kind", term.kind == LocalTerm::Kind::P ? "P" : "Q"},
                                 {"block", entries}});
            }
            write_file(hb_terms, terms.dump(2) + "\n");
            report["terms_file"] = hb_terms;
        }
        emit(report, hb_output);
    });

    auto* ham_verify_cmd =
        ham_cmd->add_subcommand("verify", "Diagonalize and check the ground state");
    std::string hv_layout, hv_output;
    double hv_beta = 1.0, hv_epsilon = 0.05;
    ham_verify_cmd->add_option("file", hv_layout, "layout JSON file")->required();
    ham_verify_cmd->add_option("--beta", hv_beta, "inverse temperature")->required();
    ham_verify_cmd->add_option("--epsilon", hv_epsilon, "smoothing parameter")->required();
    ham_verify_cmd->add_option("-o,--output", hv_output, "report JSON file");
    ham_verify_cmd->callback([&] {
        const HamiltonianSetup setup = setup_hamiltonian(hv_layout, hv_beta, hv_epsilon);
        const StateVector target =
            build_deformed_cluster(setup.layout, setup.omega, setup.lambda, caps.dense_cap);
        const GroundReport ground = ground_analysis(setup.hamiltonian, target);
        json j = hamiltonian_summary(setup);
        j["E0"] = ground.e0;
        j["E1"] = ground.e1;
        j["gap"] = ground.gap;
        j["fidelity"] = ground.fidelity;
        j["operator_norm"] = ground.operator_norm;
        j["iterations"] = ground.matvecs;
        j["degenerate"] = ground.degenerate;
        emit(j, hv_output);
        if (std::abs(ground.e0) > 1e-8 * ground.operator_norm || ground.gap < 1e-6 ||
            ground.fidelity < 1.0 - 1e-8) {
            throw VerificationError("ground-state verification failed: E0 " +
                                    std::to_string(ground.e0) + ", gap " +
                                    std::to_string(ground.gap) + ", fidelity " +
                                    std::to_string(ground.fidelity));
        }
    });

    // --- pipeline run -------------------------------------------------------------
    auto* pipeline_cmd = app.add_subcommand("pipeline", "End-to-end pipeline");
    pipeline_cmd->require_subcommand(1);
    auto* run_cmd = pipeline_cmd->add_subcommand("run", "Run the staged pipeline");
    PipelineConfig pipeline_config;
    pipeline_config.caps = caps;
    std::string pipeline_model, pipeline_stage = "full", pipeline_output;
    run_cmd->add_option("file", pipeline_model, "model JSON file")->required();
    run_cmd->add_option("--stage", pipeline_stage, "classical|clique|compile|hamiltonian|full");
    run_cmd->add_option("--beta", pipeline_config.beta, "inverse temperature");
    run_cmd->add_option("--epsilon", pipeline_config.epsilon, "smoothing parameter");
    run_cmd->add_option("--seed", pipeline_config.seed, "seed recorded in the report");
    run_cmd->add_option("-o,--output", pipeline_output, "report JSON file");
    run_cmd->add_flag("--probabilities", pipeline_config.include_probabilities,
                      "include the classical probability table");
    run_cmd->callback([&] {
        pipeline_config.model_path = pipeline_model;
        pipeline_config.stage = stage_from_string(pipeline_stage);
        const RunReport report = run_pipeline(pipeline_config);
        const std::string text = report.report_json();
        if (pipeline_output.empty()) {
            std::cout << text;
        } else {
            write_file(pipeline_output, text);
        }
        if (!report.all_pass) {
            exit_code = 3;
            std::cerr << "pipeline checks failed" << std::endl;
        }
    });

    // --- fixtures gen ----------------------------------------------------------------
    auto* fixtures_cmd = app.add_subcommand("fixtures", "Deterministic test fixtures");
    fixtures_cmd->require_subcommand(1);
    auto* gen_cmd = fixtures_cmd->add_subcommand("gen", "Generate pseudo-random model files");
    FixtureOptions fixture_options;
    std::string fixtures_dir = ".";
    gen_cmd->add_option("--seed", fixture_options.seed, "generator seed");
    gen_cmd->add_option("--count", fixture_options.count, "number of models");
    gen_cmd->add_option("--max-spins", fixture_options.max_spins, "largest spin count");
    gen_cmd->add_option("--max-arity", fixture_options.max_arity, "largest term arity");
    gen_cmd->add_option("-o,--output", fixtures_dir, "output directory");
    gen_cmd->callback([&] {
        const std::vector<std::string> paths = fixture_generate(fixture_options, fixtures_dir);
        json j;
        j["count"] = paths.size();
        j["files"] = paths;
        emit(j, "");
    });

    // --- state dump / diff ---------------------------------------------------------
    auto* state_cmd = app.add_subcommand("state", "Debug state dumps");
    state_cmd->require_subcommand(1);

    auto* dump_cmd = state_cmd->add_subcommand("dump", "Write a dense state to a binary file");
    std::vector<int> dump_cluster;
    std::string dump_clique, dump_layout, dump_output;
    double dump_beta = 0.0, dump_epsilon = 0.05;
    dump_cmd->add_option("--cluster", dump_cluster, "rows cols of a bare cluster state")
        ->expected(2);
    dump_cmd->add_option("--clique", dump_clique, "model file: deformed clique state");
    dump_cmd->add_option("--layout", dump_layout, "layout file: deformed cluster state");
    dump_cmd->add_option("--beta", dump_beta, "inverse temperature for deformations");
    dump_cmd->add_option("--epsilon", dump_epsilon, "smoothing parameter for --layout");
    dump_cmd->add_option("-o,--output", dump_output, "output binary file")->required();
    dump_cmd->callback([&] {
        int sources = (!dump_cluster.empty()) + (!dump_clique.empty()) + (!dump_layout.empty());
        if (sources != 1) {
            throw InputError("state dump needs exactly one of --cluster, --clique, --layout");
        }
        if (!dump_cluster.empty()) {
            save_state(cluster_state(LatticeGraph(dump_cluster[0], dump_cluster[1]),
                                     caps.dense_cap),
                       dump_output);
        } else if (!dump_clique.empty()) {
            auto [system, phi] = build_clique_state(load_model(dump_clique), caps.dense_cap);
            save_state(apply_lambda(system, phi, dump_beta).state, dump_output);
        } else {
            const ClusterLayout layout = load_layout(dump_layout);
            const OmegaDeformation omega = smooth(layout, dump_epsilon);
            const LambdaDeformation lambda = lattice_lambda(layout, dump_beta);
            save_state(build_deformed_cluster(layout, omega, lambda, caps.dense_cap),
                       dump_output);
        }
    });

    auto* diff_cmd = state_cmd->add_subcommand("diff", "Compare two state dumps");
    std::string diff_a, diff_b;
    diff_cmd->add_option("a", diff_a, "first dump")->required();
    diff_cmd->add_option("b", diff_b, "second dump")->required();
    diff_cmd->callback([&] {
        const StateVector a = load_state(diff_a);
        const StateVector b = load_state(diff_b);
        if (a.n_qubits() != b.n_qubits()) {
            throw InputError("state dumps have different qubit counts");
        }
        double max_dev = 0.0;
        for (std::size_t i = 0; i < a.dimension(); ++i) {
            max_dev = std::max(max_dev, std::abs(a.amplitude(i) - b.amplitude(i)));
        }
        json j;
        j["n_qubits"] = a.n_qubits();
        j["max_abs_deviation"] = max_dev;
        j["fidelity"] = fidelity(a, b);
        emit(j, "");
    });

    app.set_version_flag("--version", std::string(kVersion));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spincast: classical thermal states as deformed cluster states and local "
                 "parent Hamiltonians"};
    return run(app, argc, argv);
}
