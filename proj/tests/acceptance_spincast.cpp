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

// Acceptance suite. Every criterion prints exactly one PASS/FAIL line with
// the measured quantity, its pinned tolerance, and the runtime. The process
// exits with the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "spincast/clique.hpp"
#include "spincast/compiler.hpp"
#include "spincast/hamiltonian.hpp"
#include "spincast/pipeline.hpp"
#include "spincast/spin_model.hpp"

using namespace spincast;

namespace {

int g_failures = 0;

struct Criterion {
    const char* name;
    double budget_seconds;
};

void report(const Criterion& criterion, bool pass, const std::string& detail, double seconds) {
    if (seconds > criterion.budget_seconds) {
        pass = false;
    }
    std::printf("[%s] %s: %s (%.2fs of %.0fs budget)\n", pass ? "PASS" : "FAIL", criterion.name,
                detail.c_str(), seconds, criterion.budget_seconds);
    if (!pass) ++g_failures;
}

void run(const Criterion& criterion, const std::function<std::pair<bool, std::string>()>& body) {
    const auto start = std::chrono::steady_clock::now();
    bool pass = false;
    std::string detail;
    try {
        auto [ok, text] = body();
        pass = ok;
        detail = text;
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(criterion, pass, detail, seconds);
}

std::string format(const char* fmt, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), fmt, a, b);
    return buf;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + static_cast<double>(rng() >> 11) * 0x1.0p-53 * (hi - lo);
}

const SpinModel kTrivial(1, {});
const SpinModel kPair(2, {{{0, 1}, -1.0}});
const SpinModel kChain(3, {{{0, 1}, -1.0}, {{1, 2}, 0.8}});
const SpinModel kTriangle(3, {{{0, 1}, -1.0}, {{0, 2}, 0.9}, {{1, 2}, -0.6}});

std::vector<const SpinModel*> fixtures() { return {&kTrivial, &kPair, &kChain, &kTriangle}; }

// 1. Diagonal thermal readout of the deformed clique state against the
//    brute-force oracle, over seeded random models.
void criterion_boltzmann_readout() {
    run({"1 boltzmann-readout", 10.0}, [] {
        double worst = 0.0;
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            const SpinModel model = random_model(seed, 4, 3);
            auto [system, phi] = build_clique_state(model);
            for (double beta : {0.3, 1.0, 3.0}) {
                const DeformedCliqueState deformed = apply_lambda(system, phi, beta);
                const std::vector<double> readout = thermal_readout(system, deformed.state);
                const ThermalSummary oracle = partition_function(model, beta);
                for (std::size_t s = 0; s < readout.size(); ++s) {
                    worst = std::max(worst, std::abs(readout[s] - oracle.probabilities[s]));
                }
            }
        }
        return std::make_pair(worst <= 1e-10,
                              format("max |p_quantum - p_oracle| = %.3e <= 1e-10 over 50 "
                                     "models x 3 temperatures",
                                     worst));
    });
}

// 2. Parity encoding of four-level two-site models: exact energies and
//    matching partition functions.
void criterion_completeness_encoding() {
    run({"2 completeness-encoding", 5.0}, [] {
        std::mt19937_64 rng(424242);
        double worst_energy = 0.0;
        double worst_z = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            GeneralModel gm;
            gm.n_sites = 2;
            gm.q = 4;
            std::vector<double> table(16);
            for (double& v : table) v = uniform(rng, -2.0, 2.0);
            gm.interactions.push_back({{0, 1}, table});

            const SpinModel encoded = encode_general(gm);
            for (int d0 = 0; d0 < 4; ++d0) {
                for (int d1 = 0; d1 < 4; ++d1) {
                    const double expected = general_energy(gm, {d0, d1});
                    const double got = encoded.energy(
                        SpinConfig(static_cast<std::uint32_t>((d0 << 2) | d1), 4));
                    worst_energy =
                        std::max(worst_energy, std::abs(got - expected) /
                                                   std::max(1.0, std::abs(expected)));
                }
            }
            const double z_general = general_partition_function(gm, 1.0);
            const double z_encoded = partition_function(encoded, 1.0).z;
            worst_z = std::max(worst_z, std::abs(z_general - z_encoded) / z_general);
        }
        const bool pass = worst_energy <= 1e-10 && worst_z <= 1e-10;
        return std::make_pair(pass, format("20 random q=4 k=2 models: energy rel dev %.3e, "
                                           "Z rel dev %.3e <= 1e-10",
                                           worst_energy, worst_z));
    });
}

// 3. Carving: certified layouts with the exact branch norm and a uniform
//    projection census on every fixture.
void criterion_carving() {
    run({"3 carving", 60.0}, [] {
        double worst_fidelity_deficit = 0.0;
        double worst_branch = 0.0;
        double worst_census = 0.0;
        int largest_lattice = 0;
        for (const SpinModel* model : fixtures()) {
            const ClusterLayout layout = compile_layout(CliqueSystem(*model));
            largest_lattice = std::max(largest_lattice, layout.lattice.n_sites());
            if (layout.lattice.n_sites() > 20) {
                return std::make_pair(false, std::string("fixture lattice exceeds 20 qubits"));
            }
            const CarvingCertificate cert = verify_carving(layout);
            worst_fidelity_deficit =
                std::max(worst_fidelity_deficit, std::abs(1.0 - cert.fidelity));
            if (!cert.pauli_pattern) {
                return std::make_pair(false, std::string("fixture pattern is not all-Pauli"));
            }
            worst_branch = std::max(worst_branch,
                                    std::abs(cert.branch_norm - cert.expected_branch_norm));
            const std::vector<double> census = branch_norm_census(layout);
            const double flat = std::pow(2.0, -cert.a_size);
            for (double p : census) {
                worst_census = std::max(worst_census, std::abs(p - flat));
            }
        }
        const bool pass =
            worst_fidelity_deficit <= 1e-10 && worst_branch <= 1e-10 && worst_census <= 1e-10;
        return std::make_pair(
            pass, format("4 fixtures (largest lattice %.0f qubits): fidelity deficit %.3e, "
                         "branch/census dev <= 1e-10",
                         static_cast<double>(largest_lattice), worst_fidelity_deficit));
    });
}

// 4. Smoothed-projector fidelity bound on every certified fixture.
void criterion_fidelity_bound() {
    run({"4 fidelity-bound", 60.0}, [] {
        double worst_margin = 1.0;
        for (const SpinModel* model : fixtures()) {
            const ClusterLayout layout = compile_layout(CliqueSystem(*model));
            const LambdaDeformation lambda = lattice_lambda(layout, 0.0);
            const StateVector reference = reference_state(layout, &lambda);
            const int a_size = static_cast<int>(layout.a_qubits().size());
            for (double epsilon : {0.01, 0.05, 0.1}) {
                const StateVector built =
                    build_deformed_cluster(layout, smooth(layout, epsilon), lambda);
                const double bound = std::pow(1.0 - epsilon, a_size);
                const double margin = fidelity(built, reference) - bound;
                worst_margin = std::min(worst_margin, margin);
            }
        }
        return std::make_pair(worst_margin >= -1e-10,
                              format("min(F - (1-eps)^|A|) = %.3e >= -1e-10 over fixtures x "
                                     "eps in {0.01, 0.05, 0.1}",
                                     worst_margin));
    });
}

// 5. Undeformed parent Hamiltonian baseline: sum of I - K_a on bare
//    clusters.
void criterion_undeformed_hamiltonian() {
    run({"5 undeformed-hamiltonian", 30.0}, [] {
        double worst_e0 = 0.0, worst_gap = 0.0, worst_fid = 0.0;
        for (auto [rows, cols] : {std::pair{2, 3}, std::pair{3, 3}}) {
            const LatticeGraph lattice(rows, cols);
            std::vector<LocalTerm> terms;
            for (int a = 0; a < lattice.n_sites(); ++a) {
                const ClusterStabilizer k = build_K(lattice, a);
                LocalTerm term;
                term.kind = LocalTerm::Kind::P;
                term.anchor = a;
                term.support = k.support;
                Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(1, 1);
                for (int q : k.support) {
                    const Eigen::Matrix2cd f = (q == a) ? SingleQubitOp::pauli_x().matrix()
                                                        : SingleQubitOp::pauli_z().matrix();
                    Eigen::MatrixXcd next(acc.rows() * 2, acc.cols() * 2);
                    for (Eigen::Index r = 0; r < acc.rows(); ++r) {
                        for (Eigen::Index c = 0; c < acc.cols(); ++c) {
                            next.block(2 * r, 2 * c, 2, 2) = acc(r, c) * f;
                        }
                    }
                    acc = next;
                }
                term.block =
                    Eigen::MatrixXcd::Identity(acc.rows(), acc.cols()) - acc;
                terms.push_back(std::move(term));
            }
            const SparseOperator hamiltonian(lattice.n_sites(), std::move(terms));
            const GroundReport report = ground_analysis(hamiltonian, cluster_state(lattice));
            worst_e0 = std::max(worst_e0, std::abs(report.e0));
            worst_gap = std::max(worst_gap, std::abs(report.gap - 2.0));
            worst_fid = std::max(worst_fid, 1.0 - report.fidelity);
        }
        const bool pass = worst_e0 <= 1e-9 && worst_gap <= 1e-8 && worst_fid <= 1e-9;
        return std::make_pair(pass, format("2x3 and 3x3 clusters: |E0| = %.3e <= 1e-9, "
                                           "|gap - 2| = %.3e <= 1e-8",
                                           worst_e0, worst_gap));
    });
}

// 6. Deformed parent Hamiltonian on the certified pair fixture.
void criterion_deformed_hamiltonian() {
    run({"6 deformed-hamiltonian", 300.0}, [] {
        const ClusterLayout layout = compile_layout(CliqueSystem(kPair));
        double worst_e0_rel = 0.0, worst_gap = 1e300, worst_fid = 0.0, worst_psd = 0.0;
        std::size_t worst_support = 0;
        for (double beta : {0.5, 1.0}) {
            for (double epsilon : {0.05, 0.1}) {
                const OmegaDeformation omega = smooth(layout, epsilon);
                const LambdaDeformation lambda = lattice_lambda(layout, beta);
                const SparseOperator hamiltonian = assemble(layout, omega, lambda);
                const StateVector target = build_deformed_cluster(layout, omega, lambda);
                const GroundReport report = ground_analysis(hamiltonian, target);
                worst_e0_rel =
                    std::max(worst_e0_rel, std::abs(report.e0) / report.operator_norm);
                worst_gap = std::min(worst_gap, report.gap);
                worst_fid = std::max(worst_fid, 1.0 - report.fidelity);
                for (const LocalTerm& term : hamiltonian.terms()) {
                    worst_psd = std::min(worst_psd, term.min_eigenvalue());
                    worst_support = std::max(worst_support, term.support.size());
                }
            }
        }
        const bool pass = worst_e0_rel <= 1e-8 && worst_gap >= 1e-6 && worst_fid <= 1e-8 &&
                          worst_psd >= -1e-10 && worst_support <= 5;
        return std::make_pair(pass,
                              format("pair fixture, beta in {0.5, 1}, eps in {0.05, 0.1}: "
                                     "|E0|/|H| = %.3e <= 1e-8, gap >= %.3e >= 1e-6",
                                     worst_e0_rel, worst_gap));
    });
}

// 7. End-to-end: exact projection, thermal deformation, vertex readout.
void criterion_end_to_end() {
    run({"7 end-to-end-readout", 60.0}, [] {
        double worst = 0.0;
        for (const SpinModel* model : fixtures()) {
            const ClusterLayout layout = compile_layout(CliqueSystem(*model));
            for (double beta : {0.3, 1.0}) {
                const LambdaDeformation lambda = lattice_lambda(layout, beta);
                const StateVector projected = carve_project(layout, lambda);
                const std::vector<double> readout = lattice_thermal_readout(layout, projected);
                const ThermalSummary oracle = partition_function(*model, beta);
                for (std::size_t s = 0; s < readout.size(); ++s) {
                    worst = std::max(worst, std::abs(readout[s] - oracle.probabilities[s]));
                }
            }
        }
        return std::make_pair(worst <= 1e-9,
                              format("max per-entry deviation %.3e <= 1e-9 over fixtures x "
                                     "beta in {0.3, 1}",
                                     worst));
    });
}

// 8. Closed-form single-qubit ground data against the 2x2 eigensolver.
void criterion_gamma_energy() {
    run({"8 gamma-energy-oracle", 1.0}, [] {
        double worst = 0.0;
        for (int i = 0; i <= 1000; ++i) {
            const double bj = -5.0 + 10.0 * i / 1000.0;
            const GammaEnergy ge = gamma_energy(bj);
            Eigen::Matrix2cd h;
            h << -ge.gamma, -1.0, -1.0, ge.gamma;
            Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(h);
            worst = std::max(worst, std::abs(ge.energy - es.eigenvalues()(0)));
            Eigen::Vector2cd expected;
            expected << std::exp(-bj / 2.0), std::exp(bj / 2.0);
            expected.normalize();
            worst = std::max(worst, 1.0 - std::abs(expected.dot(es.eigenvectors().col(0))));
        }
        return std::make_pair(worst <= 1e-12,
                              format("max closed-form vs eigensolver deviation %.3e <= 1e-12 "
                                     "on 1001-point grid",
                                     worst));
    });
}

}  // namespace

int main() {
    std::printf("spincast acceptance suite\n");
    criterion_boltzmann_readout();
    criterion_completeness_encoding();
    criterion_carving();
    criterion_fidelity_bound();
    criterion_undeformed_hamiltonian();
    criterion_deformed_hamiltonian();
    criterion_end_to_end();
    criterion_gamma_energy();
    if (g_failures == 0) {
        std::printf("all 8 criteria passed\n");
    } else {
        std::printf("%d criteria FAILED\n", g_failures);
    }
    return g_failures;
}
