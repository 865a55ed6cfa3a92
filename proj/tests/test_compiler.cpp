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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "spincast/compiler.hpp"
#include "spincast/model_io.hpp"
#include "spincast/pipeline.hpp"

using namespace spincast;

namespace {

const SpinModel kTrivial(1, {});
const SpinModel kPair(2, {{{0, 1}, -1.0}});
const SpinModel kChain(3, {{{0, 1}, -1.0}, {{1, 2}, 0.8}});
const SpinModel kTriangle(3, {{{0, 1}, -1.0}, {{0, 2}, 0.9}, {{1, 2}, -0.6}});

std::vector<const SpinModel*> fixtures() { return {&kTrivial, &kPair, &kChain, &kTriangle}; }

}  // namespace

TEST_CASE("a free spin compiles to a single site") {
    const ClusterLayout layout = compile_layout(CliqueSystem(kTrivial));
    CHECK(layout.lattice.n_sites() == 1);
    CHECK(layout.roles[0] == Role::C);
    CHECK(layout.a_qubits().empty());

    const CarvingCertificate cert = verify_carving(layout);
    CHECK(cert.fidelity == doctest::Approx(1.0));
    CHECK(cert.branch_norm == doctest::Approx(1.0));
    CHECK(cert.a_size == 0);
}

TEST_CASE("the pair model fits a small lattice with few projections") {
    const ClusterLayout layout = compile_layout(CliqueSystem(kPair));
    CHECK(layout.lattice.rows <= 3);
    CHECK(layout.lattice.cols <= 3);
    CHECK(layout.a_qubits().size() <= 6);
    CHECK(layout.all_pauli());

    const CarvingCertificate cert = verify_carving(layout);
    CHECK(std::abs(1.0 - cert.fidelity) <= 1e-10);
    CHECK(std::abs(cert.branch_norm - cert.expected_branch_norm) <= 1e-10);
    for (const std::string& c : cert.local_corrections) {
        CHECK(c == "I");
    }
}

TEST_CASE("every fixture compiles to a verified Pauli pattern within 20 sites") {
    for (const SpinModel* model : fixtures()) {
        const ClusterLayout layout = compile_layout(CliqueSystem(*model));
        CHECK(layout.lattice.n_sites() <= 20);
        CHECK(layout.all_pauli());
        const CarvingCertificate cert = verify_carving(layout);
        CHECK(cert.valid);
        CHECK(std::abs(1.0 - cert.fidelity) <= 1e-10);
    }
}

TEST_CASE("layout roles partition the lattice consistently") {
    const ClusterLayout layout = compile_layout(CliqueSystem(kChain));
    int a = 0, b = 0, c = 0;
    for (Role r : layout.roles) {
        if (r == Role::A) ++a;
        if (r == Role::B) ++b;
        if (r == Role::C) ++c;
    }
    CHECK(a == static_cast<int>(layout.a_qubits().size()));
    CHECK(b == layout.system.n_interaction());
    CHECK(c == layout.system.n_vertex());
    CHECK(static_cast<int>(layout.target_map.size()) == b + c);
    CHECK(static_cast<int>(layout.omega.size()) == a);
    // Every clique qubit appears exactly once.
    std::vector<int> seen(layout.system.n_qubits(), 0);
    for (const auto& [lattice_q, clique_q] : layout.target_map) {
        seen[clique_q] += 1;
    }
    for (int count : seen) CHECK(count == 1);
}

TEST_CASE("the branch census is uniform on certified Pauli patterns") {
    for (const SpinModel* model : {&kPair, &kChain}) {
        const ClusterLayout layout = compile_layout(CliqueSystem(*model));
        const std::vector<double> census = branch_norm_census(layout);
        const double uniform = std::pow(2.0, -static_cast<double>(layout.a_qubits().size()));
        double total = 0.0;
        for (double p : census) {
            CHECK(std::abs(p - uniform) <= 1e-10);
            total += p;
        }
        CHECK(std::abs(total - 1.0) <= 1e-10);
    }
}

TEST_CASE("the census sums to one for arbitrary projection bases") {
    ClusterLayout layout = compile_layout(CliqueSystem(kPair));
    // Rotate one omega to a non-Pauli direction; completeness must survive.
    const int q = layout.a_qubits().front();
    layout.omega[q] = OmegaState{Complex(std::cos(0.3), 0.0),
                                 Complex(std::sin(0.3) * std::cos(0.5), std::sin(0.3) * std::sin(0.5)),
                                 "custom"};
    CHECK(!layout.all_pauli());
    const std::vector<double> census = branch_norm_census(layout);
    double total = 0.0;
    for (double p : census) total += p;
    CHECK(std::abs(total - 1.0) <= 1e-10);
}

TEST_CASE("an orthogonal projection state invalidates the pattern") {
    ClusterLayout layout = compile_layout(CliqueSystem(kPair));
    const int q = layout.a_qubits().front();
    const auto [p0, p1] = layout.omega[q].perp();
    layout.omega[q] = OmegaState{p0, p1, layout.omega[q].label};

    const CarvingCertificate cert = evaluate_carving(layout);
    CHECK(cert.fidelity <= 1e-10);
    CHECK(!cert.valid);
    CHECK_THROWS_AS(verify_carving(layout), VerificationError);
}

TEST_CASE("the router reports unroutable models honestly") {
    // A spin in five terms exceeds the four lattice links of a single site.
    SpinModel star(6, {{{0, 1}, 1.0}, {{0, 2}, 1.0}, {{0, 3}, 1.0}, {{0, 4}, 1.0}, {{0, 5}, 1.0}});
    CHECK_THROWS_AS(compile_layout(CliqueSystem(star)), InputError);

    CompileOptions tight;
    tight.max_lattice_qubits = 4;
    CHECK_THROWS_AS(compile_layout(CliqueSystem(kPair), tight), ResourceError);
}

TEST_CASE("smoothing factors have the prescribed spectra") {
    const ClusterLayout layout = compile_layout(CliqueSystem(kPair));
    const double epsilon = 0.05;
    const OmegaDeformation omega = smooth(layout, epsilon);
    for (const auto& [q, factor] : omega.factors) {
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(factor.matrix());
        CHECK(es.eigenvalues()(0) == doctest::Approx(epsilon));
        CHECK(es.eigenvalues()(1) == doctest::Approx(1.0 - epsilon));
        CHECK(factor.is_hermitian());
        CHECK(factor.is_invertible());

        const Eigen::Matrix2cd product =
            factor.matrix() * omega.inverse_factor(q).matrix();
        CHECK((product - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("smoothing parameters outside (0, 1/2) are rejected") {
    const ClusterLayout layout = compile_layout(CliqueSystem(kPair));
    CHECK_THROWS_AS(smooth(layout, 0.0), InputError);
    CHECK_THROWS_AS(smooth(layout, 0.5), InputError);
    CHECK_THROWS_AS(smooth(layout, -0.1), InputError);
    CHECK_THROWS_AS(smooth(layout, 0.7), InputError);
}

TEST_CASE("deformed clusters obey the projection fidelity bound") {
    // Undeformed thermal part: the bound applies to the carving alone.
    for (const SpinModel* model : fixtures()) {
        const ClusterLayout layout = compile_layout(CliqueSystem(*model));
        const LambdaDeformation lambda = lattice_lambda(layout, 0.0);
        const StateVector reference = reference_state(layout, &lambda);
        const int a_size = static_cast<int>(layout.a_qubits().size());
        for (double epsilon : {0.01, 0.05, 0.1}) {
            const StateVector built =
                build_deformed_cluster(layout, smooth(layout, epsilon), lambda);
            const double f = fidelity(built, reference);
            CHECK(f >= std::pow(1.0 - epsilon, a_size) - 1e-10);
        }
    }
}

TEST_CASE("fidelity decreases monotonically in the smoothing parameter") {
    const ClusterLayout layout = compile_layout(CliqueSystem(kPair));
    const LambdaDeformation lambda = lattice_lambda(layout, 0.0);
    const StateVector reference = reference_state(layout, &lambda);
    double previous = 1.1;
    for (double epsilon : {0.01, 0.05, 0.1, 0.2, 0.3, 0.45}) {
        const double f =
            fidelity(build_deformed_cluster(layout, smooth(layout, epsilon), lambda), reference);
        CHECK(f <= previous + 1e-12);
        previous = f;
    }
}

TEST_CASE("the smoothed state converges to the deformed target as epsilon vanishes") {
    const ClusterLayout layout = compile_layout(CliqueSystem(kPair));
    const LambdaDeformation lambda = lattice_lambda(layout, 1.0);
    const StateVector reference = reference_state(layout, &lambda);
    double previous = 0.0;
    for (double epsilon : {0.1, 0.01, 0.001}) {
        const double f =
            fidelity(build_deformed_cluster(layout, smooth(layout, epsilon), lambda), reference);
        CHECK(f >= previous);
        previous = f;
    }
    CHECK(previous >= 1.0 - 1e-4);
}

TEST_CASE("exact projection reproduces the Boltzmann distribution end to end") {
    for (const SpinModel* model : fixtures()) {
        const ClusterLayout layout = compile_layout(CliqueSystem(*model));
        for (double beta : {0.3, 1.0}) {
            const LambdaDeformation lambda = lattice_lambda(layout, beta);
            const StateVector projected = carve_project(layout, lambda);
            const std::vector<double> readout = lattice_thermal_readout(layout, projected);
            const ThermalSummary oracle = partition_function(*model, beta);
            REQUIRE(readout.size() == oracle.probabilities.size());
            for (std::size_t s = 0; s < readout.size(); ++s) {
                CHECK(std::abs(readout[s] - oracle.probabilities[s]) <= 1e-9);
            }
        }
    }
}

TEST_CASE("layouts survive a JSON round trip byte for byte") {
    const ClusterLayout layout = compile_layout(CliqueSystem(kTriangle));
    const std::string text = layout_to_json_string(layout);
    const ClusterLayout reloaded = layout_from_json_string(text);
    CHECK(layout_to_json_string(reloaded) == text);

    const CarvingCertificate cert = verify_carving(reloaded);
    CHECK(cert.valid);

    // The reloaded layout carries the couplings needed downstream.
    const LambdaDeformation lambda = lattice_lambda(reloaded, 0.7);
    const StateVector projected = carve_project(reloaded, lambda);
    const std::vector<double> readout = lattice_thermal_readout(reloaded, projected);
    const ThermalSummary oracle = partition_function(kTriangle, 0.7);
    for (std::size_t s = 0; s < readout.size(); ++s) {
        CHECK(std::abs(readout[s] - oracle.probabilities[s]) <= 1e-9);
    }
}

TEST_CASE("compilation is deterministic") {
    const std::string a = layout_to_json_string(compile_layout(CliqueSystem(kChain)));
    const std::string b = layout_to_json_string(compile_layout(CliqueSystem(kChain)));
    CHECK(a == b);
}
