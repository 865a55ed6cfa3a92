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
#include <random>

#include "spincast/hamiltonian.hpp"
#include "spincast/state_vector.hpp"

using namespace spincast;

namespace {

StateVector random_state(int n, std::uint64_t seed, bool normalize = true) {
    std::mt19937_64 rng(seed);
    StateVector state(n);
    for (std::size_t i = 0; i < state.dimension(); ++i) {
        const double re = static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5;
        const double im = static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5;
        state.amplitude(i) = Complex(re, im);
    }
    return normalize ? state.normalized() : state;
}

}  // namespace

TEST_CASE("plus states have uniform amplitudes") {
    StateVector one = plus_state(1);
    CHECK(one.amplitude(0).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(one.amplitude(1).real() == doctest::Approx(1.0 / std::sqrt(2.0)));

    StateVector two = plus_state(2);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(two.amplitude(i).real() == doctest::Approx(0.5));
    }

    StateVector zero = plus_state(0);
    REQUIRE(zero.dimension() == 1);
    CHECK(zero.amplitude(0) == Complex(1.0, 0.0));
}

TEST_CASE("qubit 0 is the most significant index bit") {
    StateVector state = basis_state(2, 0);
    state.apply_local_inplace(0, SingleQubitOp::pauli_x());
    CHECK(state.amplitude(2) == Complex(1.0, 0.0));  // |10>
    state.apply_local_inplace(1, SingleQubitOp::pauli_x());
    CHECK(state.amplitude(3) == Complex(1.0, 0.0));  // |11>
}

TEST_CASE("the controlled-phase gate flips only the 11 amplitude") {
    StateVector s11 = apply_cz(basis_state(2, 3), 0, 1);
    CHECK(s11.amplitude(3) == Complex(-1.0, 0.0));
    StateVector s00 = apply_cz(basis_state(2, 0), 0, 1);
    CHECK(s00.amplitude(0) == Complex(1.0, 0.0));

    StateVector pp = apply_cz(plus_state(2), 0, 1);
    CHECK(pp.amplitude(0).real() == doctest::Approx(0.5));
    CHECK(pp.amplitude(1).real() == doctest::Approx(0.5));
    CHECK(pp.amplitude(2).real() == doctest::Approx(0.5));
    CHECK(pp.amplitude(3).real() == doctest::Approx(-0.5));
}

TEST_CASE("controlled-phase is an involution and commutes with diagonals") {
    StateVector state = random_state(5, 11);
    StateVector twice = apply_cz(apply_cz(state, 1, 3), 1, 3);
    for (std::size_t i = 0; i < state.dimension(); ++i) {
        CHECK(std::abs(twice.amplitude(i) - state.amplitude(i)) <= 1e-15);
    }

    const SingleQubitOp diag = SingleQubitOp::diagonal(Complex(0.3, 0.1), Complex(1.7, -0.4));
    for (int q : {0, 1, 3}) {
        StateVector a = apply_local(apply_cz(state, 1, 3), q, diag);
        StateVector b = apply_cz(apply_local(state, q, diag), 1, 3);
        for (std::size_t i = 0; i < a.dimension(); ++i) {
            CHECK(std::abs(a.amplitude(i) - b.amplitude(i)) <= 1e-14);
        }
    }
}

TEST_CASE("controlled-phase rejects bad qubit pairs") {
    StateVector state = plus_state(2);
    CHECK_THROWS_AS(state.apply_cz_inplace(0, 0), InputError);
    CHECK_THROWS_AS(state.apply_cz_inplace(0, 2), InputError);
}

TEST_CASE("local operators act on a single tensor factor") {
    StateVector state = random_state(4, 3);
    StateVector same = apply_local(state, 2, SingleQubitOp::identity());
    for (std::size_t i = 0; i < state.dimension(); ++i) {
        CHECK(same.amplitude(i) == state.amplitude(i));
    }

    // The thermal factor turns |+> into (e^(-bJ/2), e^(+bJ/2)) / sqrt(2).
    const double bj = 0.9;
    StateVector plus = plus_state(1);
    StateVector tilted =
        apply_local(plus, 0, SingleQubitOp::diagonal(std::exp(-bj / 2), std::exp(bj / 2)));
    CHECK(tilted.amplitude(0).real() == doctest::Approx(std::exp(-bj / 2) / std::sqrt(2.0)));
    CHECK(tilted.amplitude(1).real() == doctest::Approx(std::exp(bj / 2) / std::sqrt(2.0)));

    StateVector flipped = apply_local(basis_state(1, 0), 0, SingleQubitOp::pauli_x());
    CHECK(flipped.amplitude(1) == Complex(1.0, 0.0));
}

TEST_CASE("local application norm is bounded by the operator norm") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        StateVector state = random_state(4, rng(), false);
        const SingleQubitOp op(Complex(static_cast<double>(rng() >> 11) * 0x1.0p-53, 0.2),
                               Complex(0.1, -0.7),
                               Complex(static_cast<double>(rng() >> 11) * 0x1.0p-53, 0.0),
                               Complex(-0.3, 0.4));
        StateVector out = apply_local(state, trial % 4, op);
        CHECK(out.norm() <= op.operator_norm() * state.norm() + 1e-12);
    }
}

TEST_CASE("cluster states match their definition on small lattices") {
    StateVector wire = cluster_state(LatticeGraph(1, 2));
    CHECK(wire.amplitude(0).real() == doctest::Approx(0.5));
    CHECK(wire.amplitude(1).real() == doctest::Approx(0.5));
    CHECK(wire.amplitude(2).real() == doctest::Approx(0.5));
    CHECK(wire.amplitude(3).real() == doctest::Approx(-0.5));

    StateVector site = cluster_state(LatticeGraph(1, 1));
    CHECK(site.amplitude(0).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(site.amplitude(1).real() == doctest::Approx(1.0 / std::sqrt(2.0)));

    LatticeGraph square(2, 2);
    StateVector state = cluster_state(square);
    CHECK(state.norm() == doctest::Approx(1.0));
    for (int a = 0; a < 4; ++a) {
        const Complex value = build_K(square, a).pauli.expectation(state);
        CHECK(std::abs(value - Complex(1.0, 0.0)) <= 1e-12);
    }
}

TEST_CASE("fidelity matches inner products") {
    StateVector a = random_state(3, 5);
    CHECK(fidelity(a, a) == doctest::Approx(1.0));
    CHECK(fidelity(basis_state(2, 1), basis_state(2, 2)) == doctest::Approx(0.0));
    CHECK(fidelity(basis_state(1, 0), plus_state(1)) == doctest::Approx(0.5));
    CHECK_THROWS_AS(fidelity(StateVector(2), plus_state(2)), InputError);
}

TEST_CASE("basis marginals sum partial probabilities") {
    StateVector bell(2, {Complex(1 / std::sqrt(2.0), 0), 0, 0, Complex(1 / std::sqrt(2.0), 0)});
    const int keep0[] = {0};
    std::vector<double> marginal = basis_marginal(bell, keep0);
    CHECK(marginal[0] == doctest::Approx(0.5));
    CHECK(marginal[1] == doctest::Approx(0.5));

    StateVector product = apply_local(basis_state(2, 0), 1, SingleQubitOp::hadamard());
    const int keep1[] = {1};
    marginal = basis_marginal(product, keep1);
    CHECK(marginal[0] == doctest::Approx(0.5));
    CHECK(marginal[1] == doctest::Approx(0.5));

    StateVector state = random_state(4, 23);
    const int all[] = {0, 1, 2, 3};
    marginal = basis_marginal(state, all);
    for (std::size_t i = 0; i < state.dimension(); ++i) {
        CHECK(marginal[i] == doctest::Approx(std::norm(state.amplitude(i))));
    }

    StateVector unnormalized(2, {Complex(2, 0), 0, 0, 0});
    CHECK_THROWS_AS(basis_marginal(unnormalized, keep0), InputError);
}

TEST_CASE("partial trace produces valid reduced density matrices") {
    StateVector bell(2, {Complex(1 / std::sqrt(2.0), 0), 0, 0, Complex(1 / std::sqrt(2.0), 0)});
    const int keep0[] = {0};
    Eigen::MatrixXcd rho = partial_trace(bell, keep0);
    CHECK(std::abs(rho(0, 0) - Complex(0.5, 0.0)) <= 1e-14);
    CHECK(std::abs(rho(1, 1) - Complex(0.5, 0.0)) <= 1e-14);
    CHECK(std::abs(rho(0, 1)) <= 1e-14);

    // Keeping everything gives the projector onto the state.
    StateVector psi = random_state(3, 41);
    const int all[] = {0, 1, 2};
    rho = partial_trace(psi, all);
    for (std::size_t r = 0; r < 8; ++r) {
        for (std::size_t c = 0; c < 8; ++c) {
            CHECK(std::abs(rho(r, c) - psi.amplitude(r) * std::conj(psi.amplitude(c))) <= 1e-14);
        }
    }

    CHECK_THROWS_AS(partial_trace(psi, all, 2), ResourceError);
}

TEST_CASE("marginals equal partial-trace diagonals on random states") {
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 6; ++trial) {
        const int n = 6 + static_cast<int>(rng() % 5);  // up to 10 qubits
        StateVector state = random_state(n, rng());
        std::vector<int> keep;
        for (int q = 0; q < n; ++q) {
            if (rng() & 1) keep.push_back(q);
        }
        if (keep.empty()) keep.push_back(0);
        if (keep.size() > 6) keep.resize(6);

        const std::vector<double> marginal = basis_marginal(state, keep);
        const Eigen::MatrixXcd rho = partial_trace(state, keep);
        CHECK(std::abs(rho.trace().real() - 1.0) <= 1e-12);
        CHECK((rho - rho.adjoint()).cwiseAbs().maxCoeff() <= 1e-12);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
        CHECK(es.eigenvalues().minCoeff() >= -1e-12);
        for (std::size_t i = 0; i < marginal.size(); ++i) {
            CHECK(std::abs(marginal[i] - rho(i, i).real()) <= 1e-12);
        }
    }
}

TEST_CASE("every cluster qubit with a neighbor is maximally mixed") {
    for (auto [rows, cols] : {std::pair{2, 2}, std::pair{2, 3}}) {
        const StateVector state = cluster_state(LatticeGraph(rows, cols));
        for (int q = 0; q < rows * cols; ++q) {
            const int keep[] = {q};
            const Eigen::MatrixXcd rho = partial_trace(state, keep);
            CHECK(std::abs(rho(0, 0) - Complex(0.5, 0.0)) <= 1e-12);
            CHECK(std::abs(rho(1, 1) - Complex(0.5, 0.0)) <= 1e-12);
            CHECK(std::abs(rho(0, 1)) <= 1e-12);
        }
    }
}

TEST_CASE("dense caps are enforced before allocation") {
    CHECK_THROWS_AS(plus_state(7, 6), ResourceError);
    CHECK_THROWS_AS(cluster_state(LatticeGraph(3, 3), 8), ResourceError);
    CHECK_THROWS_AS(basis_state(9, 0, 8), ResourceError);
}

TEST_CASE("single-qubit operator flags and inverses") {
    const SingleQubitOp diag = SingleQubitOp::diagonal(2.0, 0.5);
    CHECK(diag.is_diagonal());
    CHECK(diag.is_invertible());
    CHECK(diag.is_hermitian());

    const SingleQubitOp proj = SingleQubitOp::projector(1.0, 0.0);
    CHECK(!proj.is_invertible());
    CHECK_THROWS_AS(proj.inverse(), InputError);

    const SingleQubitOp h = SingleQubitOp::hadamard();
    CHECK(!h.is_diagonal());
    CHECK(h.is_hermitian());
    const SingleQubitOp hh = h * h;
    CHECK(std::abs(hh.at(0, 0) - Complex(1.0, 0.0)) <= 1e-15);
    CHECK(std::abs(hh.at(0, 1)) <= 1e-15);

    const SingleQubitOp inv = diag.inverse();
    CHECK(std::abs(inv.at(0, 0) - Complex(0.5, 0.0)) <= 1e-15);
    CHECK(std::abs(inv.at(1, 1) - Complex(2.0, 0.0)) <= 1e-15);
    CHECK(diag.operator_norm() == doctest::Approx(2.0));
}

TEST_CASE("lattice adjacency is the rectangular nearest-neighbor graph") {
    LatticeGraph lattice(3, 4);
    CHECK(lattice.n_sites() == 12);
    CHECK(lattice.index(1, 2) == 6);
    CHECK(lattice.adjacent(0, 1));
    CHECK(lattice.adjacent(0, 4));
    CHECK(!lattice.adjacent(0, 5));
    CHECK(lattice.degree(0) == 2);
    CHECK(lattice.degree(5) == 4);
    CHECK(lattice.edges().size() == 3 * 3 + 2 * 4);
    for (int q = 0; q < lattice.n_sites(); ++q) {
        CHECK(lattice.degree(q) <= 4);
    }
    CHECK_THROWS_AS(LatticeGraph(0, 3), InputError);
}
