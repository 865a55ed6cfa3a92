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

#include "spincast/clique.hpp"

#include <cmath>
#include <string>

namespace spincast {

namespace {

constexpr double kStabilizerTolerance = 1e-12;

void check_overflow(double beta, double coupling) {
    if (!std::isfinite(beta)) {
        throw InputError("inverse temperature must be finite");
    }
    if (std::abs(beta * coupling) > kOverflowCap) {
        throw ResourceError("|beta * J| = " + std::to_string(std::abs(beta * coupling)) +
                            " exceeds the overflow cap " + std::to_string(kOverflowCap) +
                            "; use the classical oracle for extreme temperatures");
    }
}

}  // namespace

CliqueSystem::CliqueSystem(SpinModel model) : model_(std::move(model)) {
    // Model terms are already canonically ordered; keep that order for the
    // interaction qubits.
    for (std::size_t t = 0; t < model_.terms().size(); ++t) {
        if (model_.terms()[t].sites.size() >= 2) {
            interaction_terms_.push_back(static_cast<int>(t));
        }
    }
}

StateVector build_clique_state(const CliqueSystem& system, int dense_cap) {
    const int n_spins = system.n_vertex();
    const int n_qubits = system.n_qubits();
    if (n_qubits > dense_cap) {
        throw ResourceError("clique state over " + std::to_string(n_qubits) +
                            " qubits exceeds the dense cap of " + std::to_string(dense_cap));
    }

    StateVector state(n_qubits);
    const Complex amp(std::pow(2.0, -0.5 * n_spins), 0.0);
    const SpinModel& model = system.model();
    for (std::uint32_t word = 0; word < (std::uint32_t{1} << n_spins); ++word) {
        SpinConfig config(word, n_spins);
        std::size_t index = word;  // vertex qubits occupy the least significant bits
        for (int j = 0; j < system.n_interaction(); ++j) {
            if (config.parity_of_mask(model.term_mask(system.interaction_term(j)))) {
                index |= std::size_t{1} << (n_qubits - 1 - j);
            }
        }
        state.amplitude(index) = amp;
    }
    return state;
}

std::pair<CliqueSystem, StateVector> build_clique_state(const SpinModel& model, int dense_cap) {
    CliqueSystem system(model);
    StateVector state = build_clique_state(system, dense_cap);
    return {std::move(system), std::move(state)};
}

std::vector<PauliString> clique_stabilizers(const CliqueSystem& system) {
    std::vector<PauliString> generators;
    generators.reserve(system.n_qubits());
    for (int j = 0; j < system.n_interaction(); ++j) {
        PauliString g(system.n_qubits());
        g.set_z(system.interaction_qubit(j));
        for (int site : system.interaction_sites(j)) {
            g.set_z(system.vertex_qubit(site));
        }
        generators.push_back(g);
    }
    for (int spin = 0; spin < system.n_vertex(); ++spin) {
        PauliString g(system.n_qubits());
        g.set_x(system.vertex_qubit(spin));
        for (int j = 0; j < system.n_interaction(); ++j) {
            for (int site : system.interaction_sites(j)) {
                if (site == spin) {
                    g.set_x(system.interaction_qubit(j));
                    break;
                }
            }
        }
        generators.push_back(g);
    }
    return generators;
}

std::vector<PauliString> clique_stabilizers_verified(const CliqueSystem& system,
                                                     const StateVector& state) {
    std::vector<PauliString> generators = clique_stabilizers(system);
    for (std::size_t i = 0; i < generators.size(); ++i) {
        for (std::size_t j = i + 1; j < generators.size(); ++j) {
            if (!generators[i].commutes_with(generators[j])) {
                throw VerificationError("stabilizer generators " + generators[i].label() +
                                        " and " + generators[j].label() + " do not commute");
            }
        }
    }
    if (!pauli_independent(generators)) {
        throw VerificationError("stabilizer generators are not independent");
    }
    for (const auto& g : generators) {
        const Complex value = g.expectation(state);
        if (std::abs(value - Complex(1.0, 0.0)) > kStabilizerTolerance) {
            throw VerificationError("generator " + g.label() +
                                    " does not fix the clique state: expectation " +
                                    std::to_string(value.real()));
        }
    }
    return generators;
}

SingleQubitOp LambdaDeformation::factor(int qubit) const {
    const double j = couplings.at(qubit);
    return SingleQubitOp::diagonal(std::exp(-0.5 * beta * j), std::exp(0.5 * beta * j));
}

bool LambdaDeformation::is_trivial() const {
    for (double j : couplings) {
        if (beta * j != 0.0) return false;
    }
    return true;
}

LambdaDeformation make_lambda(const CliqueSystem& system, double beta) {
    LambdaDeformation lambda;
    lambda.beta = beta;
    lambda.couplings.resize(system.n_qubits());
    for (int q = 0; q < system.n_qubits(); ++q) {
        lambda.couplings[q] = system.coupling(q);
        check_overflow(beta, lambda.couplings[q]);
    }
    return lambda;
}

DeformedCliqueState apply_lambda(const CliqueSystem& system, const StateVector& clique_state,
                                 double beta) {
    LambdaDeformation lambda = make_lambda(system, beta);
    StateVector deformed = clique_state;
    for (int q = 0; q < system.n_qubits(); ++q) {
        deformed.apply_local_inplace(q, lambda.factor(q));
    }
    // Each branch s carries weight 2^(-n/2) * e^(-beta H_par(s)/2), so the
    // squared norm times 2^n is the offset-free partition function.
    const double normalizer =
        std::pow(2.0, system.n_vertex()) * deformed.squared_norm();
    return {deformed.normalized(), normalizer};
}

std::vector<double> thermal_readout(const CliqueSystem& system, const StateVector& deformed) {
    std::vector<int> vertex_qubits(system.n_vertex());
    for (int spin = 0; spin < system.n_vertex(); ++spin) {
        vertex_qubits[spin] = system.vertex_qubit(spin);
    }
    return basis_marginal(deformed, vertex_qubits);
}

double readout_observable(const CliqueSystem& system, const StateVector& deformed,
                          const std::function<double(const SpinConfig&)>& f) {
    const std::vector<double> probs = thermal_readout(system, deformed);
    double acc = 0.0;
    for (std::uint32_t word = 0; word < probs.size(); ++word) {
        acc += f(SpinConfig(word, system.n_vertex())) * probs[word];
    }
    return acc;
}

}  // namespace spincast
