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

#include <functional>
#include <utility>
#include <vector>

#include "spincast/pauli.hpp"
#include "spincast/spin_model.hpp"
#include "spincast/state_vector.hpp"

namespace spincast {

/// Largest |beta * J| accepted by the exponential deformations; e^150 sits
/// close to the double-precision ceiling once weights are squared.
inline constexpr double kOverflowCap = 300.0;

/// Qubit roster for the clique state of a spin model: one interaction qubit
/// per parity term of arity >= 2 (ordered by the model's canonical term
/// order), then one vertex qubit per spin. Arity-1 terms act on the vertex
/// qubits directly and get no qubit of their own.
class CliqueSystem {
  public:
    explicit CliqueSystem(SpinModel model);

    const SpinModel& model() const { return model_; }
    int n_interaction() const { return static_cast<int>(interaction_terms_.size()); }
    int n_vertex() const { return model_.n_spins(); }
    int n_qubits() const { return n_interaction() + n_vertex(); }

    int interaction_qubit(int j) const { return j; }
    int vertex_qubit(int spin) const { return n_interaction() + spin; }

    /// Model term index backing interaction qubit j.
    int interaction_term(int j) const { return interaction_terms_[j]; }
    const std::vector<int>& interaction_sites(int j) const {
        return model_.terms()[interaction_terms_[j]].sites;
    }
    double interaction_coupling(int j) const {
        return model_.terms()[interaction_terms_[j]].coupling;
    }

    /// Arity-1 coupling routed to a vertex qubit (0 when the model has no
    /// field on that spin).
    double vertex_coupling(int spin) const { return model_.field(spin); }

    /// Coupling routed to any clique qubit.
    double coupling(int qubit) const {
        return qubit < n_interaction() ? interaction_coupling(qubit)
                                       : vertex_coupling(qubit - n_interaction());
    }

  private:
    SpinModel model_;
    std::vector<int> interaction_terms_;
};

/// Equal-amplitude superposition with one branch per spin configuration:
/// interaction qubits carry the term parities, vertex qubits carry the
/// configuration itself. Amplitude 2^(-n_spins/2) per branch.
StateVector build_clique_state(const CliqueSystem& system, int dense_cap = kDenseCap);

std::pair<CliqueSystem, StateVector> build_clique_state(const SpinModel& model,
                                                        int dense_cap = kDenseCap);

/// Stabilizer generators of the clique state: Z_e * prod_{a in term} Z_a for
/// each interaction qubit e, and X_a * prod_{e incident} X_e for each vertex
/// qubit a. Count equals the qubit count.
std::vector<PauliString> clique_stabilizers(const CliqueSystem& system);

/// As above, but additionally checks every generator fixes `state` with
/// expectation +1 (within 1e-12) and that the set is mutually commuting and
/// independent. Throws VerificationError on any failure.
std::vector<PauliString> clique_stabilizers_verified(const CliqueSystem& system,
                                                     const StateVector& state);

/// The per-qubit diagonal thermal deformation: a qubit carrying coupling J
/// gets diag(e^(-beta J / 2), e^(+beta J / 2)). Couplings are indexed by
/// clique qubit; energy offsets are excluded (they cancel in probabilities).
struct LambdaDeformation {
    double beta = 0.0;
    std::vector<double> couplings;

    SingleQubitOp factor(int qubit) const;
    bool is_trivial() const;
};

/// Build the deformation for a clique system at inverse temperature beta.
/// Throws ResourceError if any |beta * J| exceeds kOverflowCap.
LambdaDeformation make_lambda(const CliqueSystem& system, double beta);

struct DeformedCliqueState {
    StateVector state;  // normalized
    double normalizer;  // 2^n_spins * |Lambda phi|^2; equals the offset-free partition function
};

/// Apply the thermal deformation to the clique state and normalize. The
/// returned normalizer reproduces the classical partition function of the
/// offset-free model.
DeformedCliqueState apply_lambda(const CliqueSystem& system, const StateVector& clique_state,
                                 double beta);

/// Diagonal readout: probability table over spin configurations obtained by
/// the computational-basis marginal of the vertex qubits.
std::vector<double> thermal_readout(const CliqueSystem& system, const StateVector& deformed);

/// Expectation of a configuration functional under the readout distribution.
double readout_observable(const CliqueSystem& system, const StateVector& deformed,
                          const std::function<double(const SpinConfig&)>& f);

}  // namespace spincast
