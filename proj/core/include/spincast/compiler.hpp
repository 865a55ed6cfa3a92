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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spincast/clique.hpp"
#include "spincast/state_vector.hpp"

namespace spincast {

/// Qubit roles on the lattice. Group A is projected away (carving), group B
/// hosts the interaction qubits, group C hosts the vertex qubits. The
/// classical thermal state is generated on group C.
enum class Role : char { A = 'A', B = 'B', C = 'C' };

/// Single-qubit projection state for one group-A qubit, with a basis label
/// for reporting ("Z+" for deleted sites, "X+" for transit/wire sites;
/// non-Pauli states would be labeled "custom").
struct OmegaState {
    Complex a0{1.0, 0.0};
    Complex a1{0.0, 0.0};
    std::string label = "Z+";

    /// The orthogonal state (-conj(a1), conj(a0)).
    std::pair<Complex, Complex> perp() const { return {-std::conj(a1), std::conj(a0)}; }
    bool is_pauli_basis() const;
};

/// A compiled 2D layout: which lattice site plays which role, where each
/// clique qubit lands (target_map), and the projection states for group A.
struct ClusterLayout {
    LatticeGraph lattice;
    std::vector<Role> roles;           // one per lattice site
    std::map<int, int> target_map;      // lattice qubit -> clique qubit (roles B and C)
    std::map<int, OmegaState> omega;    // lattice qubit -> projection state (role A)
    CliqueSystem system;               // owned copy of the source system
    double default_epsilon = 0.05;

    std::vector<int> a_qubits() const;
    std::vector<int> output_qubits() const;  // B and C, ascending lattice index
    /// Lattice qubits of role C ordered by spin index.
    std::vector<int> c_qubits_in_spin_order() const;
    /// True when every omega is a Pauli-basis eigenstate.
    bool all_pauli() const;
    int lattice_qubit_of_clique(int clique_qubit) const;
};

struct CompileOptions {
    /// Largest lattice (rows * cols) the router may emit. Kept at 20 so the
    /// exhaustive branch census stays cheap; raise it for larger models.
    int max_lattice_qubits = 20;
    int dense_cap = kDenseCap;
    /// Verify the layout by dense projection when it fits the cap. Layouts
    /// beyond the cap are emitted with an unverified certificate.
    bool verify = true;
    double epsilon = 0.05;
};

/// Outcome of checking a layout against its target clique state by dense
/// projection of the cluster state.
struct CarvingCertificate {
    bool verified = false;   // a dense check was actually run
    bool valid = false;      // fidelity within tolerance and corrections trivial
    double fidelity = 0.0;
    double branch_norm = 0.0;
    double expected_branch_norm = 0.0;  // 2^(-|A|/2), asserted for Pauli patterns
    bool pauli_pattern = false;
    int a_size = 0;
    /// Residual per-output Pauli fixups; the compiler only certifies
    /// patterns where every entry is "I".
    std::vector<std::string> local_corrections;
};

/// Tolerance on carving fidelity: |1 - F| must stay below this.
inline constexpr double kCarvingTolerance = 1e-10;

/// Compile a clique system onto a rectangular lattice.
///
/// The router places the system's term-spin incidence graph on a
/// checkerboard: vertex qubits and all outputs on one color, interaction
/// transit sites on the other, so every routed path picks up an even number
/// of interior wire sites (an exact controlled-phase link) and every
/// interaction output sits at the end of an odd wire (the Hadamard the
/// clique state needs). Unused sites are deleted with Z projections. The
/// contract is the verified certificate, not the routing method; if no
/// embedding is found the call fails rather than emit a wrong layout.
ClusterLayout compile_layout(const CliqueSystem& system, const CompileOptions& options = {});

/// Dense check of a layout: project every group-A qubit onto its omega and
/// compare with the embedded target state. Never throws on mismatch; the
/// certificate carries the measured fidelity.
CarvingCertificate evaluate_carving(const ClusterLayout& layout, int dense_cap = kDenseCap);

/// As evaluate_carving, but throws VerificationError (with the fidelity in
/// the message) unless the certificate is valid.
CarvingCertificate verify_carving(const ClusterLayout& layout, int dense_cap = kDenseCap);

/// Squared norms of all 2^|A| projection branches (omega vs omega-perp per
/// group-A qubit; branch index bit 0 of qubit order = omega). Sums to 1; for
/// certified Pauli patterns every entry is 2^(-|A|).
std::vector<double> branch_norm_census(const ClusterLayout& layout, int census_cap = 20,
                                       int dense_cap = kDenseCap);

/// Smoothed projectors for group A: Omega_a = (1-eps)|w><w| + eps|w_perp><w_perp|,
/// Hermitian and invertible with eigenvalues {1-eps, eps}.
struct OmegaDeformation {
    double epsilon = 0.0;
    std::map<int, SingleQubitOp> factors;  // lattice qubit -> Omega_a

    const SingleQubitOp& factor(int lattice_qubit) const { return factors.at(lattice_qubit); }
    SingleQubitOp inverse_factor(int lattice_qubit) const;
};

/// Build the smoothing for a layout. Requires 0 < epsilon < 1/2; the upper
/// boundary is excluded because Omega = I/2 loses all selectivity.
OmegaDeformation smooth(const ClusterLayout& layout, double epsilon);

/// Thermal deformation with couplings routed onto lattice qubits through the
/// target map (group A qubits get coupling 0).
LambdaDeformation lattice_lambda(const ClusterLayout& layout, double beta);

/// The deformed cluster state: Omega on group A, Lambda on groups B and C,
/// applied to the bare cluster state, then normalized.
StateVector build_deformed_cluster(const ClusterLayout& layout, const OmegaDeformation& omega,
                                   const LambdaDeformation& lambda, int dense_cap = kDenseCap);

/// Exact-projection path (the epsilon -> 0 limit): project group A onto the
/// omega states, apply Lambda, normalize.
StateVector carve_project(const ClusterLayout& layout, const LambdaDeformation& lambda,
                          int dense_cap = kDenseCap);

/// Reference product state: group A in its omega states, groups B and C
/// carrying the (optionally deformed) clique state through the target map.
StateVector reference_state(const ClusterLayout& layout,
                            const LambdaDeformation* lambda = nullptr,
                            int dense_cap = kDenseCap);

/// Boltzmann readout on the lattice: basis marginal of the group-C qubits in
/// spin order.
std::vector<double> lattice_thermal_readout(const ClusterLayout& layout,
                                            const StateVector& state);

}  // namespace spincast
