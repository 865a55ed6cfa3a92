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

#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "spincast/compiler.hpp"
#include "spincast/lanczos.hpp"
#include "spincast/pauli.hpp"
#include "spincast/state_vector.hpp"

namespace spincast {

/// Closed-form single-qubit ground data: the unnormalized state
/// (e^(-t/2), e^(+t/2)) with t = beta * J is the unique ground state of
/// -X - gamma Z exactly when gamma = -sinh(t), with energy E = -cosh(t).
struct GammaEnergy {
    double gamma = 0.0;
    double energy = -1.0;
};

GammaEnergy gamma_energy(double beta_j, double overflow_cap = kOverflowCap);

/// Standard cluster-state stabilizer K_a = X_a * prod(Z over lattice
/// neighbors of a); support size 1 + degree(a) <= 5.
struct ClusterStabilizer {
    int center = 0;
    std::vector<int> support;  // sorted, center included
    PauliString pauli{0};
};

ClusterStabilizer build_K(const LatticeGraph& lattice, int a);

/// One Hermitian PSD block of the assembled Hamiltonian, supported on at
/// most five lattice-local qubits.
struct LocalTerm {
    enum class Kind { P, Q };

    Kind kind = Kind::P;
    int anchor = 0;  // the site the term certifies
    std::vector<int> support;
    Eigen::MatrixXcd block;

    double operator_norm() const;
    double min_eigenvalue() const;
    /// Hermiticity defect max |block - block^dagger|.
    double hermiticity_defect() const;
};

/// Group-A term: conjugate I - K_i by the inverses of the smoothing factors
/// inside supp(K_i) that fail to commute with it (factors commuting with the
/// core, such as diagonal deleted-site factors against the Z legs, pass
/// through and are omitted). Annihilates the deformed cluster state.
LocalTerm build_P(const ClusterLayout& layout, const OmegaDeformation& omega, int i);

/// Group-B/C term: conjugate -K_k - gamma_k Z_k - E_k I (built from the
/// coupling routed onto qubit k) by the non-commuting smoothing factors
/// inside supp(K_k). On canonical layouts exactly one factor remains.
LocalTerm build_Q(const ClusterLayout& layout, const OmegaDeformation& omega,
                  const LambdaDeformation& lambda, int k);

/// Sum of embedded local terms over the full lattice register. Hermitian and
/// PSD by construction; applications are matrix-free.
class SparseOperator {
  public:
    SparseOperator(int n_qubits, std::vector<LocalTerm> terms);

    int n_qubits() const { return n_qubits_; }
    std::size_t dimension() const { return std::size_t{1} << n_qubits_; }
    const std::vector<LocalTerm>& terms() const { return terms_; }

    void apply(std::span<const Complex> in, std::span<Complex> out) const;
    StateVector apply(const StateVector& state) const;
    ApplyFn as_apply_fn() const;

    /// Explicit sparse assembly; intended for small registers where the
    /// matrix-free path can be cross-checked entry for entry.
    Eigen::SparseMatrix<Complex> to_sparse() const;

    double max_term_norm() const;

  private:
    struct EmbeddedTerm {
        std::vector<std::uint64_t> support_masks;  // amplitude-index mask per support qubit
        std::uint64_t outer_mask = 0;              // bits not in the support
        Eigen::MatrixXcd block;
    };

    int n_qubits_;
    std::vector<LocalTerm> terms_;
    std::vector<EmbeddedTerm> embedded_;
};

/// The full parent Hamiltonian of a deformed layout: P terms on group A,
/// Q terms on groups B and C.
SparseOperator assemble(const ClusterLayout& layout, const OmegaDeformation& omega,
                        const LambdaDeformation& lambda);

/// True when every output qubit has at most one affecting (non-diagonal)
/// group-A qubit inside its stabilizer support, i.e. every Q term is a
/// single-factor conjugation.
bool one_a_neighbor_condition(const ClusterLayout& layout);

struct GroundOptions {
    double tolerance = 1e-10;
    int max_matvecs = 5000;
    double degeneracy_tolerance = 1e-8;
    /// Registers up to this size fall back to dense diagonalization if the
    /// iterative solver fails to converge.
    int dense_fallback_qubits = 13;
};

struct GroundReport {
    double e0 = 0.0;
    double e1 = 0.0;
    double gap = 0.0;
    double fidelity = 0.0;      // ground eigenvector vs reference state
    bool degenerate = false;
    double operator_norm = 0.0;  // largest eigenvalue (PSD)
    int matvecs = 0;
    double residual_e0 = 0.0;
    double residual_e1 = 0.0;
    bool used_dense_fallback = false;
};

/// Two lowest eigenvalues (deflated restarted Lanczos), the spectral gap,
/// and the fidelity of the computed ground vector against `reference`.
GroundReport ground_analysis(const SparseOperator& hamiltonian, const StateVector& reference,
                             const GroundOptions& options = {});

}  // namespace spincast
