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

#include "spincast/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace spincast {

namespace {

// Kronecker product chain over the (sorted) support, with support[0] the
// most significant bit of the block index, matching the global convention.
Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Eigen::MatrixXcd pauli_block_on_support(const std::vector<int>& support, int x_site,
                                        const std::vector<int>& z_sites) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
    for (int q : support) {
        Eigen::Matrix2cd factor = Eigen::Matrix2cd::Identity();
        if (q == x_site) {
            factor = SingleQubitOp::pauli_x().matrix();
        } else if (std::find(z_sites.begin(), z_sites.end(), q) != z_sites.end()) {
            factor = SingleQubitOp::pauli_z().matrix();
        }
        out = kron(out, factor);
    }
    return out;
}

// A smoothing factor only has to be conjugated away when it fails to
// commute with the core's Pauli at its position (X at the stabilizer
// center, Z at the neighbors). Factors from Z-projected (deleted) sites are
// computational-basis diagonal and pass through the Z legs untouched; an
// X-basis factor at the center passes through the X leg. Dropping the
// commuting factors leaves the zero-energy property intact and keeps term
// norms at the single-affected-qubit scale.
bool factor_affects_core(const SingleQubitOp& factor, bool at_center) {
    const Eigen::Matrix2cd sigma = at_center ? SingleQubitOp::pauli_x().matrix()
                                             : SingleQubitOp::pauli_z().matrix();
    const Eigen::Matrix2cd commutator = factor.matrix() * sigma - sigma * factor.matrix();
    return commutator.cwiseAbs().maxCoeff() > 1e-14;
}

// Tensor product of the smoothing inverses over the group-A qubits of the
// support that actually affect the core (identity elsewhere).
Eigen::MatrixXcd smoothing_inverse_on_support(const ClusterLayout& layout,
                                              const OmegaDeformation& omega,
                                              const std::vector<int>& support, int center) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
    for (int q : support) {
        Eigen::Matrix2cd factor = Eigen::Matrix2cd::Identity();
        if (layout.roles[q] == Role::A &&
            factor_affects_core(omega.factor(q), q == center)) {
            factor = omega.inverse_factor(q).matrix();
        }
        out = kron(out, factor);
    }
    return out;
}

LocalTerm conjugated_term(LocalTerm::Kind kind, int anchor, const ClusterLayout& layout,
                          const OmegaDeformation& omega, const Eigen::MatrixXcd& core,
                          const std::vector<int>& support) {
    const Eigen::MatrixXcd m =
        smoothing_inverse_on_support(layout, omega, support, anchor);
    LocalTerm term;
    term.kind = kind;
    term.anchor = anchor;
    term.support = support;
    term.block = m.adjoint() * core * m;
    // Symmetrize away the last-bit rounding so downstream eigensolves see an
    // exactly Hermitian block.
    term.block = 0.5 * (term.block + term.block.adjoint().eval());
    return term;
}

}  // namespace

GammaEnergy gamma_energy(double beta_j, double overflow_cap) {
    if (std::abs(beta_j) > overflow_cap) {
        throw ResourceError("|beta * J| = " + std::to_string(std::abs(beta_j)) +
                            " exceeds the overflow cap");
    }
    return GammaEnergy{-std::sinh(beta_j), -std::cosh(beta_j)};
}

ClusterStabilizer build_K(const LatticeGraph& lattice, int a) {
    if (a < 0 || a >= lattice.n_sites()) {
        throw InputError("stabilizer center out of lattice range");
    }
    ClusterStabilizer k;
    k.center = a;
    k.support = lattice.neighbors(a);
    k.support.push_back(a);
    std::sort(k.support.begin(), k.support.end());
    k.pauli = PauliString(lattice.n_sites());
    k.pauli.set_x(a);
    for (int b : lattice.neighbors(a)) {
        k.pauli.set_z(b);
    }
    return k;
}

double LocalTerm::operator_norm() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(block, Eigen::EigenvaluesOnly);
    return std::max(std::abs(es.eigenvalues().minCoeff()), std::abs(es.eigenvalues().maxCoeff()));
}

double LocalTerm::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(block, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

double LocalTerm::hermiticity_defect() const {
    return (block - block.adjoint()).cwiseAbs().maxCoeff();
}

LocalTerm build_P(const ClusterLayout& layout, const OmegaDeformation& omega, int i) {
    if (layout.roles[i] != Role::A) {
        throw InputError("P terms are anchored on group-A qubits");
    }
    const ClusterStabilizer k = build_K(layout.lattice, i);
    const Eigen::MatrixXcd identity =
        Eigen::MatrixXcd::Identity(1 << k.support.size(), 1 << k.support.size());
    const Eigen::MatrixXcd core =
        identity - pauli_block_on_support(k.support, i, layout.lattice.neighbors(i));
    return conjugated_term(LocalTerm::Kind::P, i, layout, omega, core, k.support);
}

LocalTerm build_Q(const ClusterLayout& layout, const OmegaDeformation& omega,
                  const LambdaDeformation& lambda, int k) {
    if (layout.roles[k] == Role::A) {
        throw InputError("Q terms are anchored on output qubits");
    }
    const ClusterStabilizer stab = build_K(layout.lattice, k);
    const GammaEnergy ge = gamma_energy(lambda.beta * lambda.couplings.at(k));

    const Eigen::Index dim = 1 << stab.support.size();
    const Eigen::MatrixXcd k_block =
        pauli_block_on_support(stab.support, k, layout.lattice.neighbors(k));
    const Eigen::MatrixXcd z_block = pauli_block_on_support(stab.support, -1, {k});
    const Eigen::MatrixXcd core = -k_block - ge.gamma * z_block -
                                  ge.energy * Eigen::MatrixXcd::Identity(dim, dim);
    return conjugated_term(LocalTerm::Kind::Q, k, layout, omega, core, stab.support);
}

SparseOperator::SparseOperator(int n_qubits, std::vector<LocalTerm> terms)
    : n_qubits_(n_qubits), terms_(std::move(terms)) {
    embedded_.reserve(terms_.size());
    for (const LocalTerm& term : terms_) {
        EmbeddedTerm e;
        e.block = term.block;
        std::uint64_t support_bits = 0;
        for (int q : term.support) {
            const std::uint64_t mask = std::uint64_t{1} << (n_qubits_ - 1 - q);
            e.support_masks.push_back(mask);
            support_bits |= mask;
        }
        e.outer_mask = ~support_bits & ((std::uint64_t{1} << n_qubits_) - 1);
        embedded_.push_back(std::move(e));
    }
}

void SparseOperator::apply(std::span<const Complex> in, std::span<Complex> out) const {
    std::fill(out.begin(), out.end(), Complex(0.0, 0.0));
    for (const EmbeddedTerm& term : embedded_) {
        const std::size_t s = term.support_masks.size();
        const std::size_t block_dim = std::size_t{1} << s;
        std::vector<std::size_t> offsets(block_dim, 0);
        for (std::size_t x = 0; x < block_dim; ++x) {
            for (std::size_t b = 0; b < s; ++b) {
                if (x & (std::size_t{1} << (s - 1 - b))) {
                    offsets[x] |= term.support_masks[b];
                }
            }
        }
        // Enumerate the configurations of all non-support bits.
        std::uint64_t outer = 0;
        std::vector<Complex> gathered(block_dim);
        while (true) {
            for (std::size_t x = 0; x < block_dim; ++x) {
                gathered[x] = in[outer | offsets[x]];
            }
            for (std::size_t r = 0; r < block_dim; ++r) {
                Complex acc(0.0, 0.0);
                for (std::size_t c = 0; c < block_dim; ++c) {
                    acc += term.block(r, c) * gathered[c];
                }
                out[outer | offsets[r]] += acc;
            }
            if (outer == term.outer_mask) break;
            outer = (outer - term.outer_mask) & term.outer_mask;  // next submask
        }
    }
}

StateVector SparseOperator::apply(const StateVector& state) const {
    StateVector out(state.n_qubits());
    apply(state.amplitudes(), out.mutable_amplitudes());
    return out;
}

ApplyFn SparseOperator::as_apply_fn() const {
    return [this](std::span<const Complex> in, std::span<Complex> out) { apply(in, out); };
}

Eigen::SparseMatrix<Complex> SparseOperator::to_sparse() const {
    if (n_qubits_ > 16) {
        throw ResourceError("explicit sparse assembly is limited to 16 qubits");
    }
    const std::size_t dim = dimension();
    std::vector<Eigen::Triplet<Complex>> triplets;
    for (std::size_t t = 0; t < terms_.size(); ++t) {
        const LocalTerm& term = terms_[t];
        const std::size_t s = term.support.size();
        const std::size_t block_dim = std::size_t{1} << s;
        std::vector<std::size_t> offsets(block_dim, 0);
        for (std::size_t x = 0; x < block_dim; ++x) {
            for (std::size_t b = 0; b < s; ++b) {
                if (x & (std::size_t{1} << (s - 1 - b))) {
                    offsets[x] |= std::uint64_t{1} << (n_qubits_ - 1 - term.support[b]);
                }
            }
        }
        const std::uint64_t outer_mask = embedded_[t].outer_mask;
        std::uint64_t outer = 0;
        while (true) {
            for (std::size_t r = 0; r < block_dim; ++r) {
                for (std::size_t c = 0; c < block_dim; ++c) {
                    const Complex v = term.block(r, c);
                    if (v != Complex(0.0, 0.0)) {
                        triplets.emplace_back(static_cast<int>(outer | offsets[r]),
                                              static_cast<int>(outer | offsets[c]), v);
                    }
                }
            }
            if (outer == outer_mask) break;
            outer = (outer - outer_mask) & outer_mask;
        }
    }
    Eigen::SparseMatrix<Complex> m(static_cast<int>(dim), static_cast<int>(dim));
    m.setFromTriplets(triplets.begin(), triplets.end());
    return m;
}

double SparseOperator::max_term_norm() const {
    double best = 0.0;
    for (const LocalTerm& term : terms_) {
        best = std::max(best, term.operator_norm());
    }
    return best;
}

SparseOperator assemble(const ClusterLayout& layout, const OmegaDeformation& omega,
                        const LambdaDeformation& lambda) {
    std::vector<LocalTerm> terms;
    terms.reserve(layout.lattice.n_sites());
    for (int q = 0; q < layout.lattice.n_sites(); ++q) {
        if (layout.roles[q] == Role::A) {
            terms.push_back(build_P(layout, omega, q));
        } else {
            terms.push_back(build_Q(layout, omega, lambda, q));
        }
    }
    return SparseOperator(layout.lattice.n_sites(), std::move(terms));
}

bool one_a_neighbor_condition(const ClusterLayout& layout) {
    // Counts only the A neighbors whose smoothing would affect the term
    // (non-diagonal omega); diagonal deleted-site factors commute through.
    for (int q : layout.output_qubits()) {
        int affecting = 0;
        for (int nb : layout.lattice.neighbors(q)) {
            if (layout.roles[nb] != Role::A) continue;
            const OmegaState& w = layout.omega.at(nb);
            const SingleQubitOp projector = SingleQubitOp::projector(w.a0, w.a1);
            if (!projector.is_diagonal()) ++affecting;
        }
        if (affecting > 1) return false;
    }
    return true;
}

GroundReport ground_analysis(const SparseOperator& hamiltonian, const StateVector& reference,
                             const GroundOptions& options) {
    if (hamiltonian.dimension() != reference.dimension()) {
        throw InputError("reference state dimension does not match the operator");
    }

    GroundReport report;
    LanczosOptions lopts;
    lopts.tolerance = options.tolerance;
    lopts.max_matvecs = options.max_matvecs;

    const ApplyFn apply = hamiltonian.as_apply_fn();
    try {
        LanczosResult ground = lanczos_smallest(apply, hamiltonian.dimension(), {}, lopts);
        std::vector<std::vector<Complex>> deflate{ground.vector};
        LanczosResult excited =
            lanczos_smallest(apply, hamiltonian.dimension(), deflate, lopts);
        LanczosResult top = lanczos_largest(apply, hamiltonian.dimension(), lopts);

        report.e0 = ground.eigenvalue;
        report.e1 = excited.eigenvalue;
        report.operator_norm = top.eigenvalue;
        report.matvecs = ground.matvecs + excited.matvecs + top.matvecs;
        report.residual_e0 = ground.residual;
        report.residual_e1 = excited.residual;
        report.fidelity =
            fidelity(StateVector(reference.n_qubits(),
                                 std::vector<Complex>(ground.vector.begin(), ground.vector.end())),
                     reference);
    } catch (const ConvergenceError&) {
        if (hamiltonian.n_qubits() > options.dense_fallback_qubits) {
            throw;
        }
        report.used_dense_fallback = true;
        Eigen::MatrixXcd dense(hamiltonian.to_sparse());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(dense);
        report.e0 = es.eigenvalues()(0);
        report.e1 = es.eigenvalues()(1);
        report.operator_norm = es.eigenvalues()(es.eigenvalues().size() - 1);
        std::vector<Complex> ground(hamiltonian.dimension());
        for (std::size_t i = 0; i < ground.size(); ++i) {
            ground[i] = es.eigenvectors().col(0)(static_cast<Eigen::Index>(i));
        }
        report.fidelity =
            fidelity(StateVector(reference.n_qubits(), std::move(ground)), reference);
    }

    report.gap = report.e1 - report.e0;
    report.degenerate = report.gap < options.degeneracy_tolerance;
    return report;
}

}  // namespace spincast
