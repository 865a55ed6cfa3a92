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

#include <complex>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "spincast/errors.hpp"

namespace spincast {

using Complex = std::complex<double>;

/// Default cap on dense simulation size: 2^26 complex doubles is 1 GiB.
inline constexpr int kDenseCap = 26;

/// A 2x2 operator with cached structural flags. Carries the diagonal thermal
/// deformations, the smoothed projectors, Paulis, and rank-one projectors
/// used throughout the pipeline.
class SingleQubitOp {
  public:
    SingleQubitOp(Complex m00, Complex m01, Complex m10, Complex m11);
    explicit SingleQubitOp(const Eigen::Matrix2cd& m);

    static SingleQubitOp identity();
    static SingleQubitOp pauli_x();
    static SingleQubitOp pauli_y();
    static SingleQubitOp pauli_z();
    static SingleQubitOp hadamard();
    static SingleQubitOp diagonal(Complex d0, Complex d1);
    /// Rank-one projector |v><v| onto the given (normalized) amplitudes.
    static SingleQubitOp projector(Complex v0, Complex v1);

    const Eigen::Matrix2cd& matrix() const { return m_; }
    Complex at(int row, int col) const { return m_(row, col); }

    bool is_diagonal() const { return diagonal_; }
    bool is_invertible() const { return invertible_; }
    bool is_hermitian() const { return hermitian_; }

    SingleQubitOp adjoint() const;
    SingleQubitOp inverse() const;  // throws InputError if not invertible
    SingleQubitOp operator*(const SingleQubitOp& rhs) const;

    /// Largest singular value.
    double operator_norm() const;

  private:
    Eigen::Matrix2cd m_;
    bool diagonal_ = false;
    bool invertible_ = false;
    bool hermitian_ = false;
};

/// Dense complex amplitude vector over n qubits.
///
/// Bit-order convention, fixed globally: qubit 0 is the MOST significant bit
/// of the amplitude index. A basis label read left to right (qubit 0 first)
/// is the index written in binary. Golden tests pin this convention.
class StateVector {
  public:
    /// All-zero amplitudes (not a valid quantum state until filled).
    explicit StateVector(int n_qubits);
    StateVector(int n_qubits, std::vector<Complex> amplitudes);

    int n_qubits() const { return n_qubits_; }
    std::size_t dimension() const { return amps_.size(); }

    std::span<const Complex> amplitudes() const { return amps_; }
    std::span<Complex> mutable_amplitudes() { return amps_; }
    Complex amplitude(std::size_t index) const { return amps_[index]; }
    Complex& amplitude(std::size_t index) { return amps_[index]; }

    /// Index mask selecting the given qubit's bit.
    std::uint64_t qubit_mask(int qubit) const {
        return std::uint64_t{1} << (n_qubits_ - 1 - qubit);
    }

    double squared_norm() const;
    double norm() const;
    StateVector normalized() const;  // throws InputError on the zero vector

    // In-place variants are single-writer; the pure free functions below
    // copy first.
    void apply_cz_inplace(int a, int b);
    void apply_local_inplace(int qubit, const SingleQubitOp& op);
    void scale(Complex factor);

  private:
    int n_qubits_;
    std::vector<Complex> amps_;
};

/// |+>^n with uniform amplitudes 2^(-n/2). n = 0 gives the scalar unit.
StateVector plus_state(int n_qubits, int dense_cap = kDenseCap);

/// Computational basis state |index>.
StateVector basis_state(int n_qubits, std::uint64_t index, int dense_cap = kDenseCap);

/// Controlled-phase gate diag(1,1,1,-1) on qubits (a,b). Involution.
StateVector apply_cz(const StateVector& state, int a, int b);

/// Linear action of a 2x2 operator on one tensor factor.
StateVector apply_local(const StateVector& state, int qubit, const SingleQubitOp& op);

Complex inner_product(const StateVector& a, const StateVector& b);

/// |<a|b>|^2 / (|a|^2 |b|^2), in [0,1]. Throws InputError on zero vectors or
/// mismatched qubit counts.
double fidelity(const StateVector& a, const StateVector& b);

/// Computational-basis probability table over the kept qubits:
/// p(x) = sum over discarded assignments of |amplitude|^2. The result index
/// uses keep[0] as its most significant bit. Requires a normalized state
/// (within 1e-10).
std::vector<double> basis_marginal(const StateVector& state, std::span<const int> keep);

/// Reduced density matrix over the kept qubits. Hermitian, unit trace, PSD;
/// its diagonal equals basis_marginal. `budget_qubits` caps |keep|.
Eigen::MatrixXcd partial_trace(const StateVector& state, std::span<const int> keep,
                               int budget_qubits = 13);

/// Rectangular 2D lattice with nearest-neighbor edges; site (r, c) has qubit
/// index r * cols + c.
struct LatticeGraph {
    int rows = 0;
    int cols = 0;

    LatticeGraph() = default;
    LatticeGraph(int rows_in, int cols_in);

    int n_sites() const { return rows * cols; }
    int index(int r, int c) const { return r * cols + c; }
    std::pair<int, int> coords(int q) const { return {q / cols, q % cols}; }
    bool adjacent(int a, int b) const;
    std::vector<int> neighbors(int q) const;
    int degree(int q) const { return static_cast<int>(neighbors(q).size()); }
    std::vector<std::pair<int, int>> edges() const;
};

/// Cluster state of the lattice: |+>^M followed by a controlled-phase gate
/// on every edge.
StateVector cluster_state(const LatticeGraph& lattice, int dense_cap = kDenseCap);

}  // namespace spincast
