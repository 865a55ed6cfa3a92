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

#include "spincast/state_vector.hpp"

#include <cmath>
#include <string>

namespace spincast {

namespace {

constexpr double kFlagTolerance = 1e-14;
constexpr double kNormTolerance = 1e-10;

void check_qubit(int qubit, int n_qubits) {
    if (qubit < 0 || qubit >= n_qubits) {
        throw InputError("qubit index " + std::to_string(qubit) + " out of range for " +
                         std::to_string(n_qubits) + " qubits");
    }
}

void check_dense_cap(int n_qubits, int dense_cap) {
    if (n_qubits < 0) {
        throw InputError("negative qubit count");
    }
    if (n_qubits > dense_cap) {
        throw ResourceError("dense state over " + std::to_string(n_qubits) +
                            " qubits exceeds the cap of " + std::to_string(dense_cap));
    }
}

}  // namespace

SingleQubitOp::SingleQubitOp(Complex m00, Complex m01, Complex m10, Complex m11) {
    m_ << m00, m01, m10, m11;
    diagonal_ = std::abs(m01) <= kFlagTolerance && std::abs(m10) <= kFlagTolerance;
    invertible_ = std::abs(m00 * m11 - m01 * m10) > kFlagTolerance;
    hermitian_ = std::abs(m00 - std::conj(m00)) <= kFlagTolerance &&
                 std::abs(m11 - std::conj(m11)) <= kFlagTolerance &&
                 std::abs(m01 - std::conj(m10)) <= kFlagTolerance;
}

SingleQubitOp::SingleQubitOp(const Eigen::Matrix2cd& m)
    : SingleQubitOp(m(0, 0), m(0, 1), m(1, 0), m(1, 1)) {}

SingleQubitOp SingleQubitOp::identity() { return {1.0, 0.0, 0.0, 1.0}; }
SingleQubitOp SingleQubitOp::pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }
SingleQubitOp SingleQubitOp::pauli_y() {
    return {0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0};
}
SingleQubitOp SingleQubitOp::pauli_z() { return {1.0, 0.0, 0.0, -1.0}; }
SingleQubitOp SingleQubitOp::hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    return {s, s, s, -s};
}
SingleQubitOp SingleQubitOp::diagonal(Complex d0, Complex d1) { return {d0, 0.0, 0.0, d1}; }
SingleQubitOp SingleQubitOp::projector(Complex v0, Complex v1) {
    return {v0 * std::conj(v0), v0 * std::conj(v1), v1 * std::conj(v0), v1 * std::conj(v1)};
}

SingleQubitOp SingleQubitOp::adjoint() const { return SingleQubitOp(m_.adjoint().eval()); }

SingleQubitOp SingleQubitOp::inverse() const {
    if (!invertible_) {
        throw InputError("single-qubit operator is not invertible");
    }
    return SingleQubitOp(m_.inverse().eval());
}

SingleQubitOp SingleQubitOp::operator*(const SingleQubitOp& rhs) const {
    return SingleQubitOp((m_ * rhs.m_).eval());
}

double SingleQubitOp::operator_norm() const {
    Eigen::JacobiSVD<Eigen::Matrix2cd> svd(m_);
    return svd.singularValues()(0);
}

StateVector::StateVector(int n_qubits)
    : n_qubits_(n_qubits), amps_(std::size_t{1} << n_qubits, Complex(0.0, 0.0)) {
    if (n_qubits < 0 || n_qubits > 30) {
        throw InputError("state vector qubit count out of range");
    }
}

StateVector::StateVector(int n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
    if (amps_.size() != (std::size_t{1} << n_qubits)) {
        throw InputError("amplitude array length does not equal 2^n_qubits");
    }
}

double StateVector::squared_norm() const {
    double s = 0.0;
    for (const Complex& a : amps_) {
        s += std::norm(a);
    }
    return s;
}

double StateVector::norm() const { return std::sqrt(squared_norm()); }

StateVector StateVector::normalized() const {
    double n = norm();
    if (n <= 0.0) {
        throw InputError("cannot normalize the zero vector");
    }
    StateVector out = *this;
    out.scale(1.0 / n);
    return out;
}

void StateVector::scale(Complex factor) {
    for (Complex& a : amps_) {
        a *= factor;
    }
}

void StateVector::apply_cz_inplace(int a, int b) {
    check_qubit(a, n_qubits_);
    check_qubit(b, n_qubits_);
    if (a == b) {
        throw InputError("controlled-phase gate needs two distinct qubits");
    }
    const std::uint64_t ma = qubit_mask(a);
    const std::uint64_t mb = qubit_mask(b);
    const std::uint64_t both = ma | mb;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if ((i & both) == both) {
            amps_[i] = -amps_[i];
        }
    }
}

void StateVector::apply_local_inplace(int qubit, const SingleQubitOp& op) {
    check_qubit(qubit, n_qubits_);
    const std::uint64_t mq = qubit_mask(qubit);
    const Complex m00 = op.at(0, 0), m01 = op.at(0, 1), m10 = op.at(1, 0), m11 = op.at(1, 1);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (i & mq) continue;
        const std::size_t j = i | mq;
        const Complex a0 = amps_[i];
        const Complex a1 = amps_[j];
        amps_[i] = m00 * a0 + m01 * a1;
        amps_[j] = m10 * a0 + m11 * a1;
    }
}

StateVector plus_state(int n_qubits, int dense_cap) {
    check_dense_cap(n_qubits, dense_cap);
    StateVector state(n_qubits);
    const Complex amp(std::pow(2.0, -0.5 * n_qubits), 0.0);
    for (std::size_t i = 0; i < state.dimension(); ++i) {
        state.amplitude(i) = amp;
    }
    return state;
}

StateVector basis_state(int n_qubits, std::uint64_t index, int dense_cap) {
    check_dense_cap(n_qubits, dense_cap);
    StateVector state(n_qubits);
    if (index >= state.dimension()) {
        throw InputError("basis index out of range");
    }
    state.amplitude(index) = 1.0;
    return state;
}

StateVector apply_cz(const StateVector& state, int a, int b) {
    StateVector out = state;
    out.apply_cz_inplace(a, b);
    return out;
}

StateVector apply_local(const StateVector& state, int qubit, const SingleQubitOp& op) {
    StateVector out = state;
    out.apply_local_inplace(qubit, op);
    return out;
}

Complex inner_product(const StateVector& a, const StateVector& b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw InputError("inner product of states with different qubit counts");
    }
    Complex s(0.0, 0.0);
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        s += std::conj(a.amplitude(i)) * b.amplitude(i);
    }
    return s;
}

double fidelity(const StateVector& a, const StateVector& b) {
    const double na = a.squared_norm();
    const double nb = b.squared_norm();
    if (na <= 0.0 || nb <= 0.0) {
        throw InputError("fidelity of a zero vector is undefined");
    }
    return std::norm(inner_product(a, b)) / (na * nb);
}

std::vector<double> basis_marginal(const StateVector& state, std::span<const int> keep) {
    if (std::abs(state.squared_norm() - 1.0) > kNormTolerance) {
        throw InputError("basis_marginal requires a normalized state");
    }
    for (int q : keep) {
        check_qubit(q, state.n_qubits());
    }
    std::vector<double> table(std::size_t{1} << keep.size(), 0.0);
    for (std::size_t i = 0; i < state.dimension(); ++i) {
        std::size_t x = 0;
        for (std::size_t k = 0; k < keep.size(); ++k) {
            if (i & state.qubit_mask(keep[k])) {
                x |= std::size_t{1} << (keep.size() - 1 - k);
            }
        }
        table[x] += std::norm(state.amplitude(i));
    }
    return table;
}

Eigen::MatrixXcd partial_trace(const StateVector& state, std::span<const int> keep,
                               int budget_qubits) {
    if (static_cast<int>(keep.size()) > budget_qubits) {
        throw ResourceError("partial trace over " + std::to_string(keep.size()) +
                            " kept qubits exceeds the budget of " + std::to_string(budget_qubits));
    }
    for (int q : keep) {
        check_qubit(q, state.n_qubits());
    }
    std::vector<bool> kept(state.n_qubits(), false);
    for (int q : keep) {
        kept[q] = true;
    }
    std::vector<int> rest;
    for (int q = 0; q < state.n_qubits(); ++q) {
        if (!kept[q]) rest.push_back(q);
    }

    const std::size_t dim_keep = std::size_t{1} << keep.size();
    const std::size_t dim_rest = std::size_t{1} << rest.size();
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim_keep, dim_keep);

    std::vector<Complex> column(dim_keep);
    for (std::size_t r = 0; r < dim_rest; ++r) {
        std::size_t base = 0;
        for (std::size_t k = 0; k < rest.size(); ++k) {
            if (r & (std::size_t{1} << (rest.size() - 1 - k))) {
                base |= state.qubit_mask(rest[k]);
            }
        }
        for (std::size_t x = 0; x < dim_keep; ++x) {
            std::size_t idx = base;
            for (std::size_t k = 0; k < keep.size(); ++k) {
                if (x & (std::size_t{1} << (keep.size() - 1 - k))) {
                    idx |= state.qubit_mask(keep[k]);
                }
            }
            column[x] = state.amplitude(idx);
        }
        for (std::size_t x = 0; x < dim_keep; ++x) {
            for (std::size_t y = 0; y < dim_keep; ++y) {
                rho(x, y) += column[x] * std::conj(column[y]);
            }
        }
    }
    return rho;
}

LatticeGraph::LatticeGraph(int rows_in, int cols_in) : rows(rows_in), cols(cols_in) {
    if (rows < 1 || cols < 1) {
        throw InputError("lattice dimensions must be positive");
    }
}

bool LatticeGraph::adjacent(int a, int b) const {
    auto [ra, ca] = coords(a);
    auto [rb, cb] = coords(b);
    return std::abs(ra - rb) + std::abs(ca - cb) == 1;
}

std::vector<int> LatticeGraph::neighbors(int q) const {
    auto [r, c] = coords(q);
    std::vector<int> out;
    if (r > 0) out.push_back(index(r - 1, c));
    if (c > 0) out.push_back(index(r, c - 1));
    if (c + 1 < cols) out.push_back(index(r, c + 1));
    if (r + 1 < rows) out.push_back(index(r + 1, c));
    return out;
}

std::vector<std::pair<int, int>> LatticeGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) out.emplace_back(index(r, c), index(r, c + 1));
            if (r + 1 < rows) out.emplace_back(index(r, c), index(r + 1, c));
        }
    }
    return out;
}

StateVector cluster_state(const LatticeGraph& lattice, int dense_cap) {
    StateVector state = plus_state(lattice.n_sites(), dense_cap);
    for (const auto& [a, b] : lattice.edges()) {
        state.apply_cz_inplace(a, b);
    }
    return state;
}

}  // namespace spincast
