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

#include "spincast/pauli.hpp"

#include <bit>

namespace spincast {

bool PauliString::commutes_with(const PauliString& other) const {
    const int overlap = std::popcount(x_ & other.z_) + std::popcount(z_ & other.x_);
    return (overlap & 1) == 0;
}

StateVector PauliString::apply(const StateVector& state) const {
    StateVector out(state.n_qubits());
    // Translate qubit-index masks into amplitude-index masks.
    std::uint64_t x_idx = 0;
    std::uint64_t z_idx = 0;
    for (int q = 0; q < n_; ++q) {
        if (has_x(q)) x_idx |= state.qubit_mask(q);
        if (has_z(q)) z_idx |= state.qubit_mask(q);
    }
    const double sign = negative_ ? -1.0 : 1.0;
    for (std::size_t i = 0; i < state.dimension(); ++i) {
        const double phase = (std::popcount(i & z_idx) & 1) ? -sign : sign;
        out.amplitude(i ^ x_idx) = phase * state.amplitude(i);
    }
    return out;
}

Complex PauliString::expectation(const StateVector& state) const {
    return inner_product(state, apply(state));
}

std::string PauliString::label() const {
    std::string out(negative_ ? "-" : "+");
    for (int q = 0; q < n_; ++q) {
        const bool x = has_x(q);
        const bool z = has_z(q);
        out += x && z ? 'Y' : x ? 'X' : z ? 'Z' : 'I';
    }
    return out;
}

bool pauli_independent(std::span<const PauliString> strings) {
    // Gaussian elimination over GF(2) on (x|z) rows packed into pairs.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> rows;
    rows.reserve(strings.size());
    for (const auto& p : strings) {
        rows.emplace_back(p.x_mask(), p.z_mask());
    }
    std::size_t rank = 0;
    for (int column = 0; column < 128 && rank < rows.size(); ++column) {
        const bool in_x = column < 64;
        const std::uint64_t mask = std::uint64_t{1} << (column % 64);
        std::size_t pivot = rank;
        while (pivot < rows.size() &&
               (((in_x ? rows[pivot].first : rows[pivot].second) & mask) == 0)) {
            ++pivot;
        }
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != rank && ((in_x ? rows[r].first : rows[r].second) & mask)) {
                rows[r].first ^= rows[rank].first;
                rows[r].second ^= rows[rank].second;
            }
        }
        ++rank;
    }
    return rank == rows.size();
}

}  // namespace spincast
