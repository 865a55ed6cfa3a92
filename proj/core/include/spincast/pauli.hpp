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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "spincast/state_vector.hpp"

namespace spincast {

/// A signed Pauli string over up to 64 qubits, stored as X/Z bit masks in
/// qubit-index space (bit q set means a factor on qubit q). A qubit with
/// both bits set carries XZ (= -iY); the strings built here never need that.
class PauliString {
  public:
    explicit PauliString(int n_qubits, bool negative = false)
        : n_(n_qubits), negative_(negative) {}

    int n_qubits() const { return n_; }
    bool negative() const { return negative_; }
    void set_sign(bool negative) { negative_ = negative; }

    void set_x(int qubit) { x_ |= bit(qubit); }
    void set_z(int qubit) { z_ |= bit(qubit); }
    bool has_x(int qubit) const { return x_ & bit(qubit); }
    bool has_z(int qubit) const { return z_ & bit(qubit); }
    std::uint64_t x_mask() const { return x_; }
    std::uint64_t z_mask() const { return z_; }

    bool commutes_with(const PauliString& other) const;

    /// Apply to a state: |b> -> sign * (-1)^(z overlap with b) |b xor x>.
    StateVector apply(const StateVector& state) const;

    Complex expectation(const StateVector& state) const;

    /// Rendered as e.g. "+XZI" with qubit 0 leftmost.
    std::string label() const;

  private:
    std::uint64_t bit(int qubit) const { return std::uint64_t{1} << qubit; }

    int n_;
    std::uint64_t x_ = 0;
    std::uint64_t z_ = 0;
    bool negative_ = false;
};

/// GF(2) independence of the strings viewed as (x|z) rows.
bool pauli_independent(std::span<const PauliString> strings);

}  // namespace spincast
