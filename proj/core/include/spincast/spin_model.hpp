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
#include <functional>
#include <optional>
#include <vector>

#include "spincast/errors.hpp"

namespace spincast {

/// Default cap on the number of spins accepted by the brute-force thermal
/// routines (2^24 configurations stays in the seconds range).
inline constexpr int kBruteForceCap = 24;

/// Default cap on interaction arity. Models with higher-order terms can be
/// built by passing an explicit cap.
inline constexpr int kDefaultMaxArity = 3;

/// Parity coefficients with absolute value below this are dropped when
/// decomposing arbitrary energy tables.
inline constexpr double kCoefficientTolerance = 1e-12;

/// One parity-coupled term: contributes `coupling * (-1)^(XOR of the bits on
/// `sites`)` to the energy of a configuration.
struct ParityTerm {
    std::vector<int> sites;  // sorted, duplicate-free spin indices
    double coupling = 0.0;   // energy units
};

/// A configuration of n two-level spins packed into a word. Spin 0 occupies
/// the most significant of the n used bits, so the word read as an n-digit
/// binary string is exactly (s_0 s_1 ... s_{n-1}). This matches the global
/// qubit ordering used by the quantum modules.
class SpinConfig {
  public:
    SpinConfig(std::uint32_t word, int n_spins) : word_(word), n_(n_spins) {}

    int size() const { return n_; }
    std::uint32_t word() const { return word_; }

    /// Value of spin `site` (0 or 1).
    int bit(int site) const { return static_cast<int>((word_ >> (n_ - 1 - site)) & 1u); }

    /// XOR of the bits selected by `mask` (mask in word-bit space).
    int parity_of_mask(std::uint32_t mask) const {
        return static_cast<int>(__builtin_popcount(word_ & mask) & 1);
    }

  private:
    std::uint32_t word_;
    int n_;
};

/// Classical Hamiltonian over n two-level spins written entirely in terms of
/// parity couplings plus a constant offset:
///
///     H(s) = offset + sum_t J_t * (-1)^(XOR of s on t.sites)
///
/// Local fields are arity-1 terms; pair and three-body couplings are arity-2
/// and arity-3 terms. Duplicate site sets are merged by summing couplings.
class SpinModel {
  public:
    SpinModel(int n_spins, std::vector<ParityTerm> terms, double offset = 0.0,
              int max_arity = kDefaultMaxArity);

    int n_spins() const { return n_spins_; }
    double offset() const { return offset_; }
    int max_arity() const { return max_arity_; }
    const std::vector<ParityTerm>& terms() const { return terms_; }

    /// Word-space parity mask of term `t` (bit n-1-site set for each site).
    std::uint32_t term_mask(std::size_t t) const { return masks_[t]; }

    /// Energy of one configuration. Throws InputError on length mismatch.
    double energy(const SpinConfig& config) const;

    /// Coupling of the arity-1 term on `site`, or 0 if absent.
    double field(int site) const;

    /// Copy with the offset replaced (used where offsets are known to cancel).
    SpinModel with_offset(double offset) const;

  private:
    int n_spins_;
    double offset_;
    int max_arity_;
    std::vector<ParityTerm> terms_;
    std::vector<std::uint32_t> masks_;
};

/// Exact thermal data obtained by summing over all 2^n configurations.
struct ThermalSummary {
    double beta = 0.0;
    double z = 0.0;                    // partition function
    std::vector<double> probabilities;  // indexed by SpinConfig word
};

/// Brute-force partition function and Boltzmann distribution. This routine
/// is the ground-truth oracle for every quantum readout check, so it refuses
/// models above `config_cap` spins instead of falling back to sampling.
ThermalSummary partition_function(const SpinModel& model, double beta,
                                  int config_cap = kBruteForceCap);

/// Thermal expectation of an arbitrary configuration functional.
double observable_expectation(const SpinModel& model, double beta,
                              const std::function<double(const SpinConfig&)>& f,
                              int config_cap = kBruteForceCap);

/// One k-site interaction of a general discrete model: an arbitrary energy
/// table over q^k joint states, row-major with the first listed site as the
/// most significant digit.
struct GeneralInteraction {
    std::vector<int> sites;
    std::vector<double> table;
};

/// A q-level model with arbitrary few-body interactions. Only q equal to a
/// power of two is supported by the encoder.
struct GeneralModel {
    int n_sites = 0;
    int q = 2;
    std::vector<GeneralInteraction> interactions;
};

/// Number of bits used to encode one q-level site. Throws InputError unless
/// q is a power of two (>= 2).
int bits_per_site(int q);

/// Energy of a general model at a given assignment of q-ary digits.
double general_energy(const GeneralModel& model, const std::vector<int>& digits);

/// Brute-force partition function of a general model (oracle for encoder
/// round-trip checks). Enumerates q^n_sites configurations.
double general_partition_function(const GeneralModel& model, double beta,
                                  int config_cap = kBruteForceCap);

/// Encode a general q-level model into a parity-coupled SpinModel over
/// n_sites * log2(q) spins. Each energy table is decomposed exactly into
/// parity terms by the self-inverse parity-character (Walsh) transform; the
/// constant component accumulates into the offset. The encoding satisfies
///
///     encoded.energy(bits(d)) == general_energy(model, d)
///
/// for every digit assignment d, where bits(d) concatenates the per-site
/// binary digits most-significant-first.
///
/// If `arity_cap` is absent the result uses the smallest cap that fits every
/// decomposed term (at least kDefaultMaxArity); if present, any term wider
/// than the cap is an error.
SpinModel encode_general(const GeneralModel& model, std::optional<int> arity_cap = std::nullopt);

/// In-place parity-character transform of a table of size 2^m: replaces
/// values by coefficients c such that E(x) = sum_T c[T] * (-1)^popcount(x & T).
/// Self-inverse up to the 2^m scaling, which this function applies.
void parity_transform(std::vector<double>& table);

}  // namespace spincast
