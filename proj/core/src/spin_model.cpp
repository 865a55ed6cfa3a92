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

#include "spincast/spin_model.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

namespace spincast {

namespace {

std::string sites_to_string(const std::vector<int>& sites) {
    std::string out = "{";
    for (std::size_t i = 0; i < sites.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(sites[i]);
    }
    return out + "}";
}

// Compensated (Kahan) accumulator; keeps brute-force sums deterministic and
// accurate over up to 2^24 addends.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double value) {
        double y = value - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

}  // namespace

SpinModel::SpinModel(int n_spins, std::vector<ParityTerm> terms, double offset, int max_arity)
    : n_spins_(n_spins), offset_(offset), max_arity_(max_arity) {
    if (n_spins < 1) {
        throw InputError("spin model needs at least one spin, got " + std::to_string(n_spins));
    }
    if (n_spins > 31) {
        throw InputError("spin model limited to 31 spins (configuration words are 32-bit)");
    }
    if (max_arity < 1) {
        throw InputError("arity cap must be positive");
    }

    // Canonicalize: sort sites within each term, merge equal site sets by
    // summing couplings, and order terms lexicographically by site list.
    std::map<std::vector<int>, double> merged;
    for (auto& term : terms) {
        if (term.sites.empty()) {
            throw InputError("parity term with empty site set");
        }
        std::sort(term.sites.begin(), term.sites.end());
        if (std::adjacent_find(term.sites.begin(), term.sites.end()) != term.sites.end()) {
            throw InputError("parity term with duplicate site: " + sites_to_string(term.sites));
        }
        if (term.sites.front() < 0 || term.sites.back() >= n_spins) {
            throw InputError("parity term site out of range: " + sites_to_string(term.sites));
        }
        if (static_cast<int>(term.sites.size()) > max_arity_) {
            throw InputError("parity term arity " + std::to_string(term.sites.size()) +
                             " exceeds cap " + std::to_string(max_arity_) + " on sites " +
                             sites_to_string(term.sites));
        }
        merged[term.sites] += term.coupling;
    }

    terms_.reserve(merged.size());
    masks_.reserve(merged.size());
    for (const auto& [sites, coupling] : merged) {
        std::uint32_t mask = 0;
        for (int site : sites) {
            mask |= 1u << (n_spins_ - 1 - site);
        }
        terms_.push_back(ParityTerm{sites, coupling});
        masks_.push_back(mask);
    }
}

double SpinModel::energy(const SpinConfig& config) const {
    if (config.size() != n_spins_) {
        throw InputError("configuration has " + std::to_string(config.size()) +
                         " spins, model has " + std::to_string(n_spins_));
    }
    double e = offset_;
    for (std::size_t t = 0; t < terms_.size(); ++t) {
        e += terms_[t].coupling * (config.parity_of_mask(masks_[t]) ? -1.0 : 1.0);
    }
    return e;
}

double SpinModel::field(int site) const {
    for (const auto& term : terms_) {
        if (term.sites.size() == 1 && term.sites[0] == site) {
            return term.coupling;
        }
    }
    return 0.0;
}

SpinModel SpinModel::with_offset(double offset) const {
    return SpinModel(n_spins_, terms_, offset, max_arity_);
}

ThermalSummary partition_function(const SpinModel& model, double beta, int config_cap) {
    if (model.n_spins() > config_cap) {
        throw ResourceError("brute-force sum over " + std::to_string(model.n_spins()) +
                            " spins exceeds the configured cap of " + std::to_string(config_cap) +
                            " (this routine is the exact oracle; no sampling fallback)");
    }
    const std::uint32_t count = 1u << model.n_spins();

    ThermalSummary summary;
    summary.beta = beta;
    summary.probabilities.resize(count);

    KahanSum z;
    for (std::uint32_t word = 0; word < count; ++word) {
        double weight = std::exp(-beta * model.energy(SpinConfig(word, model.n_spins())));
        summary.probabilities[word] = weight;
        z.add(weight);
    }
    summary.z = z.sum;
    for (double& p : summary.probabilities) {
        p /= summary.z;
    }
    return summary;
}

double observable_expectation(const SpinModel& model, double beta,
                              const std::function<double(const SpinConfig&)>& f, int config_cap) {
    ThermalSummary summary = partition_function(model, beta, config_cap);
    KahanSum acc;
    for (std::uint32_t word = 0; word < summary.probabilities.size(); ++word) {
        acc.add(f(SpinConfig(word, model.n_spins())) * summary.probabilities[word]);
    }
    return acc.sum;
}

int bits_per_site(int q) {
    if (q < 2 || (q & (q - 1)) != 0) {
        throw InputError("only power-of-two level counts are supported, got q=" +
                         std::to_string(q) +
                         " (encodings with surplus bit patterns are not defined here)");
    }
    int bits = 0;
    while ((1 << bits) < q) ++bits;
    return bits;
}

double general_energy(const GeneralModel& model, const std::vector<int>& digits) {
    if (static_cast<int>(digits.size()) != model.n_sites) {
        throw InputError("digit assignment length mismatch");
    }
    double e = 0.0;
    for (const auto& interaction : model.interactions) {
        std::size_t index = 0;
        for (int site : interaction.sites) {
            index = index * static_cast<std::size_t>(model.q) +
                    static_cast<std::size_t>(digits[site]);
        }
        e += interaction.table[index];
    }
    return e;
}

double general_partition_function(const GeneralModel& model, double beta, int config_cap) {
    int bits = bits_per_site(model.q);
    if (model.n_sites * bits > config_cap) {
        throw ResourceError("general-model brute force exceeds configuration cap");
    }
    std::vector<int> digits(model.n_sites, 0);
    KahanSum z;
    while (true) {
        z.add(std::exp(-beta * general_energy(model, digits)));
        int pos = model.n_sites - 1;
        while (pos >= 0 && ++digits[pos] == model.q) {
            digits[pos--] = 0;
        }
        if (pos < 0) break;
    }
    return z.sum;
}

void parity_transform(std::vector<double>& table) {
    const std::size_t n = table.size();
    if (n == 0 || (n & (n - 1)) != 0) {
        throw InputError("parity transform needs a power-of-two table size");
    }
    // Standard in-place fast Walsh butterfly.
    for (std::size_t half = 1; half < n; half <<= 1) {
        for (std::size_t block = 0; block < n; block += half << 1) {
            for (std::size_t i = block; i < block + half; ++i) {
                double a = table[i];
                double b = table[i + half];
                table[i] = a + b;
                table[i + half] = a - b;
            }
        }
    }
    for (double& value : table) {
        value /= static_cast<double>(n);
    }
}

SpinModel encode_general(const GeneralModel& model, std::optional<int> arity_cap) {
    if (model.n_sites < 1) {
        throw InputError("general model needs at least one site");
    }
    const int bits = bits_per_site(model.q);
    const int n_spins = model.n_sites * bits;

    double offset = 0.0;
    std::vector<ParityTerm> terms;
    int widest = 0;

    for (const auto& interaction : model.interactions) {
        if (interaction.sites.empty()) {
            throw InputError("general interaction with empty site list");
        }
        for (int site : interaction.sites) {
            if (site < 0 || site >= model.n_sites) {
                throw InputError("general interaction site out of range");
            }
        }
        const int m = static_cast<int>(interaction.sites.size()) * bits;
        const std::size_t expected = std::size_t{1} << m;
        if (interaction.table.size() != expected) {
            throw InputError("energy table size " + std::to_string(interaction.table.size()) +
                             " does not match q^k = " + std::to_string(expected));
        }
        for (double value : interaction.table) {
            if (!std::isfinite(value)) {
                throw InputError("energy table contains a non-finite value");
            }
        }

        // The table index already reads as the concatenated binary digits of
        // the participating sites (first site most significant), so the
        // Walsh coefficients index parity subsets of those local bits
        // directly.
        std::vector<double> coeffs = interaction.table;
        parity_transform(coeffs);

        offset += coeffs[0];
        for (std::size_t subset = 1; subset < coeffs.size(); ++subset) {
            if (std::abs(coeffs[subset]) <= kCoefficientTolerance) {
                continue;
            }
            std::vector<int> sites;
            for (int local = 0; local < m; ++local) {
                if (subset & (std::size_t{1} << (m - 1 - local))) {
                    int site = interaction.sites[local / bits];
                    int bit_in_site = local % bits;
                    sites.push_back(site * bits + bit_in_site);
                }
            }
            widest = std::max(widest, static_cast<int>(sites.size()));
            terms.push_back(ParityTerm{std::move(sites), coeffs[subset]});
        }
    }

    int cap = arity_cap.value_or(std::max(widest, kDefaultMaxArity));
    if (widest > cap) {
        throw InputError("decomposition produced a " + std::to_string(widest) +
                         "-spin parity term, above the requested arity cap of " +
                         std::to_string(cap));
    }
    return SpinModel(n_spins, std::move(terms), offset, cap);
}

}  // namespace spincast
