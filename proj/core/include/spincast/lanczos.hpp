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
#include <functional>
#include <span>
#include <vector>

namespace spincast {

using ApplyFn =
    std::function<void(std::span<const std::complex<double>>, std::span<std::complex<double>>)>;

struct LanczosOptions {
    double tolerance = 1e-10;  // residual |Hv - lambda v| relative to the spectral scale
    int max_matvecs = 5000;
    int block_size = 220;  // Krylov basis size per restart
    std::uint64_t seed = 0x51CA57u;  // fixed start vector seed
};

struct LanczosResult {
    double eigenvalue = 0.0;
    std::vector<std::complex<double>> vector;
    int matvecs = 0;
    double residual = 0.0;
    bool converged = false;
};

/// Smallest eigenpair of a Hermitian operator by restarted Lanczos with full
/// reorthogonalization, optionally restricted to the orthogonal complement
/// of the `deflate` vectors. Throws ConvergenceError if the residual target
/// is not met within the matvec budget.
LanczosResult lanczos_smallest(const ApplyFn& apply, std::size_t dimension,
                               std::span<const std::vector<std::complex<double>>> deflate = {},
                               const LanczosOptions& options = {});

/// Largest eigenvalue (operator norm for PSD operators) via the same solver
/// on the negated operator.
LanczosResult lanczos_largest(const ApplyFn& apply, std::size_t dimension,
                              const LanczosOptions& options = {});

}  // namespace spincast
