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

#include "spincast/lanczos.hpp"

#include <cmath>
#include <random>
#include <string>

#include <Eigen/Dense>

#include "spincast/errors.hpp"

namespace spincast {

namespace {

using Complex = std::complex<double>;
using Vec = std::vector<Complex>;

Complex dot(const Vec& a, const Vec& b) {
    Complex s(0.0, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += std::conj(a[i]) * b[i];
    }
    return s;
}

double norm(const Vec& a) {
    double s = 0.0;
    for (const Complex& x : a) s += std::norm(x);
    return std::sqrt(s);
}

void axpy(Complex alpha, const Vec& x, Vec& y) {
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

void scale(Vec& x, double s) {
    for (Complex& v : x) v *= s;
}

void orthogonalize(Vec& v, std::span<const Vec> basis) {
    // Two passes of classical Gram-Schmidt keep the basis orthogonal to
    // machine precision at these dimensions.
    for (int pass = 0; pass < 2; ++pass) {
        for (const Vec& b : basis) {
            axpy(-dot(b, v), b, v);
        }
    }
}

Vec random_start(std::size_t dimension, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Vec v(dimension);
    for (Complex& x : v) {
        // Map the top 53 bits to [0,1); avoids distribution objects whose
        // output is not pinned across standard library implementations.
        const double re = static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5;
        const double im = static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5;
        x = Complex(re, im);
    }
    const double n = norm(v);
    scale(v, 1.0 / n);
    return v;
}

}  // namespace

LanczosResult lanczos_smallest(const ApplyFn& apply, std::size_t dimension,
                               std::span<const std::vector<Complex>> deflate,
                               const LanczosOptions& options) {
    if (dimension == 0) {
        throw InputError("lanczos on an empty space");
    }

    LanczosResult result;
    // A start vector can collide with the deflation space (the degenerate
    // operator run reuses the same seed); reseed until a residual direction
    // survives.
    Vec v;
    for (std::uint64_t attempt = 0;; ++attempt) {
        if (attempt == 8) {
            throw InputError("deflation space leaves no residual direction");
        }
        v = random_start(dimension, options.seed + attempt);
        orthogonalize(v, deflate);
        if (double n = norm(v); n > 1e-8) {
            scale(v, 1.0 / n);
            break;
        }
    }

    Vec work(dimension);
    const int max_basis =
        static_cast<int>(std::min<std::size_t>(options.block_size, dimension));

    while (result.matvecs < options.max_matvecs) {
        std::vector<Vec> basis;
        std::vector<double> alpha;
        std::vector<double> beta;  // beta[j] couples basis[j] and basis[j+1]
        basis.push_back(v);

        // Estimated ground-state residual of the current tridiagonal; lets
        // the sweep stop long before the basis is full.
        auto residual_estimate = [&](double next_beta) {
            const int m = static_cast<int>(alpha.size());
            Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
            for (int i = 0; i < m; ++i) {
                t(i, i) = alpha[i];
                if (i + 1 < m) t(i, i + 1) = t(i + 1, i) = beta[i];
            }
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small(t);
            const double scale_est = std::max({1.0, std::abs(small.eigenvalues()(0)),
                                               std::abs(small.eigenvalues()(m - 1))});
            return next_beta * std::abs(small.eigenvectors()(m - 1, 0)) /
                   scale_est;
        };

        for (int j = 0; j < max_basis && result.matvecs < options.max_matvecs; ++j) {
            apply(basis[j], work);
            ++result.matvecs;
            alpha.push_back(dot(basis[j], work).real());
            Vec w = work;
            axpy(Complex(-alpha[j], 0.0), basis[j], w);
            if (j > 0) axpy(Complex(-beta[j - 1], 0.0), basis[j - 1], w);
            orthogonalize(w, basis);
            orthogonalize(w, deflate);
            const double b = norm(w);
            if (b < 1e-13 || j + 1 == max_basis ||
                static_cast<std::size_t>(j + 1) == dimension - deflate.size()) {
                break;
            }
            if ((j & 0xf) == 0xf && residual_estimate(b) <= 0.1 * options.tolerance) {
                break;
            }
            beta.push_back(b);
            scale(w, 1.0 / b);
            basis.push_back(std::move(w));
        }

        const int m = static_cast<int>(alpha.size());
        Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(m, m);
        for (int i = 0; i < m; ++i) {
            tri(i, i) = alpha[i];
            if (i + 1 < m) tri(i, i + 1) = tri(i + 1, i) = beta[i];
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tri);
        const Eigen::VectorXd ritz = es.eigenvectors().col(0);
        // Residuals are judged relative to the spectral scale; an absolute
        // target would be unreachable for strongly conjugated operators.
        const double spectral_scale = std::max({1.0, std::abs(es.eigenvalues()(0)),
                                                std::abs(es.eigenvalues()(m - 1))});

        Vec candidate(dimension, Complex(0.0, 0.0));
        for (int i = 0; i < m; ++i) {
            axpy(Complex(ritz(i), 0.0), basis[i], candidate);
        }
        if (double n = norm(candidate); n > 0.0) scale(candidate, 1.0 / n);

        apply(candidate, work);
        ++result.matvecs;
        const double lambda = dot(candidate, work).real();
        axpy(Complex(-lambda, 0.0), candidate, work);
        const double residual = norm(work);

        result.eigenvalue = lambda;
        result.vector = candidate;
        result.residual = residual;
        if (residual <= options.tolerance * spectral_scale) {
            result.converged = true;
            return result;
        }
        v = std::move(candidate);  // thick restart from the best Ritz vector
    }

    throw ConvergenceError("lanczos did not reach residual " +
                           std::to_string(options.tolerance) + " within " +
                           std::to_string(options.max_matvecs) +
                           " matrix applications (last residual " +
                           std::to_string(result.residual) + ")");
}

LanczosResult lanczos_largest(const ApplyFn& apply, std::size_t dimension,
                              const LanczosOptions& options) {
    ApplyFn negated = [&apply](std::span<const Complex> in, std::span<Complex> out) {
        apply(in, out);
        for (Complex& x : out) x = -x;
    };
    LanczosResult result = lanczos_smallest(negated, dimension, {}, options);
    result.eigenvalue = -result.eigenvalue;
    return result;
}

}  // namespace spincast
