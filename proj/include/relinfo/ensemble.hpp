// Copyright 2026 The relinfo Authors
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

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include "relinfo/qubit.hpp"
#include "relinfo/random.hpp"
#include "relinfo/twoqubit.hpp"

namespace relinfo {

/// 4×4 Hermitian, positive semidefinite, unit-trace matrix.
class DensityMatrix4 {
   public:
    DensityMatrix4() : m_(Eigen::Matrix4cd::Identity() / 4.0) {}

    /// Validates Hermiticity, trace and positivity within `tol`.
    explicit DensityMatrix4(const Eigen::Matrix4cd &m, double tol = 1e-10) : m_(m) {
        if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > tol) {
            throw std::invalid_argument("DensityMatrix4: matrix is not Hermitian");
        }
        if (std::abs(m_.trace() - 1.0) > tol) {
            throw std::invalid_argument("DensityMatrix4: trace is not 1");
        }
        if (min_eigenvalue() < -tol) {
            throw std::invalid_argument("DensityMatrix4: matrix is not positive semidefinite");
        }
    }

    static DensityMatrix4 pure(const TwoQubitPure &psi) { return DensityMatrix4(psi.projector()); }

    const Eigen::Matrix4cd &matrix() const { return m_; }
    Complex operator()(int r, int c) const { return m_(r, c); }

    double min_eigenvalue() const {
        return Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd>(m_, Eigen::EigenvaluesOnly).eigenvalues().minCoeff();
    }

   private:
    Eigen::Matrix4cd m_;
};

/// Largest entrywise modulus of a − b.
inline double max_abs_diff(const DensityMatrix4 &a, const DensityMatrix4 &b) {
    return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

/// q = sin α cos β, the single number the averaged ensemble depends on.
class MixingParameter {
   public:
    constexpr MixingParameter() = default;
    explicit MixingParameter(double q) : q_(q) {
        if (!(std::abs(q) <= 1.0 + 1e-12)) {
            throw std::domain_error("MixingParameter: |q| exceeds 1");
        }
    }

    double value() const { return q_; }

   private:
    double q_ = 0.0;
};

inline MixingParameter q_of(double alpha, double beta) {
    return MixingParameter(std::sin(alpha) * std::cos(beta));
}

/// Closed form of the polar-circle average in the computational basis:
/// ¼[[1,0,0,−q],[0,1,q,0],[0,q,1,0],[−q,0,0,1]].
inline DensityMatrix4 rho_analytic(MixingParameter q) {
    const double v = q.value();
    Eigen::Matrix4cd m;
    m << 1, 0, 0, -v,
         0, 1, v, 0,
         0, v, 1, 0,
         -v, 0, 0, 1;
    return DensityMatrix4(m / 4.0);
}

/// Trapezoidal average of |ψ⟩⟨ψ| over an N×N periodic grid in (θn, θm).
/// Entries are trigonometric polynomials of degree ≤ 2 in each angle, so the
/// rule is exact up to roundoff once N ≥ 8.
inline DensityMatrix4 rho_quadrature(double alpha, double beta, int grid_points) {
    if (grid_points < 8) {
        throw std::invalid_argument("rho_quadrature: grid must be >= 8");
    }
    Eigen::Matrix4cd sum = Eigen::Matrix4cd::Zero();
    const double step = kTwoPi / grid_points;
    for (int i = 0; i < grid_points; ++i) {
        for (int k = 0; k < grid_points; ++k) {
            const SchmidtParams p(alpha, beta, PolarAngle(i * step), PolarAngle(k * step));
            sum += schmidt_state(p).projector();
        }
    }
    return DensityMatrix4(sum / (static_cast<double>(grid_points) * grid_points));
}

/// Sample mean of |ψ⟩⟨ψ| over `trials` independent uniform (θn, θm) draws.
inline DensityMatrix4 rho_montecarlo(double alpha, double beta, std::uint64_t trials, Rng &rng) {
    if (trials == 0) {
        throw std::invalid_argument("rho_montecarlo: trials must be >= 1");
    }
    Eigen::Matrix4cd sum = Eigen::Matrix4cd::Zero();
    for (std::uint64_t t = 0; t < trials; ++t) {
        const PolarAngle tn = sample_polar(rng);
        const PolarAngle tm = sample_polar(rng);
        sum += schmidt_state(SchmidtParams(alpha, beta, tn, tm)).projector();
    }
    return DensityMatrix4(sum / static_cast<double>(trials));
}

/// Partitioned variant: identical result for any `threads` at a fixed seed.
inline DensityMatrix4 rho_montecarlo(double alpha, double beta, std::uint64_t trials, std::uint64_t seed,
                                     unsigned threads = 1) {
    if (trials == 0) {
        throw std::invalid_argument("rho_montecarlo: trials must be >= 1");
    }
    const auto partial = run_partitioned(trials, seed, threads, [&](Rng &rng, std::uint64_t, std::uint64_t count) {
        Eigen::Matrix4cd sum = Eigen::Matrix4cd::Zero();
        for (std::uint64_t t = 0; t < count; ++t) {
            const PolarAngle tn = sample_polar(rng);
            const PolarAngle tm = sample_polar(rng);
            sum += schmidt_state(SchmidtParams(alpha, beta, tn, tm)).projector();
        }
        return sum;
    });
    Eigen::Matrix4cd total = Eigen::Matrix4cd::Zero();
    for (const auto &s : partial) {
        total += s;
    }
    return DensityMatrix4(total / static_cast<double>(trials));
}

struct SpectralDecomp {
    /// Descending.
    std::array<double, 4> eigenvalues{};
    std::array<TwoQubitPure, 4> eigenvectors;
};

/// Eigenvectors inside a degenerate eigenspace are whatever the solver picks;
/// compare subspaces, not vectors.
inline SpectralDecomp eigendecompose(const DensityMatrix4 &rho) {
    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(rho.matrix());
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigendecompose: solver did not converge");
    }
    SpectralDecomp out;
    // Eigen returns ascending order.
    for (int i = 0; i < 4; ++i) {
        out.eigenvalues[i] = solver.eigenvalues()[3 - i];
        out.eigenvectors[i] = TwoQubitPure(Eigen::Vector4cd(solver.eigenvectors().col(3 - i).normalized()));
    }
    return out;
}

/// [[cos φ, −sin φ], [sin φ, cos φ]]. Advances a polar-circle angle by 2φ.
inline LocalOperator so2_rotation(double phi) {
    Eigen::Matrix2cd m;
    m << std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi);
    return LocalOperator(m);
}

/// ‖(U1⊗U2) ρ (U1⊗U2)ᵀ − ρ‖_max with Uk = so2_rotation(φk).
inline double invariance_defect(const DensityMatrix4 &rho, double phi1, double phi2) {
    const Eigen::Matrix4cd u = Eigen::kroneckerProduct(so2_rotation(phi1).matrix(), so2_rotation(phi2).matrix());
    return (u * rho.matrix() * u.transpose() - rho.matrix()).cwiseAbs().maxCoeff();
}

/// max{|2f−1|−1, |2g−1|−1} with f = (1+q)/2, g = (1−q)/2. Nonpositive means
/// separable for this symmetry class.
inline double separability_margin(MixingParameter q) {
    const double f = 0.5 * (1.0 + q.value());
    const double g = 0.5 * (1.0 - q.value());
    return std::max(std::abs(2.0 * f - 1.0) - 1.0, std::abs(2.0 * g - 1.0) - 1.0);
}

}  // namespace relinfo
