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

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include "relinfo/qubit.hpp"

namespace relinfo {

/// Normalized two-qubit amplitudes ordered |00⟩, |01⟩, |10⟩, |11⟩ (first qubit
/// is the most significant index).
class TwoQubitPure {
   public:
    TwoQubitPure() : amps_(Eigen::Vector4cd::Unit(0)) {}
    explicit TwoQubitPure(const Eigen::Vector4cd &amps) : amps_(amps) {
        if (std::abs(amps_.norm() - 1.0) > 1e-10) {
            throw std::invalid_argument("TwoQubitPure: amplitudes are not normalized");
        }
    }
    TwoQubitPure(Complex a00, Complex a01, Complex a10, Complex a11)
        : TwoQubitPure(Eigen::Vector4cd(a00, a01, a10, a11)) {}

    Complex operator[](int i) const { return amps_[i]; }
    const Eigen::Vector4cd &amplitudes() const { return amps_; }
    double norm() const { return amps_.norm(); }

    /// |ψ⟩⟨ψ|
    Eigen::Matrix4cd projector() const { return amps_ * amps_.adjoint(); }

   private:
    Eigen::Vector4cd amps_;
};

/// Schmidt parameters: entanglement angle α, Schmidt phase β, and the polar
/// angles of the two Schmidt directions.
struct SchmidtParams {
    SchmidtParams() = default;
    SchmidtParams(double alpha, double beta, PolarAngle theta_n, PolarAngle theta_m)
        : alpha(wrap_two_pi(alpha)), beta(wrap_two_pi(beta)), theta_n(theta_n), theta_m(theta_m) {}

    double alpha = 0.0;
    double beta = 0.0;
    PolarAngle theta_n;
    PolarAngle theta_m;
};

/// A 2×2 operator on one qubit.
class LocalOperator {
   public:
    LocalOperator() : m_(Eigen::Matrix2cd::Identity()) {}
    explicit LocalOperator(const Eigen::Matrix2cd &m) : m_(m) {}

    /// Builds an operator that must be unitary within `tol`.
    static LocalOperator unitary(const Eigen::Matrix2cd &m, double tol = 1e-10) {
        LocalOperator op(m);
        if (!op.is_unitary(tol)) {
            throw std::invalid_argument("LocalOperator: matrix is not unitary");
        }
        return op;
    }

    const Eigen::Matrix2cd &matrix() const { return m_; }

    bool is_unitary(double tol) const {
        return ((m_ * m_.adjoint()) - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() <= tol;
    }

   private:
    Eigen::Matrix2cd m_;
};

inline TwoQubitPure tensor(const QubitVector &a, const QubitVector &b) {
    return {a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]};
}

/// e^{−iβ/2} cos(α/2)|n⟩|m⟩ − e^{iβ/2} sin(α/2)|−n⟩|−m⟩.
///
/// The relative minus sign fixes the convention so that the polar-circle
/// average of this state is ρ(q) with q = sin α cos β: β = 0 puts the
/// maximally entangled member in the {φ⁻, ψ⁺} plane, β = π in {φ⁺, ψ⁻}.
inline TwoQubitPure schmidt_state(const SchmidtParams &p) {
    const Eigen::Vector4cd same =
        tensor(polar_state(p.theta_n), polar_state(p.theta_m)).amplitudes();
    const Eigen::Vector4cd flipped =
        tensor(antipodal_state(p.theta_n), antipodal_state(p.theta_m)).amplitudes();
    const Complex first = std::polar(std::cos(0.5 * p.alpha), -0.5 * p.beta);
    const Complex second = std::polar(std::sin(0.5 * p.alpha), 0.5 * p.beta);
    return TwoQubitPure(first * same - second * flipped);
}

enum class Sign : int { minus = -1, plus = 1 };

/// (|n⟩|−m⟩ + sign·|−n⟩|m⟩)/√2. Purely real. Sign::minus is the singlet-like
/// member detected by E1; Sign::plus is detected by E2.
inline TwoQubitPure pair_state(Sign sign, PolarAngle theta_n, PolarAngle theta_m) {
    const Eigen::Vector4cd a = tensor(polar_state(theta_n), antipodal_state(theta_m)).amplitudes();
    const Eigen::Vector4cd b = tensor(antipodal_state(theta_n), polar_state(theta_m)).amplitudes();
    return TwoQubitPure((a + static_cast<double>(sign) * b) * kInvSqrt2);
}

struct BellBasis {
    TwoQubitPure phi_plus;
    TwoQubitPure phi_minus;
    TwoQubitPure psi_plus;
    TwoQubitPure psi_minus;
};

inline BellBasis bell_states() {
    const double h = kInvSqrt2;
    return {
        .phi_plus = {h, 0, 0, h},
        .phi_minus = {h, 0, 0, -h},
        .psi_plus = {0, h, h, 0},
        .psi_minus = {0, h, -h, 0},
    };
}

/// Exchanges the two qubits.
inline TwoQubitPure swap_qubits(const TwoQubitPure &psi) {
    return {psi[0], psi[2], psi[1], psi[3]};
}

/// |⟨a|b⟩|. States here are compared only up to a global phase.
inline double fidelity(const TwoQubitPure &a, const TwoQubitPure &b) {
    return std::abs(a.amplitudes().dot(b.amplitudes()));
}

/// Tr₂|ψ⟩⟨ψ|.
inline Eigen::Matrix2cd reduced_density_first(const TwoQubitPure &psi) {
    // Rows index the first qubit, columns the second.
    Eigen::Matrix2cd c;
    c << psi[0], psi[1], psi[2], psi[3];
    return c * c.adjoint();
}

/// 4·det(Tr₂|ψ⟩⟨ψ|) = sin²α in Schmidt form; the square of the concurrence.
inline double tangle(const TwoQubitPure &psi) {
    return 4.0 * reduced_density_first(psi).determinant().real();
}

/// |⟨ψ|σy⊗σy|ψ*⟩|.
inline double concurrence_wootters(const TwoQubitPure &psi) {
    Eigen::Matrix2cd sy;
    sy << 0.0, Complex(0, -1), Complex(0, 1), 0.0;
    const Eigen::Matrix4cd flip = Eigen::kroneckerProduct(sy, sy);
    return std::abs(psi.amplitudes().dot(flip * psi.amplitudes().conjugate()));
}

/// (u1 ⊗ u2)|ψ⟩. Both operators must be unitary within 1e-10.
inline TwoQubitPure apply_local(const LocalOperator &u1, const LocalOperator &u2, const TwoQubitPure &psi) {
    if (!u1.is_unitary(1e-10) || !u2.is_unitary(1e-10)) {
        throw std::invalid_argument("apply_local: operator is not unitary");
    }
    const Eigen::Matrix4cd u = Eigen::kroneckerProduct(u1.matrix(), u2.matrix());
    return TwoQubitPure(u * psi.amplitudes());
}

/// σz written in the basis {|n(θ)⟩, |−n(θ)⟩}: |n⟩⟨n| − |−n⟩⟨−n|.
inline LocalOperator sigma_z_in_basis(PolarAngle theta) {
    const Eigen::Vector2cd n = polar_state(theta).amplitudes();
    const Eigen::Vector2cd m = antipodal_state(theta).amplitudes();
    return LocalOperator(n * n.adjoint() - m * m.adjoint());
}

}  // namespace relinfo
