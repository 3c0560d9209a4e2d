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
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "relinfo/ensemble.hpp"
#include "relinfo/random.hpp"
#include "relinfo/twoqubit.hpp"

namespace relinfo {

/// A POVM element: Hermitian with spectrum in [0, 1].
class Effect {
   public:
    explicit Effect(const Eigen::Matrix4cd &m, double tol = 1e-10) : m_(m) {
        if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > tol) {
            throw std::invalid_argument("Effect: matrix is not Hermitian");
        }
        const auto ev = Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd>(m_, Eigen::EigenvaluesOnly).eigenvalues();
        if (ev.minCoeff() < -tol || ev.maxCoeff() > 1.0 + tol) {
            throw std::invalid_argument("Effect: eigenvalues outside [0, 1]");
        }
    }

    const Eigen::Matrix4cd &matrix() const { return m_; }

   private:
    Eigen::Matrix4cd m_;
};

class Povm {
   public:
    Povm(std::vector<Effect> effects, std::vector<std::string> labels, double tol = 1e-10)
        : effects_(std::move(effects)), labels_(std::move(labels)) {
        if (effects_.empty() || effects_.size() != labels_.size()) {
            throw std::invalid_argument("Povm: need one label per effect");
        }
        Eigen::Matrix4cd sum = Eigen::Matrix4cd::Zero();
        for (const auto &e : effects_) {
            sum += e.matrix();
        }
        if ((sum - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff() > tol) {
            throw std::invalid_argument("Povm: effects do not sum to the identity");
        }
    }

    std::size_t size() const { return effects_.size(); }
    const Effect &effect(std::size_t i) const { return effects_.at(i); }
    const std::string &label(std::size_t i) const { return labels_.at(i); }
    const std::vector<Effect> &effects() const { return effects_; }
    const std::vector<std::string> &labels() const { return labels_; }

   private:
    std::vector<Effect> effects_;
    std::vector<std::string> labels_;
};

/// E1 = |φ⁺⟩⟨φ⁺| + |ψ⁻⟩⟨ψ⁻| (outcome 0, "E1"),
/// E2 = |φ⁻⟩⟨φ⁻| + |ψ⁺⟩⟨ψ⁺| (outcome 1, "E2").
inline Povm bell_plane_povm() {
    const BellBasis b = bell_states();
    return Povm({Effect(b.phi_plus.projector() + b.psi_minus.projector()),
                 Effect(b.phi_minus.projector() + b.psi_plus.projector())},
                {"E1", "E2"});
}

/// Projectors onto the antisymmetric singlet (outcome 0, "anti") and the
/// symmetric triplet subspace (outcome 1, "sym").
inline Povm sym_antisym_povm() {
    const Eigen::Matrix4cd anti = bell_states().psi_minus.projector();
    return Povm({Effect(anti), Effect(Eigen::Matrix4cd::Identity() - anti)}, {"anti", "sym"});
}

/// Checks a probability vector and clamps roundoff: entries in [−1e-9, 0) are
/// zeroed and entries in (1, 1 + 1e-9] become 1. Anything further out, or a
/// total that is off by more than 1e-9, is an error.
inline std::vector<double> clamp_probabilities(std::vector<double> probs) {
    double total = 0.0;
    for (double &p : probs) {
        if (!(p >= -1e-9 && p <= 1.0 + 1e-9)) {
            throw std::domain_error("probability outside [0, 1]");
        }
        p = std::clamp(p, 0.0, 1.0);
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw std::domain_error("probabilities do not sum to 1");
    }
    return probs;
}

/// Born rule, pᵢ = Tr[Eᵢ ρ].
inline std::vector<double> outcome_probabilities(const Povm &povm, const DensityMatrix4 &rho) {
    std::vector<double> probs;
    probs.reserve(povm.size());
    for (const auto &e : povm.effects()) {
        probs.push_back((e.matrix() * rho.matrix()).trace().real());
    }
    return clamp_probabilities(std::move(probs));
}

/// pᵢ = ⟨ψ|Eᵢ|ψ⟩.
inline std::vector<double> outcome_probabilities_pure(const Povm &povm, const TwoQubitPure &psi) {
    std::vector<double> probs;
    probs.reserve(povm.size());
    for (const auto &e : povm.effects()) {
        probs.push_back(psi.amplitudes().dot(e.matrix() * psi.amplitudes()).real());
    }
    return clamp_probabilities(std::move(probs));
}

/// Draws an outcome index with the given probabilities. Consumes exactly one
/// uniform draw.
inline std::size_t sample_outcome(std::span<const double> probs, Rng &rng) {
    if (probs.empty()) {
        throw std::invalid_argument("sample_outcome: empty probability vector");
    }
    double total = 0.0;
    for (double p : probs) {
        if (p < -1e-9) {
            throw std::domain_error("sample_outcome: negative probability");
        }
        total += std::max(p, 0.0);
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw std::domain_error("sample_outcome: probabilities do not sum to 1");
    }
    const double u = uniform01(rng) * total;
    double cumulative = 0.0;
    std::size_t last_nonzero = 0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        const double p = std::max(probs[i], 0.0);
        if (p == 0.0) {
            continue;
        }
        cumulative += p;
        last_nonzero = i;
        if (u < cumulative) {
            return i;
        }
    }
    return last_nonzero;
}

}  // namespace relinfo
