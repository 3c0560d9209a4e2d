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
#include <complex>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>

#include "relinfo/random.hpp"

namespace relinfo {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

/// Reduces an angle into [0, 2π).
inline double wrap_two_pi(double radians) {
    double r = std::fmod(radians, kTwoPi);
    if (r < 0) {
        r += kTwoPi;
    }
    // fmod of a tiny negative value can round up to exactly 2π.
    return r >= kTwoPi ? 0.0 : r;
}

/// Angle along the great circle of the Bloch sphere lying in the x-z plane.
class PolarAngle {
   public:
    constexpr PolarAngle() = default;
    explicit PolarAngle(double radians) : theta_(wrap_two_pi(radians)) {}

    double radians() const { return theta_; }

   private:
    double theta_ = 0.0;
};

/// Point on the full Bloch sphere, polar angle in [0, π], azimuth in [0, 2π).
class SpherePoint {
   public:
    constexpr SpherePoint() = default;
    SpherePoint(double theta, double phi) : theta_(theta), phi_(wrap_two_pi(phi)) {
        if (!(theta >= 0.0 && theta <= kPi)) {
            throw std::domain_error("SpherePoint: polar angle outside [0, pi]");
        }
    }

    double theta() const { return theta_; }
    double phi() const { return phi_; }

   private:
    double theta_ = 0.0;
    double phi_ = 0.0;
};

/// Normalized single-qubit amplitudes (a0|0⟩ + a1|1⟩).
class QubitVector {
   public:
    QubitVector() : amps_(1.0, 0.0) {}
    QubitVector(Complex a0, Complex a1) : amps_(a0, a1) {
        if (std::abs(amps_.norm() - 1.0) > 1e-10) {
            throw std::invalid_argument("QubitVector: amplitudes are not normalized");
        }
    }

    Complex operator[](int i) const { return amps_[i]; }
    const Eigen::Vector2cd &amplitudes() const { return amps_; }
    double norm() const { return amps_.norm(); }

   private:
    Eigen::Vector2cd amps_;
};

/// |n(θ)⟩ = cos(θ/2)|0⟩ + sin(θ/2)|1⟩. Real on the whole circle; |+z⟩ = |0⟩.
inline QubitVector polar_state(PolarAngle theta) {
    const double half = 0.5 * theta.radians();
    return {std::cos(half), std::sin(half)};
}

/// The opposite point on the polar circle, θ + π reduced mod 2π.
inline PolarAngle antipode(PolarAngle theta) {
    return PolarAngle(theta.radians() + kPi);
}

/// |−n(θ)⟩ evaluated as |n(θ + π)⟩ without reducing θ + π.
///
/// polar_state(antipode(θ)) differs from this by a sign whenever θ ≥ π. The
/// two-qubit constructors use this form so that the relative sign between
/// their branches does not jump across the circle.
inline QubitVector antipodal_state(PolarAngle theta) {
    const double half = 0.5 * theta.radians();
    return {-std::sin(half), std::cos(half)};
}

/// cos(θ/2)|0⟩ + e^{iφ} sin(θ/2)|1⟩.
inline QubitVector sphere_state(const SpherePoint &p) {
    return {std::cos(0.5 * p.theta()), std::polar(std::sin(0.5 * p.theta()), p.phi())};
}

inline SpherePoint sphere_antipode(const SpherePoint &p) {
    return {kPi - p.theta(), p.phi() + kPi};
}

inline PolarAngle sample_polar(Rng &rng) {
    return PolarAngle(kTwoPi * uniform01(rng));
}

/// Area-uniform point: cos θ uniform on [−1, 1], φ uniform on [0, 2π).
inline SpherePoint sample_sphere(Rng &rng) {
    const double cos_theta = std::clamp(1.0 - 2.0 * uniform01(rng), -1.0, 1.0);
    const double phi = kTwoPi * uniform01(rng);
    return {std::acos(cos_theta), phi};
}

/// ⟨a|b⟩.
inline Complex overlap(const QubitVector &a, const QubitVector &b) {
    return a.amplitudes().dot(b.amplitudes());
}

}  // namespace relinfo
