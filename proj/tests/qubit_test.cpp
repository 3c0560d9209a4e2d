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

#include "relinfo/qubit.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "gtest/gtest.h"

using namespace relinfo;

namespace {

constexpr double kTol = 1e-12;
const double kHalfSqrt2 = std::numbers::sqrt2 / 2.0;

void expect_state(const QubitVector &v, Complex a0, Complex a1) {
    EXPECT_NEAR(std::abs(v[0] - a0), 0.0, kTol);
    EXPECT_NEAR(std::abs(v[1] - a1), 0.0, kTol);
}

}  // namespace

TEST(PolarAngle, reduces_into_range) {
    EXPECT_DOUBLE_EQ(PolarAngle(kTwoPi + 0.25).radians(), 0.25);
    EXPECT_NEAR(PolarAngle(-0.5).radians(), kTwoPi - 0.5, kTol);
    EXPECT_EQ(PolarAngle(kTwoPi).radians(), 0.0);
    EXPECT_EQ(PolarAngle(-1e-300).radians(), 0.0);
}

TEST(SpherePoint, rejects_polar_angle_out_of_range) {
    EXPECT_THROW(SpherePoint(-0.1, 0.0), std::domain_error);
    EXPECT_THROW(SpherePoint(kPi + 0.1, 0.0), std::domain_error);
    EXPECT_NEAR(SpherePoint(1.0, -kPi / 2).phi(), 3 * kPi / 2, kTol);
}

TEST(polar_state, special_points) {
    expect_state(polar_state(PolarAngle(0)), 1, 0);
    expect_state(polar_state(PolarAngle(kPi)), 0, 1);
    expect_state(polar_state(PolarAngle(kPi / 2)), kHalfSqrt2, kHalfSqrt2);
}

TEST(polar_state, unit_norm_and_real_everywhere) {
    for (int i = 0; i < 1000; ++i) {
        const QubitVector v = polar_state(PolarAngle(i * 0.0137 - 3.0));
        EXPECT_NEAR(v.norm(), 1.0, kTol);
        EXPECT_EQ(v[0].imag(), 0.0);
        EXPECT_EQ(v[1].imag(), 0.0);
    }
}

TEST(antipode, shifts_by_pi) {
    EXPECT_NEAR(antipode(PolarAngle(0)).radians(), kPi, kTol);
    EXPECT_NEAR(antipode(PolarAngle(3 * kPi / 2)).radians(), kPi / 2, kTol);
}

TEST(antipode, gives_orthogonal_state) {
    const PolarAngle t(1.234);
    // Brute-force inner product from the amplitudes.
    const QubitVector a = polar_state(t);
    const QubitVector b = polar_state(antipode(t));
    EXPECT_NEAR(std::abs(a[0] * b[0] + a[1] * b[1]), 0.0, kTol);
    for (int i = 0; i < 500; ++i) {
        const PolarAngle s(i * 0.0127);
        EXPECT_NEAR(std::abs(overlap(polar_state(s), polar_state(antipode(s)))), 0.0, kTol);
        EXPECT_NEAR(std::abs(overlap(polar_state(s), antipodal_state(s))), 0.0, kTol);
    }
}

TEST(antipodal_state, matches_unreduced_shift) {
    for (double t : {0.0, 0.9, 3.5, 6.0}) {
        const QubitVector a = antipodal_state(PolarAngle(t));
        EXPECT_NEAR(a[0].real(), std::cos((t + kPi) / 2), kTol);
        EXPECT_NEAR(a[1].real(), std::sin((t + kPi) / 2), kTol);
    }
}

TEST(sphere_state, special_points) {
    expect_state(sphere_state({0, 0}), 1, 0);
    expect_state(sphere_state({kPi, 0}), 0, 1);
    expect_state(sphere_state({kPi / 2, kPi / 2}), kHalfSqrt2, Complex(0, kHalfSqrt2));
}

TEST(sphere_state, antipode_is_orthogonal) {
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        const SpherePoint p = sample_sphere(rng);
        EXPECT_NEAR(std::abs(overlap(sphere_state(p), sphere_state(sphere_antipode(p)))), 0.0, kTol);
    }
}

TEST(sample_polar, zero_mean_trig_moments) {
    Rng rng(2024);
    constexpr int kDraws = 100000;
    double c = 0, s = 0;
    for (int i = 0; i < kDraws; ++i) {
        const double t = sample_polar(rng).radians();
        c += std::cos(t);
        s += std::sin(t);
    }
    const double bound = 3.0 / std::sqrt(kDraws * 2.0);
    EXPECT_LT(std::abs(c / kDraws), bound);
    EXPECT_LT(std::abs(s / kDraws), bound);
}

TEST(sample_polar, chi_square_uniformity) {
    Rng rng(99);
    constexpr int kDraws = 1000000;
    constexpr int kBins = 64;
    std::array<int, kBins> counts{};
    for (int i = 0; i < kDraws; ++i) {
        const double t = sample_polar(rng).radians();
        ASSERT_GE(t, 0.0);
        ASSERT_LT(t, kTwoPi);
        ++counts[std::min(kBins - 1, static_cast<int>(t / kTwoPi * kBins))];
    }
    const double expected = static_cast<double>(kDraws) / kBins;
    double chi2 = 0;
    for (int c : counts) {
        chi2 += (c - expected) * (c - expected) / expected;
    }
    // 0.999 quantile of chi-square with 63 degrees of freedom.
    EXPECT_LT(chi2, 103.44237731987324);
}

TEST(sample_polar, deterministic_for_seed) {
    Rng a(5), b(5);
    for (int i = 0; i < 1000; ++i) {
        ASSERT_EQ(sample_polar(a).radians(), sample_polar(b).radians());
    }
}

TEST(sample_sphere, area_uniform_moments) {
    Rng rng(77);
    constexpr int kDraws = 100000;
    double cos_theta = 0, cos_phi = 0, cos_theta_sq = 0;
    for (int i = 0; i < kDraws; ++i) {
        const SpherePoint p = sample_sphere(rng);
        ASSERT_GE(p.theta(), 0.0);
        ASSERT_LE(p.theta(), kPi);
        cos_theta += std::cos(p.theta());
        cos_theta_sq += std::cos(p.theta()) * std::cos(p.theta());
        cos_phi += std::cos(p.phi());
    }
    // cos θ ~ U[−1, 1]: variance 1/3; cos φ: variance 1/2.
    EXPECT_LT(std::abs(cos_theta / kDraws), 3.0 * std::sqrt(1.0 / 3.0 / kDraws));
    EXPECT_LT(std::abs(cos_phi / kDraws), 3.0 * std::sqrt(0.5 / kDraws));
    // E[cos²θ] = 1/3, Var(cos²θ) = 1/5 − 1/9.
    EXPECT_LT(std::abs(cos_theta_sq / kDraws - 1.0 / 3.0), 3.0 * std::sqrt((0.2 - 1.0 / 9.0) / kDraws));
}

TEST(sample_sphere, deterministic_for_seed) {
    Rng a(8), b(8);
    for (int i = 0; i < 1000; ++i) {
        const SpherePoint p = sample_sphere(a), q = sample_sphere(b);
        ASSERT_EQ(p.theta(), q.theta());
        ASSERT_EQ(p.phi(), q.phi());
    }
}

TEST(overlap, examples) {
    const QubitVector x = sphere_state({0.7, 2.2});
    EXPECT_NEAR(std::abs(overlap(x, x) - 1.0), 0.0, kTol);
    EXPECT_NEAR(std::abs(overlap(polar_state(PolarAngle(0)), polar_state(PolarAngle(kPi)))), 0.0, kTol);
    EXPECT_NEAR(std::abs(overlap(polar_state(PolarAngle(0)), polar_state(PolarAngle(kPi / 2))) - std::cos(kPi / 4)),
                0.0, kTol);
}

TEST(overlap, conjugates_first_argument) {
    const QubitVector a(0.0, 1.0);
    const QubitVector b(0.0, Complex(0, 1));
    EXPECT_NEAR(std::abs(overlap(a, b) - Complex(0, 1)), 0.0, kTol);
    EXPECT_NEAR(std::abs(overlap(b, a) - Complex(0, -1)), 0.0, kTol);
}

TEST(overlap, bounded_by_one) {
    Rng rng(3);
    for (int i = 0; i < 1000; ++i) {
        const double o = std::abs(overlap(sphere_state(sample_sphere(rng)), sphere_state(sample_sphere(rng))));
        EXPECT_LE(o, 1.0 + 1e-12);
    }
}

TEST(QubitVector, rejects_unnormalized) {
    EXPECT_THROW(QubitVector(1.0, 1.0), std::invalid_argument);
}
