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

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "relinfo/ensemble.hpp"
#include "relinfo/measurement.hpp"
#include "relinfo/qubit.hpp"
#include "relinfo/random.hpp"
#include "relinfo/twoqubit.hpp"

namespace relinfo {

/// Two Schmidt families (j = 1, 2) with their priors, measured with {E1, E2}.
struct ExperimentConfig {
    double alpha1 = 0.0;
    double beta1 = 0.0;
    double alpha2 = 0.0;
    double beta2 = 0.0;
    double prior1 = 0.5;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;

    double prior2() const { return 1.0 - prior1; }

    void validate() const {
        if (!(prior1 >= 0.0 && prior1 <= 1.0)) {
            throw std::invalid_argument("prior1 must lie in [0, 1]");
        }
        if (trials == 0) {
            throw std::invalid_argument("trials must be >= 1");
        }
    }
};

/// Configuration of the correlated product-state baseline.
struct BaselineConfig {
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
};

struct LabelTally {
    std::string label;
    std::uint64_t prepared = 0;
    std::uint64_t correct = 0;

    double success_rate() const {
        return prepared == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(prepared);
    }
};

struct DiscriminationReport {
    double analytic_payoff = 0.0;
    double empirical_payoff = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    /// sqrt(p̂(1 − p̂)/trials)
    double std_error = 0.0;
    std::uint64_t seed = 0;
    std::variant<ExperimentConfig, BaselineConfig> config_echo;
    std::array<LabelTally, 2> by_label;

    double deviation() const { return std::abs(empirical_payoff - analytic_payoff); }
};

struct SweepRow {
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    double optimal_payoff = 0.0;
};

struct BetaOptimum {
    double beta1 = 0.0;
    double beta2 = 0.0;
    double payoff = 0.0;
};

/// p1·Tr[E1 ρ(q1)] + p2·Tr[E2 ρ(q2)] = p1(1 − q1)/2 + p2(1 + q2)/2.
inline double payoff_analytic(double alpha1, double beta1, double alpha2, double beta2, double prior1) {
    if (!(prior1 >= 0.0 && prior1 <= 1.0)) {
        throw std::invalid_argument("payoff_analytic: prior1 must lie in [0, 1]");
    }
    const double q1 = q_of(alpha1, beta1).value();
    const double q2 = q_of(alpha2, beta2).value();
    return prior1 * 0.5 * (1.0 - q1) + (1.0 - prior1) * 0.5 * (1.0 + q2);
}

/// 1/2 + |sin α1 + sin α2|/4. This is the β-maximum of the equal-prior payoff
/// whenever sin α1 and sin α2 share a sign (in particular on [0, π]²).
inline double payoff_optimal(double alpha1, double alpha2) {
    return 0.5 + std::abs(std::sin(alpha1) + std::sin(alpha2)) / 4.0;
}

/// Phases maximizing the equal-prior payoff: family 1 pushed to q1 = −|sin α1|,
/// family 2 to q2 = +|sin α2|. Ties (sin α = 0) resolve to β1 = π, β2 = 0.
inline BetaOptimum optimize_beta(double alpha1, double alpha2) {
    BetaOptimum out;
    out.beta1 = std::sin(alpha1) >= 0.0 ? kPi : 0.0;
    out.beta2 = std::sin(alpha2) >= 0.0 ? 0.0 : kPi;
    out.payoff = payoff_analytic(alpha1, out.beta1, alpha2, out.beta2, 0.5);
    return out;
}

namespace detail {

inline double binomial_std_error(double p_hat, std::uint64_t trials) {
    return std::sqrt(std::max(0.0, p_hat * (1.0 - p_hat)) / static_cast<double>(trials));
}

struct PartitionTally {
    std::array<std::uint64_t, 2> prepared{};
    std::array<std::uint64_t, 2> correct{};
};

inline void finish_report(DiscriminationReport &report, const std::vector<PartitionTally> &parts) {
    for (const auto &p : parts) {
        for (std::size_t j = 0; j < 2; ++j) {
            report.by_label[j].prepared += p.prepared[j];
            report.by_label[j].correct += p.correct[j];
        }
    }
    report.successes = report.by_label[0].correct + report.by_label[1].correct;
    report.empirical_payoff = static_cast<double>(report.successes) / static_cast<double>(report.trials);
    report.std_error = binomial_std_error(report.empirical_payoff, report.trials);
}

}  // namespace detail

/// Monte-Carlo run of the discrimination experiment. Each trial picks the
/// family j by prior, draws θn and θm uniformly on the polar circle, prepares
/// the Schmidt state of family j, measures {E1, E2} and guesses j = 1 on E1,
/// j = 2 on E2.
inline DiscriminationReport run_discrimination_mc(const ExperimentConfig &config, unsigned threads = 1) {
    config.validate();
    const Povm povm = bell_plane_povm();
    const std::array<double, 2> alpha{config.alpha1, config.alpha2};
    const std::array<double, 2> beta{config.beta1, config.beta2};

    const auto parts = run_partitioned(
        config.trials, config.seed, threads, [&](Rng &rng, std::uint64_t, std::uint64_t count) {
            detail::PartitionTally tally;
            for (std::uint64_t t = 0; t < count; ++t) {
                const std::size_t j = uniform01(rng) < config.prior1 ? 0 : 1;
                const PolarAngle tn = sample_polar(rng);
                const PolarAngle tm = sample_polar(rng);
                const TwoQubitPure psi = schmidt_state(SchmidtParams(alpha[j], beta[j], tn, tm));
                const std::vector<double> probs = outcome_probabilities_pure(povm, psi);
                const std::size_t guess = sample_outcome(probs, rng);
                ++tally.prepared[j];
                tally.correct[j] += guess == j ? 1 : 0;
            }
            return tally;
        });

    DiscriminationReport report;
    report.analytic_payoff =
        payoff_analytic(config.alpha1, config.beta1, config.alpha2, config.beta2, config.prior1);
    report.trials = config.trials;
    report.seed = config.seed;
    report.config_echo = config;
    report.by_label = {LabelTally{.label = "j1"}, LabelTally{.label = "j2"}};
    detail::finish_report(report, parts);
    return report;
}

/// Correlated product-state baseline: n uniform on the full Bloch sphere,
/// j = 1 prepares |n⟩|−n⟩, j = 2 prepares |n⟩|n⟩, equal priors, measured with
/// {Π_anti, Π_sym}; guess j = 1 on "anti". The symmetric preparation is always
/// identified and the anti-correlated one half the time, so the payoff is 3/4.
inline DiscriminationReport run_pryde_baseline(std::uint64_t trials, std::uint64_t seed, unsigned threads = 1) {
    if (trials == 0) {
        throw std::invalid_argument("run_pryde_baseline: trials must be >= 1");
    }
    const Povm povm = sym_antisym_povm();

    const auto parts = run_partitioned(trials, seed, threads, [&](Rng &rng, std::uint64_t, std::uint64_t count) {
        detail::PartitionTally tally;
        for (std::uint64_t t = 0; t < count; ++t) {
            const SpherePoint n = sample_sphere(rng);
            const std::size_t j = uniform01(rng) < 0.5 ? 0 : 1;
            const QubitVector first = sphere_state(n);
            const QubitVector second = j == 0 ? sphere_state(sphere_antipode(n)) : first;
            const std::vector<double> probs = outcome_probabilities_pure(povm, tensor(first, second));
            const std::size_t guess = sample_outcome(probs, rng);
            ++tally.prepared[j];
            tally.correct[j] += guess == j ? 1 : 0;
        }
        return tally;
    });

    DiscriminationReport report;
    report.analytic_payoff = 0.5 * 0.5 + 0.5 * 1.0;
    report.trials = trials;
    report.seed = seed;
    report.config_echo = BaselineConfig{.trials = trials, .seed = seed};
    report.by_label = {LabelTally{.label = "anticorrelated"}, LabelTally{.label = "correlated"}};
    detail::finish_report(report, parts);
    return report;
}

/// payoff_optimal on a uniform alpha_steps × alpha_steps grid over [0, π]²,
/// endpoints included, row-major in α1.
inline std::vector<SweepRow> payoff_sweep(int alpha_steps) {
    if (alpha_steps < 2) {
        throw std::invalid_argument("payoff_sweep: alpha_steps must be >= 2");
    }
    std::vector<SweepRow> rows;
    rows.reserve(static_cast<std::size_t>(alpha_steps) * alpha_steps);
    const double step = kPi / (alpha_steps - 1);
    for (int i = 0; i < alpha_steps; ++i) {
        for (int k = 0; k < alpha_steps; ++k) {
            const double a1 = i * step;
            const double a2 = k * step;
            rows.push_back({a1, a2, payoff_optimal(a1, a2)});
        }
    }
    return rows;
}

/// ‖rho_quadrature(α, β, N) − rho_analytic(q_of(α, β))‖_max
inline double verify_rho(double alpha, double beta, int grid_points) {
    return max_abs_diff(rho_quadrature(alpha, beta, grid_points), rho_analytic(q_of(alpha, beta)));
}

}  // namespace relinfo
