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

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "relinfo/discrimination.hpp"
#include "relinfo/ensemble.hpp"

namespace relinfo::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kUsage = 2,
};

/// Thrown for bad flag values; maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses a decimal angle in radians. A trailing "pi" multiplies by π, so
/// "0.5pi", "pi" and "-pi" are accepted.
inline double parse_angle(const std::string &text) {
    std::string body = text;
    double scale = 1.0;
    if (body.size() >= 2 && body.compare(body.size() - 2, 2, "pi") == 0) {
        body.resize(body.size() - 2);
        scale = kPi;
        if (body.empty() || body == "+") {
            body = "1";
        } else if (body == "-") {
            body = "-1";
        }
    }
    if (!body.empty() && body.front() == '+') {
        body.erase(0, 1);
    }
    double value = 0.0;
    const char *first = body.data();
    const char *last = body.data() + body.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (body.empty() || ec != std::errc() || ptr != last || !std::isfinite(value)) {
        throw UsageError("invalid angle '" + text + "'");
    }
    return value * scale;
}

/// Shortest round-trip text when it carries at least 12 significant digits,
/// otherwise "%#.12g" (trailing zeros kept).
inline std::string format_csv_number(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    std::string shortest(buf, res.ptr);

    int digits = 0;
    bool leading = true;
    for (char c : shortest) {
        if (c == 'e' || c == 'E') {
            break;
        }
        if (c < '0' || c > '9') {
            continue;
        }
        if (leading && c == '0') {
            continue;
        }
        leading = false;
        ++digits;
    }
    if (digits >= 12) {
        return shortest;
    }
    std::snprintf(buf, sizeof(buf), "%#.12g", v);
    return buf;
}

inline Json config_to_json(const ExperimentConfig &c) {
    return Json{
        {"alpha1", c.alpha1}, {"beta1", c.beta1}, {"alpha2", c.alpha2}, {"beta2", c.beta2},
        {"prior1", c.prior1}, {"trials", c.trials}, {"seed", c.seed},
    };
}

inline Json config_to_json(const BaselineConfig &c) {
    return Json{{"trials", c.trials}, {"seed", c.seed}};
}

inline Json report_to_json(const DiscriminationReport &r, const std::string &kind) {
    Json by_label = Json::array();
    for (const auto &t : r.by_label) {
        by_label.push_back(Json{{"label", t.label}, {"prepared", t.prepared}, {"correct", t.correct}});
    }
    return Json{
        {"schema_version", kSchemaVersion},
        {"kind", kind},
        {"analytic_payoff", r.analytic_payoff},
        {"empirical_payoff", r.empirical_payoff},
        {"trials", r.trials},
        {"successes", r.successes},
        {"std_error", r.std_error},
        {"seed", r.seed},
        {"config", std::visit([](const auto &c) { return config_to_json(c); }, r.config_echo)},
        {"by_label", by_label},
    };
}

namespace detail {

/// Writes to `path` or, when empty, to `out`.
inline void emit(const std::string &text, const std::string &path, std::ostream &out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    f << text;
    f.flush();
    if (!f) {
        throw std::runtime_error("failed writing '" + path + "'");
    }
}

inline std::string dump(const Json &j) { return j.dump(2) + "\n"; }

template <class T>
void require(bool ok, const T &message) {
    if (!ok) {
        throw UsageError(message);
    }
}

}  // namespace detail

/// Runs the command line `args` (program name excluded). Documents go to
/// `out` (or --out), diagnostics to `err`. Returns the process exit code.
inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Relative-information two-qubit state discrimination", "relinfo"};
    app.require_subcommand(1);

    std::string out_path;

    // verify-rho
    std::string vr_alpha = "0", vr_beta = "0";
    int vr_grid = 16;
    auto *verify = app.add_subcommand("verify-rho", "Compare the quadrature ensemble average with its closed form");
    verify->add_option("--alpha", vr_alpha, "Entanglement angle (radians, or with a 'pi' suffix)");
    verify->add_option("--beta", vr_beta, "Schmidt phase (radians, or with a 'pi' suffix)");
    verify->add_option("--grid", vr_grid, "Quadrature points per angle (>= 8)");
    verify->add_option("--out", out_path, "Write the JSON document here instead of stdout");

    // discriminate
    std::string d_alpha1 = "0", d_beta1 = "0", d_alpha2 = "0", d_beta2 = "0";
    double d_prior1 = 0.5;
    std::int64_t d_trials = 0;
    std::uint64_t d_seed = 0;
    int d_threads = 1;
    auto *discriminate = app.add_subcommand("discriminate", "Monte-Carlo discrimination with the Bell-plane projectors");
    discriminate->add_option("--alpha1", d_alpha1, "Entanglement angle of family 1");
    discriminate->add_option("--beta1", d_beta1, "Schmidt phase of family 1");
    discriminate->add_option("--alpha2", d_alpha2, "Entanglement angle of family 2");
    discriminate->add_option("--beta2", d_beta2, "Schmidt phase of family 2");
    discriminate->add_option("--prior1", d_prior1, "Prior probability of family 1");
    discriminate->add_option("--trials", d_trials, "Number of trials (>= 1)")->required();
    discriminate->add_option("--seed", d_seed, "Random seed");
    discriminate->add_option("--threads", d_threads, "Worker threads (output does not depend on this)");
    discriminate->add_option("--out", out_path, "Write the JSON report here instead of stdout");

    // sweep
    int s_steps = 0;
    auto *sweep = app.add_subcommand("sweep", "Tabulate the optimal payoff over (alpha1, alpha2) in [0, pi]^2");
    sweep->add_option("--alpha-steps", s_steps, "Grid points per axis (>= 2)")->required();
    sweep->add_option("--out", out_path, "CSV output path (stdout if omitted)");

    // pryde
    std::int64_t p_trials = 0;
    std::uint64_t p_seed = 0;
    int p_threads = 1;
    auto *pryde = app.add_subcommand("pryde", "Correlated product-state baseline with the symmetric/antisymmetric projectors");
    pryde->add_option("--trials", p_trials, "Number of trials (>= 1)")->required();
    pryde->add_option("--seed", p_seed, "Random seed");
    pryde->add_option("--threads", p_threads, "Worker threads (output does not depend on this)");
    pryde->add_option("--out", out_path, "Write the JSON report here instead of stdout");

    // separability
    std::int64_t sep_samples = 0;
    std::uint64_t sep_seed = 0;
    auto *separability = app.add_subcommand("separability", "Sample (alpha, beta) and report the largest separability margin");
    separability->add_option("--samples", sep_samples, "Number of samples (>= 1)")->required();
    separability->add_option("--seed", sep_seed, "Random seed");
    separability->add_option("--out", out_path, "Write the JSON document here instead of stdout");

    try {
        // CLI11 consumes a vector in reverse order.
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "relinfo: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (verify->parsed()) {
            detail::require(vr_grid >= 8, "grid must be \xe2\x89\xa5 8");
            const double alpha = parse_angle(vr_alpha);
            const double beta = parse_angle(vr_beta);
            const double diff = verify_rho(alpha, beta, vr_grid);
            const Json doc{
                {"schema_version", kSchemaVersion},
                {"kind", "verify-rho"},
                {"alpha", alpha},
                {"beta", beta},
                {"grid", vr_grid},
                {"q", q_of(alpha, beta).value()},
                {"max_abs_diff", diff},
            };
            detail::emit(detail::dump(doc), out_path, out);
            if (!(diff <= 1e-10)) {
                err << "relinfo: max_abs_diff " << diff << " exceeds 1e-10\n";
                return kCheckFailed;
            }
            return kOk;
        }
        if (discriminate->parsed()) {
            detail::require(d_trials >= 1, "trials must be \xe2\x89\xa5 1");
            detail::require(d_prior1 >= 0.0 && d_prior1 <= 1.0, "prior1 must lie in [0, 1]");
            detail::require(d_threads >= 1, "threads must be \xe2\x89\xa5 1");
            ExperimentConfig config;
            config.alpha1 = parse_angle(d_alpha1);
            config.beta1 = parse_angle(d_beta1);
            config.alpha2 = parse_angle(d_alpha2);
            config.beta2 = parse_angle(d_beta2);
            config.prior1 = d_prior1;
            config.trials = static_cast<std::uint64_t>(d_trials);
            config.seed = d_seed;
            const auto report = run_discrimination_mc(config, static_cast<unsigned>(d_threads));
            detail::emit(detail::dump(report_to_json(report, "discriminate")), out_path, out);
            return kOk;
        }
        if (sweep->parsed()) {
            detail::require(s_steps >= 2, "alpha-steps must be \xe2\x89\xa5 2");
            std::ostringstream csv;
            csv << "alpha1,alpha2,optimal_payoff\n";
            for (const auto &row : payoff_sweep(s_steps)) {
                csv << format_csv_number(row.alpha1) << ',' << format_csv_number(row.alpha2) << ','
                    << format_csv_number(row.optimal_payoff) << '\n';
            }
            detail::emit(csv.str(), out_path, out);
            return kOk;
        }
        if (pryde->parsed()) {
            detail::require(p_trials >= 1, "trials must be \xe2\x89\xa5 1");
            detail::require(p_threads >= 1, "threads must be \xe2\x89\xa5 1");
            const auto report =
                run_pryde_baseline(static_cast<std::uint64_t>(p_trials), p_seed, static_cast<unsigned>(p_threads));
            detail::emit(detail::dump(report_to_json(report, "pryde")), out_path, out);
            return kOk;
        }
        if (separability->parsed()) {
            detail::require(sep_samples >= 1, "samples must be \xe2\x89\xa5 1");
            Rng rng(sep_seed);
            double worst = -std::numeric_limits<double>::infinity();
            double worst_alpha = 0.0, worst_beta = 0.0;
            for (std::int64_t s = 0; s < sep_samples; ++s) {
                const double alpha = kTwoPi * uniform01(rng);
                const double beta = kTwoPi * uniform01(rng);
                const double margin = separability_margin(q_of(alpha, beta));
                if (margin > worst) {
                    worst = margin;
                    worst_alpha = alpha;
                    worst_beta = beta;
                }
            }
            const bool separable = worst <= 1e-12;
            const Json doc{
                {"schema_version", kSchemaVersion},
                {"kind", "separability"},
                {"samples", sep_samples},
                {"seed", sep_seed},
                {"max_margin", worst},
                {"max_margin_alpha", worst_alpha},
                {"max_margin_beta", worst_beta},
                {"separable", separable},
            };
            detail::emit(detail::dump(doc), out_path, out);
            return separable ? kOk : kCheckFailed;
        }
    } catch (const UsageError &e) {
        err << "relinfo: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception &e) {
        err << "relinfo: " << e.what() << "\n";
        return kCheckFailed;
    }
    return kUsage;
}

}  // namespace relinfo::cli
