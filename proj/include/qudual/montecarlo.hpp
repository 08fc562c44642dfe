// Copyright 2026 The qudual Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Finite-sample simulation of sharp and unsharp measurements, used as a
 * statistical oracle for the closed forms.
 *
 * Every draw is a pure function of (seed, stream, counter). Work is split
 * into kShards fixed shards, each with its own stream index, and the shards
 * are merged by summing outcome counts; results are therefore bit-identical
 * for a given seed regardless of scheduling.
 */

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <future>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "complementarity.hpp"
#include "errors.hpp"
#include "qubit_state.hpp"
#include "random.hpp"
#include "simultaneous.hpp"
#include "uncertainty.hpp"

namespace qudual {

/// Two-sided z gate.
inline constexpr double kZGate = 4.0;
inline constexpr std::uint64_t kShards = 8;

struct SampleReport {
    std::uint64_t n = 0;
    double empirical_mean = 0.0;
    double empirical_variance = 0.0;
    double analytic_mean = 0.0;
    double analytic_variance = 0.0;
    double z_mean = 0.0;
    double z_variance = 0.0;
    std::uint64_t seed = 0;
    /// Some |z| exceeds kZGate.
    bool flagged = false;
    /// n < 2: the variance is reported as 0 and carries no information.
    bool degenerate = false;

    friend bool operator==(const SampleReport &, const SampleReport &) = default;
};

namespace detail {

/// Counts of outcomes 0..K-1 over n shots. `draw(rng, i)` maps shot i of a
/// shard to an outcome.
template <std::size_t K, typename Draw>
[[nodiscard]] std::array<std::uint64_t, K>
sharded_counts(std::uint64_t n, std::uint64_t seed, std::uint64_t stream_base,
               const Draw &draw) {
    std::vector<std::future<std::array<std::uint64_t, K>>> jobs;
    jobs.reserve(kShards);
    for (std::uint64_t s = 0; s < kShards; ++s) {
        const std::uint64_t begin = n * s / kShards;
        const std::uint64_t end = n * (s + 1) / kShards;
        jobs.push_back(std::async(std::launch::async, [=, &draw] {
            const CounterRng rng(seed, stream_base + s);
            std::array<std::uint64_t, K> counts{};
            for (std::uint64_t i = 0; i < end - begin; ++i) {
                ++counts[draw(rng, i)];
            }
            return counts;
        }));
    }
    std::array<std::uint64_t, K> total{};
    for (auto &job : jobs) {
        const auto part = job.get();
        for (std::size_t k = 0; k < K; ++k) {
            total[k] += part[k];
        }
    }
    return total;
}

[[nodiscard]] inline double z_score(double empirical, double analytic,
                                    double standard_error) {
    if (standard_error > 0.0) {
        return (empirical - analytic) / standard_error;
    }
    return std::abs(empirical - analytic) <= 1e-12
               ? 0.0
               : std::numeric_limits<double>::infinity();
}

/**
 * Report for a two-valued variable. `probs` are the analytic outcome
 * probabilities; they fix the standard errors of the mean, sqrt(var/n),
 * and of the unbiased sample variance.
 */
[[nodiscard]] inline SampleReport
two_outcome_report(const std::array<std::uint64_t, 2> &counts,
                   const std::array<double, 2> &values,
                   const std::array<double, 2> &probs, double analytic_mean,
                   double analytic_variance, std::uint64_t seed) {
    SampleReport r;
    r.n = counts[0] + counts[1];
    r.seed = seed;
    r.analytic_mean = analytic_mean;
    r.analytic_variance = analytic_variance;
    if (r.n == 0) {
        r.degenerate = true;
        return r;
    }
    const double n = static_cast<double>(r.n);
    const double f0 = static_cast<double>(counts[0]) / n;
    const double f1 = static_cast<double>(counts[1]) / n;
    r.empirical_mean = f0 * values[0] + f1 * values[1];
    if (r.n < 2) {
        r.degenerate = true;
        r.empirical_variance = 0.0;
    } else {
        const double d0 = values[0] - r.empirical_mean;
        const double d1 = values[1] - r.empirical_mean;
        r.empirical_variance =
            (f0 * d0 * d0 + f1 * d1 * d1) * n / (n - 1.0);
    }

    const double mu = probs[0] * values[0] + probs[1] * values[1];
    const double e0 = values[0] - mu;
    const double e1 = values[1] - mu;
    const double var = probs[0] * e0 * e0 + probs[1] * e1 * e1;
    const double mu4 = probs[0] * e0 * e0 * e0 * e0 + probs[1] * e1 * e1 * e1 * e1;
    const double se_mean = std::sqrt(std::max(var, 0.0) / n);
    // exact variance of the unbiased sample variance; stays positive at
    // p = 1/2 where mu4 = var^2
    const double var_of_var =
        r.n < 2 ? 0.0 : mu4 / n - var * var * (n - 3.0) / (n * (n - 1.0));
    const double se_var = std::sqrt(std::max(var_of_var, 0.0));

    r.z_mean = z_score(r.empirical_mean, analytic_mean, se_mean);
    r.z_variance = r.degenerate
                       ? 0.0
                       : z_score(r.empirical_variance, analytic_variance, se_var);
    r.flagged = std::abs(r.z_mean) > kZGate || std::abs(r.z_variance) > kZGate ||
                r.degenerate;
    return r;
}

} // namespace detail

/// Sharp projective measurement of `obs` on `rho`, n shots.
[[nodiscard]] inline SampleReport sample_sharp(const DensityMatrix &rho,
                                               const Observable &obs,
                                               std::uint64_t n,
                                               std::uint64_t seed) {
    if (n < 1) {
        throw DomainError("sample_sharp: n must be at least 1");
    }
    const CMat2 m = rho.matrix();
    const double p0 =
        std::clamp(obs.eigenvector(0).dot(m * obs.eigenvector(0)).real(), 0.0, 1.0);
    const auto counts = detail::sharded_counts<2>(
        n, seed, 0, [p0](const CounterRng &rng, std::uint64_t i) {
            return rng.uniform(i) < p0 ? std::size_t{0} : std::size_t{1};
        });
    const auto moments = mean_var(rho, obs);
    return detail::two_outcome_report(counts, {obs.val_plus(), obs.val_minus()},
                                      {p0, 1.0 - p0}, moments.mean,
                                      moments.variance, seed);
}

struct FringeSample {
    double visibility;
    std::vector<double> frequencies;
};

/// Binomial sampling of fringe_probability at every phase in `phi_grid`;
/// the visibility is taken from the extreme empirical frequencies.
[[nodiscard]] inline FringeSample sample_fringe(const DensityMatrix &rho,
                                                std::span<const double> phi_grid,
                                                double xi,
                                                std::uint64_t n_per_point,
                                                std::uint64_t seed) {
    if (phi_grid.empty() || n_per_point < 1) {
        throw DomainError("sample_fringe: need at least one phase and one shot");
    }
    FringeSample out{0.0, {}};
    out.frequencies.reserve(phi_grid.size());
    for (std::size_t k = 0; k < phi_grid.size(); ++k) {
        const double p = fringe_probability(rho, phi_grid[k], xi);
        const CounterRng rng(seed, 1000 + k);
        std::uint64_t hits = 0;
        for (std::uint64_t i = 0; i < n_per_point; ++i) {
            hits += rng.uniform(i) < p ? 1U : 0U;
        }
        out.frequencies.push_back(static_cast<double>(hits) /
                                  static_cast<double>(n_per_point));
    }
    const auto [lo, hi] =
        std::minmax_element(out.frequencies.begin(), out.frequencies.end());
    const double total = *hi + *lo;
    out.visibility = total > 0.0 ? (*hi - *lo) / total : 0.0;
    return out;
}

struct SimultaneousSample {
    SampleReport a_estimate;
    SampleReport b_estimate;
    /// Counts of (meter outcome k, B outcome j) at index 2k + j.
    std::array<std::uint64_t, 4> joint_counts;
    /// The same joint distribution from 4-dim projection probabilities.
    std::array<double, 4> joint_probabilities;
};

/**
 * Per shot: the meter is measured in the unbiased basis {|M1>, |M2>}, the
 * system collapses to the conditional state, then B(varrho) is measured on
 * the system. Outcome values are +-a_prime and +-B/c.
 */
[[nodiscard]] inline SimultaneousSample
sample_simultaneous(const EntangledState &psi, double varrho, std::uint64_t n,
                    std::uint64_t seed, double a_value = 0.5,
                    double b_value = 0.5) {
    if (n < 1) {
        throw DomainError("sample_simultaneous: n must be at least 1");
    }
    const double c = psi.c();
    const auto proj = meter_projectors(c, a_value); // rejects singular c
    const Observable b = complementary_to(reference_observable(), varrho);

    std::array<CVec2, 2> conditional{conditional_system_vector(psi, proj.m1),
                                     conditional_system_vector(psi, proj.m2)};
    const double p_m1 = conditional[0].squaredNorm();
    std::array<double, 2> p_b_given{};
    for (int k = 0; k < 2; ++k) {
        const double norm = conditional[k].squaredNorm();
        p_b_given[k] =
            norm > 0.0 ? std::norm(b.eigenvector(0).dot(conditional[k])) / norm : 0.5;
    }

    const auto counts = detail::sharded_counts<4>(
        n, seed, 100, [&](const CounterRng &rng, std::uint64_t i) {
            const std::size_t k = rng.uniform(2 * i) < p_m1 ? 0 : 1;
            const std::size_t j = rng.uniform(2 * i + 1) < p_b_given[k] ? 0 : 1;
            return 2 * k + j;
        });

    SimultaneousSample out{};
    out.joint_counts = counts;
    const std::array<CVec2, 2> meters{proj.m1, proj.m2};
    for (int k = 0; k < 2; ++k) {
        for (int j = 0; j < 2; ++j) {
            out.joint_probabilities[2 * k + j] =
                joint_probability(psi, b.eigenvector(j), meters[k]);
        }
    }
    const auto &jp = out.joint_probabilities;

    const auto est_a = estimate_A(psi, a_value);
    const auto est_b = estimate_B(psi, varrho, b_value);
    out.a_estimate = detail::two_outcome_report(
        {counts[0] + counts[1], counts[2] + counts[3]},
        {proj.a_prime, -proj.a_prime}, {jp[0] + jp[1], jp[2] + jp[3]},
        est_a.mean, est_a.variance, seed);
    out.b_estimate = detail::two_outcome_report(
        {counts[0] + counts[2], counts[1] + counts[3]},
        {b_value / c, -b_value / c}, {jp[0] + jp[2], jp[1] + jp[3]}, est_b.mean,
        est_b.variance, seed);
    return out;
}

} // namespace qudual
