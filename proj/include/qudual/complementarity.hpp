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
 * Predictability, visibility and their duals with respect to a
 * complementary observable B(varrho).
 */

#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "qubit_state.hpp"

namespace qudual {

/// P = |w+ - w-| = 2 max{w+, w-} - 1.
[[nodiscard]] inline double predictability(const DensityMatrix &rho) {
    return std::abs(rho.w_plus() - rho.w_minus());
}

/// Maximum-likelihood guess of the A outcome: +1 for |A+>, -1 for |A->.
/// Ties go to |A+>.
[[nodiscard]] inline int ml_guess(const DensityMatrix &rho) {
    return rho.w_plus() >= rho.w_minus() ? 1 : -1;
}

/// <A+| U_BS(xi) U_PS(phi) rho U_PS^dag U_BS^dag |A+>.
[[nodiscard]] inline double fringe_probability(const DensityMatrix &rho,
                                               double phi, double xi) {
    const CMat2 u = beam_splitter(xi) * phase_shift(phi);
    return evolve(rho, u)(0, 0).real();
}

/// V = 2 rho12.
[[nodiscard]] inline double visibility(const DensityMatrix &rho) {
    return 2.0 * rho.rho12();
}

/// Predictability of the B(varrho) outcome: 2 rho12 |cos(theta - varrho)|.
[[nodiscard]] inline double predictability_of_B(const DensityMatrix &rho,
                                                double varrho) {
    return 2.0 * rho.rho12() * std::abs(std::cos(rho.theta() - varrho));
}

/// Visibility with the roles of A and B(varrho) exchanged.
[[nodiscard]] inline double visibility_of_B(const DensityMatrix &rho,
                                            double varrho) {
    const double wp = rho.w_plus();
    const double wm = rho.w_minus();
    const double s = std::sin(rho.theta() - varrho);
    const double arg = wp * wp + wm * wm - 2.0 * wp * wm +
                       4.0 * rho.rho12() * rho.rho12() * s * s;
    return std::sqrt(std::max(arg, 0.0));
}

struct DualityReport {
    double predictability;
    double visibility;
    double sum_sq;
    double purity;
};

[[nodiscard]] inline DualityReport duality(const DensityMatrix &rho) {
    const double p = predictability(rho);
    const double v = visibility(rho);
    return {p, v, p * p + v * v, rho.purity()};
}

/// Fringe swings below this are treated as no fringe at all.
inline constexpr double kFringeResolution = 1e-14;

struct VisibilityEstimate {
    double visibility;
    /// Beamsplitter angle of the strongest fringe, folded into [0, pi/2].
    double xi_at_extremum;
};

/**
 * Grid search over (phi, xi) in [0, 2 pi)^2 with `grid_n` points per axis.
 *
 * For every xi the fringe over phi is scanned; the xi with the largest
 * swing max_phi p - min_phi p is kept and the contrast
 * (p_max - p_min) / (p_max + p_min) over phi at that xi is returned.
 * Every probability comes from fringe_probability(), independent of the
 * closed form visibility().
 */
[[nodiscard]] inline VisibilityEstimate visibility_oracle(const DensityMatrix &rho,
                                                          int grid_n = 512) {
    if (grid_n < 8) {
        throw DomainError("visibility_oracle: grid_n must be at least 8");
    }
    const double step = kTwoPi / grid_n;
    double best_swing = -1.0;
    double best_contrast = 0.0;
    double best_xi = 0.0;
    for (int j = 0; j < grid_n; ++j) {
        const double xi = j * step;
        double p_max = -std::numeric_limits<double>::infinity();
        double p_min = std::numeric_limits<double>::infinity();
        for (int i = 0; i < grid_n; ++i) {
            const double p = fringe_probability(rho, i * step, xi);
            p_max = std::max(p_max, p);
            p_min = std::min(p_min, p);
        }
        // round-off in |e^{i phi}|^2 leaves ~1e-17 ripple on a flat fringe
        double swing = p_max - p_min;
        if (swing < kFringeResolution) {
            swing = 0.0;
        }
        if (swing > best_swing) {
            best_swing = swing;
            const double total = p_max + p_min;
            best_contrast = total > 0.0 ? swing / total : 0.0;
            best_xi = xi;
        }
    }
    return {best_contrast, std::fmod(best_xi, kPi / 2.0)};
}

} // namespace qudual
