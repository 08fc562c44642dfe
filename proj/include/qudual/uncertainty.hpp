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
 * Moments, the Robertson-Schroedinger inequality and intelligent states
 * for an observable A and a complementary B(varrho).
 */

#pragma once

#include <cmath>
#include <complex>
#include <limits>

#include "errors.hpp"
#include "linalg.hpp"
#include "qubit_state.hpp"

namespace qudual {

struct Moments {
    double mean;
    double variance;
};

[[nodiscard]] inline Moments mean_var(const DensityMatrix &rho,
                                      const Observable &obs) {
    const CMat2 m = rho.matrix();
    const CMat2 o = obs.matrix();
    const double mean = (m * o).trace().real();
    const double second = (m * o * o).trace().real();
    return {mean, std::max(second - mean * mean, 0.0)};
}

struct RobertsonReport {
    double var_a;
    double var_b;
    /// <C> with C = -i [A, B].
    double c_mean;
    /// <AB + BA> - 2 <A><B>.
    double f_mean;
    double lhs;
    double rhs;
};

[[nodiscard]] inline RobertsonReport robertson(const DensityMatrix &rho,
                                               const Observable &a,
                                               const Observable &b) {
    const CMat2 m = rho.matrix();
    const CMat2 am = a.matrix();
    const CMat2 bm = b.matrix();
    const Moments ma = mean_var(rho, a);
    const Moments mb = mean_var(rho, b);
    const CMat2 c_op = Complex(0.0, -1.0) * commutator(am, bm);
    const double c_mean = (m * c_op).trace().real();
    const double f_mean =
        (m * (am * bm + bm * am)).trace().real() - 2.0 * ma.mean * mb.mean;
    return {ma.variance,
            mb.variance,
            c_mean,
            f_mean,
            ma.variance * mb.variance,
            0.25 * (c_mean * c_mean + f_mean * f_mean)};
}

/// Normalized uncertainty-product range over all states with a given w+,
/// in units of (A+ - A-)^2 (B+ - B-)^2.
struct ProductBounds {
    /// Pure state measured with the proper B (varrho = theta).
    double min;
    /// Pure state at the erasure phase, cos(theta - varrho) = 0.
    double max;
};

[[nodiscard]] inline ProductBounds normalized_product_bounds(double w_plus) {
    if (!(w_plus >= 0.0 && w_plus <= 1.0)) {
        throw DomainError("normalized_product_bounds: w_plus outside [0, 1]");
    }
    const double q = w_plus * (1.0 - w_plus);
    return {q * (1.0 - 4.0 * q) / 4.0, q / 4.0};
}

/// Product Var(A) Var(B) divided by (A+ - A-)^2 (B+ - B-)^2.
[[nodiscard]] inline double normalized_product(const DensityMatrix &rho,
                                               const Observable &a,
                                               const Observable &b) {
    const auto r = robertson(rho, a, b);
    const double da = a.val_plus() - a.val_minus();
    const double db = b.val_plus() - b.val_minus();
    return r.lhs / (da * da * db * db);
}

/**
 * The two classes of Robertson intelligent states with purely imaginary or
 * purely real lambda.
 */
enum class IntelligentFamily {
    /// sqrt(w+)|A+> +- e^{i varrho} sqrt(w-)|A->, imaginary lambda.
    kImaginary,
    /// (|A+> +- e^{i(varrho +- beta)}|A->)/sqrt2, real lambda.
    kRealEqualWeight,
    /// sqrt(w+)|A+> +- i e^{i varrho} sqrt(w-)|A->, real lambda.
    kRealUnequalWeight,
};

/// Sign choices of the two families. `phase_sign` is only read by
/// kRealEqualWeight (the sign in front of beta).
struct IntelligentBranch {
    int sign = 1;
    int phase_sign = 1;
};

struct IntelligentState {
    DensityMatrix state;
    /// Infinite when the state is a B eigenstate (Var B = 0); the infinite
    /// part sits in the real or imaginary component.
    Complex lambda;
    IntelligentFamily family;
};

[[nodiscard]] inline bool is_infinite(Complex z) {
    return std::isinf(z.real()) || std::isinf(z.imag());
}

/**
 * Builds an intelligent state of (A, B(varrho)) and its lambda.
 *
 * `param` is w+ in [0, 1] for kImaginary and kRealUnequalWeight, and beta in
 * [0, pi/2] for kRealEqualWeight. The outcome values of A and B enter lambda
 * only through the ratio of half-gaps (A+ - A-)/(B+ - B-); with a cos t,
 * sin t parameterization of the amplitudes,
 *
 *   kImaginary:         lambda = -i r tan 2t
 *   kRealEqualWeight:   lambda = r / sin(beta')
 *   kRealUnequalWeight: lambda = r sin 2t
 *
 * where beta' is the relative phase minus varrho.
 */
[[nodiscard]] inline IntelligentState
intelligent_state(IntelligentFamily family, double param, double varrho,
                  IntelligentBranch branch = {}, double a_plus = 0.5,
                  double a_minus = -0.5, double b_plus = 0.5,
                  double b_minus = -0.5) {
    if (branch.sign != 1 && branch.sign != -1) {
        throw DomainError("intelligent_state: branch sign must be +1 or -1");
    }
    if (branch.phase_sign != 1 && branch.phase_sign != -1) {
        throw DomainError("intelligent_state: phase sign must be +1 or -1");
    }
    if (!(b_plus != b_minus) || !(a_plus != a_minus)) {
        throw DomainError("intelligent_state: degenerate outcome values");
    }
    const double ratio = (a_plus - a_minus) / (b_plus - b_minus);
    const double inf = std::numeric_limits<double>::infinity();
    const double s = branch.sign;
    const double flip = branch.sign == 1 ? 0.0 : kPi;

    switch (family) {
    case IntelligentFamily::kImaginary: {
        if (!(param >= 0.0 && param <= 1.0)) {
            throw DomainError("intelligent_state: w_plus outside [0, 1]");
        }
        const double w = param;
        const double sin2t = 2.0 * s * std::sqrt(w * (1.0 - w));
        const double cos2t = w - (1.0 - w);
        Complex lambda;
        if (cos2t == 0.0) {
            lambda = Complex(0.0, sin2t * ratio > 0.0 ? -inf : inf);
        } else {
            lambda = Complex(0.0, -ratio * sin2t / cos2t);
        }
        return {pure_state(w, varrho + flip), lambda, family};
    }
    case IntelligentFamily::kRealEqualWeight: {
        if (!(param >= 0.0 && param <= kPi / 2.0)) {
            throw DomainError("intelligent_state: beta outside [0, pi/2]");
        }
        const double beta = param;
        const double sign = s * branch.phase_sign;
        const double sin_beta = std::sin(beta);
        Complex lambda;
        if (sin_beta == 0.0) {
            lambda = Complex(sign * ratio > 0.0 ? inf : -inf, 0.0);
        } else {
            lambda = Complex(sign * ratio / sin_beta, 0.0);
        }
        return {pure_state(0.5, varrho + branch.phase_sign * beta + flip),
                lambda, family};
    }
    case IntelligentFamily::kRealUnequalWeight: {
        if (!(param >= 0.0 && param <= 1.0)) {
            throw DomainError("intelligent_state: w_plus outside [0, 1]");
        }
        const double w = param;
        const double sin2t = 2.0 * s * std::sqrt(w * (1.0 - w));
        return {pure_state(w, varrho + kPi / 2.0 + flip),
                Complex(ratio * sin2t, 0.0), family};
    }
    }
    throw DomainError("intelligent_state: unknown family");
}

/**
 * Norm of (A + i lambda B)|psi> - (<A> + i lambda <B>)|psi>.
 *
 * For infinite lambda the limiting equation B|psi> = <B>|psi> is checked
 * instead. Mixed states throw DomainError.
 */
[[nodiscard]] inline double is_residual(const DensityMatrix &state,
                                        Complex lambda, const Observable &a,
                                        const Observable &b) {
    if (!state.is_pure()) {
        throw DomainError("is_residual: the eigen-equation needs a pure state");
    }
    const CVec2 psi = state.state_vector();
    const CMat2 am = a.matrix();
    const CMat2 bm = b.matrix();
    const Complex mean_a = psi.dot(am * psi);
    const Complex mean_b = psi.dot(bm * psi);
    if (is_infinite(lambda)) {
        return (bm * psi - mean_b * psi).norm();
    }
    const Complex i_lambda = Complex(0.0, 1.0) * lambda;
    const CVec2 lhs = (am + i_lambda * bm) * psi;
    return (lhs - (mean_a + i_lambda * mean_b) * psi).norm();
}

} // namespace qudual
