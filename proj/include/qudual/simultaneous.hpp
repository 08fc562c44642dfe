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
 * Unsharp simultaneous measurement of A and B through a two-dimensional
 * meter.
 *
 * The system is entangled with a meter without disturbing the A
 * populations,
 *
 *   |psi_e> = sqrt(w+)|A+>|M+> + e^{i theta} sqrt(w-)|A->(c|M+> + s|M_perp>),
 *
 * with s = sqrt(1 - c^2). A is estimated from a projective meter measurement
 * in a rotated basis {|M1>, |M2>}, then B is measured sharply on the system.
 * Outcome values are rescaled so that both estimators reproduce the means
 * of the unentangled pure state. All symmetric-gauge amplitudes default to
 * A = B = 1/2.
 */

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "errors.hpp"
#include "linalg.hpp"
#include "numeric.hpp"
#include "qubit_state.hpp"

namespace qudual {

class EntangledState {
  public:
    [[nodiscard]] double w_plus() const { return w_plus_; }
    [[nodiscard]] double w_minus() const { return 1.0 - w_plus_; }
    [[nodiscard]] double theta() const { return theta_; }
    [[nodiscard]] double c() const { return c_; }

    /// Amplitudes over |A+,M+>, |A+,M_perp>, |A-,M+>, |A-,M_perp>.
    [[nodiscard]] const CVec4 &amplitudes() const { return amplitudes_; }

    [[nodiscard]] CMat4 density() const {
        return amplitudes_ * amplitudes_.adjoint();
    }

    /// <A_i| rho_e |A_j> as an operator on the meter.
    [[nodiscard]] CMat2 meter_block(int i, int j) const {
        return amplitudes_.segment<2>(2 * i) *
               amplitudes_.segment<2>(2 * j).adjoint();
    }

    /// Partial trace over the meter, as a matrix.
    [[nodiscard]] CMat2 reduced_matrix() const {
        CMat2 out;
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                out(i, j) = meter_block(i, j).trace();
            }
        }
        return out;
    }

    [[nodiscard]] DensityMatrix marginal() const {
        return density_from_matrix(reduced_matrix());
    }

    friend EntangledState entangle(double w_plus, double theta, double c);

  private:
    EntangledState(double w_plus, double theta, double c, const CVec4 &amps)
        : w_plus_(w_plus), theta_(theta), c_(c), amplitudes_(amps) {}

    double w_plus_;
    double theta_;
    double c_;
    CVec4 amplitudes_;
};

[[nodiscard]] inline EntangledState entangle(double w_plus, double theta,
                                             double c) {
    if (!(w_plus >= 0.0 && w_plus <= 1.0)) {
        throw DomainError("entangle: w_plus outside [0, 1]");
    }
    if (!(c >= 0.0 && c <= 1.0)) {
        throw DomainError("entangle: c outside [0, 1]");
    }
    if (!std::isfinite(theta)) {
        throw DomainError("entangle: theta must be finite");
    }
    const double th = wrap_phase(theta);
    const Complex minus = std::polar(std::sqrt(1.0 - w_plus), th);
    CVec4 amps;
    amps << std::sqrt(w_plus), 0.0, minus * c,
        minus * std::sqrt((1.0 - c) * (1.0 + c));
    return EntangledState(w_plus, th, c, amps);
}

/// Trace norm of <A+|rho_e|A+> - <A-|rho_e|A->.
[[nodiscard]] inline double distinguishability(const EntangledState &psi) {
    return trace_norm(psi.meter_block(0, 0) - psi.meter_block(1, 1));
}

/// 2 |<A-| Tr_meter rho_e |A+>|, clamped to [0, 1] against round-off.
[[nodiscard]] inline double entangled_visibility(const EntangledState &psi) {
    return std::min(1.0, 2.0 * std::abs(psi.reduced_matrix()(1, 0)));
}

// ---------------------------------------------------------------------------
// Projection probabilities
// ---------------------------------------------------------------------------

/// Unnormalized system vector left after projecting the meter onto `meter`.
[[nodiscard]] inline CVec2 conditional_system_vector(const EntangledState &psi,
                                                     const CVec2 &meter) {
    const CVec4 &amps = psi.amplitudes();
    CVec2 out;
    out(0) = meter.dot(amps.segment<2>(0));
    out(1) = meter.dot(amps.segment<2>(2));
    return out;
}

/// Probability |(<system| (x) <meter|) psi_e|^2.
[[nodiscard]] inline double joint_probability(const EntangledState &psi,
                                              const CVec2 &system,
                                              const CVec2 &meter) {
    return std::norm(kron(system, meter).dot(psi.amplitudes()));
}

struct MeterProjectors {
    /// Rotation angle of |M1> = cos g |M+> + sin g |M_perp>.
    double gamma;
    double kappa = 0.0;
    /// Value assigned to the |M1> outcome; |M2> carries -a_prime.
    double a_prime;
    CVec2 m1;
    CVec2 m2;
};

[[nodiscard]] inline MeterProjectors make_meter_projectors(double gamma,
                                                           double a_prime) {
    MeterProjectors p{gamma, 0.0, a_prime, CVec2(), CVec2()};
    p.m1 << std::cos(gamma), std::sin(gamma);
    p.m2 << -std::sin(gamma), std::cos(gamma);
    return p;
}

/**
 * Both solutions of cot(2 gamma) = -sqrt(1 - c^2)/c within one period of the
 * projector (gamma mod pi), each with a_prime = A / cos(2 gamma).
 * Index 0: cos 2g = +sqrt(1 - c^2), a_prime > 0. Index 1: cos 2g < 0.
 */
[[nodiscard]] inline std::array<MeterProjectors, 2>
meter_projector_candidates(double c, double a_value = 0.5) {
    const double s = std::sqrt((1.0 - c) * (1.0 + c));
    const double half = 0.5 * std::asin(c);
    return {make_meter_projectors(kPi - half, a_value / s),
            make_meter_projectors(kPi / 2.0 - half, -a_value / s)};
}

/// Mean of the A estimate read from meter outcomes only.
[[nodiscard]] inline double projected_a_mean(const EntangledState &psi,
                                             const MeterProjectors &proj) {
    const double p1 = conditional_system_vector(psi, proj.m1).squaredNorm();
    const double p2 = conditional_system_vector(psi, proj.m2).squaredNorm();
    return proj.a_prime * (p1 - p2);
}

namespace detail {

inline void require_interior_c(double c, const char *what) {
    if (!(c > 0.0 && c < 1.0)) {
        throw SingularConfiguration(
            std::string(what) +
            ": c must lie strictly inside (0, 1); the estimator is undefined "
            "at c = 0 and c = 1");
    }
}

} // namespace detail

/**
 * Unbiased meter basis for the A estimate.
 *
 * Each candidate branch is probed on a 3x3 grid of pure states; a branch is
 * accepted if its estimated mean equals A (w+ - w-) everywhere to 1e-12.
 * Among accepted branches the one with positive a_prime is returned.
 */
[[nodiscard]] inline MeterProjectors meter_projectors(double c,
                                                      double a_value = 0.5) {
    detail::require_interior_c(c, "meter_projectors");
    constexpr std::array<double, 3> probe_w{0.2, 0.5, 0.85};
    constexpr std::array<double, 3> probe_theta{0.0, 2.1, 4.4};

    const auto candidates = meter_projector_candidates(c, a_value);
    const MeterProjectors *chosen = nullptr;
    for (const auto &cand : candidates) {
        bool unbiased = true;
        for (double w : probe_w) {
            for (double th : probe_theta) {
                const auto psi = entangle(w, th, c);
                const double truth = a_value * (w - (1.0 - w));
                if (std::abs(projected_a_mean(psi, cand) - truth) > 1e-12) {
                    unbiased = false;
                }
            }
        }
        if (unbiased && (chosen == nullptr || cand.a_prime > 0.0)) {
            chosen = &cand;
        }
    }
    if (chosen == nullptr) {
        throw std::logic_error("meter_projectors: no unbiased branch found");
    }
    return *chosen;
}

/// Closed form next to the explicit projection route.
struct EstimatorReport {
    double mean;
    double variance;
    double projected_mean;
    double projected_variance;

    [[nodiscard]] bool agrees(double tol = 1e-12) const {
        return std::abs(mean - projected_mean) <= tol &&
               std::abs(variance - projected_variance) <= tol;
    }
};

/// <A> = A (w+ - w-) for the symmetric gauge.
[[nodiscard]] inline double true_mean_a(double w_plus, double a_value = 0.5) {
    return a_value * (w_plus - (1.0 - w_plus));
}

/// <B(varrho)> = 2 B sqrt(w+ w-) cos(theta - varrho) for the pure state.
[[nodiscard]] inline double true_mean_b(double w_plus, double theta,
                                        double varrho, double b_value = 0.5) {
    return 2.0 * b_value * std::sqrt(w_plus * (1.0 - w_plus)) *
           std::cos(theta - varrho);
}

/// Variance A^2 (c^2/(1 - c^2) + 4 w+ w-) of the meter-based A estimate.
[[nodiscard]] inline EstimatorReport estimate_A(const EntangledState &psi,
                                                double a_value = 0.5) {
    const double c = psi.c();
    detail::require_interior_c(c, "estimate_A");
    const double q = psi.w_plus() * psi.w_minus();
    const double omt = (1.0 - c) * (1.0 + c);

    EstimatorReport r{};
    r.mean = true_mean_a(psi.w_plus(), a_value);
    r.variance = a_value * a_value * (c * c / omt + 4.0 * q);

    const auto proj = meter_projectors(c, a_value);
    const double p1 = conditional_system_vector(psi, proj.m1).squaredNorm();
    const double p2 = conditional_system_vector(psi, proj.m2).squaredNorm();
    r.projected_mean = proj.a_prime * (p1 - p2);
    r.projected_variance =
        proj.a_prime * proj.a_prime * (p1 + p2) - r.projected_mean * r.projected_mean;
    return r;
}

/// Variance B^2 (1/c^2 - 4 w+ w- cos^2(theta - varrho)) of the system-based
/// B estimate with outcome values +-B/c.
[[nodiscard]] inline EstimatorReport estimate_B(const EntangledState &psi,
                                                double varrho,
                                                double b_value = 0.5) {
    const double c = psi.c();
    if (!(c > 0.0 && c <= 1.0)) {
        throw SingularConfiguration(
            "estimate_B: c must lie in (0, 1]; the rescaled value B/c diverges "
            "at c = 0");
    }
    const double q = psi.w_plus() * psi.w_minus();
    const double cs = std::cos(psi.theta() - varrho);

    EstimatorReport r{};
    r.mean = true_mean_b(psi.w_plus(), psi.theta(), varrho, b_value);
    r.variance = b_value * b_value * (1.0 / (c * c) - 4.0 * q * cs * cs);

    const Observable b = complementary_to(reference_observable(), varrho);
    const CMat2 meter_basis = CMat2::Identity();
    std::array<double, 2> prob{0.0, 0.0};
    for (int j = 0; j < 2; ++j) {
        for (int m = 0; m < 2; ++m) {
            prob[j] += joint_probability(psi, b.eigenvector(j), meter_basis.col(m));
        }
    }
    const double b_prime = b_value / c;
    r.projected_mean = b_prime * (prob[0] - prob[1]);
    r.projected_variance =
        b_prime * b_prime * (prob[0] + prob[1]) - r.projected_mean * r.projected_mean;
    return r;
}

// ---------------------------------------------------------------------------
// Uncertainty product and its optimum
// ---------------------------------------------------------------------------

inline constexpr double kSixteenth = 1.0 / 16.0;

struct ProductValue {
    double value;
    /// True when the requested configuration sits on a divergence.
    bool divergent = false;
    /// True when the value is an analytic limit rather than a direct
    /// evaluation.
    bool limit = false;
};

namespace detail {

/// (t + 4q(1-t)) (P^2 + 4q(1-t)) / (16 t (1-t)) with t = c^2, written so
/// that no small quantity is formed by cancellation.
[[nodiscard]] inline double product_from_t(double q, double p_sq, double t,
                                           double one_minus_t) {
    const double noise = 4.0 * q * one_minus_t;
    return (t + noise) * (p_sq + noise) / (16.0 * t * one_minus_t);
}

inline void require_probability(double w_plus, const char *what) {
    if (!(w_plus >= 0.0 && w_plus <= 1.0)) {
        throw DomainError(std::string(what) + ": w_plus outside [0, 1]");
    }
}

} // namespace detail

/**
 * Normalized simultaneous product Var(A') Var(B') / (16 A^2 B^2) for a pure
 * preparation measured with the proper B:
 *
 *   (c^2 / (4 (1 - c^2)) + w+ w-) (1 / (4 c^2) - w+ w-).
 *
 * At c = 0 and c = 1 the analytic limit is returned; it is finite (1/16)
 * only for eigenstates of A at c = 0 and for w+ = 1/2 at c = 1.
 */
[[nodiscard]] inline ProductValue simultaneous_product(double w_plus, double c) {
    detail::require_probability(w_plus, "simultaneous_product");
    if (!(c >= 0.0 && c <= 1.0)) {
        throw DomainError("simultaneous_product: c outside [0, 1]");
    }
    const double q = w_plus * (1.0 - w_plus);
    const double p = w_plus - (1.0 - w_plus);
    const double inf = std::numeric_limits<double>::infinity();
    if (c == 0.0) {
        return q == 0.0 ? ProductValue{kSixteenth, false, true}
                        : ProductValue{inf, true, true};
    }
    if (c == 1.0) {
        return p == 0.0 ? ProductValue{kSixteenth, false, true}
                        : ProductValue{inf, true, true};
    }
    return {detail::product_from_t(q, p * p, c * c, (1.0 - c) * (1.0 + c))};
}

struct OptimalEntanglement {
    double c;
    double c_squared;
    double one_minus_c_squared;
    /// w+ in {0, 1}: no coherence to trade, c = 0.
    bool boundary = false;
    /// The unregularized closed form, NaN within 1e-6 of 1 - 8 w+ w- = 0.
    double printed_c = std::numeric_limits<double>::quiet_NaN();
};

/**
 * Entanglement minimizing simultaneous_product at fixed w+, from the
 * regularized form c^2 = V / (P + V).
 */
[[nodiscard]] inline OptimalEntanglement optimal_entanglement(double w_plus) {
    detail::require_probability(w_plus, "optimal_entanglement");
    const double q = w_plus * (1.0 - w_plus);
    const double p = std::abs(w_plus - (1.0 - w_plus));
    const double v = 2.0 * std::sqrt(q);

    OptimalEntanglement out{};
    out.c_squared = v / (p + v);
    out.one_minus_c_squared = p / (p + v);
    out.c = std::sqrt(out.c_squared);
    out.boundary = (q == 0.0);

    const double denom = 1.0 - 8.0 * q;
    if (std::abs(denom) > 1e-6) {
        const double num = -4.0 * q + 2.0 * std::sqrt(q * (1.0 - 4.0 * q));
        out.printed_c = std::sqrt(num / denom);
    }
    return out;
}

struct MinimumProductReport {
    /// Printed rational-in-sqrt closed form; removable 0/0 points use the
    /// limit.
    double closed_form;
    /// simultaneous_product at optimal_entanglement.
    double at_optimal_c;
    /// Golden-section minimum over c.
    double numeric;
    double numeric_c;
    /// (1 + VP)^2 / 16.
    double compact_plus;
    /// (1 - VP)^2 / 16.
    double compact_minus;
    bool matches_plus;
    bool matches_minus;
    bool routes_agree;
    /// True when at least one route used an analytic limit.
    bool limit;

    [[nodiscard]] double value() const { return at_optimal_c; }
};

inline constexpr double kRouteTol = 1e-9;

[[nodiscard]] inline MinimumProductReport
minimum_simultaneous_product(double w_plus) {
    detail::require_probability(w_plus, "minimum_simultaneous_product");
    const double q = w_plus * (1.0 - w_plus);
    const double p = std::abs(w_plus - (1.0 - w_plus));
    const double v = 2.0 * std::sqrt(q);

    MinimumProductReport r{};
    r.limit = false;

    const double x = q * (1.0 - 4.0 * q);
    const double s = std::sqrt(x);
    const double num = -16.0 * x * x + (1.0 - 12.0 * x) * s;
    const double den = 16.0 * (-4.0 * x + s);
    if (den == 0.0) {
        // 0/0 at w+ in {0, 1/2, 1} and at w+ w- = 1/8
        r.closed_form = (1.0 + 2.0 * s) * (1.0 + 2.0 * s) / 16.0;
        r.limit = true;
    } else {
        r.closed_form = num / den;
    }

    const auto opt = optimal_entanglement(w_plus);
    if (q == 0.0 || p == 0.0) {
        r.at_optimal_c = kSixteenth;
        r.limit = true;
    } else {
        r.at_optimal_c =
            detail::product_from_t(q, p * p, opt.c_squared, opt.one_minus_c_squared);
    }

    const auto f = [w_plus](double c) {
        return simultaneous_product(w_plus, c).value;
    };
    const auto m = golden_section_minimize(f, 1e-9, 1.0 - 1e-12, 1e-13);
    r.numeric = m.value;
    r.numeric_c = m.x;

    r.compact_plus = (1.0 + v * p) * (1.0 + v * p) / 16.0;
    r.compact_minus = (1.0 - v * p) * (1.0 - v * p) / 16.0;
    r.matches_plus = std::abs(r.at_optimal_c - r.compact_plus) <= kRouteTol;
    r.matches_minus = std::abs(r.at_optimal_c - r.compact_minus) <= kRouteTol;
    r.routes_agree = std::abs(r.closed_form - r.at_optimal_c) <= kRouteTol &&
                     std::abs(r.numeric - r.at_optimal_c) <= kRouteTol &&
                     std::abs(r.closed_form - r.numeric) <= kRouteTol;
    return r;
}

} // namespace qudual
