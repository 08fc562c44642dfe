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
 * Two-level states, observables and the complementary-operator family.
 *
 * A state is stored by its canonical parameters (w+, rho12, theta) with the
 * matrix view
 *
 *     [ w+                  rho12 e^{-i theta} ]
 *     [ rho12 e^{i theta}   w-                 ]
 *
 * in the |A+>, |A-> basis.
 */

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <string>

#include "errors.hpp"
#include "linalg.hpp"

namespace qudual {

/// Slack allowed on the positivity bound rho12 <= sqrt(w+ w-).
inline constexpr double kPositivityTol = 1e-12;

class DensityMatrix {
  public:
    [[nodiscard]] double w_plus() const { return w_plus_; }
    [[nodiscard]] double w_minus() const { return 1.0 - w_plus_; }
    [[nodiscard]] double rho12() const { return rho12_; }
    [[nodiscard]] double theta() const { return theta_; }

    [[nodiscard]] CMat2 matrix() const {
        const Complex off = std::polar(rho12_, theta_);
        CMat2 m;
        m << w_plus_, std::conj(off), off, w_minus();
        return m;
    }

    /// Tr rho^2 = 1 - 2 w+ w- + 2 rho12^2.
    [[nodiscard]] double purity() const {
        return 1.0 - 2.0 * w_plus_ * w_minus() + 2.0 * rho12_ * rho12_;
    }

    [[nodiscard]] bool is_pure(double tol = kPositivityTol) const {
        return purity() >= 1.0 - tol;
    }

    /**
     * State vector sqrt(w+)|A+> + e^{i theta} sqrt(w-)|A->, defined up to
     * a global phase. Throws DomainError for mixed states.
     */
    [[nodiscard]] CVec2 state_vector() const {
        if (!is_pure()) {
            throw DomainError("state_vector: state is mixed (purity < 1)");
        }
        CVec2 v;
        v << std::sqrt(w_plus_), std::polar(std::sqrt(w_minus()), theta_);
        return v;
    }

    friend DensityMatrix density_from_params(double w_plus, double rho12,
                                             double theta);

  private:
    DensityMatrix(double w_plus, double rho12, double theta)
        : w_plus_(w_plus), rho12_(rho12), theta_(theta) {}

    double w_plus_;
    double rho12_;
    double theta_;
};

/**
 * Builds a state from canonical parameters. `theta` is wrapped into
 * [0, 2 pi).
 */
[[nodiscard]] inline DensityMatrix density_from_params(double w_plus,
                                                       double rho12,
                                                       double theta) {
    if (!(w_plus >= 0.0 && w_plus <= 1.0)) {
        std::ostringstream msg;
        msg << "w_plus = " << w_plus << " outside [0, 1]";
        throw DomainError(msg.str());
    }
    const double bound = std::sqrt(w_plus * (1.0 - w_plus));
    if (!(rho12 >= 0.0) || rho12 > bound + kPositivityTol) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "rho12 = " << rho12 << " violates 0 <= rho12 <= sqrt(w+ w-) = "
            << bound;
        throw DomainError(msg.str());
    }
    if (!std::isfinite(theta)) {
        throw DomainError("theta must be finite");
    }
    return DensityMatrix(w_plus, rho12, wrap_phase(theta));
}

/// Pure state with rho12 = sqrt(w+ w-).
[[nodiscard]] inline DensityMatrix pure_state(double w_plus, double theta) {
    if (!(w_plus >= 0.0 && w_plus <= 1.0)) {
        throw DomainError("w_plus outside [0, 1]");
    }
    return density_from_params(w_plus, std::sqrt(w_plus * (1.0 - w_plus)),
                               theta);
}

/**
 * Re-extracts canonical parameters from a matrix. Theta is reported as 0
 * when the coherence vanishes.
 */
[[nodiscard]] inline DensityMatrix density_from_matrix(const CMat2 &m) {
    require_hermitian(m, "density_from_matrix");
    if (std::abs(m.trace() - Complex(1.0, 0.0)) > kStructureTol) {
        throw DomainError("density_from_matrix: trace differs from 1");
    }
    const double w_plus = std::clamp(m(0, 0).real(), 0.0, 1.0);
    const Complex lower = 0.5 * (m(1, 0) + std::conj(m(0, 1)));
    const double rho12 = std::abs(lower);
    const double theta = rho12 > 0.0 ? wrap_phase(std::arg(lower)) : 0.0;
    return density_from_params(w_plus, rho12, theta);
}

/// u rho u^dagger.
[[nodiscard]] inline CMat2 evolve(const DensityMatrix &rho, const CMat2 &u) {
    return u * rho.matrix() * u.adjoint();
}

/// diag(1, e^{i phi}): phase shift of the |A-> amplitude.
[[nodiscard]] inline CMat2 phase_shift(double phi) {
    CMat2 u = CMat2::Identity();
    u(1, 1) = std::polar(1.0, phi);
    return u;
}

/// [[cos xi, i sin xi], [i sin xi, cos xi]].
[[nodiscard]] inline CMat2 beam_splitter(double xi) {
    const double c = std::cos(xi);
    const Complex is(0.0, std::sin(xi));
    CMat2 u;
    u << c, is, is, c;
    return u;
}

/// Hermitian operator with two distinct outcome values and an orthonormal
/// eigenbasis (columns of `basis()`, column 0 belongs to `val_plus`).
class Observable {
  public:
    Observable(double val_plus, double val_minus, const CMat2 &basis)
        : val_plus_(val_plus), val_minus_(val_minus), basis_(basis) {
        if (!(val_plus != val_minus)) {
            throw DomainError("Observable: outcome values must be distinct");
        }
        if (!is_unitary(basis_)) {
            throw ContractViolation(
                "Observable: eigenbasis is not orthonormal within 1e-12");
        }
    }

    [[nodiscard]] double val_plus() const { return val_plus_; }
    [[nodiscard]] double val_minus() const { return val_minus_; }
    [[nodiscard]] const CMat2 &basis() const { return basis_; }
    [[nodiscard]] CVec2 eigenvector(int i) const { return basis_.col(i); }

    [[nodiscard]] double value(int i) const {
        return i == 0 ? val_plus_ : val_minus_;
    }

    [[nodiscard]] CMat2 projector(int i) const {
        return basis_.col(i) * basis_.col(i).adjoint();
    }

    [[nodiscard]] CMat2 matrix() const {
        return val_plus_ * projector(0) + val_minus_ * projector(1);
    }

  private:
    double val_plus_;
    double val_minus_;
    CMat2 basis_;
};

/// Observable diagonal in the |A+>, |A-> basis.
[[nodiscard]] inline Observable reference_observable(double a_plus = 0.5,
                                                     double a_minus = -0.5) {
    return Observable(a_plus, a_minus, CMat2::Identity());
}

/// Symmetric gauge A+ = -A- = amplitude.
[[nodiscard]] inline Observable gauge_observable(double amplitude = 0.5) {
    return reference_observable(amplitude, -amplitude);
}

/// Columns (|e0> + e^{i varrho}|e1>)/sqrt2 and (|e0> - e^{i varrho}|e1>)/sqrt2
/// over the columns e0, e1 of `reference_basis`.
[[nodiscard]] inline CMat2 phased_hadamard_basis(const CMat2 &reference_basis,
                                                 double varrho) {
    const double s = 1.0 / std::sqrt(2.0);
    const Complex phase = std::polar(1.0, varrho);
    CMat2 h;
    h << s, s, s * phase, -s * phase;
    return reference_basis * h;
}

/// The one-parameter family of observables complementary to `reference`.
struct ComplementaryFamily {
    Observable reference = reference_observable();
    double varrho = 0.0;
    double b_plus = 0.5;
    double b_minus = -0.5;
};

[[nodiscard]] inline Observable
complementary_observable(const ComplementaryFamily &family) {
    if (!(family.b_plus != family.b_minus)) {
        throw DomainError(
            "complementary_observable: b_plus and b_minus must differ");
    }
    return Observable(
        family.b_plus, family.b_minus,
        phased_hadamard_basis(family.reference.basis(), family.varrho));
}

/// Shorthand for the member B(varrho) of the family of `a`.
[[nodiscard]] inline Observable complementary_to(const Observable &a,
                                                 double varrho,
                                                 double b_plus = 0.5,
                                                 double b_minus = -0.5) {
    return complementary_observable({a, varrho, b_plus, b_minus});
}

/**
 * (A, B(varrho), B(varrho + handedness * pi/2)). With A = sigma_z / 2 and
 * values +-1/2 this is the spin triplet (u, v, z), right-handed for
 * handedness +1.
 */
[[nodiscard]] inline std::array<Observable, 3>
complementary_triplet(const Observable &a, double varrho, int handedness,
                      double b_plus = 0.5, double b_minus = -0.5) {
    if (handedness != 1 && handedness != -1) {
        throw DomainError("complementary_triplet: handedness must be +1 or -1");
    }
    return {a, complementary_to(a, varrho, b_plus, b_minus),
            complementary_to(a, varrho + handedness * kPi / 2.0, b_plus,
                             b_minus)};
}

/// Squared magnitudes |<a_i|b_j>|^2 of all cross overlaps.
[[nodiscard]] inline Eigen::Matrix2d cross_overlaps(const Observable &a,
                                                    const Observable &b) {
    return (a.basis().adjoint() * b.basis()).cwiseAbs2();
}

/// Two-mode number-difference operator (n1 - n2)/2 on the single-particle
/// manifold |A+> = |1,0>, |A-> = |0,1>.
[[nodiscard]] inline Observable number_difference_observable() {
    return reference_observable(0.5, -0.5);
}

/**
 * Two-mode phase-difference operator restricted to the single-particle
 * manifold: values (theta_val, theta_val + pi) on the eigenstates
 * (|1,0> +- e^{i varrho}|0,1>)/sqrt2. It is the member of the
 * number-difference family with those outcome values.
 */
[[nodiscard]] inline Observable phase_difference_realization(double theta_val,
                                                             double varrho) {
    return complementary_to(number_difference_observable(), varrho, theta_val,
                            theta_val + kPi);
}

} // namespace qudual
