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
 * Small dense complex linear algebra for two-level systems and their
 * two-qubit composites.
 *
 * Basis ordering is fixed throughout the library: index 0 is |A+>, index 1
 * is |A->. For composites built with kron() the first factor is the slow
 * index (system) and the second factor the fast one (meter).
 */

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <string>

#include <Eigen/Dense>

#include "errors.hpp"

namespace qudual {

using Complex = std::complex<double>;
using CMat2 = Eigen::Matrix2cd;
using CMat4 = Eigen::Matrix4cd;
using CVec2 = Eigen::Vector2cd;
using CVec4 = Eigen::Vector4cd;

/// Tolerance for Hermiticity and unitarity checks.
inline constexpr double kStructureTol = 1e-12;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

template <typename Derived>
[[nodiscard]] double max_abs_entry(const Eigen::MatrixBase<Derived> &m) {
    return m.cwiseAbs().maxCoeff();
}

template <typename Derived>
[[nodiscard]] bool is_hermitian(const Eigen::MatrixBase<Derived> &m,
                                double tol = kStructureTol) {
    return max_abs_entry(m - m.adjoint()) <= tol;
}

template <typename Derived>
[[nodiscard]] bool is_unitary(const Eigen::MatrixBase<Derived> &u,
                              double tol = kStructureTol) {
    using Mat = typename Derived::PlainObject;
    return max_abs_entry(u.adjoint() * u - Mat::Identity(u.rows(), u.cols())) <=
           tol;
}

template <typename Derived>
void require_hermitian(const Eigen::MatrixBase<Derived> &m,
                       const char *what) {
    if (!is_hermitian(m)) {
        throw ContractViolation(std::string(what) +
                                ": matrix is not Hermitian within 1e-12");
    }
}

/// Eigenvalues sorted descending; eigenvectors are the matching columns.
struct EigenPair2 {
    std::array<double, 2> values;
    CMat2 vectors;
};

/**
 * Closed-form eigendecomposition of a 2x2 Hermitian matrix.
 *
 * For [[a, b], [b*, d]] the eigenvalues are m +- r with m = (a + d) / 2 and
 * r = sqrt(((a - d) / 2)^2 + |b|^2). The first eigenvector is taken from
 * whichever matrix row keeps the unnormalized vector away from zero, the
 * second is its orthogonal complement. A degenerate pair returns the
 * standard basis.
 */
[[nodiscard]] inline EigenPair2 hermitian_eig(const CMat2 &m) {
    require_hermitian(m, "hermitian_eig");
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    // average the off-diagonal pair so tiny anti-Hermitian noise cancels
    const Complex b = 0.5 * (m(0, 1) + std::conj(m(1, 0)));

    const double mean = 0.5 * (a + d);
    const double half_gap = 0.5 * (a - d);
    const double r = std::hypot(half_gap, std::abs(b));

    EigenPair2 out;
    out.values = {mean + r, mean - r};
    if (std::abs(b) == 0.0) {
        out.vectors = CMat2::Identity();
        if (a < d) {
            out.vectors.col(0).swap(out.vectors.col(1));
        }
        return out;
    }

    CVec2 v;
    if (half_gap >= 0.0) {
        v << Complex(r + half_gap, 0.0), std::conj(b);
    } else {
        v << b, Complex(r - half_gap, 0.0);
    }
    v.normalize();
    out.vectors.col(0) = v;
    out.vectors.col(1) << -std::conj(v(1)), std::conj(v(0));
    return out;
}

/// Sum of absolute eigenvalues of a Hermitian 2x2 matrix.
[[nodiscard]] inline double trace_norm(const CMat2 &m) {
    require_hermitian(m, "trace_norm");
    const auto eig = hermitian_eig(m);
    return std::abs(eig.values[0]) + std::abs(eig.values[1]);
}

/**
 * Tensor product a (x) b, index of `a` slow, index of `b` fast. Accepts any
 * fixed-size Eigen expressions; 2x2 (x) 2x2 gives a CMat4 and 2-vectors give
 * a CVec4.
 */
template <typename DA, typename DB>
[[nodiscard]] auto kron(const Eigen::MatrixBase<DA> &a, const Eigen::MatrixBase<DB> &b) {
    constexpr int kRows = int{DA::RowsAtCompileTime} * int{DB::RowsAtCompileTime};
    constexpr int kCols = int{DA::ColsAtCompileTime} * int{DB::ColsAtCompileTime};
    static_assert(kRows > 0 && kCols > 0, "kron: operands must have fixed sizes");
    Eigen::Matrix<Complex, kRows, kCols> out;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = Complex(a(i, j)) * b;
        }
    }
    return out;
}

/// Matrix commutator [a, b].
[[nodiscard]] inline CMat2 commutator(const CMat2 &a, const CMat2 &b) {
    return a * b - b * a;
}

/// Wraps an angle into [0, 2 pi).
[[nodiscard]] inline double wrap_phase(double phi) {
    double out = std::fmod(phi, kTwoPi);
    if (out < 0.0) {
        out += kTwoPi;
    }
    if (out >= kTwoPi) {
        out = 0.0;
    }
    return out;
}

} // namespace qudual
