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

// Shared fixtures for the unit tests.

#pragma once

#include <cmath>
#include <random>

#include <qudual/qudual.hpp>

namespace qudual::test {

/// Uniform draws from a fixed-seed Mersenne Twister.
class Rand {
  public:
    explicit Rand(unsigned seed) : gen_(seed) {}
    double operator()(double lo = 0.0, double hi = 1.0) {
        return std::uniform_real_distribution<double>(lo, hi)(gen_);
    }

  private:
    std::mt19937_64 gen_;
};

inline DensityMatrix random_state(Rand &r) {
    const double w = r();
    const double frac = r() < 0.2 ? 1.0 : r();
    return density_from_params(w, frac * std::sqrt(w * (1.0 - w)), r(0.0, kTwoPi));
}

inline CMat2 random_hermitian(Rand &r) {
    CMat2 m;
    m(0, 0) = r(-1.0, 1.0);
    m(1, 1) = r(-1.0, 1.0);
    m(0, 1) = Complex(r(-1.0, 1.0), r(-1.0, 1.0));
    m(1, 0) = std::conj(m(0, 1));
    return m;
}

/// Haar-ish unitary from Euler angles.
inline CMat2 random_unitary(Rand &r) {
    const double a = r(0.0, kTwoPi);
    const double b = r(0.0, kTwoPi);
    const double g = r(0.0, kTwoPi);
    const double t = r(0.0, kPi / 2.0);
    CMat2 m;
    m << std::polar(std::cos(t), a), std::polar(std::sin(t), b),
        -std::polar(std::sin(t), g - b), std::polar(std::cos(t), g - a);
    return m;
}

inline CMat2 mat(Complex a, Complex b, Complex c, Complex d) {
    CMat2 m;
    m << a, b, c, d;
    return m;
}

} // namespace qudual::test
