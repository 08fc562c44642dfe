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

#pragma once

#include <cmath>

#include "errors.hpp"

namespace qudual {

struct ScalarMinimum {
    double x;
    double value;
    int iterations;
};

/// Golden-section search for the minimum of a unimodal `f` on [lo, hi].
template <typename F>
[[nodiscard]] ScalarMinimum golden_section_minimize(F &&f, double lo, double hi,
                                                    double x_tol = 1e-12,
                                                    int max_iter = 500) {
    if (!(lo < hi)) {
        throw DomainError("golden_section_minimize: empty bracket");
    }
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo;
    double b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    int it = 0;
    while (b - a > x_tol && it < max_iter) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
        ++it;
    }
    return f1 <= f2 ? ScalarMinimum{x1, f1, it} : ScalarMinimum{x2, f2, it};
}

} // namespace qudual
