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

// Prints the optimal meter entanglement and the minimum simultaneous
// uncertainty product next to the sharp-measurement minimum.

#include <iostream>

#include <qudual/qudual.hpp>

int main() {
    using namespace qudual;
    std::cout << "w_plus,c_opt,sharp_min,sim_min,sim_min_numeric\n";
    for (double w : {0.05, 0.2, 0.5, 0.75, 0.9, 0.99}) {
        const auto opt = optimal_entanglement(w);
        const auto report = minimum_simultaneous_product(w);
        std::cout << format_double(w) << ',' << format_double(opt.c) << ','
                  << format_double(normalized_product_bounds(w).min) << ','
                  << format_double(report.value()) << ','
                  << format_double(report.numeric) << '\n';
    }

    // one full state: the two estimators at the optimum for w+ = 0.9
    const auto psi = entangle(0.9, 0.0, optimal_entanglement(0.9).c);
    const auto a = estimate_A(psi);
    const auto b = estimate_B(psi, 0.0);
    std::cout << "var_A' = " << format_double(a.variance)
              << ", var_B' = " << format_double(b.variance)
              << ", product = " << format_double(a.variance * b.variance) << '\n';
    return 0;
}
