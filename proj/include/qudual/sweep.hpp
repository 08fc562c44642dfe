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
 * Parameter sweeps over w+ = sin^2(alpha) and their CSV serialization.
 *
 * CSV is locale independent: '.' decimal separator, 17 significant digits
 * in %g style, LF line endings.
 */

#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "complementarity.hpp"
#include "errors.hpp"
#include "qubit_state.hpp"
#include "simultaneous.hpp"
#include "uncertainty.hpp"

namespace qudual {

enum class Figure {
    /// Sharp measurements; no meter entanglement (c = 1).
    kSharp = 1,
    /// Simultaneous measurement at the optimal entanglement per point.
    kSimultaneous = 3,
};

struct SweepRow {
    double w_plus;
    double P;
    double V;
    double product_min;
    double product_max;
    double D;
    double V_e;
    double c_opt;
    double sim_product_min;
};

inline constexpr std::string_view kSweepHeader =
    "w_plus,P,V,product_min,product_max,D,V_e,c_opt,sim_product_min";

/// One row for a pure preparation with the given w+.
[[nodiscard]] inline SweepRow sweep_row(Figure figure, double w_plus) {
    const auto rho = pure_state(w_plus, 0.0);
    const auto bounds = normalized_product_bounds(w_plus);
    const auto opt = optimal_entanglement(w_plus);
    const double c = figure == Figure::kSharp ? 1.0 : opt.c;
    const auto psi = entangle(w_plus, 0.0, c);

    SweepRow row{};
    row.w_plus = w_plus;
    row.P = predictability(rho);
    row.V = visibility(rho);
    row.product_min = bounds.min;
    row.product_max = bounds.max;
    row.D = distinguishability(psi);
    row.V_e = entangled_visibility(psi);
    row.c_opt = c;
    row.sim_product_min = minimum_simultaneous_product(w_plus).value();
    return row;
}

/// `points` rows at alpha uniform in [0, pi/2], w+ = sin^2(alpha).
[[nodiscard]] inline std::vector<SweepRow> sweep(Figure figure, int points) {
    if (points < 2) {
        throw DomainError("sweep: need at least 2 points");
    }
    std::vector<SweepRow> rows;
    rows.reserve(static_cast<std::size_t>(points));
    for (int k = 0; k < points; ++k) {
        // sin^2(alpha) = (1 - sin(pi/2 - 2 alpha)) / 2; this form is exact at
        // both ends and the midpoint and gives w(k) + w(points-1-k) = 1
        const double arg = (kPi / 2.0) * (points - 1 - 2 * k) / (points - 1);
        rows.push_back(sweep_row(figure, std::clamp(0.5 - 0.5 * std::sin(arg), 0.0, 1.0)));
    }
    return rows;
}

/// 17 significant digits, '.' separator, independent of the global locale.
[[nodiscard]] inline std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x,
                                   std::chars_format::general, 17);
    if (res.ec != std::errc()) {
        throw std::runtime_error("format_double: conversion failed");
    }
    return std::string(buf, res.ptr);
}

inline void write_csv(std::ostream &out, const std::vector<SweepRow> &rows) {
    out << kSweepHeader << '\n';
    for (const auto &r : rows) {
        out << format_double(r.w_plus) << ',' << format_double(r.P) << ','
            << format_double(r.V) << ',' << format_double(r.product_min) << ','
            << format_double(r.product_max) << ',' << format_double(r.D) << ','
            << format_double(r.V_e) << ',' << format_double(r.c_opt) << ','
            << format_double(r.sim_product_min) << '\n';
    }
}

} // namespace qudual
