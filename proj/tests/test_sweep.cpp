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

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <clocale>
#include <sstream>

#include "support.hpp"

using namespace qudual;
using Catch::Matchers::WithinAbs;

TEST_CASE("three-point sweep hits the limits", "[sweep]") {
    const auto rows = sweep(Figure::kSharp, 3);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].w_plus == 0.0);
    CHECK(rows[1].w_plus == 0.5);
    CHECK(rows[2].w_plus == 1.0);
    for (const auto &row : rows) {
        CHECK(row.product_min == 0.0);
        CHECK(row.sim_product_min == 1.0 / 16.0);
    }
    CHECK(rows[1].P == 0.0);
    CHECK(rows[1].V == 1.0);
}

TEST_CASE("figure-1 columns follow the closed forms", "[sweep][property]") {
    const auto rows = sweep(Figure::kSharp, 201);
    REQUIRE(rows.size() == 201);
    for (const auto &row : rows) {
        const double q = row.w_plus * (1.0 - row.w_plus);
        REQUIRE_THAT(row.product_min, WithinAbs(q * (1.0 - 4.0 * q) / 4.0, 1e-12));
        REQUIRE_THAT(row.product_min, WithinAbs(row.P * row.P * row.V * row.V / 16.0, 1e-12));
        REQUIRE_THAT(row.product_max, WithinAbs(q / 4.0, 1e-12));
        REQUIRE(row.P * row.P + row.V * row.V <= 1.0 + 1e-12);
        REQUIRE_THAT(row.D * row.D + row.V_e * row.V_e, WithinAbs(1.0, 1e-12));
        REQUIRE(row.c_opt == 1.0);
        REQUIRE_THAT(row.D, WithinAbs(row.P, 1e-12));
    }
}

TEST_CASE("figure-3 rows use the optimal entanglement", "[sweep]") {
    const auto rows = sweep(Figure::kSimultaneous, 101);
    for (const auto &row : rows) {
        REQUIRE_THAT(row.c_opt, WithinAbs(optimal_entanglement(row.w_plus).c, 0.0));
        REQUIRE_THAT(row.D * row.D + row.V_e * row.V_e, WithinAbs(1.0, 1e-12));
        REQUIRE(row.sim_product_min >= row.product_min);
    }
    const auto at9 = sweep_row(Figure::kSimultaneous, 0.9);
    CHECK_THAT(at9.sim_product_min, WithinAbs(0.1369, 1e-12));
    CHECK_THAT(at9.c_opt, WithinAbs(std::sqrt(3.0 / 7.0), 1e-15));
}

TEST_CASE("sweep grid is uniform in alpha and symmetric", "[sweep]") {
    const int n = 41;
    const auto rows = sweep(Figure::kSharp, n);
    for (int k = 0; k < n; ++k) {
        const double alpha = (kPi / 2.0) * k / (n - 1);
        const double s = std::sin(alpha);
        REQUIRE_THAT(rows[static_cast<std::size_t>(k)].w_plus, WithinAbs(s * s, 1e-15));
        REQUIRE(rows[static_cast<std::size_t>(k)].w_plus +
                    rows[static_cast<std::size_t>(n - 1 - k)].w_plus ==
                1.0);
    }
    CHECK_THROWS_AS(sweep(Figure::kSharp, 1), DomainError);
}

TEST_CASE("format_double is locale independent with 17 digits", "[sweep][csv]") {
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.0625) == "0.0625");
    CHECK(format_double(1e-20) == "9.9999999999999995e-21");
    const char *previous = std::setlocale(LC_NUMERIC, nullptr);
    const std::string saved = previous != nullptr ? previous : "C";
    if (std::setlocale(LC_NUMERIC, "de_DE.UTF-8") != nullptr) {
        CHECK(format_double(0.5) == "0.5");
    }
    std::setlocale(LC_NUMERIC, saved.c_str());
}

TEST_CASE("write_csv emits the header and LF-terminated rows", "[sweep][csv]") {
    std::ostringstream out;
    write_csv(out, sweep(Figure::kSimultaneous, 5));
    const std::string text = out.str();
    CHECK(text.rfind("w_plus,P,V,product_min,product_max,D,V_e,c_opt,sim_product_min\n", 0) ==
          0);
    CHECK(text.find('\r') == std::string::npos);
    CHECK(std::count(text.begin(), text.end(), '\n') == 6);
    CHECK(text.back() == '\n');

    std::ostringstream again;
    write_csv(again, sweep(Figure::kSimultaneous, 5));
    CHECK(again.str() == text);

    // every field parses back exactly
    std::istringstream lines(text);
    std::string line;
    std::getline(lines, line);
    const auto rows = sweep(Figure::kSimultaneous, 5);
    for (const auto &row : rows) {
        std::getline(lines, line);
        std::istringstream fields(line);
        std::string field;
        std::getline(fields, field, ',');
        CHECK(std::stod(field) == row.w_plus);
        for (int k = 0; k < 8; ++k) {
            std::getline(fields, field, ',');
        }
        CHECK(std::stod(field) == row.sim_product_min);
    }
}
