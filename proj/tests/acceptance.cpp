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

// Acceptance suite: one [PASS]/[FAIL] line per criterion, exit 1 on any FAIL.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"

using namespace qudual;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(double x) {
    std::ostringstream s;
    s.precision(3);
    s << x;
    return s.str();
}

// ---------------------------------------------------------------- 1

Outcome duality_relation() {
    test::Rand r(1001);
    std::vector<DensityMatrix> states;
    states.reserve(10000);
    for (int i = 0; i < 10000; ++i) {
        states.push_back(test::random_state(r));
    }
    const auto start = Clock::now();
    int bad = 0;
    int pure = 0;
    for (const auto &rho : states) {
        const auto d = duality(rho);
        const bool is_pure = d.purity >= 1.0 - 1e-12;
        const bool saturated = std::abs(d.sum_sq - 1.0) <= 1e-10;
        pure += is_pure ? 1 : 0;
        if (d.sum_sq > 1.0 + 1e-12 || is_pure != saturated) {
            ++bad;
        }
    }
    const double t = seconds_since(start);
    return {bad == 0 && t < 1.0, "10000 states (" + std::to_string(pure) + " pure), " +
                                     std::to_string(bad) + " violations, " + fmt(t) + " s"};
}

// ---------------------------------------------------------------- 2

/// P_B and V_B computed by rotating the B eigenbasis onto the reference basis.
Outcome basis_invariance() {
    test::Rand r(1002);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const auto rho = test::random_state(r);
        const double varrho = r(0.0, kTwoPi);
        const double s = 1.0 / std::sqrt(2.0);
        CMat2 u;
        u << s, s * std::polar(1.0, -varrho), s, -s * std::polar(1.0, -varrho);
        const auto rotated = density_from_matrix(u * rho.matrix() * u.adjoint());
        const double pb = predictability(rotated);
        const double vb = visibility(rotated);
        const double lhs = pb * pb + vb * vb;
        const double direct = std::pow(predictability_of_B(rho, varrho), 2) +
                              std::pow(visibility_of_B(rho, varrho), 2);
        const double rhs = duality(rho).sum_sq;
        worst = std::max({worst, std::abs(lhs - rhs), std::abs(direct - rhs)});
    }
    return {worst <= 1e-12, "1000 (rho, varrho), max deviation " + fmt(worst)};
}

// ---------------------------------------------------------------- 3

Outcome fringe_extremum() {
    test::Rand r(1003);
    const int grid = 512;
    const double step = kTwoPi / grid;
    const auto start = Clock::now();
    double worst_xi = 0.0;
    double worst_v = 0.0;
    for (int i = 0; i < 20; ++i) {
        DensityMatrix rho = test::random_state(r);
        while (visibility(rho) < 0.05) {
            rho = test::random_state(r);
        }
        const auto est = visibility_oracle(rho, grid);
        const double offset = std::fmod(est.xi_at_extremum - kPi / 4.0 + kTwoPi, kPi / 2.0);
        worst_xi = std::max(worst_xi, std::min(offset, kPi / 2.0 - offset));
        worst_v = std::max(worst_v, std::abs(est.visibility - 2.0 * rho.rho12()));
    }
    const double t = seconds_since(start);
    return {worst_xi <= step && worst_v <= 1e-3 && t < 10.0,
            "20 states, max |xi - pi/4 mod pi/2| " + fmt(worst_xi) + " (step " + fmt(step) +
                "), max |V - 2 rho12| " + fmt(worst_v) + ", " + fmt(t) + " s"};
}

// ---------------------------------------------------------------- 4

Outcome robertson_inequality() {
    test::Rand r(1004);
    int violations = 0;
    for (int i = 0; i < 10000; ++i) {
        const auto rho = test::random_state(r);
        const Observable a = reference_observable(r(-2.0, 2.0), r(-2.0, 2.0));
        const Observable b = complementary_to(a, r(0.0, kTwoPi), r(-2.0, 2.0), r(-2.0, 2.0));
        const auto rep = robertson(rho, a, b);
        if (rep.lhs < rep.rhs - 1e-12) {
            ++violations;
        }
    }

    int generated = 0;
    double worst_gap = 0.0;
    double worst_residual = 0.0;
    const IntelligentFamily families[] = {IntelligentFamily::kImaginary,
                                          IntelligentFamily::kRealEqualWeight,
                                          IntelligentFamily::kRealUnequalWeight};
    for (const auto family : families) {
        for (int i = 0; i < 200; ++i) {
            const double param = family == IntelligentFamily::kRealEqualWeight
                                     ? r(0.0, kPi / 2.0)
                                     : r(0.0, 1.0);
            const double varrho = r(0.0, kTwoPi);
            const IntelligentBranch branch{r() < 0.5 ? 1 : -1, r() < 0.5 ? 1 : -1};
            const double ap = r(-2.0, 2.0);
            const double am = ap + r(0.1, 2.0);
            const double bp = r(-2.0, 2.0);
            const double bm = bp - r(0.1, 2.0);
            const auto is = intelligent_state(family, param, varrho, branch, ap, am, bp, bm);
            const Observable a = reference_observable(ap, am);
            const Observable b = complementary_to(a, varrho, bp, bm);
            const auto rep = robertson(is.state, a, b);
            worst_gap = std::max(worst_gap, std::abs(rep.lhs - rep.rhs));
            worst_residual = std::max(worst_residual, is_residual(is.state, is.lambda, a, b));
            ++generated;
        }
    }
    return {violations == 0 && worst_gap <= 1e-10 && worst_residual <= 1e-10,
            "10000 random pairs, " + std::to_string(violations) + " violations; " +
                std::to_string(generated) + " intelligent states, max |lhs - rhs| " +
                fmt(worst_gap) + ", max residual " + fmt(worst_residual)};
}

// ---------------------------------------------------------------- 5

Outcome figure_one_curves() {
    const auto rows = sweep(Figure::kSharp, 201);
    double worst = 0.0;
    for (const auto &row : rows) {
        const double q = row.w_plus * (1.0 - row.w_plus);
        worst = std::max({worst, std::abs(row.product_min - q * (1.0 - 4.0 * q) / 4.0),
                          std::abs(row.product_min - row.P * row.P * row.V * row.V / 16.0),
                          std::abs(row.product_max - q / 4.0)});
    }
    return {rows.size() == 201 && worst <= 1e-12,
            std::to_string(rows.size()) + " points, max deviation " + fmt(worst)};
}

// ---------------------------------------------------------------- 6

Outcome entangled_duality() {
    double worst = 0.0;
    int order = 0;
    for (int i = 0; i <= 50; ++i) {
        for (int j = 0; j <= 50; ++j) {
            const double w = i / 50.0;
            const double c = j / 50.0;
            const auto psi = entangle(w, 0.7, c);
            const double d = distinguishability(psi);
            const double ve = entangled_visibility(psi);
            worst = std::max(worst, std::abs(d * d + ve * ve - 1.0));
            if (predictability(pure_state(w, 0.7)) > d + 1e-12) {
                ++order;
            }
        }
    }
    return {worst <= 1e-12 && order == 0, "51x51 grid, max |D^2 + V_e^2 - 1| " + fmt(worst) +
                                              ", " + std::to_string(order) + " points with P > D"};
}

// ---------------------------------------------------------------- 7

/// Amplitudes in system (slow) x meter (fast) order, built locally.
double projection_probability(double w, double theta, double c, const CVec2 &system,
                              const CVec2 &meter) {
    const Complex e = std::polar(1.0, theta);
    CVec4 psi;
    psi << std::sqrt(w), 0.0, e * std::sqrt(1.0 - w) * c,
        e * std::sqrt(1.0 - w) * std::sqrt(1.0 - c * c);
    CVec4 bra;
    for (int i = 0; i < 2; ++i) {
        for (int k = 0; k < 2; ++k) {
            bra(2 * i + k) = system(i) * meter(k);
        }
    }
    return std::norm(bra.dot(psi));
}

Outcome unbiasedness() {
    const CVec2 up(1.0, 0.0);
    const CVec2 down(0.0, 1.0);
    double worst_a = 0.0;
    double worst_b = 0.0;
    int points = 0;
    for (int i = 1; i <= 9; ++i) {
        for (int t = 0; t < 8; ++t) {
            for (int j = 1; j <= 9; ++j) {
                const double w = i / 10.0;
                const double theta = kTwoPi * t / 8.0;
                const double c = j / 10.0;
                const auto proj = meter_projectors(c);
                const auto pm = [&](const CVec2 &m) {
                    return projection_probability(w, theta, c, up, m) +
                           projection_probability(w, theta, c, down, m);
                };
                const double mean_a = proj.a_prime * (pm(proj.m1) - pm(proj.m2));
                worst_a = std::max(worst_a, std::abs(mean_a - 0.5 * (2.0 * w - 1.0)));

                const double s = 1.0 / std::sqrt(2.0);
                const CVec2 b_up(s, std::polar(s, theta));
                const CVec2 b_down(s, -std::polar(s, theta));
                const auto ps = [&](const CVec2 &v) {
                    return projection_probability(w, theta, c, v, up) +
                           projection_probability(w, theta, c, v, down);
                };
                const double mean_b = (0.5 / c) * (ps(b_up) - ps(b_down));
                const Observable sharp_b = complementary_to(reference_observable(), theta);
                worst_b = std::max(worst_b,
                                   std::abs(mean_b - mean_var(pure_state(w, theta), sharp_b).mean));
                ++points;
            }
        }
    }
    return {worst_a <= 1e-12 && worst_b <= 1e-12,
            std::to_string(points) + " points, max |<A'> - <A>| " + fmt(worst_a) +
                ", max |<B'> - <B>| " + fmt(worst_b)};
}

// ---------------------------------------------------------------- 8

Outcome simultaneous_minimum() {
    int disagree = 0;
    int plus_matches = 0;
    int minus_checked = 0;
    int minus_differs = 0;
    for (int k = 1; k <= 51; ++k) {
        const double w = k / 52.0;
        const auto m = minimum_simultaneous_product(w);
        const double spread =
            std::max({std::abs(m.closed_form - m.at_optimal_c), std::abs(m.numeric - m.at_optimal_c),
                      std::abs(m.closed_form - m.numeric)});
        disagree += spread <= kRouteTol ? 0 : 1;
        plus_matches += std::abs(m.value() - m.compact_plus) <= 1e-9 ? 1 : 0;
        const double vp = std::abs(2.0 * w - 1.0) * 2.0 * std::sqrt(w * (1.0 - w));
        if (vp > 1e-3) {
            ++minus_checked;
            minus_differs += std::abs(m.value() - m.compact_minus) > 1e-9 ? 1 : 0;
        }
    }
    bool limits = true;
    for (const double w : {0.0, 0.5, 1.0}) {
        const auto m = minimum_simultaneous_product(w);
        limits = limits && m.value() == kSixteenth && m.closed_form == kSixteenth;
    }
    return {disagree == 0 && limits,
            "51 points, " + std::to_string(disagree) + " route disagreements, limits at 0, 1/2, 1 " +
                (limits ? "= 1/16" : "wrong") + "; record: (1+VP)^2/16 matches " +
                std::to_string(plus_matches) + "/51, (1-VP)^2/16 differs " +
                std::to_string(minus_differs) + "/" + std::to_string(minus_checked)};
}

// ---------------------------------------------------------------- 9

Outcome monte_carlo() {
    const std::uint64_t n = 1000000;
    const std::uint64_t seed = 42;
    const double w = 0.9;
    const double c = std::sqrt(3.0 / 7.0);
    const auto rho = pure_state(w, 0.0);
    const auto start = Clock::now();
    const auto a = sample_sharp(rho, reference_observable(), n, seed);
    const auto b = sample_sharp(rho, complementary_to(reference_observable(), 0.0), n, seed + 1);
    const auto sim = sample_simultaneous(entangle(w, 0.0, c), 0.0, n, seed + 2);
    const double t = seconds_since(start);
    double worst = 0.0;
    bool flagged = false;
    for (const auto *rep : {&a, &b, &sim.a_estimate, &sim.b_estimate}) {
        worst = std::max({worst, std::abs(rep->z_mean), std::abs(rep->z_variance)});
        flagged = flagged || (rep->flagged && !rep->degenerate);
    }
    return {worst <= kZGate && !flagged && t < 60.0,
            "n=1e6 seed=42, max |z| " + fmt(worst) + ", " + fmt(t) + " s"};
}

// ---------------------------------------------------------------- 10

std::string capture(const std::string &cmd, int &code) {
    FILE *pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        code = -1;
        return "";
    }
    std::string out;
    char buf[4096];
    std::size_t got = 0;
    while ((got = std::fread(buf, 1, sizeof(buf), pipe)) > 0) {
        out.append(buf, got);
    }
    const int status = pclose(pipe);
    code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

Outcome determinism() {
    const std::string cmd = "'" QUDUAL_CLI_PATH "' verify --seed 42 2>/dev/null";
    int first_code = 0;
    int second_code = 0;
    const std::string first = capture(cmd, first_code);
    const std::string second = capture(cmd, second_code);
    return {!first.empty() && first == second && first_code == 0 && second_code == 0,
            std::to_string(first.size()) + " bytes, " +
                (first == second ? "identical" : "different") + ", exit codes " +
                std::to_string(first_code) + "/" + std::to_string(second_code)};
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"duality relation", duality_relation},
        {"basis invariance", basis_invariance},
        {"fringe extremum", fringe_extremum},
        {"Robertson inequality", robertson_inequality},
        {"sharp product curves", figure_one_curves},
        {"entangled duality", entangled_duality},
        {"unbiased estimators", unbiasedness},
        {"simultaneous minimum", simultaneous_minimum},
        {"Monte Carlo oracle", monte_carlo},
        {"verify determinism", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o{false, ""};
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        failed += o.pass ? 0 : 1;
        std::cout << (o.pass ? "[PASS]" : "[FAIL]") << " criterion " << i + 1 << ": "
                  << criteria[i].first << ": " << o.detail << '\n';
    }
    std::cout << "acceptance: " << criteria.size() - static_cast<std::size_t>(failed) << "/"
              << criteria.size() << " passed\n";
    return failed == 0 ? 0 : 1;
}
