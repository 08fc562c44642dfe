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

#include "verify.hpp"

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include <qudual/qudual.hpp>

namespace qudual::cli {
namespace {

/// Pass/fail tally for one suite. Only the first few failures are listed.
class Suite {
  public:
    Suite(std::string name, double tol_scale, std::ostream &out)
        : name_(std::move(name)), scale_(tol_scale), out_(out) {}

    void check(bool ok, const std::string &what) {
        ++total_;
        if (ok) {
            ++passed_;
        } else if (total_ - passed_ <= 5) {
            out_ << "  FAIL " << name_ << ": " << what << '\n';
        }
    }

    /// |a - b| <= tol
    void close(double a, double b, double tol, const std::string &what) {
        check(std::abs(a - b) <= tol * scale_, what);
    }

    /// a <= b + tol
    void at_most(double a, double b, double tol, const std::string &what) {
        check(a <= b + tol * scale_, what);
    }

    [[nodiscard]] int failures() const { return total_ - passed_; }

    void report() const {
        out_ << name_ << ": " << passed_ << "/" << total_ << " passed\n";
    }

  private:
    std::string name_;
    double scale_;
    std::ostream &out_;
    int total_ = 0;
    int passed_ = 0;
};

/// Sequential uniforms from one stream of the counter generator.
class Draws {
  public:
    Draws(std::uint64_t seed, std::uint64_t stream) : rng_(seed, stream) {}
    double operator()() { return rng_.uniform(counter_++); }
    double in(double lo, double hi) { return lo + (hi - lo) * (*this)(); }

  private:
    CounterRng rng_;
    std::uint64_t counter_ = 0;
};

DensityMatrix random_state(Draws &u, bool force_pure = false) {
    const double w = u();
    const double frac = force_pure || u() < 0.2 ? 1.0 : u();
    return density_from_params(w, frac * std::sqrt(w * (1.0 - w)),
                               u.in(0.0, kTwoPi));
}

CMat2 random_hermitian(Draws &u) {
    CMat2 m;
    m(0, 0) = u.in(-1.0, 1.0);
    m(1, 1) = u.in(-1.0, 1.0);
    m(0, 1) = Complex(u.in(-1.0, 1.0), u.in(-1.0, 1.0));
    m(1, 0) = std::conj(m(0, 1));
    return m;
}

CMat2 random_unitary(Draws &u) {
    const double a = u.in(0.0, kTwoPi);
    const double b = u.in(0.0, kTwoPi);
    const double g = u.in(0.0, kTwoPi);
    const double t = u.in(0.0, kPi / 2.0);
    CMat2 m;
    m << std::polar(std::cos(t), a), std::polar(std::sin(t), b),
        -std::polar(std::sin(t), g - b), std::polar(std::cos(t), g - a);
    return m;
}

int suite_linalg(const VerifyOptions &o, std::ostream &out) {
    Suite s("linalg", o.tolerance_scale, out);
    Draws u(o.seed, 1);
    for (int i = 0; i < 1000; ++i) {
        const CMat2 m = random_hermitian(u);
        const auto eig = hermitian_eig(m);
        CMat2 rebuilt = CMat2::Zero();
        for (int k = 0; k < 2; ++k) {
            rebuilt += eig.values[k] * eig.vectors.col(k) * eig.vectors.col(k).adjoint();
            s.at_most(max_abs_entry(m * eig.vectors.col(k) -
                                    eig.values[k] * eig.vectors.col(k)),
                      0.0, 1e-12, "eigen residual");
        }
        s.at_most(max_abs_entry(rebuilt - m), 0.0, 1e-12, "eig reconstruction");
        s.at_most(max_abs_entry(eig.vectors.adjoint() * eig.vectors - CMat2::Identity()),
                  0.0, 1e-12, "eigenvectors orthonormal");
        const Eigen::JacobiSVD<CMat2> svd(m);
        s.close(trace_norm(m), svd.singularValues().sum(), 1e-12,
                "trace norm = sum of singular values");
    }
    for (int i = 0; i < 200; ++i) {
        const CMat2 a = random_unitary(u);
        const CMat2 b = random_unitary(u);
        const CMat2 c = random_unitary(u);
        const CMat2 d = random_unitary(u);
        s.at_most(max_abs_entry(kron(a, b) * kron(c, d) - kron(a * c, b * d)), 0.0,
                  1e-12, "kron mixed product");
    }
    s.report();
    return s.failures();
}

int suite_qubit_state(const VerifyOptions &o, std::ostream &out) {
    Suite s("qubit_state", o.tolerance_scale, out);
    Draws u(o.seed, 2);
    for (int i = 0; i < 1000; ++i) {
        const auto rho = random_state(u);
        const auto eig = hermitian_eig(rho.matrix());
        s.check(eig.values[1] >= -1e-12 * o.tolerance_scale &&
                    eig.values[0] <= 1.0 + 1e-12 * o.tolerance_scale,
                "eigenvalues in [0, 1]");
        s.close(eig.values[0] + eig.values[1], 1.0, 1e-12, "eigenvalues sum to 1");

        const auto back = density_from_matrix(rho.matrix());
        s.close(back.w_plus(), rho.w_plus(), 1e-12, "round-trip w+");
        s.close(back.rho12(), rho.rho12(), 1e-12, "round-trip rho12");
        if (rho.rho12() > 1e-9) {
            const double dth = std::remainder(back.theta() - rho.theta(), kTwoPi);
            s.close(dth, 0.0, 1e-12 / rho.rho12() + 1e-12, "round-trip theta");
        }

        const double varrho = u.in(0.0, kTwoPi);
        const Observable a = reference_observable(u.in(-2.0, 2.0), u.in(-2.0, 2.0));
        const Observable b = complementary_to(a, varrho, u.in(-2.0, 2.0), u.in(-2.0, 2.0));
        const auto ov = cross_overlaps(a, b);
        s.at_most((ov.array() - 0.5).abs().maxCoeff(), 0.0, 1e-12,
                  "mutually unbiased bases");

        // [A, B] = gapA gapB / 2 (e^{-i varrho}|A+><A-| - e^{i varrho}|A-><A+|)
        const double half_gap =
            0.5 * (a.val_plus() - a.val_minus()) * (b.val_plus() - b.val_minus());
        CMat2 expected = CMat2::Zero();
        expected(0, 1) = half_gap * std::polar(1.0, -varrho);
        expected(1, 0) = -half_gap * std::polar(1.0, varrho);
        s.at_most(max_abs_entry(commutator(a.matrix(), b.matrix()) - expected), 0.0,
                  1e-12, "commutator entrywise");
    }
    const auto triplet = complementary_triplet(reference_observable(), 0.0, 1);
    const CMat2 sx = triplet[1].matrix();
    const CMat2 sy = triplet[2].matrix();
    const CMat2 sz = triplet[0].matrix();
    const Complex i(0.0, 1.0);
    s.at_most(max_abs_entry(commutator(sx, sy) - i * sz), 0.0, 1e-12, "[u,v] = i z");
    s.at_most(max_abs_entry(commutator(sy, sz) - i * sx), 0.0, 1e-12, "[v,z] = i u");
    s.at_most(max_abs_entry(commutator(sz, sx) - i * sy), 0.0, 1e-12, "[z,u] = i v");
    s.report();
    return s.failures();
}

int suite_complementarity(const VerifyOptions &o, std::ostream &out) {
    Suite s("complementarity", o.tolerance_scale, out);
    Draws u(o.seed, 3);
    for (int i = 0; i < 10000; ++i) {
        const auto rho = random_state(u);
        const auto d = duality(rho);
        s.at_most(d.sum_sq, 1.0, 1e-12, "P^2 + V^2 <= 1");
        s.close(d.sum_sq, 2.0 * d.purity - 1.0, 1e-12, "P^2 + V^2 = 2 purity - 1");
        if (rho.is_pure()) {
            s.close(d.sum_sq, 1.0, 1e-10, "pure states saturate");
        }
        const double varrho = u.in(0.0, kTwoPi);
        const double pb = predictability_of_B(rho, varrho);
        const double vb = visibility_of_B(rho, varrho);
        s.close(pb * pb + vb * vb, d.sum_sq, 1e-12, "basis invariance");
    }
    const int states = o.level == VerifyLevel::kFull ? 20 : 3;
    const int grid = o.level == VerifyLevel::kFull ? 512 : 128;
    for (int i = 0; i < states; ++i) {
        const auto rho = random_state(u);
        const auto est = visibility_oracle(rho, grid);
        s.close(est.visibility, visibility(rho), 1e-3, "grid visibility");
        if (rho.rho12() > 1e-6) {
            s.close(est.xi_at_extremum, kPi / 4.0, kTwoPi / grid, "extremum at pi/4");
        }
    }
    s.report();
    return s.failures();
}

int suite_uncertainty(const VerifyOptions &o, std::ostream &out) {
    Suite s("uncertainty", o.tolerance_scale, out);
    Draws u(o.seed, 4);
    const Observable a = reference_observable();
    for (int i = 0; i < 10000; ++i) {
        const auto rho = random_state(u);
        const double varrho = u.in(0.0, kTwoPi);
        const Observable b = complementary_to(a, varrho);
        const auto r = robertson(rho, a, b);
        s.at_most(r.rhs, r.lhs, 1e-12, "Robertson lhs >= rhs");
        const double p = predictability(rho);
        s.close(mean_var(rho, a).variance, (1.0 - p * p) / 4.0, 1e-12,
                "Var A = (1 - P^2)/4");
        const double v = visibility(rho);
        s.close(mean_var(rho, complementary_to(a, rho.theta())).variance,
                (1.0 - v * v) / 4.0, 1e-12, "Var B(theta) = (1 - V^2)/4");
    }

    Draws v(o.seed, 5);
    for (int k = 0; k <= 40; ++k) {
        const double varrho = v.in(0.0, kTwoPi);
        const Observable b = complementary_to(a, varrho);
        const double w = k / 40.0;
        const double beta = (kPi / 2.0) * k / 40.0;
        for (int sign : {1, -1}) {
            for (const auto &is :
                 {intelligent_state(IntelligentFamily::kImaginary, w, varrho, {sign, 1}),
                  intelligent_state(IntelligentFamily::kRealUnequalWeight, w, varrho,
                                    {sign, 1}),
                  intelligent_state(IntelligentFamily::kRealEqualWeight, beta, varrho,
                                    {sign, 1}),
                  intelligent_state(IntelligentFamily::kRealEqualWeight, beta, varrho,
                                    {sign, -1})}) {
                const auto r = robertson(is.state, a, b);
                s.close(r.lhs, r.rhs, 1e-10, "intelligent state saturates");
                s.at_most(is_residual(is.state, is.lambda, a, b), 0.0, 1e-10,
                          "eigen-equation residual");
                if (!is_infinite(is.lambda)) {
                    s.close(std::norm(is.lambda) * r.var_b, r.var_a, 1e-10,
                            "|lambda|^2 = Var A / Var B");
                }
            }
        }
        // extremes of the normalized product over pure states at fixed w+
        const auto bounds = normalized_product_bounds(w);
        double lo = 1.0;
        double hi = 0.0;
        for (int j = 0; j < 720; ++j) {
            const double p = normalized_product(pure_state(w, varrho + kTwoPi * j / 720.0),
                                                a, b);
            lo = std::min(lo, p);
            hi = std::max(hi, p);
        }
        s.close(lo, bounds.min, 1e-9, "scan min = bound");
        s.close(hi, bounds.max, 1e-9, "scan max = bound");
        s.close(normalized_product(
                    intelligent_state(IntelligentFamily::kImaginary, w, varrho).state, a, b),
                bounds.min, 1e-9, "imaginary-lambda family attains min");
        s.close(normalized_product(
                    intelligent_state(IntelligentFamily::kRealUnequalWeight, w, varrho).state,
                    a, b),
                bounds.max, 1e-9, "real-lambda family attains max");
    }
    s.report();
    return s.failures();
}

int suite_simultaneous(const VerifyOptions &o, std::ostream &out) {
    Suite s("simultaneous", o.tolerance_scale, out);
    for (int i = 0; i <= 50; ++i) {
        for (int j = 0; j <= 50; ++j) {
            const double w = i / 50.0;
            const double c = j / 50.0;
            const auto psi = entangle(w, 1.3, c);
            const double d = distinguishability(psi);
            const double ve = entangled_visibility(psi);
            s.close(d * d + ve * ve, 1.0, 1e-12, "D^2 + V_e^2 = 1");
            s.at_most(std::abs(w - (1.0 - w)), d, 1e-12, "P <= D");
            s.close(d, std::sqrt(std::max(0.0, 1.0 - 4.0 * c * c * w * (1.0 - w))), 1e-12,
                    "D closed form");
        }
    }
    for (int i = 1; i <= 9; ++i) {
        for (int t = 0; t < 8; ++t) {
            for (int j = 1; j <= 9; ++j) {
                const double w = i / 10.0;
                const double theta = kTwoPi * t / 8.0;
                const double c = j / 10.0;
                const auto psi = entangle(w, theta, c);
                const auto ea = estimate_A(psi);
                s.close(ea.projected_mean, true_mean_a(w), 1e-12, "A' unbiased");
                s.close(ea.projected_variance, ea.variance, 1e-12, "A' variance");
                for (double varrho : {theta, 0.7}) {
                    const auto eb = estimate_B(psi, varrho);
                    s.close(eb.projected_mean, true_mean_b(w, theta, varrho), 1e-12,
                            "B' unbiased");
                    s.close(eb.projected_variance, eb.variance, 1e-12, "B' variance");
                }
                const double sharp_min = normalized_product_bounds(w).min;
                s.at_most(sharp_min, simultaneous_product(w, c).value, 1e-12,
                          "unsharp never beats sharp");
            }
        }
    }
    for (int k = 0; k <= 52; ++k) {
        const double w = k / 52.0;
        const auto m = minimum_simultaneous_product(w);
        s.check(m.routes_agree, "three routes agree at w+ = " + format_double(w));
        s.check(m.matches_plus, "(1 + VP)^2/16 at w+ = " + format_double(w));
    }
    s.report();
    return s.failures();
}

int suite_montecarlo(const VerifyOptions &o, std::ostream &out) {
    if (o.level == VerifyLevel::kFast) {
        out << "montecarlo: skipped (fast)\n";
        return 0;
    }
    Suite s("montecarlo", o.tolerance_scale, out);
    const std::uint64_t n = 1000000;
    const double w = 0.9;
    const double c = std::sqrt(3.0 / 7.0);
    const auto rho = pure_state(w, 0.0);
    const auto gate = [&](const SampleReport &r, const std::string &what) {
        s.at_most(std::abs(r.z_mean), 0.0, kZGate, what + " mean");
        s.at_most(std::abs(r.z_variance), 0.0, kZGate, what + " variance");
    };
    gate(sample_sharp(rho, reference_observable(), n, o.seed), "sharp A");
    gate(sample_sharp(rho, complementary_to(reference_observable(), rho.theta()), n,
                      o.seed),
         "proper B");
    const auto sim = sample_simultaneous(entangle(w, 0.0, c), 0.0, n, o.seed);
    gate(sim.a_estimate, "A'");
    gate(sim.b_estimate, "B'");
    for (std::size_t k = 0; k < 4; ++k) {
        const double p = sim.joint_probabilities[k];
        const double f = static_cast<double>(sim.joint_counts[k]) / n;
        const double se = std::sqrt(p * (1.0 - p) / n);
        s.at_most(std::abs(f - p) / se, 0.0, kZGate, "joint cell");
    }
    std::vector<double> phis(64);
    for (std::size_t k = 0; k < phis.size(); ++k) {
        phis[k] = kTwoPi * k / phis.size();
    }
    s.close(sample_fringe(pure_state(0.5, 0.0), phis, kPi / 4.0, 100000, o.seed)
                .visibility,
            1.0, 0.01, "sampled fringe visibility");
    s.report();
    return s.failures();
}

} // namespace

int run_verify(const VerifyOptions &options, std::ostream &out) {
    out << "verify level=" << (options.level == VerifyLevel::kFull ? "full" : "fast")
        << " seed=" << options.seed << '\n';
    int failures = 0;
    failures += suite_linalg(options, out);
    failures += suite_qubit_state(options, out);
    failures += suite_complementarity(options, out);
    failures += suite_uncertainty(options, out);
    failures += suite_simultaneous(options, out);
    failures += suite_montecarlo(options, out);
    out << (failures == 0 ? "verify: PASS" : "verify: FAIL") << " (" << failures
        << " failed checks)\n";
    return failures;
}

} // namespace qudual::cli
