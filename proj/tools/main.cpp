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

// qudual: compute | sweep | verify | mc
//
// Exit codes: 0 success, 1 verification failure, 2 invalid parameters,
// 3 unwritable output path.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <string_view>

#include <CLI11.hpp>

#include <qudual/qudual.hpp>

#include "verify.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitUnwritable = 3;
constexpr std::uint64_t kDefaultSeed = 42;

/// Thrown for bad flag combinations that CLI11 cannot express.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::uint64_t resolve_seed(const std::optional<std::uint64_t> &flag) {
    if (flag) {
        return *flag;
    }
    const char *env = std::getenv("QUDUAL_SEED");
    if (env == nullptr || *env == '\0') {
        return kDefaultSeed;
    }
    const std::string_view text(env);
    std::uint64_t value = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
        throw UsageError("QUDUAL_SEED must be an unsigned 64-bit integer");
    }
    return value;
}

void line(std::ostream &out, std::string_view key, double value) {
    out << key << " = " << qudual::format_double(value) << '\n';
}

void print_report(std::ostream &out, std::string_view name,
                  const qudual::SampleReport &r) {
    out << name << ": n=" << r.n << " seed=" << r.seed << '\n';
    line(out, "  empirical_mean", r.empirical_mean);
    line(out, "  analytic_mean", r.analytic_mean);
    line(out, "  z_mean", r.z_mean);
    line(out, "  empirical_variance", r.empirical_variance);
    line(out, "  analytic_variance", r.analytic_variance);
    line(out, "  z_variance", r.z_variance);
    out << "  status = " << (r.flagged ? "FLAGGED" : "ok") << '\n';
}

struct ComputeArgs {
    double w_plus = 0.5;
    std::optional<double> rho12;
    double theta = 0.0;
    bool pure = false;
    std::optional<double> varrho;
    std::optional<double> c;
};

int run_compute(const ComputeArgs &args) {
    using namespace qudual;
    if (args.pure == args.rho12.has_value()) {
        throw UsageError("compute: give exactly one of --rho12 and --pure");
    }
    const DensityMatrix rho = args.pure ? pure_state(args.w_plus, args.theta)
                                        : density_from_params(args.w_plus, *args.rho12,
                                                              args.theta);
    const double varrho = args.varrho.value_or(rho.theta());
    const Observable a = reference_observable();
    const Observable b = complementary_to(a, varrho);

    auto &out = std::cout;
    line(out, "w_plus", rho.w_plus());
    line(out, "rho12", rho.rho12());
    line(out, "theta", rho.theta());
    line(out, "varrho", wrap_phase(varrho));
    line(out, "purity", rho.purity());
    line(out, "P", predictability(rho));
    line(out, "V", visibility(rho));
    line(out, "P_B", predictability_of_B(rho, varrho));
    line(out, "V_B", visibility_of_B(rho, varrho));
    const auto ma = mean_var(rho, a);
    const auto mb = mean_var(rho, b);
    line(out, "mean_A", ma.mean);
    line(out, "var_A", ma.variance);
    line(out, "mean_B", mb.mean);
    line(out, "var_B", mb.variance);
    const auto r = robertson(rho, a, b);
    line(out, "robertson_lhs", r.lhs);
    line(out, "robertson_rhs", r.rhs);

    if (args.c) {
        if (!rho.is_pure()) {
            throw UsageError("compute: --c needs a pure state (rho12 = sqrt(w+ w-))");
        }
        const double c = *args.c;
        const auto psi = entangle(rho.w_plus(), rho.theta(), c);
        line(out, "c", c);
        line(out, "D", distinguishability(psi));
        line(out, "V_e", entangled_visibility(psi));
        if (c > 0.0 && c < 1.0) {
            line(out, "var_A_prime", estimate_A(psi).variance);
        } else {
            out << "var_A_prime = undefined (needs 0 < c < 1)\n";
        }
        if (c > 0.0) {
            line(out, "var_B_prime", estimate_B(psi, varrho).variance);
        } else {
            out << "var_B_prime = undefined (needs c > 0)\n";
        }
        const auto product = simultaneous_product(rho.w_plus(), c);
        line(out, "sim_product", product.value);
        const auto opt = optimal_entanglement(rho.w_plus());
        line(out, "c_opt", opt.c);
        line(out, "sim_product_min", minimum_simultaneous_product(rho.w_plus()).value());
    }
    return 0;
}

int run_sweep(int figure, int points, const std::string &out_path) {
    using namespace qudual;
    if (figure != 1 && figure != 3) {
        throw UsageError("sweep: --figure must be 1 or 3");
    }
    const auto rows = sweep(static_cast<Figure>(figure), points);
    if (out_path.empty() || out_path == "-") {
        write_csv(std::cout, rows);
        std::cout.flush();
        return 0;
    }
    std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
        std::cerr << "error: cannot open '" << out_path << "' for writing\n";
        return kExitUnwritable;
    }
    write_csv(file, rows);
    file.flush();
    if (!file) {
        std::cerr << "error: write to '" << out_path << "' failed\n";
        return kExitUnwritable;
    }
    return 0;
}

struct McArgs {
    double w_plus = 0.9;
    double theta = 0.0;
    std::optional<double> varrho;
    std::optional<double> c;
    std::uint64_t n = 1000000;
};

int run_mc(const McArgs &args, std::uint64_t seed) {
    using namespace qudual;
    const auto rho = pure_state(args.w_plus, args.theta);
    const double varrho = args.varrho.value_or(rho.theta());
    const Observable a = reference_observable();
    const double c = args.c.value_or(std::sqrt(3.0 / 7.0));
    const auto psi = entangle(args.w_plus, args.theta, c);

    const auto sharp_a = sample_sharp(rho, a, args.n, seed);
    const auto sharp_b = sample_sharp(rho, complementary_to(a, varrho), args.n, seed);
    const auto sim = sample_simultaneous(psi, varrho, args.n, seed);

    auto &out = std::cout;
    line(out, "w_plus", rho.w_plus());
    line(out, "theta", rho.theta());
    line(out, "varrho", wrap_phase(varrho));
    line(out, "c", c);
    print_report(out, "sharp_A", sharp_a);
    print_report(out, "sharp_B", sharp_b);
    print_report(out, "unsharp_A", sim.a_estimate);
    print_report(out, "unsharp_B", sim.b_estimate);
    const bool flagged = sharp_a.flagged || sharp_b.flagged ||
                         sim.a_estimate.flagged || sim.b_estimate.flagged;
    out << "mc: " << (flagged ? "FLAGGED" : "ok") << '\n';
    return flagged ? kExitFailure : 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Two-state complementarity and uncertainty toolkit"};
    app.require_subcommand(1);

    ComputeArgs compute_args;
    auto *compute = app.add_subcommand("compute", "Single-state quantities");
    compute->add_option("--w-plus", compute_args.w_plus, "Population w+ in [0, 1]")
        ->required();
    compute->add_option("--rho12", compute_args.rho12, "Coherence magnitude");
    compute->add_option("--theta", compute_args.theta, "Coherence phase");
    compute->add_flag("--pure", compute_args.pure, "Use rho12 = sqrt(w+ w-)");
    compute->add_option("--varrho", compute_args.varrho,
                        "Phase of B (default: theta)");
    compute->add_option("--c", compute_args.c, "Meter entanglement in [0, 1]");

    int figure = 1;
    int points = 201;
    std::string out_path;
    auto *sweep_cmd = app.add_subcommand("sweep", "Figure data as CSV");
    sweep_cmd->add_option("--figure", figure, "1 (sharp) or 3 (simultaneous)");
    sweep_cmd->add_option("--points", points, "Rows, uniform in alpha");
    sweep_cmd->add_option("--out", out_path, "Output path (default stdout)");

    std::string level = "full";
    std::optional<std::uint64_t> verify_seed;
    double tolerance_scale = 1.0;
    auto *verify = app.add_subcommand("verify", "Run every invariant suite");
    verify->add_option("--level", level, "fast or full")
        ->check(CLI::IsMember({"fast", "full"}));
    verify->add_option("--seed", verify_seed, "Seed (overrides QUDUAL_SEED)");
    verify->add_option("--tolerance-scale", tolerance_scale)->group("");

    McArgs mc_args;
    std::optional<std::uint64_t> mc_seed;
    auto *mc = app.add_subcommand("mc", "Monte-Carlo oracle");
    mc->add_option("--w-plus", mc_args.w_plus, "Population w+ in [0, 1]");
    mc->add_option("--theta", mc_args.theta, "Coherence phase");
    mc->add_option("--varrho", mc_args.varrho, "Phase of B (default: theta)");
    mc->add_option("--c", mc_args.c, "Meter entanglement in (0, 1) (default sqrt(3/7))");
    mc->add_option("--n", mc_args.n, "Shots");
    mc->add_option("--seed", mc_seed, "Seed (overrides QUDUAL_SEED)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalid;
    }

    try {
        if (*compute) {
            return run_compute(compute_args);
        }
        if (*sweep_cmd) {
            return run_sweep(figure, points, out_path);
        }
        if (*verify) {
            qudual::cli::VerifyOptions options;
            options.level = level == "fast" ? qudual::cli::VerifyLevel::kFast
                                            : qudual::cli::VerifyLevel::kFull;
            options.seed = resolve_seed(verify_seed);
            options.tolerance_scale = tolerance_scale;
            return qudual::cli::run_verify(options, std::cout) == 0 ? 0
                                                                    : kExitFailure;
        }
        if (*mc) {
            if (mc_args.n < 1) {
                throw UsageError("mc: --n must be at least 1");
            }
            return run_mc(mc_args, resolve_seed(mc_seed));
        }
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::domain_error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    return kExitInvalid;
}
