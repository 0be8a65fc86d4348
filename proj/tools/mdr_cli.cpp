// Copyright 2026 The mdrkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mdr/experiment.hpp"
#include "mdr/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;
constexpr int kExitIo = 3;

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

const char* fmt_bool(bool v) { return v ? "true" : "false"; }

/// Writes to the named file, or stdout when path is empty.
void emit(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw mdr::IOFailure("cannot open output file: " + path);
    }
    out << content;
    if (!out) {
        throw mdr::IOFailure("write failed: " + path);
    }
}

struct SweepRequest {
    double theta_min = 0.0;
    double theta_max = std::numbers::pi / 4.0;
    int theta_steps = 101;
    std::vector<double> p_list;
    double gamma_sq = 0.75;
    std::uint64_t shots = 0;
    std::uint64_t seed = 20260824;
    std::string output_path;
};

int cmd_sweep(const SweepRequest& req) {
    if (req.theta_steps < 2) {
        std::cerr << "error: --theta-steps must be at least 2\n";
        return kExitUsage;
    }
    std::vector<double> p_list = req.p_list;
    if (p_list.empty()) p_list = {0.0, 0.05, 0.1, 0.15, 0.2};
    for (double p : p_list) {
        if (p < 0.0 || p > 1.0) {
            std::cerr << "error: -p values must lie in [0,1]\n";
            return kExitUsage;
        }
    }

    std::ostringstream csv;
    csv << "theta,p,gamma_sq,epsilon,eta,sigma_a,sigma_b,c,h,o,"
           "epsilon_recon,eta_recon,heisenberg_holds,ozawa_holds,shots,seed\n";
    const mdr::DensityState rho = mdr::states::y_plus();
    for (const double p : p_list) {
        for (int i = 0; i < req.theta_steps; ++i) {
            const double theta =
                req.theta_min + (req.theta_max - req.theta_min) * i /
                                    (req.theta_steps - 1);
            const mdr::MeasurementModel model =
                mdr::MeasurementModel::qubit_example_noisy(theta, p);
            const mdr::MdrReport report = mdr::mdr_report(model, rho);

            auto recon_for = [&](mdr::ExperimentMode mode) {
                const mdr::ExperimentConfig cfg = mdr::ExperimentConfig::make(
                    theta, req.gamma_sq, mode, p, req.shots, req.seed);
                const mdr::OutcomeTable table =
                    (req.shots == 0) ? mdr::exact_outcomes(cfg)
                                     : mdr::sample_shots(cfg);
                return mdr::reconstruct(cfg, table).value;
            };
            const double eps_recon =
                recon_for(mdr::ExperimentMode::kPrecision);
            const double eta_recon =
                recon_for(mdr::ExperimentMode::kDisturbance);

            csv << fmt12(theta) << ',' << fmt12(p) << ','
                << fmt12(req.gamma_sq) << ',' << fmt12(report.epsilon) << ','
                << fmt12(report.eta) << ',' << fmt12(report.sigma_a) << ','
                << fmt12(report.sigma_b) << ',' << fmt12(report.c) << ','
                << fmt12(report.h) << ',' << fmt12(report.o) << ','
                << fmt12(eps_recon) << ',' << fmt12(eta_recon) << ','
                << fmt_bool(report.heisenberg_holds) << ','
                << fmt_bool(report.ozawa_holds) << ',' << req.shots << ','
                << req.seed << '\n';
        }
    }
    emit(req.output_path, csv.str());
    return kExitOk;
}

int cmd_verify(const mdr::VerifyOptions& options) {
    const std::vector<mdr::SuiteResult> results =
        mdr::run_verification(options);
    bool all_pass = true;
    for (const mdr::SuiteResult& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name
                  << "  max deviation " << fmt12(r.max_deviation)
                  << "  (tolerance " << fmt12(r.tolerance) << ")\n";
        all_pass = all_pass && r.pass;
    }
    return all_pass ? kExitOk : kExitVerifyFailed;
}

struct EstimateRequest {
    double theta = std::numbers::pi / 8.0;
    double gamma_sq = 0.75;
    double noise_p = 0.0;
    std::string mode = "disturbance";
    std::uint64_t shots = 1000000;
    int seeds = 30;
    std::uint64_t seed = 20260824;
    std::string output_path;
};

int cmd_estimate(const EstimateRequest& req) {
    const mdr::ExperimentMode mode = (req.mode == "precision")
                                         ? mdr::ExperimentMode::kPrecision
                                         : mdr::ExperimentMode::kDisturbance;
    std::ostringstream csv;
    csv << "seed_index,seed,estimate\n";
    double sum = 0.0, sum_sq = 0.0;
    for (int k = 0; k < req.seeds; ++k) {
        const std::uint64_t seed = req.seed + static_cast<std::uint64_t>(k);
        const mdr::ExperimentConfig cfg = mdr::ExperimentConfig::make(
            req.theta, req.gamma_sq, mode, req.noise_p, req.shots, seed);
        const double value =
            mdr::reconstruct(cfg, mdr::sample_shots(cfg)).value;
        sum += value;
        sum_sq += value * value;
        csv << k << ',' << seed << ',' << fmt12(value) << '\n';
    }
    const double n = static_cast<double>(req.seeds);
    const double mean = sum / n;
    const double var = std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0));
    const double std_err = std::sqrt(var / n);
    csv << "# mean," << fmt12(mean) << '\n';
    csv << "# std_error," << fmt12(std_err) << '\n';
    emit(req.output_path, csv.str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Measurement-disturbance relation simulator"};
    app.require_subcommand(1);

    SweepRequest sweep;
    CLI::App* sweep_cmd = app.add_subcommand(
        "sweep", "Parameter sweep over theta and noise, CSV output");
    sweep_cmd->add_option("--theta-min", sweep.theta_min, "Grid start (rad)");
    sweep_cmd->add_option("--theta-max", sweep.theta_max, "Grid end (rad)");
    sweep_cmd->add_option("--theta-steps", sweep.theta_steps,
                          "Grid size (inclusive endpoints)");
    sweep_cmd->add_option("--p,-p", sweep.p_list,
                          "CNOT error rate, repeatable");
    sweep_cmd->add_option("--gamma-sq", sweep.gamma_sq,
                          "Probe weight gamma^2 in (1/2, 1]");
    sweep_cmd->add_option("--shots", sweep.shots,
                          "Samples per reconstruction (0 = exact)");
    sweep_cmd->add_option("--seed", sweep.seed, "Base RNG seed");
    sweep_cmd->add_option("--out", sweep.output_path,
                          "Output CSV path (default stdout)");

    mdr::VerifyOptions verify;
    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "Run the weak-value identity and round-trip suites");
    verify_cmd->add_option("--seed", verify.seed, "RNG seed");
    verify_cmd->add_option("--instances", verify.instances,
                           "Random instances per suite");
    verify_cmd
        ->add_flag("--inject-corruption", verify.inject_corruption,
                   "Negative control: corrupt one instance")
        ->group("");

    EstimateRequest estimate;
    CLI::App* estimate_cmd = app.add_subcommand(
        "estimate", "Finite-shot reconstruction across seeds");
    estimate_cmd->add_option("--theta", estimate.theta, "Meter angle (rad)");
    estimate_cmd->add_option("--gamma-sq", estimate.gamma_sq,
                             "Probe weight gamma^2 in (1/2, 1]");
    estimate_cmd->add_option("--p", estimate.noise_p, "CNOT error rate");
    estimate_cmd
        ->add_option("--mode", estimate.mode, "disturbance | precision")
        ->check(CLI::IsMember({"disturbance", "precision"}));
    estimate_cmd->add_option("--shots", estimate.shots, "Samples per seed")
        ->check(CLI::PositiveNumber);
    estimate_cmd->add_option("--seeds", estimate.seeds, "Number of seeds")
        ->check(CLI::PositiveNumber);
    estimate_cmd->add_option("--seed", estimate.seed, "Base RNG seed");
    estimate_cmd->add_option("--out", estimate.output_path,
                             "Output CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (sweep_cmd->parsed()) return cmd_sweep(sweep);
        if (verify_cmd->parsed()) return cmd_verify(verify);
        if (estimate_cmd->parsed()) return cmd_estimate(estimate);
    } catch (const mdr::IOFailure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const mdr::StrengthTooSmall& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const mdr::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
