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
//
// End-to-end acceptance suite. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails. argv[1] is the path to the CLI binary, used
// by the determinism criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "mdr/experiment.hpp"
#include "mdr/verify.hpp"

using namespace mdr;

namespace {

constexpr double kPi = std::numbers::pi;

int failures = 0;

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("%s  criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion,
                detail.c_str());
    if (!pass) ++failures;
}

std::vector<double> theta_grid(int points, double theta_max) {
    std::vector<double> grid(points);
    for (int i = 0; i < points; ++i) {
        grid[static_cast<std::size_t>(i)] = theta_max * i / (points - 1);
    }
    return grid;
}

// Criterion 1: exact epsilon/eta match the closed forms on a 101-point grid;
// H stays below C = 1 with its maximum 2 - sqrt(2) at theta = pi/8; O >= C
// with endpoint values sqrt(2).
void criterion_closed_forms() {
    Timer timer;
    const DensityState rho = states::y_plus();
    double max_form_dev = 0.0;
    double max_h = 0.0;
    double theta_at_max_h = -1.0;
    bool h_below_c = true;
    bool o_above_c = true;
    double first_o = 0.0, last_o = 0.0;

    // Strength range: cos(2 theta) in [0,1], i.e. theta in [0, pi/4].
    const std::vector<double> grid = theta_grid(101, kPi / 4.0);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double theta = grid[i];
        const MdrReport r =
            mdr_report(MeasurementModel::qubit_example(theta), rho);
        max_form_dev = std::max(
            {max_form_dev,
             std::abs(r.epsilon - 2.0 * std::abs(std::sin(theta))),
             std::abs(r.eta - std::sqrt(2.0) * std::abs(std::cos(theta) -
                                                        std::sin(theta)))});
        if (r.h >= r.c) h_below_c = false;
        if (r.o < r.c - 1e-9) o_above_c = false;
        if (r.h > max_h) {
            max_h = r.h;
            theta_at_max_h = theta;
        }
        if (i == 0) first_o = r.o;
        if (i + 1 == grid.size()) last_o = r.o;
    }

    const bool pass = max_form_dev < 1e-10 && h_below_c && o_above_c &&
                      std::abs(max_h - (2.0 - std::sqrt(2.0))) < 1e-9 &&
                      std::abs(theta_at_max_h - kPi / 8.0) < 1e-9 &&
                      std::abs(first_o - std::sqrt(2.0)) < 1e-9 &&
                      std::abs(last_o - std::sqrt(2.0)) < 1e-9 &&
                      timer.seconds() < 1.0;
    std::ostringstream detail;
    detail << "closed-form reproduction, max deviation " << max_form_dev
           << ", max H " << max_h << " (" << timer.seconds() << " s)";
    report(1, pass, detail.str());
}

// Criterion 2: RMS of the weak-valued difference distribution equals the
// direct epsilon/eta on 100 seeded random models; tables sum to 1.
void criterion_weak_value_identities() {
    Timer timer;
    Rng rng(271828);
    double max_identity_dev = 0.0;
    double max_norm_dev = 0.0;
    for (int k = 0; k < 100; ++k) {
        const std::size_t signal_dim = 2 + rng.below(3);
        const std::size_t meter_dim = 2 + rng.below(3);
        const MeasurementModel m = random_model(signal_dim, meter_dim, rng);
        const DensityState rho = random_signal_state(m, rng);
        const WeakJointTable dist =
            weak_joint(m, rho, WeakMode::kDisturbance);
        const WeakJointTable prec = weak_joint(m, rho, WeakMode::kPrecision);
        max_norm_dev = std::max({max_norm_dev, std::abs(dist.total() - 1.0),
                                 std::abs(prec.total() - 1.0)});
        max_identity_dev = std::max(
            {max_identity_dev,
             std::abs(rms_of_delta(delta_distribution(dist)) -
                      eta_direct(m, rho)),
             std::abs(rms_of_delta(delta_distribution(prec)) -
                      epsilon_direct(m, rho))});
    }
    const bool pass = max_identity_dev < 1e-9 && max_norm_dev < 1e-10 &&
                      timer.seconds() < 10.0;
    std::ostringstream detail;
    detail << "weak-value identity suites, max identity deviation "
           << max_identity_dev << ", max normalization deviation "
           << max_norm_dev << " (" << timer.seconds() << " s)";
    report(2, pass, detail.str());
}

// Criterion 3: reconstruction from exact three-qubit statistics equals the
// direct quantities for every theta and probe strength at p = 0, and the
// reconstructions agree across strengths.
void criterion_round_trip() {
    Timer timer;
    const DensityState rho = states::y_plus();
    const double gamma_sqs[] = {0.51, 0.6, 0.75, 0.9, 1.0};
    double max_round_trip_dev = 0.0;
    double max_strength_spread = 0.0;
    for (const double theta : theta_grid(101, kPi / 2.0)) {
        const MeasurementModel m = MeasurementModel::qubit_example(theta);
        const double eta_ref = eta_direct(m, rho);
        const double eps_ref = epsilon_direct(m, rho);
        double eta_first = 0.0, eps_first = 0.0;
        bool first = true;
        for (const double gsq : gamma_sqs) {
            const ExperimentConfig dc = ExperimentConfig::make(
                theta, gsq, ExperimentMode::kDisturbance);
            const ExperimentConfig pc = ExperimentConfig::make(
                theta, gsq, ExperimentMode::kPrecision);
            const double eta_hat =
                reconstruct(dc, exact_outcomes(dc)).value;
            const double eps_hat =
                reconstruct(pc, exact_outcomes(pc)).value;
            max_round_trip_dev =
                std::max({max_round_trip_dev, std::abs(eta_hat - eta_ref),
                          std::abs(eps_hat - eps_ref)});
            if (first) {
                eta_first = eta_hat;
                eps_first = eps_hat;
                first = false;
            } else {
                max_strength_spread = std::max(
                    {max_strength_spread, std::abs(eta_hat - eta_first),
                     std::abs(eps_hat - eps_first)});
            }
        }
    }
    const bool pass = max_round_trip_dev < 1e-9 &&
                      max_strength_spread < 1e-9 && timer.seconds() < 30.0;
    std::ostringstream detail;
    detail << "operational round trip, max deviation " << max_round_trip_dev
           << ", strength spread " << max_strength_spread << " ("
           << timer.seconds() << " s)";
    report(3, pass, detail.str());
}

// Criterion 4: under CNOT error rates up to 0.2, the reconstructed
// quantities keep H below 1 and O at or above 1 at every grid point.
void criterion_noise_sweep() {
    Timer timer;
    bool h_ok = true, o_ok = true;
    double worst_h = 0.0, worst_o = 10.0;
    for (const double p : {0.0, 0.05, 0.1, 0.15, 0.2}) {
        for (const double theta : theta_grid(101, kPi / 4.0)) {
            const ExperimentConfig dc = ExperimentConfig::make(
                theta, 0.75, ExperimentMode::kDisturbance, p);
            const ExperimentConfig pc = ExperimentConfig::make(
                theta, 0.75, ExperimentMode::kPrecision, p);
            const double eta_hat = reconstruct(dc, exact_outcomes(dc)).value;
            const double eps_hat = reconstruct(pc, exact_outcomes(pc)).value;
            const double h = eps_hat * eta_hat;
            const double o = h + eps_hat + eta_hat;
            worst_h = std::max(worst_h, h);
            worst_o = std::min(worst_o, o);
            if (h >= 1.0) h_ok = false;
            if (o < 1.0 - 1e-9) o_ok = false;
        }
    }
    const bool pass = h_ok && o_ok && timer.seconds() < 60.0;
    std::ostringstream detail;
    detail << "noise sweep, max H " << worst_h << ", min O " << worst_o
           << " (" << timer.seconds() << " s)";
    report(4, pass, detail.str());
}

// Criterion 5: finite-shot estimates are unbiased at the 5-standard-error
// level and their RMS error scales like one over the square root of the
// shot count.
void criterion_monte_carlo() {
    Timer timer;
    const double exact = 0.7653668647301795;
    const int seeds = 30;
    double sum = 0.0, sum_sq = 0.0;
    double rms_small = 0.0, rms_large = 0.0;
    for (int k = 0; k < seeds; ++k) {
        ExperimentConfig cfg = ExperimentConfig::make(
            kPi / 8, 0.75, ExperimentMode::kDisturbance, 0.0, 1000000,
            5000 + static_cast<std::uint64_t>(k));
        const double est = reconstruct(cfg, sample_shots(cfg)).value;
        sum += est;
        sum_sq += est * est;
        rms_large += (est - exact) * (est - exact);

        cfg.shots = 10000;
        const double est_small =
            reconstruct(cfg, sample_shots(cfg)).value;
        rms_small += (est_small - exact) * (est_small - exact);
    }
    const double mean = sum / seeds;
    const double var =
        std::max(0.0, (sum_sq - seeds * mean * mean) / (seeds - 1.0));
    const double std_err = std::sqrt(var / seeds);
    rms_small = std::sqrt(rms_small / seeds);
    rms_large = std::sqrt(rms_large / seeds);
    const double ratio = rms_small / rms_large;

    const bool pass = std::abs(mean - exact) <= 5.0 * std_err &&
                      ratio >= 5.0 && ratio <= 20.0 &&
                      timer.seconds() < 300.0;
    std::ostringstream detail;
    detail << "Monte Carlo convergence, mean " << mean << " +/- " << std_err
           << ", RMS ratio " << ratio << " (" << timer.seconds() << " s)";
    report(5, pass, detail.str());
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

// Criterion 6: identical CLI invocations produce byte-identical CSV files.
void criterion_determinism(const std::string& cli_path) {
    const std::string sweep_args =
        " sweep --theta-steps 21 --p 0 --p 0.1 --shots 2000 --seed 7";
    const std::string estimate_args =
        " estimate --theta 0.3926990816987241 --gamma-sq 0.75 --shots 50000"
        " --seeds 5 --seed 11 --mode disturbance";
    bool pass = true;
    std::string detail = "deterministic CLI output";
    for (const auto& [label, args] :
         {std::pair<std::string, std::string>{"sweep", sweep_args},
          {"estimate", estimate_args}}) {
        const std::string out_a = "acceptance_" + label + "_a.csv";
        const std::string out_b = "acceptance_" + label + "_b.csv";
        const int rc_a = std::system(
            ("\"" + cli_path + "\"" + args + " --out " + out_a).c_str());
        const int rc_b = std::system(
            ("\"" + cli_path + "\"" + args + " --out " + out_b).c_str());
        const std::string bytes_a = read_file(out_a);
        if (rc_a != 0 || rc_b != 0 || bytes_a.empty() ||
            bytes_a != read_file(out_b)) {
            pass = false;
            detail = "CLI output differs or command failed (" + label + ")";
        }
    }
    report(6, pass, detail);
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli_path = (argc > 1) ? argv[1] : "./mdr";
    criterion_closed_forms();
    criterion_weak_value_identities();
    criterion_round_trip();
    criterion_noise_sweep();
    criterion_monte_carlo();
    criterion_determinism(cli_path);
    if (failures == 0) {
        std::printf("all acceptance criteria passed\n");
    } else {
        std::printf("%d acceptance criteria FAILED\n", failures);
    }
    return failures == 0 ? 0 : 1;
}
