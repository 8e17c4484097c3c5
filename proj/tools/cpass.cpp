// cpass - center-fed pinching-antenna system simulator
// Copyright (C) 2026 the cpass authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
//
// Command-line front end:
//   cpass run <spec-file> [--out csv] [--seed-base N] [--trials N] [--threads N]
//   cpass verify [--out csv] [--seed-base N]
//   cpass dof|power|converge|compare   (canned experiments with flag overrides)
//
// Exit codes: 0 success, 1 validation error, 2 solver/criterion failure.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>

#include "cpass/acceptance.hpp"
#include "cpass/experiment.hpp"

namespace {

struct CfgFlags {
    // sentinel: NaN / -1 means "not set on the command line"
    double L = -1.0, f_c = -1.0, n_eff = -1.0, alpha_g = -1.0;
    double P_T_dBm = std::nan(""), N0_dBm = std::nan(""), Delta = -1.0, area = -1.0;
    double eps = -1.0;
    int M = -1, K = -1, I_max = -1, n_grid = -1, trials = -1;
    long long seed_base = -1;
    int threads = 1;
    std::string out;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--M", M, "number of input ports");
        cmd->add_option("--K", K, "number of users");
        cmd->add_option("--L", L, "waveguide length (m)");
        cmd->add_option("--f-c", f_c, "carrier frequency (Hz)");
        cmd->add_option("--n-eff", n_eff, "waveguide refractive index");
        cmd->add_option("--alpha-g", alpha_g, "in-waveguide attenuation (nepers/m)");
        cmd->add_option("--pt-dbm", P_T_dBm, "transmit power (dBm)");
        cmd->add_option("--n0-dbm", N0_dBm, "noise power (dBm)");
        cmd->add_option("--delta", Delta, "PA micro-adjustment half-range (m)");
        cmd->add_option("--area", area, "user square side (m)");
        cmd->add_option("--eps", eps, "convergence threshold");
        cmd->add_option("--i-max", I_max, "iteration cap");
        cmd->add_option("--n-grid", n_grid, "PA position grid points");
        cmd->add_option("--trials", trials, "Monte-Carlo trials per point");
        cmd->add_option("--seed-base", seed_base, "base RNG seed");
        cmd->add_option("--threads", threads, "worker threads for trials");
        cmd->add_option("--out", out, "output CSV path");
    }

    void apply(cpass::ExperimentSpec& spec) const {
        if (M > 0) spec.cfg.M = M;
        if (K > 0) spec.cfg.K = K;
        if (L > 0) spec.cfg.L = L;
        if (f_c > 0) spec.cfg.f_c = f_c;
        if (n_eff > 0) spec.cfg.n_eff = n_eff;
        if (alpha_g >= 0) spec.cfg.alpha_g = alpha_g;
        if (!std::isnan(P_T_dBm)) spec.cfg.P_T = cpass::dbm_to_watt(P_T_dBm);
        if (!std::isnan(N0_dBm)) spec.cfg.N0 = cpass::dbm_to_watt(N0_dBm);
        if (Delta >= 0) spec.cfg.Delta = Delta;
        if (area > 0) spec.cfg.area = area;
        if (eps > 0) spec.eps = eps;
        if (I_max > 0) spec.I_max = I_max;
        if (n_grid > 1) spec.n_grid = n_grid;
        if (trials > 0) spec.trials = trials;
        if (seed_base >= 0) spec.seed_base = static_cast<std::uint64_t>(seed_base);
        if (!out.empty()) spec.out = out;
    }
};

int run_experiment(cpass::ExperimentSpec spec, const CfgFlags& flags) {
    flags.apply(spec);
    try {
        spec.validate();
    } catch (const std::exception& e) {
        std::cerr << "cpass: invalid configuration: " << e.what() << "\n";
        return 1;
    }
    std::vector<cpass::ResultRow> rows;
    try {
        rows = cpass::run(spec, flags.threads);
    } catch (const std::exception& e) {
        std::cerr << "cpass: " << e.what() << "\n";
        return 2;
    }
    cpass::write_csv(spec.out, rows);
    int n_err = 0;
    for (const auto& r : rows) {
        if (!r.error.empty()) ++n_err;
    }
    std::cout << spec.experiment << ": " << rows.size() << " rows -> " << spec.out;
    if (n_err > 0) std::cout << " (" << n_err << " failed trials)";
    std::cout << "\n";
    return n_err > 0 ? 2 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cpass: center-fed pinching-antenna system simulator"};
    app.require_subcommand(1);

    // run <spec-file>
    auto* cmd_run = app.add_subcommand("run", "run an experiment described by a spec file");
    std::string spec_path;
    cmd_run->add_option("spec", spec_path, "experiment spec file")->required();
    CfgFlags run_flags;
    run_flags.add_to(cmd_run);

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run the numerical acceptance suite");
    std::string verify_out = "cpass_verify.csv";
    long long verify_seed = 20260808;
    cmd_verify->add_option("--out", verify_out, "metrics CSV path");
    cmd_verify->add_option("--seed-base", verify_seed, "base RNG seed");

    // canned experiments
    CfgFlags dof_flags, power_flags, conv_flags, cmp_flags;
    auto* cmd_dof = app.add_subcommand("dof", "capacity slope / DoF sweep");
    dof_flags.add_to(cmd_dof);
    auto* cmd_power = app.add_subcommand("power", "received power scaling sweep");
    power_flags.add_to(cmd_power);
    auto* cmd_conv = app.add_subcommand("converge", "per-iteration convergence traces");
    conv_flags.add_to(cmd_conv);
    auto* cmd_cmp = app.add_subcommand("compare", "architecture comparison");
    cmp_flags.add_to(cmd_cmp);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_run->parsed()) {
            cpass::ExperimentSpec spec;
            try {
                spec = cpass::load_spec(spec_path);
            } catch (const cpass::SpecParseError& e) {
                std::cerr << "cpass: " << e.what() << "\n";
                return 1;
            }
            return run_experiment(spec, run_flags);
        }
        if (cmd_verify->parsed()) {
            cpass::acceptance::VerifyOptions opts;
            opts.seed_base = static_cast<std::uint64_t>(verify_seed);
            auto results = cpass::acceptance::run_all(opts);
            for (const auto& r : results) std::cout << cpass::acceptance::summary_line(r) << "\n";
            std::string csv = cpass::acceptance::metrics_csv(results);
            if (FILE* f = std::fopen(verify_out.c_str(), "wb")) {
                std::fwrite(csv.data(), 1, csv.size(), f);
                std::fclose(f);
                std::cout << "metrics -> " << verify_out << "\n";
            } else {
                std::cerr << "cpass: cannot write " << verify_out << "\n";
                return 1;
            }
            return cpass::acceptance::all_pass(results) ? 0 : 2;
        }
        cpass::ExperimentSpec spec;
        if (cmd_dof->parsed()) {
            spec.experiment = "dof_sweep";
            spec.trials = 5;
            return run_experiment(spec, dof_flags);
        }
        if (cmd_power->parsed()) {
            spec.experiment = "power_scaling";
            spec.cfg.K = 1;
            spec.trials = 5;
            return run_experiment(spec, power_flags);
        }
        if (cmd_conv->parsed()) {
            spec.experiment = "convergence";
            spec.trials = 3;
            return run_experiment(spec, conv_flags);
        }
        if (cmd_cmp->parsed()) {
            spec.experiment = "architecture_compare";
            spec.trials = 5;
            return run_experiment(spec, cmp_flags);
        }
    } catch (const std::exception& e) {
        std::cerr << "cpass: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
