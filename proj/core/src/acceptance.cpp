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

#include "cpass/acceptance.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "cpass/analysis.hpp"
#include "cpass/csv.hpp"
#include "cpass/rng.hpp"
#include "cpass/wmmse.hpp"

namespace cpass::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

SystemConfig default_config() { return SystemConfig{}; }

std::string fmt(double v, int prec = 4) {
    std::ostringstream os;
    os.precision(prec);
    os << v;
    return os.str();
}

// ---- independent companion-matrix root oracle (not the Ferrari path) ----

std::vector<cdouble> companion_roots(const QuarticCoeffs& c) {
    Eigen::Matrix4cd A = Eigen::Matrix4cd::Zero();
    A(0, 3) = -c.c0 / c.c4;
    A(1, 3) = -c.c1 / c.c4;
    A(2, 3) = -c.c2 / c.c4;
    A(3, 3) = -c.c3 / c.c4;
    for (int i = 1; i < 4; ++i) A(i, i - 1) = 1.0;
    Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(A);
    std::vector<cdouble> roots;
    for (int i = 0; i < 4; ++i) roots.push_back(es.eigenvalues()(i));
    return roots;
}

std::vector<double> real_roots_of(const std::vector<cdouble>& roots) {
    std::vector<double> out;
    for (cdouble z : roots) {
        if (std::fabs(z.imag()) <= 1e-8 * (1.0 + std::abs(z))) out.push_back(z.real());
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---- random WMMSE block instances shared by the solver oracles ----

struct BlockInstance {
    SystemConfig cfg;
    Layout layout;
    BeamformerState state;
    AuxState aux;
    WmmseOptimizer opt;
};

BlockInstance random_instance(Rng& rng, int M, int K) {
    SystemConfig cfg = default_config();
    cfg.M = M;
    cfg.K = K;
    Layout layout = build_layout(cfg, Architecture::CenterFed, rng.raw());
    BeamformerState st;
    st.pa_x = layout.pa_x_init;
    for (auto& x : st.pa_x) x += cfg.Delta * (2.0 * rng.uniform() - 1.0);
    std::vector<double> theta(M), phi(std::max(0, M - 1));
    for (auto& th : theta) th = rng.uniform(0.0, kPi / 2.0);
    for (auto& ph : phi) ph = rng.uniform(0.0, kPi / 2.0);
    st.pinching = PinchingState::from_angles(theta, phi);
    st.W.resize(M, K);
    for (int i = 0; i < M; ++i) {
        for (int k = 0; k < K; ++k) st.W(i, k) = rng.cnormal();
    }
    st.W *= std::sqrt(cfg.P_T) / st.W.norm();
    WmmseOptimizer opt(cfg, layout);
    ChannelSet ch = opt.channels(st);
    AuxState aux = update_aux(ch.H_eff, st.W, cfg.N0);
    return {cfg, layout, std::move(st), std::move(aux), std::move(opt)};
}

// Block objective rebuilt from scratch through the channel matrices
// (independent of the block solvers' internal decompositions).
double objective_of_state(const BlockInstance& bi, const BeamformerState& st) {
    ChannelSet ch = build_channels(
        [&] {
            Layout l = bi.layout;
            l.pa_x = st.pa_x;
            return l;
        }(),
        st.pinching, bi.cfg);
    CMatrix T = ch.H_eff * st.W;
    double obj = 0.0;
    for (int k = 0; k < bi.cfg.K; ++k) {
        obj += bi.aux.kappa(k) * (std::norm(bi.aux.t(k)) * T.row(k).squaredNorm() -
                                  2.0 * std::real(std::conj(bi.aux.t(k)) * T(k, k)));
    }
    return obj;
}

} // namespace

// --------------------------------------------------------------------------
// C1: capacity slopes and effective-channel ranks
// --------------------------------------------------------------------------

CriterionResult c1_dof_slopes(const VerifyOptions& opts) {
    auto t0 = Clock::now();
    CriterionResult res{"C1", "dof-slopes-and-rank", true, 0.0, 10.0, "", {}};
    const std::pair<int, int> configs[] = {{8, 8}, {8, 4}, {4, 4}, {2, 4}};
    const double P1 = dbm_to_watt(60.0), P2 = dbm_to_watt(70.0);
    std::ostringstream detail;
    for (auto [M, K] : configs) {
        SystemConfig cfg = default_config();
        cfg.M = M;
        cfg.K = K;
        const int dof = std::min(M, K);
        double slope_sum = 0.0;
        const int n_drops = 10;
        for (int i = 0; i < n_drops; ++i) {
            std::uint64_t seed = mix_seed({opts.seed_base, 1, static_cast<std::uint64_t>(M * 100 + K), static_cast<std::uint64_t>(i)});
            slope_sum += estimate_dof(cfg, Architecture::CenterFed, P1, P2, seed).slope;
        }
        double slope = slope_sum / n_drops;
        int rank_ok = 0;
        for (int i = 0; i < 100; ++i) {
            std::uint64_t seed = mix_seed({opts.seed_base, 2, static_cast<std::uint64_t>(M * 100 + K), static_cast<std::uint64_t>(i)});
            DofEstimate est = estimate_dof(cfg, Architecture::CenterFed, P1, P2, seed);
            if (est.rank == dof) ++rank_ok;
        }
        std::string tag = std::to_string(M) + "x" + std::to_string(K);
        res.metrics.push_back({res.id, "slope_" + tag, slope});
        res.metrics.push_back({res.id, "rank_ok_" + tag, static_cast<double>(rank_ok)});
        bool slope_pass = std::fabs(slope - dof) <= 0.05 * dof;
        bool rank_pass = rank_ok >= 99;
        if (!slope_pass || !rank_pass) res.pass = false;
        detail << tag << ": slope=" << fmt(slope) << "/" << dof << " rank_ok=" << rank_ok
               << "/100  ";
    }
    res.runtime_s = seconds_since(t0);
    if (res.runtime_s >= res.budget_s) res.pass = false;
    res.detail = detail.str();
    return res;
}

// --------------------------------------------------------------------------
// C2: received-power scaling and the closed-form array factor
// --------------------------------------------------------------------------

CriterionResult c2_power_scaling(const VerifyOptions& opts) {
    auto t0 = Clock::now();
    CriterionResult res{"C2", "power-scaling", true, 0.0, 30.0, "", {}};

    // (a) closed form vs direct double sum
    double max_rel = 0.0;
    for (double alpha : {0.0, 0.0092, 0.2095}) {
        for (int M = 1; M <= 128; ++M) {
            double cf = a_r_closed_form(M, alpha, 100.0);
            double ds = a_r_direct_sum(M, alpha, 100.0);
            max_rel = std::max(max_rel, std::fabs(cf - ds) / std::fabs(ds));
        }
    }
    res.metrics.push_back({res.id, "a_r_max_rel_err", max_rel});
    bool pass_a = max_rel <= 1e-10;

    // (b) 3 dB per doubling at M = 64 (equal-distance normalization, lossless)
    double delta_db = 10.0 * std::log10(a_r_closed_form(128, 0.0, 100.0) /
                                        a_r_closed_form(64, 0.0, 100.0));
    res.metrics.push_back({res.id, "doubling_gain_db", delta_db});
    bool pass_b = std::fabs(delta_db - 3.01) <= 0.3;

    // (c) micro-tuned received power against the phase-aligned bound, M = 8.
    // Single user at the center of the service square, 50 m from the guide.
    SystemConfig cfg = default_config();
    cfg.M = 8;
    cfg.K = 1;
    Layout layout = build_layout(cfg, Architecture::CenterFed, mix_seed({opts.seed_base, 3}));
    layout.user_pos[0] = {cfg.L / 2.0, 50.0};
    PhaseAlignOptions pa_opts;
    pa_opts.n_grid = 2001;
    pa_opts.restarts = 6;
    PhaseAlignResult pa = phase_align_positions(layout, cfg, pa_opts);
    double bound = received_power_bound(cfg, fr_distances(pa.layout));
    double gap_db = 10.0 * std::log10(bound / pa.p_r);
    res.metrics.push_back({res.id, "align_gap_db", gap_db});
    res.metrics.push_back({res.id, "p_r_dbm", watt_to_dbm(pa.p_r)});
    res.metrics.push_back({res.id, "p_bar_dbm", watt_to_dbm(bound)});
    // dominance with the nominal-hop amplitude slack exp(2 alpha_g Delta)
    bool pass_c = gap_db <= 0.1 && pa.p_r >= pa.p_r_init &&
                  pa.p_r <= bound * std::exp(2.0 * cfg.alpha_g * cfg.Delta);

    res.pass = pass_a && pass_b && pass_c;
    res.runtime_s = seconds_since(t0);
    if (res.runtime_s >= res.budget_s) res.pass = false;
    res.detail = "a_r_rel_err=" + fmt(max_rel, 3) + " doubling=" + fmt(delta_db) +
                 "dB align_gap=" + fmt(gap_db, 3) + "dB";
    return res;
}

// --------------------------------------------------------------------------
// C3: solver micro-oracles (quartic, theta block, phi block)
// --------------------------------------------------------------------------

CriterionResult c3_solver_oracles(const VerifyOptions& opts) {
    auto t0 = Clock::now();
    CriterionResult res{"C3", "solver-micro-oracles", true, 0.0, 60.0, "", {}};

    // quartic: residuals and companion agreement over 1000 random instances
    // leading coefficient bounded away from zero: otherwise the quartic owns
    // a root of magnitude max|c_i|/|c4| whose double-precision residual floor
    // eps * max|c_i| * |z|^3 exceeds the 1e-8 contract for any solver
    Rng rng(mix_seed({opts.seed_base, 4}));
    double worst_res = 0.0, worst_root_dev = 0.0;
    int mismatches = 0;
    for (int it = 0; it < 1000; ++it) {
        double lead = rng.uniform(0.5, 10.0) * (rng.uniform() < 0.5 ? -1.0 : 1.0);
        QuarticCoeffs c{lead, rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0),
                        rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)};
        RootSet rs = solve_quartic(c);
        for (cdouble z : rs.roots) {
            worst_res = std::max(worst_res, quartic_residual(c, z) / c.scale());
        }
        std::vector<double> mine = real_roots_of(rs.roots);
        std::vector<double> oracle = real_roots_of(companion_roots(c));
        if (mine.size() != oracle.size()) {
            ++mismatches;
            continue;
        }
        for (size_t i = 0; i < mine.size(); ++i) {
            worst_root_dev = std::max(worst_root_dev, std::fabs(mine[i] - oracle[i]));
        }
    }
    res.metrics.push_back({res.id, "quartic_worst_residual", worst_res});
    res.metrics.push_back({res.id, "quartic_worst_root_dev", worst_root_dev});
    res.metrics.push_back({res.id, "quartic_count_mismatch", static_cast<double>(mismatches)});
    bool pass_q = worst_res <= 1e-8 && worst_root_dev <= 1e-6 && mismatches == 0;

    // theta block vs 1e5-point dense grid
    Rng rng_t(mix_seed({opts.seed_base, 5}));
    double worst_theta_gap = 0.0;
    for (int it = 0; it < 100; ++it) {
        int M = 2 + static_cast<int>(rng_t.uniform() * 3.0);
        int K = 2 + static_cast<int>(rng_t.uniform() * 3.0);
        BlockInstance bi = random_instance(rng_t, M, K);
        int m = static_cast<int>(rng_t.uniform() * M);
        double theta = bi.opt.solve_split_angle(bi.state, bi.aux, m);
        BeamformerState probe = bi.state;
        probe.pinching.theta[m] = theta;
        double f_sel = objective_of_state(bi, probe);
        double f_min = f_sel;
        const int grid_n = 100000;
        for (int g = 0; g < grid_n; ++g) {
            probe.pinching.theta[m] = kPi / 2.0 * g / (grid_n - 1);
            f_min = std::min(f_min, objective_of_state(bi, probe));
        }
        double gap = (f_sel - f_min) / std::max(1.0, std::fabs(f_min));
        worst_theta_gap = std::max(worst_theta_gap, gap);
    }
    res.metrics.push_back({res.id, "theta_worst_gap", worst_theta_gap});
    bool pass_t = worst_theta_gap <= 1e-6;

    // phi block vs 1e5-point dense grid
    Rng rng_p(mix_seed({opts.seed_base, 6}));
    double worst_phi_gap = 0.0;
    for (int it = 0; it < 100; ++it) {
        int M = 2 + static_cast<int>(rng_p.uniform() * 3.0);
        int K = 2 + static_cast<int>(rng_p.uniform() * 3.0);
        BlockInstance bi = random_instance(rng_p, M, K);
        int p = 1 + static_cast<int>(rng_p.uniform() * (M - 1));
        double phi = bi.opt.solve_radiation_angle(bi.state, bi.aux, p);
        BeamformerState probe = bi.state;
        probe.pinching.delta[p] = std::cos(phi) * std::cos(phi);
        double f_sel = objective_of_state(bi, probe);
        double f_min = f_sel;
        const int grid_n = 100000;
        for (int g = 0; g < grid_n; ++g) {
            double ph = kPi / 2.0 * g / (grid_n - 1);
            probe.pinching.delta[p] = std::cos(ph) * std::cos(ph);
            f_min = std::min(f_min, objective_of_state(bi, probe));
        }
        double gap = (f_sel - f_min) / std::max(1.0, std::fabs(f_min));
        worst_phi_gap = std::max(worst_phi_gap, gap);
    }
    res.metrics.push_back({res.id, "phi_worst_gap", worst_phi_gap});
    bool pass_p = worst_phi_gap <= 1e-3;

    res.pass = pass_q && pass_t && pass_p;
    res.runtime_s = seconds_since(t0);
    if (res.runtime_s >= res.budget_s) res.pass = false;
    res.detail = "quartic_res=" + fmt(worst_res, 3) + " theta_gap=" + fmt(worst_theta_gap, 3) +
                 " phi_gap=" + fmt(worst_phi_gap, 3);
    return res;
}

// --------------------------------------------------------------------------
// C4: monotone descent and fast convergence
// --------------------------------------------------------------------------

namespace {

struct RunBatch {
    std::vector<SolveReport> reports;
};

RunBatch default_runs(const VerifyOptions& opts, int n_runs) {
    RunBatch batch;
    SystemConfig cfg = default_config();
    for (int i = 0; i < n_runs; ++i) {
        std::uint64_t seed = mix_seed({opts.seed_base, 7, static_cast<std::uint64_t>(i)});
        Layout layout = build_layout(cfg, Architecture::CenterFed, seed);
        WmmseOptimizer opt(cfg, layout);
        auto [state, report] = opt.optimize();
        (void)state;
        batch.reports.push_back(std::move(report));
    }
    return batch;
}

} // namespace

CriterionResult c4_monotone_descent(const VerifyOptions& opts) {
    auto t0 = Clock::now();
    CriterionResult res{"C4", "monotone-descent", true, 0.0, 120.0, "", {}};
    RunBatch batch = default_runs(opts, 20);
    double worst_rate_drop = 0.0, worst_obj_rise = 0.0, min_ratio_at10 = 1.0;
    double iter_sum = 0.0;
    for (const auto& rep : batch.reports) {
        const auto& rt = rep.sum_rate_trace;
        const auto& ot = rep.objective_trace;
        for (size_t i = 1; i < rt.size(); ++i) {
            worst_rate_drop =
                std::max(worst_rate_drop, (rt[i - 1] - rt[i]) / std::max(1.0, std::fabs(rt[i - 1])));
            worst_obj_rise =
                std::max(worst_obj_rise, (ot[i] - ot[i - 1]) / std::max(1.0, std::fabs(ot[i - 1])));
        }
        double final_rate = rt.back();
        double at10 = rt[std::min<size_t>(9, rt.size() - 1)];
        min_ratio_at10 = std::min(min_ratio_at10, at10 / final_rate);
        iter_sum += rep.iterations;
    }
    res.metrics.push_back({res.id, "worst_rate_drop_rel", worst_rate_drop});
    res.metrics.push_back({res.id, "worst_objective_rise_rel", worst_obj_rise});
    res.metrics.push_back({res.id, "min_rate_ratio_at_iter10", min_ratio_at10});
    res.metrics.push_back({res.id, "mean_iterations", iter_sum / batch.reports.size()});
    bool monotone_ok = worst_rate_drop <= 1e-9 && worst_obj_rise <= 1e-9;
    res.pass = monotone_ok && min_ratio_at10 >= 0.99;
    res.runtime_s = seconds_since(t0);
    if (res.runtime_s >= res.budget_s) res.pass = false;
    res.detail = std::string("monotone=") + (monotone_ok ? "ok" : "VIOLATED") +
                 " rate_drop=" + fmt(worst_rate_drop, 3) + " obj_rise=" + fmt(worst_obj_rise, 3) +
                 " min_at10_ratio=" + fmt(min_ratio_at10, 4) + " (>=0.99 required)";
    return res;
}

// --------------------------------------------------------------------------
// C5: energy conservation and precoder feasibility invariants
// --------------------------------------------------------------------------

CriterionResult c5_energy_feasibility(const VerifyOptions& opts) {
    auto t0 = Clock::now();
    CriterionResult res{"C5", "energy-and-feasibility", true, 0.0, 60.0, "", {}};

    // lossless Q rows unit-norm over 100 random pinching states
    SystemConfig cfg = default_config();
    cfg.M = 6;
    cfg.alpha_g = 0.0;
    Layout layout = build_layout(cfg, Architecture::CenterFed, mix_seed({opts.seed_base, 8}));
    Rng rng(mix_seed({opts.seed_base, 9}));
    double worst_norm_dev = 0.0;
    for (int it = 0; it < 100; ++it) {
        std::vector<double> theta(cfg.M), phi(cfg.M - 1);
        for (auto& th : theta) th = rng.uniform(0.0, kPi / 2.0);
        for (auto& ph : phi) ph = rng.uniform(0.0, kPi / 2.0);
        PinchingState st = PinchingState::from_angles(theta, phi);
        CMatrix Q = build_Q(layout, st, cfg);
        for (int m = 0; m < cfg.M; ++m) {
            worst_norm_dev = std::max(worst_norm_dev, std::fabs(Q.row(m).norm() - 1.0));
        }
    }
    res.metrics.push_back({res.id, "q_row_norm_max_dev", worst_norm_dev});
    bool pass_q = worst_norm_dev <= 1e-12;

    // precoder power + complementary slackness across optimizer runs
    RunBatch batch = default_runs(opts, 10);
    SystemConfig run_cfg = default_config();
    double worst_power_excess = 0.0, worst_slack = 0.0;
    for (const auto& rep : batch.reports) {
        for (size_t i = 0; i < rep.power_trace.size(); ++i) {
            worst_power_excess =
                std::max(worst_power_excess, (rep.power_trace[i] - run_cfg.P_T) / run_cfg.P_T);
            worst_slack = std::max(
                worst_slack, rep.lambda_trace[i] * std::fabs(rep.power_trace[i] - run_cfg.P_T) /
                                 run_cfg.P_T);
        }
    }
    res.metrics.push_back({res.id, "precoder_power_excess_rel", worst_power_excess});
    res.metrics.push_back({res.id, "slackness_rel", worst_slack});
    bool pass_w = worst_power_excess <= 1e-9 && worst_slack <= 1e-9;

    res.pass = pass_q && pass_w;
    res.runtime_s = seconds_since(t0);
    if (res.runtime_s >= res.budget_s) res.pass = false;
    res.detail = "row_norm_dev=" + fmt(worst_norm_dev, 3) +
                 " power_excess=" + fmt(worst_power_excess, 3) + " slack=" + fmt(worst_slack, 3);
    return res;
}

// --------------------------------------------------------------------------
// C6: architecture comparisons (Figs. 7-8)
// --------------------------------------------------------------------------

namespace {

double mean_final_rate(const SystemConfig& cfg, Architecture kind, std::uint64_t stream,
                       int trials, const VerifyOptions& opts) {
    double sum = 0.0;
    for (int i = 0; i < trials; ++i) {
        std::uint64_t seed = mix_seed({opts.seed_base, stream, static_cast<std::uint64_t>(i)});
        Layout layout = build_layout(cfg, kind, seed);
        WmmseOptimizer opt(cfg, layout);
        auto [state, report] = opt.optimize();
        (void)state;
        sum += report.sum_rate_trace.back();
    }
    return sum / trials;
}

} // namespace

CriterionResult c6_architecture_compare(const VerifyOptions& opts) {
    auto t0 = Clock::now();
    CriterionResult res{"C6", "architecture-compare", true, 0.0, 600.0, "", {}};

    // (a) single user: all three architectures within 10% of each other
    SystemConfig cfg1 = default_config();
    cfg1.K = 1;
    const int trials_a = 16;
    double cf1 = mean_final_rate(cfg1, Architecture::CenterFed, 10, trials_a, opts);
    double ef1 = mean_final_rate(cfg1, Architecture::EndFed, 10, trials_a, opts);
    double mw1 = mean_final_rate(cfg1, Architecture::MultiWaveguide, 10, trials_a, opts);
    double hi = std::max({cf1, ef1, mw1});
    double lo = std::min({cf1, ef1, mw1});
    double gap_rel = (hi - lo) / hi;
    res.metrics.push_back({res.id, "k1_rate_centerfed", cf1});
    res.metrics.push_back({res.id, "k1_rate_endfed", ef1});
    res.metrics.push_back({res.id, "k1_rate_multiwg", mw1});
    res.metrics.push_back({res.id, "k1_rel_gap", gap_rel});
    bool pass_a = gap_rel < 0.10;

    // (b) K = 4: CenterFed and MultiWaveguide both beat single-waveguide EndFed
    SystemConfig cfg4 = default_config();
    const int trials_b = 16;
    double cf4 = mean_final_rate(cfg4, Architecture::CenterFed, 11, trials_b, opts);
    double ef4 = mean_final_rate(cfg4, Architecture::EndFed, 11, trials_b, opts);
    double mw4 = mean_final_rate(cfg4, Architecture::MultiWaveguide, 11, trials_b, opts);
    res.metrics.push_back({res.id, "k4_rate_centerfed", cf4});
    res.metrics.push_back({res.id, "k4_rate_endfed", ef4});
    res.metrics.push_back({res.id, "k4_rate_multiwg", mw4});
    bool pass_b = cf4 > ef4 && mw4 > ef4;

    // (c) high attenuation, M = 17, K = 10: CenterFed gain over MultiWaveguide
    // equivalent to >= 5 dB of transmit power
    SystemConfig cfg_h = default_config();
    cfg_h.M = 17;
    cfg_h.K = 10;
    cfg_h.alpha_g = 0.2095;
    const int trials_c = 6;
    double cf_h = mean_final_rate(cfg_h, Architecture::CenterFed, 12, trials_c, opts);
    double mw_h = mean_final_rate(cfg_h, Architecture::MultiWaveguide, 12, trials_c, opts);
    double gain_db = 0.0;
    {
        double prev_rate = mw_h, prev_db = 0.0;
        bool found = false;
        for (double off : {5.0, 10.0, 15.0, 20.0, 25.0, 30.0}) {
            SystemConfig boosted = cfg_h;
            boosted.P_T = cfg_h.P_T * from_db(off);
            double r = mean_final_rate(boosted, Architecture::MultiWaveguide, 12, trials_c, opts);
            if (r >= cf_h) {
                // linear interpolation in dB for the reported equivalent gain
                double t = (cf_h - prev_rate) / std::max(r - prev_rate, 1e-12);
                gain_db = prev_db + t * (off - prev_db);
                found = true;
                break;
            }
            prev_rate = r;
            prev_db = off;
        }
        if (!found) gain_db = 30.0; // probe cap: the true equivalent gain exceeds it
    }
    res.metrics.push_back({res.id, "atten_rate_centerfed", cf_h});
    res.metrics.push_back({res.id, "atten_rate_multiwg", mw_h});
    res.metrics.push_back({res.id, "atten_equiv_gain_db", gain_db});
    bool pass_c = cf_h > mw_h && gain_db >= 5.0;

    res.metrics.push_back({res.id, "pass_k1_gap", pass_a ? 1.0 : 0.0});
    res.metrics.push_back({res.id, "pass_k4_order", pass_b ? 1.0 : 0.0});
    res.metrics.push_back({res.id, "pass_atten_gain", pass_c ? 1.0 : 0.0});
    res.pass = pass_a && pass_b && pass_c;
    res.runtime_s = seconds_since(t0);
    if (res.runtime_s >= res.budget_s) res.pass = false;
    res.detail = "k1_gap=" + fmt(gap_rel, 3) + " (<0.10 required) k4=[CF " + fmt(cf4) + ", EF " +
                 fmt(ef4) + ", MW " + fmt(mw4) + "] atten_gain>=" + fmt(gain_db, 3) + "dB";
    return res;
}

std::vector<CriterionResult> run_all(const VerifyOptions& opts) {
    std::vector<CriterionResult> out;
    out.push_back(c1_dof_slopes(opts));
    out.push_back(c2_power_scaling(opts));
    out.push_back(c3_solver_oracles(opts));
    out.push_back(c4_monotone_descent(opts));
    out.push_back(c5_energy_feasibility(opts));
    out.push_back(c6_architecture_compare(opts));
    return out;
}

bool all_pass(const std::vector<CriterionResult>& results) {
    for (const auto& r : results) {
        if (!r.pass) return false;
    }
    return true;
}

std::string summary_line(const CriterionResult& r) {
    std::ostringstream os;
    os << r.id << " " << (r.pass ? "PASS" : "FAIL") << " " << r.name << ": " << r.detail
       << " (runtime " << fmt(r.runtime_s, 3) << "s < " << fmt(r.budget_s, 4) << "s)";
    return os.str();
}

std::string metrics_csv(const std::vector<CriterionResult>& results) {
    std::ostringstream os;
    os << "# cpass verify metrics v1\n";
    os << "# rng = " << Rng::kAlgorithm << "\n";
    os << "criterion,metric,value\n";
    for (const auto& r : results) {
        for (const auto& m : r.metrics) {
            os << csv_escape(m.criterion) << "," << csv_escape(m.name) << ","
               << format_double(m.value) << "\n";
        }
        os << csv_escape(r.id) << ",pass," << (r.pass ? 1 : 0) << "\n";
    }
    return os.str();
}

bool metrics_equal(const std::string& csv_a, const std::string& csv_b, double tol) {
    auto parse = [](const std::string& text) {
        std::vector<std::pair<std::string, double>> rows;
        std::istringstream is(text);
        std::string line;
        while (std::getline(is, line)) {
            if (line.empty() || line[0] == '#' || line.rfind("criterion,", 0) == 0) continue;
            size_t p1 = line.find(',');
            size_t p2 = line.rfind(',');
            if (p1 == std::string::npos || p2 == p1) continue;
            rows.push_back({line.substr(0, p2), std::stod(line.substr(p2 + 1))});
        }
        return rows;
    };
    auto a = parse(csv_a), b = parse(csv_b);
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].first != b[i].first) return false;
        double scale = std::max({1.0, std::fabs(a[i].second), std::fabs(b[i].second)});
        if (std::fabs(a[i].second - b[i].second) > tol * scale) return false;
    }
    return true;
}

} // namespace cpass::acceptance
