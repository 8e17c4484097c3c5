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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cpass/analysis.hpp"
#include "cpass/rng.hpp"

using namespace cpass;

TEST_CASE("capacity: zero channel and identity channel") {
    CMatrix zero = CMatrix::Zero(3, 4);
    CHECK(capacity(zero, 1.0, 4, 1e-12) == doctest::Approx(0.0));
    // H_eff = I_K with P_T/(M N0) = 1: K bits
    const int K = 3;
    CMatrix eye = CMatrix::Identity(K, K);
    CHECK(capacity(eye, 3.0, 3, 1.0) == doctest::Approx(K).epsilon(1e-12));
}

TEST_CASE("capacity: rank-one channel gains one bit per power doubling") {
    Rng rng(3);
    CVector a(3), b(4);
    for (int i = 0; i < 3; ++i) a(i) = rng.cnormal();
    for (int i = 0; i < 4; ++i) b(i) = rng.cnormal();
    CMatrix H = a * b.transpose();
    double P = 1e9;
    double c1 = capacity(H, P, 4, 1.0);
    double c2 = capacity(H, 2.0 * P, 4, 1.0);
    CHECK(c2 - c1 == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("numeric rank thresholds tiny singular values") {
    CMatrix H = CMatrix::Zero(3, 3);
    H(0, 0) = 1.0;
    H(1, 1) = 1e-3;
    H(2, 2) = 1e-12; // below 1e-9 * sigma_max
    CHECK(numeric_rank(H) == 2);
}

TEST_CASE("estimate_dof: slopes track min(M,K) at high power") {
    const double P1 = dbm_to_watt(60.0), P2 = dbm_to_watt(70.0);
    struct Case {
        int M, K;
    } cases[] = {{2, 4}, {4, 4}, {8, 4}};
    for (auto c : cases) {
        SystemConfig cfg;
        cfg.M = c.M;
        cfg.K = c.K;
        double mean_slope = 0.0;
        const int drops = 6;
        for (int i = 0; i < drops; ++i) {
            DofEstimate est = estimate_dof(cfg, Architecture::CenterFed, P1, P2, 100 + i);
            CHECK(est.rank == std::min(c.M, c.K));
            mean_slope += est.slope;
        }
        mean_slope /= drops;
        CHECK(std::fabs(mean_slope - std::min(c.M, c.K)) <= 0.05 * std::min(c.M, c.K));
    }
    SystemConfig bad;
    CHECK_THROWS_AS(estimate_dof(bad, Architecture::CenterFed, 2.0, 1.0, 1),
                    std::invalid_argument);
}

TEST_CASE("estimate_dof: baseline architectures also reach min(M,K) rank") {
    const double P1 = dbm_to_watt(60.0), P2 = dbm_to_watt(70.0);
    SystemConfig cfg;
    cfg.M = 3;
    cfg.K = 4;
    for (Architecture kind : {Architecture::EndFed, Architecture::MultiWaveguide}) {
        DofEstimate est = estimate_dof(cfg, kind, P1, P2, 55);
        CHECK(est.rank == 3);
    }
}

TEST_CASE("received_power_mrt: zero channel, aligned two-PA case, loop oracle") {
    SystemConfig cfg;
    cfg.M = 1;
    cfg.K = 1;
    cfg.alpha_g = 0.0;
    cfg.L = 2.0;
    CHECK(received_power_mrt(CVector::Zero(2), CMatrix::Zero(1, 2), cfg.P_T) == 0.0);

    // user equidistant from both PAs of the M = 1 lossless split: the two
    // terms share the same in-waveguide and free-space phases
    Layout lay = build_layout(cfg, Architecture::CenterFed, 1);
    lay.user_pos[0] = {1.0, 40.0};
    PinchingState st = PinchingState::symmetric(1);
    CMatrix Q = build_Q(lay, st, cfg);
    CMatrix H = build_H(lay, cfg);
    double p = received_power_mrt(H.row(0).transpose(), Q, cfg.P_T);
    double h1 = std::abs(H(0, 0)), h2 = std::abs(H(0, 1));
    double want = cfg.P_T * std::pow(h1 * std::abs(Q(0, 0)) + h2 * std::abs(Q(0, 1)), 2.0);
    CHECK(p == doctest::Approx(want).epsilon(1e-12));

    // random instance equals the explicit |sum_m h_eff,m w_m|^2 with MRT
    Rng rng(8);
    CMatrix Qr(2, 3);
    CVector h(3);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 3; ++j) Qr(i, j) = rng.cnormal();
    }
    for (int j = 0; j < 3; ++j) h(j) = rng.cnormal();
    double pr = received_power_mrt(h, Qr, 2.5);
    Eigen::RowVectorXcd h_eff = h.transpose() * Qr.transpose();
    CVector w = std::sqrt(2.5) * h_eff.adjoint() / h_eff.norm();
    cdouble acc(0.0);
    for (int m = 0; m < 2; ++m) acc += h_eff(m) * w(m);
    CHECK(pr == doctest::Approx(std::norm(acc)).epsilon(1e-10));
}

TEST_CASE("phase_align_positions: Delta = 0 is a no-op") {
    SystemConfig cfg;
    cfg.M = 4;
    cfg.K = 1;
    cfg.Delta = 0.0;
    Layout lay = build_layout(cfg, Architecture::CenterFed, 2);
    PhaseAlignResult r = phase_align_positions(lay, cfg);
    CHECK(r.p_r == r.p_r_init);
    for (size_t n = 0; n < lay.pa_x.size(); ++n) CHECK(r.layout.pa_x[n] == lay.pa_x[n]);
}

TEST_CASE("phase_align_positions: single backward PA leaves power unchanged") {
    // one radiating term: its own phase cannot interfere with anything
    SystemConfig cfg;
    cfg.M = 1;
    cfg.K = 1;
    cfg.alpha_g = 0.0;
    cfg.L = 2.0;
    Layout lay = build_layout(cfg, Architecture::CenterFed, 3);
    lay.user_pos[0] = {lay.pa_x[0], 60.0}; // directly above PA 0
    // beta_B = 1: kill the forward branch so only PA 0 radiates
    PinchingState st;
    st.theta = {kPi / 2.0};
    st.delta = {1.0, 1.0};
    CMatrix Q = build_Q(lay, st, cfg);
    CMatrix H = build_H(lay, cfg);
    double before = received_power_mrt(H.row(0).transpose(), Q, cfg.P_T);
    Layout moved = lay;
    moved.pa_x[0] += cfg.Delta; // extreme micro-shift
    CMatrix Q2 = build_Q(moved, st, cfg);
    CMatrix H2 = build_H(moved, cfg);
    double after = received_power_mrt(H2.row(0).transpose(), Q2, cfg.P_T);
    CHECK(std::fabs(after - before) <= 1e-6 * before);
}

TEST_CASE("phase_align_positions: improves power and respects the bound") {
    SystemConfig cfg;
    cfg.M = 4;
    cfg.K = 1;
    Layout lay = build_layout(cfg, Architecture::CenterFed, 11);
    PhaseAlignOptions opts;
    opts.n_grid = 801;
    opts.restarts = 2;
    PhaseAlignResult r = phase_align_positions(lay, cfg, opts);
    CHECK(r.p_r >= r.p_r_init);
    // the bound evaluates in-waveguide attenuation at nominal hop distances;
    // micro-moving a PA toward a port gains up to exp(alpha_g Delta) amplitude
    double bound = received_power_bound(cfg, fr_distances(r.layout));
    CHECK(r.p_r <= bound * std::exp(2.0 * cfg.alpha_g * cfg.Delta));
    for (size_t n = 0; n < r.layout.pa_x.size(); ++n) {
        CHECK(std::fabs(r.layout.pa_x[n] - lay.pa_x_init[n]) <= cfg.Delta + 1e-12);
    }
}

TEST_CASE("power_scaling_point: bound dominance at several M") {
    for (int M : {1, 2, 4}) {
        SystemConfig cfg;
        cfg.M = M;
        cfg.K = 1;
        Layout lay = build_layout(cfg, Architecture::CenterFed, 21 + M);
        PhaseAlignOptions opts;
        opts.n_grid = 401;
        opts.restarts = 1;
        PowerScalingPoint pt = power_scaling_point(lay, cfg, opts);
        CHECK(pt.M == M);
        CHECK(pt.P_R > 0.0);
        CHECK(pt.P_R <= pt.P_bar * std::exp(2.0 * cfg.alpha_g * cfg.Delta));
        CHECK(pt.A_R_closed == doctest::Approx(a_r_closed_form(M, cfg.alpha_g, cfg.L)));
    }
}

TEST_CASE("received_power_bound: equal distances factor out") {
    SystemConfig cfg;
    cfg.M = 3;
    const double d = 42.0;
    std::vector<double> dists(cfg.M + 1, d);
    double bound = received_power_bound(cfg, dists);
    double want = cfg.P_T * cfg.eta() * cfg.eta() / (2.0 * d * d) *
                  std::exp(cfg.L * cfg.alpha_g / (cfg.M + 1)) *
                  a_r_closed_form(cfg.M, cfg.alpha_g, cfg.L);
    CHECK(bound == doctest::Approx(want).epsilon(1e-12));

    // linear in P_T
    SystemConfig doubled = cfg;
    doubled.P_T = 2.0 * cfg.P_T;
    CHECK(received_power_bound(doubled, dists) == doctest::Approx(2.0 * bound).epsilon(1e-12));
}

TEST_CASE("a_r closed form: M = 1 lossless gives 2") {
    CHECK(a_r_closed_form(1, 0.0, 100.0) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(a_r_direct_sum(1, 0.0, 100.0) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("a_r closed form equals the direct double sum") {
    for (double alpha : {0.0, 0.0092, 0.2095}) {
        for (int M = 1; M <= 128; ++M) {
            double cf = a_r_closed_form(M, alpha, 100.0);
            double ds = a_r_direct_sum(M, alpha, 100.0);
            CHECK(std::fabs(cf - ds) <= 1e-10 * std::fabs(ds));
        }
    }
}

TEST_CASE("a_r: large-M lossless limit is 4 (rho/(1-rho))^2 per port") {
    const double rho = 1.0 / std::sqrt(2.0);
    const double limit = 4.0 * std::pow(rho / (1.0 - rho), 2.0); // ~23.31
    CHECK(limit == doctest::Approx(23.3137).epsilon(1e-4));
    // finite-M correction decays as 1/M
    CHECK(a_r_closed_form(100000, 0.0, 100.0) / 100000.0 ==
          doctest::Approx(limit).epsilon(1e-4));
}

TEST_CASE("power doubling approaches 3.01 dB at large M") {
    double delta_db =
        10.0 * std::log10(a_r_closed_form(128, 0.0, 100.0) / a_r_closed_form(64, 0.0, 100.0));
    CHECK(std::fabs(delta_db - 3.01) <= 0.3);
}
