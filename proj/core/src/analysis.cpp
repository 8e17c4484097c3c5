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

#include "cpass/analysis.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

#include "cpass/rng.hpp"

namespace cpass {

double capacity(const CMatrix& H_eff, double P_T, int M, double N0) {
    const int K = static_cast<int>(H_eff.rows());
    const double c = P_T / (M * N0);
    CMatrix B = CMatrix::Identity(K, K) + c * (H_eff * H_eff.adjoint());
    Eigen::LLT<CMatrix> llt(B);
    if (llt.info() == Eigen::Success) {
        double logdet = 0.0;
        const CMatrix& packed = llt.matrixLLT();
        for (int i = 0; i < K; ++i) logdet += std::log(std::real(packed(i, i)));
        return 2.0 * logdet / std::log(2.0);
    }
    // HPD + identity should never fail; eigenvalues as a safety net
    Eigen::SelfAdjointEigenSolver<CMatrix> es(B);
    double cap = 0.0;
    for (int i = 0; i < K; ++i) cap += std::log2(std::max(es.eigenvalues()(i), 1e-300));
    return cap;
}

int numeric_rank(const CMatrix& H_eff, double rel_threshold) {
    Eigen::JacobiSVD<CMatrix> svd(H_eff);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0) return 0;
    double cutoff = rel_threshold * sv(0);
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i) {
        if (sv(i) >= cutoff && sv(i) > 0.0) ++rank;
    }
    return rank;
}

DofEstimate estimate_dof(const SystemConfig& cfg, Architecture kind, double P1, double P2,
                         std::uint64_t user_seed) {
    if (!(P2 > P1) || !(P1 > 0.0)) {
        throw std::invalid_argument("estimate_dof: requires 0 < P1 < P2");
    }
    Layout layout = build_layout(cfg, kind, user_seed);
    PinchingState state = PinchingState::symmetric(cfg.M);
    ChannelSet ch = build_channels(layout, state, cfg);
    double c1 = capacity(ch.H_eff, P1, cfg.M, cfg.N0);
    double c2 = capacity(ch.H_eff, P2, cfg.M, cfg.N0);
    DofEstimate est;
    est.slope = (c2 - c1) / std::log2(P2 / P1);
    est.rank = numeric_rank(ch.H_eff);
    est.M = cfg.M;
    est.K = cfg.K;
    return est;
}

double received_power_mrt(const CVector& h, const CMatrix& Q, double P_T) {
    if (h.size() != Q.cols()) throw std::invalid_argument("received_power_mrt: dimension mismatch");
    return P_T * (Q * h).squaredNorm();
}

std::vector<double> fr_distances(const Layout& layout) {
    std::vector<double> d(layout.num_pas());
    for (int n = 0; n < layout.num_pas(); ++n) {
        d[n] = distance(layout.user_pos.at(0), layout.pa_pos(n));
    }
    return d;
}

double received_power_layout(const Layout& layout, const SystemConfig& cfg) {
    PinchingState state = PinchingState::symmetric(layout.num_ports());
    CMatrix Q = build_Q(layout, state, cfg);
    CMatrix H = build_H(layout, cfg);
    return received_power_mrt(H.row(0).transpose(), Q, cfg.P_T);
}

namespace {

// Running row sums S_m of the term matrix Q(m,n) h(n); moving one PA touches
// one column only.
struct PowerSums {
    Eigen::MatrixXcd terms; // M x (M+1)
    Eigen::VectorXcd row_sum;

    double power() const { return row_sum.squaredNorm(); }
};

Eigen::VectorXcd column_terms(const Layout& layout, const PinchingState& state,
                              const SystemConfig& cfg, const RadiationMatrices& rm, int n,
                              double x) {
    const int M = layout.num_ports();
    Eigen::VectorXcd col(M);
    Point2 pa{x, layout.pa_y[n]};
    cdouble h = freespace_gain(layout.user_pos.at(0), pa, cfg);
    for (int m = 0; m < M; ++m) {
        double amp = (n > m) ? std::cos(state.theta[m]) * rm.Sigma_F(m, n)
                             : std::sin(state.theta[m]) * rm.Sigma_B(m, n);
        col(m) = amp * inwaveguide_gain(std::fabs(layout.port_x[m] - x), cfg) * h;
    }
    return col;
}

} // namespace

namespace {

// Coordinate ascent to a fixed point from the given starting positions;
// returns the achieved squared-sum power (P_R / P_T) and the positions.
double ascend_positions(Layout& lay, const PinchingState& state, const SystemConfig& cfg,
                        const RadiationMatrices& rm, const PhaseAlignOptions& opts,
                        int* sweeps_out) {
    const int N = lay.num_pas();
    const int M = lay.num_ports();
    PowerSums ps;
    ps.terms.resize(M, N);
    for (int n = 0; n < N; ++n) {
        ps.terms.col(n) = column_terms(lay, state, cfg, rm, n, lay.pa_x[n]);
    }
    ps.row_sum = ps.terms.rowwise().sum();
    double best_power = ps.power();
    for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
        double sweep_start = best_power;
        for (int n = 0; n < N; ++n) {
            double lo = lay.pa_x_init[n] - cfg.Delta;
            double step = 2.0 * cfg.Delta / (opts.n_grid - 1);
            Eigen::VectorXcd base = ps.row_sum - ps.terms.col(n);
            double cand_best = best_power;
            double x_best = lay.pa_x[n];
            Eigen::VectorXcd col_best = ps.terms.col(n);
            for (int g = 0; g < opts.n_grid; ++g) {
                double x = lo + g * step;
                Point2 pa{x, lay.pa_y[n]};
                if (distance(lay.user_pos[0], pa) < 1e-6) continue;
                Eigen::VectorXcd col = column_terms(lay, state, cfg, rm, n, x);
                double p = (base + col).squaredNorm();
                if (p > cand_best) {
                    cand_best = p;
                    x_best = x;
                    col_best = col;
                }
            }
            if (cand_best > best_power) {
                best_power = cand_best;
                lay.pa_x[n] = x_best;
                ps.terms.col(n) = col_best;
                ps.row_sum = base + col_best;
            }
        }
        if (sweeps_out) *sweeps_out = sweep + 1;
        if (best_power <= sweep_start * (1.0 + 1e-12)) break;
    }
    return best_power;
}

} // namespace

PhaseAlignResult phase_align_positions(const Layout& layout, const SystemConfig& cfg,
                                       const PhaseAlignOptions& opts) {
    if (layout.kind != Architecture::CenterFed) {
        throw std::invalid_argument("phase_align_positions: requires a CenterFed layout");
    }
    if (layout.num_users() < 1) throw std::invalid_argument("phase_align_positions: no user");
    const int M = layout.num_ports();
    const int N = layout.num_pas();
    PinchingState state = PinchingState::symmetric(M);
    RadiationMatrices rm = radiation_matrices(state, M);

    PhaseAlignResult res;
    res.layout = layout;
    res.p_r_init = received_power_layout(layout, cfg);

    if (cfg.Delta <= 0.0 || opts.n_grid < 2) {
        res.p_r = res.p_r_init;
        return res;
    }

    Layout best_lay = layout;
    double best_power = ascend_positions(best_lay, state, cfg, rm, opts, &res.sweeps);
    // extra ascents from perturbed starts; the objective is multi-modal in
    // the guided phase and a single ascent can stall one basin short
    Rng rng(opts.restart_seed);
    for (int r = 0; r < opts.restarts; ++r) {
        Layout lay = layout;
        for (int n = 0; n < N; ++n) {
            lay.pa_x[n] = lay.pa_x_init[n] + cfg.Delta * (2.0 * rng.uniform() - 1.0);
        }
        int sweeps = 0;
        double p = ascend_positions(lay, state, cfg, rm, opts, &sweeps);
        res.sweeps += sweeps;
        if (p > best_power) {
            best_power = p;
            best_lay = lay;
        }
    }
    res.layout = best_lay;
    res.p_r = cfg.P_T * best_power;
    if (res.p_r < res.p_r_init) { // ascent can never lose to the start
        res.layout = layout;
        res.p_r = res.p_r_init;
    }
    return res;
}

PowerScalingPoint power_scaling_point(const Layout& layout, const SystemConfig& cfg,
                                      const PhaseAlignOptions& opts) {
    PhaseAlignResult pa = phase_align_positions(layout, cfg, opts);
    PowerScalingPoint pt;
    pt.M = cfg.M;
    pt.P_R = pa.p_r;
    pt.P_bar = received_power_bound(cfg, fr_distances(pa.layout));
    pt.A_R_closed = a_r_closed_form(cfg.M, cfg.alpha_g, cfg.L);
    return pt;
}

double received_power_bound(const SystemConfig& cfg, const std::vector<double>& d_fr) {
    const int M = cfg.M;
    if (static_cast<int>(d_fr.size()) != M + 1) {
        throw std::invalid_argument("received_power_bound: expected M+1 distances");
    }
    const double u = cfg.L / (M + 1);
    const double eta = cfg.eta();
    double total = 0.0;
    for (int m = 1; m <= M; ++m) {
        double inner = 0.0;
        for (int n = 1; n <= m; ++n) {
            int hops = m - n + 1;
            inner += std::exp(-cfg.alpha_g * u * hops) / (std::pow(2.0, hops / 2.0) * d_fr[n - 1]);
        }
        for (int n = m + 1; n <= M + 1; ++n) {
            int hops = n - m;
            inner += std::exp(-cfg.alpha_g * u * hops) / (std::pow(2.0, hops / 2.0) * d_fr[n - 1]);
        }
        total += inner * inner;
    }
    return 0.5 * cfg.P_T * eta * eta * std::exp(cfg.alpha_g * cfg.L / (M + 1)) * total;
}

double a_r_closed_form(int M, double alpha_g, double L) {
    if (M < 1) throw std::invalid_argument("a_r_closed_form: M must be >= 1");
    const double rho = std::exp(-L * alpha_g / (M + 1)) / std::sqrt(2.0);
    const double f = rho / (1.0 - rho);
    const double rM = std::pow(rho, M);
    double bracket = 4.0 * M + 2.0 * M * rM * rho - 8.0 * rho * (1.0 - rM) / (1.0 - rho) +
                     2.0 * rho * rho * (1.0 - rM * rM) / (1.0 - rho * rho);
    return f * f * bracket;
}

double a_r_direct_sum(int M, double alpha_g, double L) {
    if (M < 1) throw std::invalid_argument("a_r_direct_sum: M must be >= 1");
    const double rho = std::exp(-L * alpha_g / (M + 1)) / std::sqrt(2.0);
    double total = 0.0;
    for (int m = 1; m <= M; ++m) {
        double inner = 0.0;
        for (int n = 1; n <= m; ++n) inner += std::pow(rho, m - n + 1);
        for (int n = m + 1; n <= M + 1; ++n) inner += std::pow(rho, n - m);
        total += inner * inner;
    }
    return total;
}

} // namespace cpass
