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

#include "cpass/wmmse.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cpass {

namespace {

// Variable-dependent part of the WMMSE objective, from the signal matrix
// T = H_eff * W; differs from the full objective only by aux-dependent
// constants, so block argmins coincide.
double block_objective(const CMatrix& T, const AuxState& aux) {
    double obj = 0.0;
    const int K = static_cast<int>(T.rows());
    for (int k = 0; k < K; ++k) {
        double quad = T.row(k).squaredNorm();
        double lin = std::real(std::conj(aux.t(k)) * T(k, k));
        obj += aux.kappa(k) * (std::norm(aux.t(k)) * quad - 2.0 * lin);
    }
    return obj;
}

} // namespace

double sum_rate(const CMatrix& H_eff, const CMatrix& W, double N0) {
    if (H_eff.cols() != W.rows()) throw std::invalid_argument("sum_rate: dimension mismatch");
    CMatrix T = H_eff * W;
    const int K = static_cast<int>(T.rows());
    double rate = 0.0;
    for (int k = 0; k < K; ++k) {
        double signal = std::norm(T(k, k));
        double interference = T.row(k).squaredNorm() - signal;
        rate += std::log2(1.0 + signal / (interference + N0));
    }
    return rate;
}

AuxState update_aux(const CMatrix& H_eff, const CMatrix& W, double N0) {
    if (!(N0 > 0.0)) throw std::invalid_argument("update_aux: N0 must be > 0");
    CMatrix T = H_eff * W;
    const int K = static_cast<int>(T.rows());
    AuxState aux;
    aux.t.resize(K);
    aux.kappa.resize(K);
    for (int k = 0; k < K; ++k) {
        double total = T.row(k).squaredNorm() + N0;
        aux.t(k) = T(k, k) / total;
        double eps_k = std::norm(aux.t(k)) * total - 2.0 * std::real(std::conj(aux.t(k)) * T(k, k)) + 1.0;
        aux.kappa(k) = 1.0 / eps_k;
    }
    return aux;
}

double wmmse_objective(const CMatrix& H_eff, const CMatrix& W, const AuxState& aux, double N0) {
    CMatrix T = H_eff * W;
    const int K = static_cast<int>(T.rows());
    double obj = 0.0;
    for (int k = 0; k < K; ++k) {
        double total = T.row(k).squaredNorm() + N0;
        double eps_k = std::norm(aux.t(k)) * total - 2.0 * std::real(std::conj(aux.t(k)) * T(k, k)) + 1.0;
        obj += aux.kappa(k) * eps_k - std::log(aux.kappa(k));
    }
    return obj;
}

PrecoderUpdate update_precoder(const CMatrix& H_eff, const AuxState& aux, double P_T) {
    const int K = static_cast<int>(H_eff.rows());
    const int M = static_cast<int>(H_eff.cols());
    if (!(P_T > 0.0)) throw std::invalid_argument("update_precoder: P_T must be > 0");

    CMatrix A = CMatrix::Zero(M, M);
    for (int k = 0; k < K; ++k) {
        A += (aux.kappa(k) * std::norm(aux.t(k))) * (H_eff.row(k).adjoint() * H_eff.row(k));
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> es(A);
    Eigen::VectorXd d = es.eigenvalues().cwiseMax(0.0);
    const CMatrix& U = es.eigenvectors();
    double d_max = d.maxCoeff();

    PrecoderUpdate out;
    out.W = CMatrix::Zero(M, K);
    CMatrix Crhs(M, K); // rotated right-hand sides
    for (int k = 0; k < K; ++k) {
        CVector b = aux.kappa(k) * aux.t(k) * H_eff.row(k).adjoint();
        Crhs.col(k) = U.adjoint() * b;
    }
    if (d_max <= 0.0 || Crhs.norm() == 0.0) {
        return out; // zero channel or zero equalizers
    }
    // components along numerically null directions carry no objective and are
    // dropped before the power accounting
    for (int j = 0; j < M; ++j) {
        if (d(j) <= 1e-13 * d_max) Crhs.row(j).setZero();
    }

    auto power_at = [&](double lambda) {
        double p = 0.0;
        for (int j = 0; j < M; ++j) {
            double denom = d(j) + lambda;
            if (denom <= 0.0) continue; // null rows already zeroed
            p += Crhs.row(j).squaredNorm() / (denom * denom);
        }
        return p;
    };
    double lambda = bisect_monotone([&](double l) { return power_at(l) - P_T; }, 0.0,
                                    std::max(1e-6, 1e-3 * d_max), 1e-9 * P_T);
    if (lambda > 1.0) {
        // complementary slackness |lambda (power - P_T)| <= 1e-9 P_T needs the
        // power tolerance scaled by the multiplier
        lambda = bisect_monotone([&](double l) { return power_at(l) - P_T; }, 0.0,
                                 2.0 * lambda, 0.5e-9 * P_T / lambda);
    }
    for (int k = 0; k < K; ++k) {
        CVector scaled(M);
        for (int j = 0; j < M; ++j) {
            double denom = d(j) + lambda;
            scaled(j) = (denom > 0.0) ? Crhs(j, k) / denom : cdouble(0.0);
        }
        out.W.col(k) = U * scaled;
    }
    out.lambda = lambda;
    out.power = out.W.squaredNorm();
    return out;
}

CMatrix mrt_precoder(const CMatrix& H_eff, double P_T) {
    const int K = static_cast<int>(H_eff.rows());
    const int M = static_cast<int>(H_eff.cols());
    CMatrix W(M, K);
    for (int k = 0; k < K; ++k) {
        CVector dir = H_eff.row(k).adjoint();
        double norm = dir.norm();
        if (norm <= 0.0) throw std::domain_error("mrt_precoder: zero effective channel");
        W.col(k) = std::sqrt(P_T / K) / norm * dir;
    }
    return W;
}

double solve_split_angle_block(const CMatrix& F, const CMatrix& B, const CMatrix& C,
                               const AuxState& aux, double incumbent_theta) {
    const int K = static_cast<int>(F.rows());

    double Am = 0.0, Bm = 0.0, Cm = 0.0, Dm = 0.0;
    for (int k = 0; k < K; ++k) {
        double kk = aux.kappa(k);
        double t2 = std::norm(aux.t(k));
        double sum_fb = 0.0, sum_ff = 0.0, sum_fc = 0.0, sum_bc = 0.0, sum_bb = 0.0;
        for (int i = 0; i < K; ++i) {
            sum_bb += std::norm(B(k, i));
            sum_ff += std::norm(F(k, i));
            sum_fb += std::real(std::conj(F(k, i)) * B(k, i));
            sum_fc += std::real(std::conj(F(k, i)) * C(k, i));
            sum_bc += std::real(std::conj(B(k, i)) * C(k, i));
        }
        Am += kk * t2 * (sum_bb - sum_ff);
        Bm += 2.0 * kk * t2 * sum_fb;
        Cm += 2.0 * kk * (-t2 * sum_fc + std::real(std::conj(aux.t(k)) * F(k, k)));
        Dm += 2.0 * kk * (t2 * sum_bc - std::real(std::conj(aux.t(k)) * B(k, k)));
    }

    auto f_at = [&](double theta) {
        double c = std::cos(theta), s = std::sin(theta);
        CMatrix T = C + c * F + s * B;
        return block_objective(T, aux);
    };

    // Weierstrass substitution z = tan(theta/2) in [0,1]
    QuarticCoeffs qc;
    qc.c4 = Bm - Dm;
    qc.c3 = -4.0 * Am + 2.0 * Cm;
    qc.c2 = -6.0 * Bm;
    qc.c1 = 4.0 * Am + 2.0 * Cm;
    qc.c0 = Bm + Dm;

    std::vector<double> cand_theta = {0.0, kPi / 2.0, incumbent_theta};
    bool have_interior = false;
    try {
        RootSet rs = solve_quartic(qc);
        for (double z : rs.real_in_unit) {
            cand_theta.push_back(2.0 * std::atan(z));
            have_interior = true;
        }
    } catch (const std::exception&) {
        // fall through to the grid below
    }
    if (!have_interior) {
        // degenerate stationarity condition: dense grid keeps descent guaranteed
        const int n = 4096;
        double best = f_at(0.0), best_theta = 0.0;
        for (int i = 1; i < n; ++i) {
            double th = kPi / 2.0 * i / (n - 1);
            double v = f_at(th);
            if (v < best) {
                best = v;
                best_theta = th;
            }
        }
        cand_theta.push_back(best_theta);
    }

    double best_theta = incumbent_theta;
    double best_f = f_at(incumbent_theta);
    for (double th : cand_theta) {
        double v = f_at(th);
        if (v < best_f) {
            best_f = v;
            best_theta = th;
        }
    }
    return best_theta;
}

OptimizerOptions OptimizerOptions::scheme1() {
    OptimizerOptions o;
    o.update_precoder = false;
    o.update_theta = false;
    o.update_delta = false;
    return o;
}

WmmseOptimizer::WmmseOptimizer(SystemConfig cfg, Layout layout, OptimizerOptions opts)
    : cfg_(std::move(cfg)), layout_(std::move(layout)), opts_(opts) {
    cfg_.validate();
    if (layout_.kind != Architecture::CenterFed) opts_.update_theta = false;
    if (layout_.kind == Architecture::MultiWaveguide) opts_.update_delta = false;
    if (opts_.update_positions && cfg_.Delta >= 0.5 * cfg_.port_spacing()) {
        throw std::invalid_argument(
            "WmmseOptimizer: Delta must stay below half the PA spacing for position updates");
    }
}

Layout WmmseOptimizer::layout_with(const std::vector<double>& pa_x) const {
    Layout lay = layout_;
    if (pa_x.size() != lay.pa_x.size()) {
        throw std::invalid_argument("layout_with: PA count mismatch");
    }
    lay.pa_x = pa_x;
    return lay;
}

ChannelSet WmmseOptimizer::channels(const BeamformerState& state) const {
    return build_channels(layout_with(state.pa_x), state.pinching, cfg_);
}

BeamformerState WmmseOptimizer::initial_state() const {
    BeamformerState st;
    st.pa_x = layout_.pa_x_init;
    st.pinching = PinchingState::even_split(cfg_.M);
    if (layout_.kind != Architecture::CenterFed) {
        st.pinching.theta.assign(cfg_.M, 0.0); // forward-only feeding
    }
    if (layout_.kind == Architecture::MultiWaveguide) {
        st.pinching.delta.assign(cfg_.M + 1, 1.0);
    }
    ChannelSet ch = build_channels(layout_, st.pinching, cfg_);
    st.W = mrt_precoder(ch.H_eff, cfg_.P_T);
    return st;
}

void WmmseOptimizer::update_split_angles(BeamformerState& state, const AuxState& aux) const {
    const int M = cfg_.M;
    Layout lay = layout_with(state.pa_x);
    CMatrix G = build_G(lay, cfg_);
    CMatrix H = build_H(lay, cfg_);
    RadiationMatrices rm = radiation_matrices(state.pinching, M);
    // AF(k,m), AB(k,m): effective forward/backward channel pieces so that
    // h_eff(k,m) = cos(theta_m) AF + sin(theta_m) AB
    CMatrix AF = H * (rm.Sigma_F.cast<cdouble>().cwiseProduct(G)).transpose();
    CMatrix AB = H * (rm.Sigma_B.cast<cdouble>().cwiseProduct(G)).transpose();

    const int K = cfg_.K;
    CMatrix T(K, K);
    {
        CMatrix H_eff(K, M);
        for (int m = 0; m < M; ++m) {
            H_eff.col(m) = std::cos(state.pinching.theta[m]) * AF.col(m) +
                           std::sin(state.pinching.theta[m]) * AB.col(m);
        }
        T = H_eff * state.W;
    }

    for (int sweep = 0; sweep < opts_.theta_sweeps; ++sweep) {
        for (int m = 0; m < M; ++m) {
            CMatrix F = AF.col(m) * state.W.row(m);
            CMatrix B = AB.col(m) * state.W.row(m);
            double c = std::cos(state.pinching.theta[m]);
            double s = std::sin(state.pinching.theta[m]);
            CMatrix C = T - c * F - s * B;
            double theta = solve_split_angle_block(F, B, C, aux, state.pinching.theta[m]);
            state.pinching.theta[m] = theta;
            T = C + std::cos(theta) * F + std::sin(theta) * B;
        }
    }
}

void WmmseOptimizer::update_pa_positions(BeamformerState& state, const AuxState& aux) const {
    if (cfg_.Delta <= 0.0) return;
    Layout lay = layout_with(state.pa_x);
    const int N = lay.num_pas();
    const int M = cfg_.M;

    // x-independent amplitude of each Q entry; only the guided phase/loss and
    // the free-space gain move with the PA
    Eigen::MatrixXd amp = Eigen::MatrixXd::Zero(M, N);
    if (lay.kind == Architecture::MultiWaveguide) {
        for (int m = 0; m < M; ++m) amp(m, m) = 1.0;
    } else {
        RadiationMatrices rm = radiation_matrices(state.pinching, M);
        for (int m = 0; m < M; ++m) {
            double bf = (lay.kind == Architecture::EndFed) ? 1.0 : std::cos(state.pinching.theta[m]);
            double bb = (lay.kind == Architecture::EndFed) ? 0.0 : std::sin(state.pinching.theta[m]);
            for (int n = 0; n < N; ++n) {
                amp(m, n) = (n > m) ? bf * rm.Sigma_F(m, n) : bb * rm.Sigma_B(m, n);
            }
        }
    }

    auto q_column = [&](int n, double x) {
        CVector q = CVector::Zero(M);
        for (int m = 0; m < M; ++m) {
            if (amp(m, n) == 0.0) continue;
            double d = (lay.kind == Architecture::MultiWaveguide)
                           ? x
                           : std::fabs(lay.port_x[m] - x);
            q(m) = amp(m, n) * inwaveguide_gain(d, cfg_);
        }
        return q;
    };
    auto h_column = [&](int n, double x) {
        CVector h(cfg_.K);
        Point2 pa{x, lay.pa_y[n]};
        for (int k = 0; k < cfg_.K; ++k) h(k) = freespace_gain(lay.user_pos[k], pa, cfg_);
        return h;
    };
    auto collides = [&](int n, double x) {
        Point2 pa{x, lay.pa_y[n]};
        for (const auto& u : lay.user_pos) {
            if (distance(u, pa) < 1e-6) return true;
        }
        return false;
    };

    std::vector<CVector> hcols(N), qcols(N);
    CMatrix T = CMatrix::Zero(cfg_.K, cfg_.K);
    for (int n = 0; n < N; ++n) {
        hcols[n] = h_column(n, lay.pa_x[n]);
        qcols[n] = q_column(n, lay.pa_x[n]);
        T += hcols[n] * (qcols[n].transpose() * state.W);
    }

    for (int sweep = 0; sweep < opts_.pa_sweeps; ++sweep) {
        for (int n = 0; n < N; ++n) {
            CMatrix T_base = T - hcols[n] * (qcols[n].transpose() * state.W);
            double best_f = block_objective(T, aux); // incumbent is always a candidate
            double best_x = lay.pa_x[n];
            CVector best_h = hcols[n], best_q = qcols[n];
            double lo = lay.pa_x_init[n] - cfg_.Delta;
            double step = 2.0 * cfg_.Delta / (opts_.n_grid - 1);
            for (int g = 0; g < opts_.n_grid; ++g) {
                double x = lo + g * step;
                if (collides(n, x)) continue;
                CVector h = h_column(n, x);
                CVector q = q_column(n, x);
                CMatrix Tc = T_base + h * (q.transpose() * state.W);
                double f = block_objective(Tc, aux);
                if (f < best_f) {
                    best_f = f;
                    best_x = x;
                    best_h = h;
                    best_q = q;
                }
            }
            lay.pa_x[n] = best_x;
            hcols[n] = best_h;
            qcols[n] = best_q;
            T = T_base + best_h * (best_q.transpose() * state.W);
        }
    }
    state.pa_x = lay.pa_x;
}

double WmmseOptimizer::solve_radiation_angle(const BeamformerState& state, const AuxState& aux,
                                             int p) const {
    const int M = cfg_.M;
    if (p < 1 || p >= M) throw std::invalid_argument("solve_radiation_angle: interior PA expected");
    Layout lay = layout_with(state.pa_x);
    CMatrix G = build_G(lay, cfg_);
    CMatrix H = build_H(lay, cfg_);
    const auto& delta = state.pinching.delta;

    // U(m,n) = beta_hat * g(m,n); the Hadamard factor that does not depend on
    // the radiation angles
    CMatrix U(M, M + 1);
    for (int m = 0; m < M; ++m) {
        double bf = (lay.kind == Architecture::EndFed) ? 1.0 : std::cos(state.pinching.theta[m]);
        double bb = (lay.kind == Architecture::EndFed) ? 0.0 : std::sin(state.pinching.theta[m]);
        for (int n = 0; n <= M; ++n) U(m, n) = ((n > m) ? bf : bb) * G(m, n);
    }

    // Q(phi_p) = Qc + cos(phi_p) Qa + sin(phi_p) Qb
    CMatrix Qc = CMatrix::Zero(M, M + 1);
    CMatrix Qa = CMatrix::Zero(M, M + 1);
    CMatrix Qb = CMatrix::Zero(M, M + 1);
    for (int m = 0; m < M; ++m) {
        for (int n = 0; n <= M; ++n) {
            int path_lo = (n > m) ? m + 1 : n + 1;
            int path_hi = (n > m) ? n - 1 : m; // inclusive
            bool through_p = (p >= path_lo && p <= path_hi);
            double pass = 1.0;
            for (int i = path_lo; i <= path_hi; ++i) {
                if (i == p) continue;
                pass *= (1.0 - delta[i]);
            }
            if (n == p) {
                Qa(m, n) = U(m, n) * std::sqrt(pass);
            } else if (through_p) {
                Qb(m, n) = U(m, n) * std::sqrt(delta[n] * pass);
            } else {
                Qc(m, n) = U(m, n) * std::sqrt(delta[n] * pass);
            }
        }
    }
    CMatrix Tc = (H * Qc.transpose()) * state.W;
    CMatrix Ta = (H * Qa.transpose()) * state.W;
    CMatrix Tb = (H * Qb.transpose()) * state.W;
    auto f_at = [&](double phi) {
        CMatrix T = Tc + std::cos(phi) * Ta + std::sin(phi) * Tb;
        return block_objective(T, aux);
    };

    double incumbent_phi = std::acos(std::clamp(std::sqrt(delta[p]), 0.0, 1.0));
    double best_phi = incumbent_phi;
    double best_f = f_at(incumbent_phi);
    // coarse scan, then Brent in the two most promising brackets
    const int prescan = std::max(opts_.phi_prescan, 4 * (M + 1));
    std::vector<double> fs(prescan);
    double h_step = kPi / 2.0 / (prescan - 1);
    int j1 = 0;
    for (int j = 0; j < prescan; ++j) {
        fs[j] = f_at(j * h_step);
        if (fs[j] < fs[j1]) j1 = j;
    }
    int j2 = -1;
    for (int j = 0; j < prescan; ++j) {
        if (std::abs(j - j1) <= 1) continue;
        if (j2 < 0 || fs[j] < fs[j2]) j2 = j;
    }
    for (int j : {j1, j2}) {
        if (j < 0) continue;
        double lo = std::max(0.0, (j - 1) * h_step);
        double hi = std::min(kPi / 2.0, (j + 1) * h_step);
        BracketSpec spec{lo, hi, opts_.brent_tol, opts_.brent_max_iter};
        BrentResult br = brent_minimize(f_at, spec);
        if (br.f < best_f) {
            best_f = br.f;
            best_phi = br.x;
        }
    }
    for (double phi : {0.0, kPi / 2.0}) {
        double v = f_at(phi);
        if (v < best_f) {
            best_f = v;
            best_phi = phi;
        }
    }
    return best_phi;
}

void WmmseOptimizer::update_radiation_angles(BeamformerState& state, const AuxState& aux) const {
    const int M = cfg_.M;
    if (M < 2 || layout_.kind == Architecture::MultiWaveguide) return;
    for (int sweep = 0; sweep < opts_.phi_sweeps; ++sweep) {
        for (int p = 1; p < M; ++p) {
            double phi = solve_radiation_angle(state, aux, p);
            double cphi = std::cos(phi);
            state.pinching.delta[p] = cphi * cphi;
        }
    }
}

double WmmseOptimizer::solve_split_angle(const BeamformerState& state, const AuxState& aux,
                                         int m) const {
    const int M = cfg_.M;
    if (m < 0 || m >= M) throw std::invalid_argument("solve_split_angle: port index out of range");
    Layout lay = layout_with(state.pa_x);
    CMatrix G = build_G(lay, cfg_);
    CMatrix H = build_H(lay, cfg_);
    RadiationMatrices rm = radiation_matrices(state.pinching, M);
    CMatrix AF = H * (rm.Sigma_F.cast<cdouble>().cwiseProduct(G)).transpose();
    CMatrix AB = H * (rm.Sigma_B.cast<cdouble>().cwiseProduct(G)).transpose();
    CMatrix H_eff(cfg_.K, M);
    for (int j = 0; j < M; ++j) {
        H_eff.col(j) = std::cos(state.pinching.theta[j]) * AF.col(j) +
                       std::sin(state.pinching.theta[j]) * AB.col(j);
    }
    CMatrix T = H_eff * state.W;
    CMatrix F = AF.col(m) * state.W.row(m);
    CMatrix B = AB.col(m) * state.W.row(m);
    CMatrix C = T - std::cos(state.pinching.theta[m]) * F - std::sin(state.pinching.theta[m]) * B;
    return solve_split_angle_block(F, B, C, aux, state.pinching.theta[m]);
}

std::pair<BeamformerState, SolveReport> WmmseOptimizer::optimize() const {
    return optimize(initial_state());
}

std::pair<BeamformerState, SolveReport> WmmseOptimizer::optimize(BeamformerState state) const {
    validate_state(state, cfg_, layout_);
    SolveReport report;
    double prev_rate;
    {
        ChannelSet ch = channels(state);
        prev_rate = sum_rate(ch.H_eff, state.W, cfg_.N0);
    }
    for (int it = 1; it <= opts_.max_iter; ++it) {
        ChannelSet ch = channels(state);
        AuxState aux = update_aux(ch.H_eff, state.W, cfg_.N0);

        if (opts_.update_precoder) {
            PrecoderUpdate pu = update_precoder(ch.H_eff, aux, cfg_.P_T);
            state.W = pu.W;
            report.lambda_trace.push_back(pu.lambda);
            report.power_trace.push_back(pu.power);
        } else {
            state.W = mrt_precoder(ch.H_eff, cfg_.P_T);
            report.lambda_trace.push_back(0.0);
            report.power_trace.push_back(state.W.squaredNorm());
        }
        if (opts_.update_theta) update_split_angles(state, aux);
        if (opts_.update_positions && cfg_.Delta > 0.0) update_pa_positions(state, aux);
        if (opts_.update_delta) update_radiation_angles(state, aux);

        ChannelSet ch_end = channels(state);
        double rate = sum_rate(ch_end.H_eff, state.W, cfg_.N0);
        report.sum_rate_trace.push_back(rate);
        report.objective_trace.push_back(wmmse_objective(ch_end.H_eff, state.W, aux, cfg_.N0));
        report.iterations = it;

        double rel = (rate - prev_rate) / std::max(prev_rate, 1e-300);
        prev_rate = rate;
        if (rel < opts_.eps) {
            report.converged = true;
            break;
        }
    }
    return {std::move(state), std::move(report)};
}

void validate_state(const BeamformerState& state, const SystemConfig& cfg, const Layout& layout) {
    if (state.W.rows() != cfg.M || state.W.cols() != cfg.K) {
        throw std::invalid_argument("BeamformerState.W: dimension mismatch");
    }
    double power = state.W.squaredNorm();
    if (power > cfg.P_T * (1.0 + 1e-9)) {
        throw std::invalid_argument("BeamformerState.W: power budget exceeded");
    }
    state.pinching.validate();
    if (state.pa_x.size() != layout.pa_x_init.size()) {
        throw std::invalid_argument("BeamformerState.pa_x: PA count mismatch");
    }
    for (size_t n = 0; n < state.pa_x.size(); ++n) {
        if (std::fabs(state.pa_x[n] - layout.pa_x_init[n]) > cfg.Delta + 1e-12) {
            throw std::invalid_argument("BeamformerState.pa_x: micro-adjustment range exceeded");
        }
    }
}

} // namespace cpass
