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

#pragma once

#include <utility>
#include <vector>

#include "cpass/channel.hpp"
#include "cpass/rootfind.hpp"

namespace cpass {

/// Joint beamforming variables: precoder, power-split angles, radiation
/// ratios, and PA positions.
struct BeamformerState {
    CMatrix W;              ///< M x K precoder, sum_k ||w_k||^2 <= P_T
    PinchingState pinching; ///< theta (beta split) and delta (radiation)
    std::vector<double> pa_x;
};

/// WMMSE auxiliaries: equalizers t_k and positive weights kappa_k.
struct AuxState {
    CVector t;
    Eigen::VectorXd kappa;
};

struct SolveReport {
    std::vector<double> sum_rate_trace;  ///< nondecreasing, bits/s/Hz
    std::vector<double> objective_trace; ///< full WMMSE objective, nonincreasing
    std::vector<double> lambda_trace;    ///< power multiplier per iteration
    std::vector<double> power_trace;     ///< sum_k ||w_k||^2 per iteration
    int iterations = 0;
    bool converged = false;
};

struct OptimizerOptions {
    double eps = 1e-3;  ///< relative sum-rate increment stopping threshold
    int max_iter = 100;
    int n_grid = 401;       ///< PA position candidates over [init-Delta, init+Delta]
    double brent_tol = 1e-4;
    int brent_max_iter = 200;
    int phi_prescan = 32; ///< coarse-scan points before Brent (at least)
    bool update_precoder = true; ///< false: recompute MRT instead of the WMMSE solve
    bool update_theta = true;
    bool update_positions = true;
    bool update_delta = true;
    int theta_sweeps = 1;
    int pa_sweeps = 1;
    int phi_sweeps = 1;

    /// Scheme 1: PA position micro-tuning only (MRT precoding, beta and delta
    /// pinned at their symmetric values).
    static OptimizerOptions scheme1();
};

/// sum_k log2(1 + |h_k^T Q^T w_k|^2 / (sum_{i != k} |h_k^T Q^T w_i|^2 + N0)),
/// evaluated through the rows of H_eff.
double sum_rate(const CMatrix& H_eff, const CMatrix& W, double N0);

/// Closed-form optimal equalizers and weights for fixed (channel, W).
AuxState update_aux(const CMatrix& H_eff, const CMatrix& W, double N0);

/// Full WMMSE objective sum_k (kappa_k eps_k - ln kappa_k); nonincreasing
/// across the aux update and every block update.
double wmmse_objective(const CMatrix& H_eff, const CMatrix& W, const AuxState& aux, double N0);

struct PrecoderUpdate {
    CMatrix W;
    double lambda = 0.0;
    double power = 0.0;
};

/// Lagrangian precoder update with the power multiplier found by bisection:
/// w_k = (sum_i kappa_i |t_i|^2 r_i^H r_i + lambda I)^{-1} kappa_k t_k r_k^H
/// with complementary slackness |lambda (power - P_T)| <= 1e-9 P_T.
PrecoderUpdate update_precoder(const CMatrix& H_eff, const AuxState& aux, double P_T);

/// Maximum-ratio columns scaled to equal power P_T/K.
CMatrix mrt_precoder(const CMatrix& H_eff, double P_T);

/// One power-split block: the stationarity condition maps to a quartic via
/// the Weierstrass substitution; the minimizer over the candidate roots and
/// the interval boundaries (plus the incumbent) is returned.
double solve_split_angle_block(const CMatrix& F, const CMatrix& B, const CMatrix& C,
                               const AuxState& aux, double incumbent_theta);

/// Alternating WMMSE optimizer for one architecture instance: closed-form
/// aux/precoder updates and BCD over split angles, PA positions, and
/// radiation angles.
class WmmseOptimizer {
  public:
    WmmseOptimizer(SystemConfig cfg, Layout layout, OptimizerOptions opts = {});

    /// Feasible nondegenerate start: even power split, interior delta = 1/2,
    /// initial PA positions, MRT precoder at equal per-user power.
    BeamformerState initial_state() const;

    std::pair<BeamformerState, SolveReport> optimize() const;
    std::pair<BeamformerState, SolveReport> optimize(BeamformerState state) const;

    ChannelSet channels(const BeamformerState& state) const;
    Layout layout_with(const std::vector<double>& pa_x) const;

    // Block updates; each holds the other blocks fixed and never increases
    // the WMMSE objective at fixed aux.
    void update_split_angles(BeamformerState& state, const AuxState& aux) const;
    void update_pa_positions(BeamformerState& state, const AuxState& aux) const;
    void update_radiation_angles(BeamformerState& state, const AuxState& aux) const;

    /// Chosen split angle for port m with everything else fixed (no commit).
    double solve_split_angle(const BeamformerState& state, const AuxState& aux, int m) const;
    /// Chosen radiation angle for interior PA p with everything else fixed
    /// (no commit).
    double solve_radiation_angle(const BeamformerState& state, const AuxState& aux, int p) const;

    const SystemConfig& config() const { return cfg_; }
    const Layout& base_layout() const { return layout_; }
    const OptimizerOptions& options() const { return opts_; }

  private:
    SystemConfig cfg_;
    Layout layout_;
    OptimizerOptions opts_;
};

/// Throws std::invalid_argument when the state violates the power budget,
/// angle ranges, or the micro-adjustment constraint.
void validate_state(const BeamformerState& state, const SystemConfig& cfg, const Layout& layout);

} // namespace cpass
