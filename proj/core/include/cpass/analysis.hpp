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

#include <cstdint>

#include "cpass/channel.hpp"

namespace cpass {

/// Equal-power-allocation capacity log2 det(I_K + P_T/(M N0) H_eff H_eff^H)
/// in bits/s/Hz, computed on the K x K Gram form.
double capacity(const CMatrix& H_eff, double P_T, int M, double N0);

/// Number of singular values >= rel_threshold * sigma_max.
int numeric_rank(const CMatrix& H_eff, double rel_threshold = 1e-9);

struct DofEstimate {
    double slope = 0.0; ///< capacity-vs-log2(P/N0) slope between the two powers
    int rank = 0;       ///< numeric rank of H_eff
    int M = 0;
    int K = 0;
};

/// Capacity slope between two transmit powers under the symmetric
/// configuration (beta = delta = 1/2 everywhere), plus the numeric rank.
DofEstimate estimate_dof(const SystemConfig& cfg, Architecture kind, double P1, double P2,
                         std::uint64_t user_seed);

/// Received power P_T * ||h^T Q^T||^2 of maximum-ratio transmission for a
/// single user with PA-to-user row h.
double received_power_mrt(const CVector& h, const CMatrix& Q, double P_T);

/// Single-user received power of the symmetric configuration at the given
/// layout (the quantity maximized by PA micro-tuning).
double received_power_layout(const Layout& layout, const SystemConfig& cfg);

/// User-to-PA distances d_n^FR of the first user.
std::vector<double> fr_distances(const Layout& layout);

/// One point of the received-power scaling sweep: micro-tuned power, its
/// analytic upper bound, and the closed-form array factor.
struct PowerScalingPoint {
    int M = 0;
    double P_R = 0.0;        ///< W, after micro-tuning
    double P_bar = 0.0;      ///< W, phase-aligned bound at the tuned distances
    double A_R_closed = 0.0; ///< dimensionless array factor
};

struct PhaseAlignOptions {
    int n_grid = 1001;   ///< candidates per PA sweep over [init - Delta, init + Delta]
    int max_sweeps = 50; ///< coordinate-ascent passes over all PAs
    int restarts = 4;    ///< extra ascents from perturbed starts (best kept)
    std::uint64_t restart_seed = 1;
};

struct PhaseAlignResult {
    Layout layout;
    double p_r_init = 0.0;
    double p_r = 0.0;
    int sweeps = 0;
};

/// Micro-adjusts each PA position within [init - Delta, init + Delta] to maximize
/// the symmetric-configuration received power via per-PA dense grid sweeps.
/// Requires a CenterFed layout with K = 1.
PhaseAlignResult phase_align_positions(const Layout& layout, const SystemConfig& cfg,
                                       const PhaseAlignOptions& opts = {});

/// Phase-aligned upper bound on the received power, evaluated by direct
/// double summation from the user distances d_fr (size M+1).
double received_power_bound(const SystemConfig& cfg, const std::vector<double>& d_fr);

/// Micro-tunes the layout and evaluates P_R against the bound; requires a
/// CenterFed layout with K = 1. P_R <= P_bar * (1 + 1e-9) always.
PowerScalingPoint power_scaling_point(const Layout& layout, const SystemConfig& cfg,
                                      const PhaseAlignOptions& opts = {});

/// Closed form of the normalized array factor A_R with
/// rho = exp(-L alpha_g/(M+1))/sqrt(2).
double a_r_closed_form(int M, double alpha_g, double L);

/// Independent evaluation of A_R by direct double summation.
double a_r_direct_sum(int M, double alpha_g, double L);

} // namespace cpass
