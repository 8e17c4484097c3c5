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

#include <Eigen/Dense>

#include "cpass/geometry.hpp"
#include "cpass/pinching.hpp"
#include "cpass/types.hpp"

namespace cpass {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Channel matrices of one instance. For the single-waveguide architectures
/// the PA dimension is M+1; for MultiWaveguide it is M and Q is diagonal.
struct ChannelSet {
    CMatrix G;     ///< M x N_pa in-waveguide gains
    CMatrix H;     ///< K x N_pa free-space gains
    CMatrix Q;     ///< M x N_pa effective in-waveguide channel
    CMatrix H_eff; ///< K x M, H * Q^T
};

/// Guided propagation over distance d: exp(-(alpha_g + j k_g) d).
cdouble inwaveguide_gain(double d, const SystemConfig& cfg);

/// Free-space LoS gain eta * exp(-j k0 d) / d between a user and a PA.
/// Throws std::domain_error when the positions coincide.
cdouble freespace_gain(const Point2& user, const Point2& pa, const SystemConfig& cfg);

CMatrix build_G(const Layout& layout, const SystemConfig& cfg);
CMatrix build_H(const Layout& layout, const SystemConfig& cfg);

/// Effective in-waveguide channel. CenterFed/EndFed:
/// [Q]_{m,n} = sqrt(beta_F xi_F) g(d) for n > m, sqrt(beta_B xi_B) g(d) for
/// n <= m, with d = |port_x[m] - pa_x[n]|. EndFed forces beta_F = 1.
/// MultiWaveguide: diagonal, [Q]_{m,m} = g(pa_x[m]).
CMatrix build_Q(const Layout& layout, const PinchingState& state, const SystemConfig& cfg);

/// H_eff = H * Q^T (exact product, no conjugation).
CMatrix effective_channel(const CMatrix& H, const CMatrix& Q);

ChannelSet build_channels(const Layout& layout, const PinchingState& state,
                          const SystemConfig& cfg);

} // namespace cpass
