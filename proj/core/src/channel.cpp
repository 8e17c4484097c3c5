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

#include "cpass/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace cpass {

cdouble inwaveguide_gain(double d, const SystemConfig& cfg) {
    if (d < 0.0) throw std::invalid_argument("inwaveguide_gain: negative distance");
    return std::exp(cdouble(-cfg.alpha_g * d, -cfg.kg() * d));
}

cdouble freespace_gain(const Point2& user, const Point2& pa, const SystemConfig& cfg) {
    double d = distance(user, pa);
    if (d <= 0.0) throw std::domain_error("freespace_gain: user collocated with a PA");
    return cfg.eta() / d * std::exp(cdouble(0.0, -cfg.k0() * d));
}

CMatrix build_G(const Layout& layout, const SystemConfig& cfg) {
    const int M = layout.num_ports();
    const int N = layout.num_pas();
    CMatrix G = CMatrix::Zero(M, N);
    if (layout.kind == Architecture::MultiWaveguide) {
        for (int m = 0; m < M; ++m) G(m, m) = inwaveguide_gain(layout.pa_x[m], cfg);
        return G;
    }
    for (int m = 0; m < M; ++m) {
        for (int n = 0; n < N; ++n) {
            G(m, n) = inwaveguide_gain(std::fabs(layout.port_x[m] - layout.pa_x[n]), cfg);
        }
    }
    return G;
}

CMatrix build_H(const Layout& layout, const SystemConfig& cfg) {
    const int K = layout.num_users();
    const int N = layout.num_pas();
    CMatrix H(K, N);
    for (int k = 0; k < K; ++k) {
        for (int n = 0; n < N; ++n) {
            H(k, n) = freespace_gain(layout.user_pos[k], layout.pa_pos(n), cfg);
        }
    }
    return H;
}

CMatrix build_Q(const Layout& layout, const PinchingState& state, const SystemConfig& cfg) {
    const int M = layout.num_ports();
    if (layout.kind == Architecture::MultiWaveguide) {
        return build_G(layout, cfg); // beta_F = 1, delta = 1, one PA per waveguide
    }
    if (state.num_ports() != M || static_cast<int>(state.delta.size()) != layout.num_pas()) {
        throw std::invalid_argument("build_Q: state dimensions do not match layout");
    }
    RadiationMatrices rm = radiation_matrices(state, M);
    CMatrix Q = CMatrix::Zero(M, M + 1);
    for (int m = 0; m < M; ++m) {
        // EndFed feeds in one direction only
        double bf = (layout.kind == Architecture::EndFed) ? 1.0 : std::cos(state.theta[m]);
        double bb = (layout.kind == Architecture::EndFed) ? 0.0 : std::sin(state.theta[m]);
        for (int n = 0; n <= M; ++n) {
            double amp = (n > m) ? bf * rm.Sigma_F(m, n) : bb * rm.Sigma_B(m, n);
            if (amp == 0.0) continue;
            Q(m, n) = amp * inwaveguide_gain(std::fabs(layout.port_x[m] - layout.pa_x[n]), cfg);
        }
    }
    return Q;
}

CMatrix effective_channel(const CMatrix& H, const CMatrix& Q) {
    if (H.cols() != Q.cols()) throw std::invalid_argument("effective_channel: dimension mismatch");
    return H * Q.transpose();
}

ChannelSet build_channels(const Layout& layout, const PinchingState& state,
                          const SystemConfig& cfg) {
    ChannelSet ch;
    ch.G = build_G(layout, cfg);
    ch.H = build_H(layout, cfg);
    ch.Q = (layout.kind == Architecture::MultiWaveguide) ? ch.G : build_Q(layout, state, cfg);
    ch.H_eff = effective_channel(ch.H, ch.Q);
    return ch;
}

} // namespace cpass
