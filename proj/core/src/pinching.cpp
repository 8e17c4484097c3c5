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

#include "cpass/pinching.hpp"

#include <cmath>
#include <stdexcept>

namespace cpass {

PinchingState PinchingState::from_angles(const std::vector<double>& theta,
                                         const std::vector<double>& phi_interior) {
    const int M = static_cast<int>(theta.size());
    if (static_cast<int>(phi_interior.size()) != std::max(0, M - 1)) {
        throw std::invalid_argument("PinchingState: expected M-1 interior radiation angles");
    }
    PinchingState s;
    s.theta = theta;
    s.delta.assign(M + 1, 1.0);
    for (int n = 1; n < M; ++n) {
        double c = std::cos(phi_interior[n - 1]);
        s.delta[n] = c * c;
    }
    s.validate();
    return s;
}

PinchingState PinchingState::symmetric(int M) {
    PinchingState s;
    s.theta.assign(M, kPi / 4.0);
    s.delta.assign(M + 1, 0.5);
    return s;
}

PinchingState PinchingState::even_split(int M) {
    PinchingState s;
    s.theta.assign(M, kPi / 4.0);
    s.delta.assign(M + 1, 0.5);
    s.delta.front() = 1.0;
    s.delta.back() = 1.0;
    return s;
}

std::vector<double> PinchingState::phi_interior() const {
    std::vector<double> phi;
    for (int n = 1; n + 1 < static_cast<int>(delta.size()); ++n) {
        phi.push_back(std::acos(std::sqrt(delta[n])));
    }
    return phi;
}

void PinchingState::validate() const {
    if (delta.size() != theta.size() + 1) {
        throw std::invalid_argument("PinchingState: delta must have M+1 entries");
    }
    for (double th : theta) {
        if (!(th >= -1e-12 && th <= kPi / 2.0 + 1e-12)) {
            throw std::invalid_argument("PinchingState.theta: outside [0, pi/2]");
        }
    }
    for (double d : delta) {
        if (!(d >= -1e-12 && d <= 1.0 + 1e-12)) {
            throw std::invalid_argument("PinchingState.delta: outside [0, 1]");
        }
    }
}

RadiationMatrices radiation_matrices(const PinchingState& state, int M) {
    if (state.num_ports() != M) throw std::invalid_argument("radiation_matrices: M mismatch");
    state.validate();
    const auto& d = state.delta;
    RadiationMatrices rm;
    rm.Sigma_F = Eigen::MatrixXd::Zero(M, M + 1);
    rm.Sigma_B = Eigen::MatrixXd::Zero(M, M + 1);
    for (int m = 0; m < M; ++m) {
        double pass = 1.0; // running prod of (1 - delta) along the path
        for (int n = m + 1; n <= M; ++n) {
            rm.Sigma_F(m, n) = std::sqrt(d[n] * pass);
            pass *= (1.0 - d[n]);
        }
        pass = 1.0;
        for (int n = m; n >= 0; --n) {
            rm.Sigma_B(m, n) = std::sqrt(d[n] * pass);
            pass *= (1.0 - d[n]);
        }
    }
    return rm;
}

double general_radiation_coeff(const std::vector<std::vector<double>>& deltas, int port_m,
                               int target_region, int target_idx, Direction dir) {
    const int num_regions = static_cast<int>(deltas.size());
    const int num_ports = num_regions - 1;
    if (num_regions < 2) throw std::invalid_argument("general_radiation_coeff: need >= 2 regions");
    if (port_m < 0 || port_m >= num_ports) {
        throw std::invalid_argument("general_radiation_coeff: port index out of range");
    }
    if (target_region < 0 || target_region >= num_regions ||
        target_idx < 0 || target_idx >= static_cast<int>(deltas[target_region].size())) {
        throw std::invalid_argument("general_radiation_coeff: target out of range");
    }
    for (const auto& region : deltas) {
        for (double dv : region) {
            if (!(dv >= 0.0 && dv <= 1.0)) {
                throw std::invalid_argument("general_radiation_coeff: delta outside [0, 1]");
            }
        }
    }
    // port m sits between region m and region m+1
    if (dir == Direction::Forward && target_region <= port_m) {
        throw std::invalid_argument("general_radiation_coeff: forward target behind the port");
    }
    if (dir == Direction::Backward && target_region > port_m) {
        throw std::invalid_argument("general_radiation_coeff: backward target ahead of the port");
    }

    double xi = deltas[target_region][target_idx];
    if (dir == Direction::Forward) {
        for (int r = port_m + 1; r < target_region; ++r) {
            for (double dv : deltas[r]) xi *= (1.0 - dv);
        }
        for (int j = 0; j < target_idx; ++j) xi *= (1.0 - deltas[target_region][j]);
    } else {
        for (int r = target_region + 1; r <= port_m; ++r) {
            for (double dv : deltas[r]) xi *= (1.0 - dv);
        }
        const auto& region = deltas[target_region];
        for (int j = target_idx + 1; j < static_cast<int>(region.size()); ++j) {
            xi *= (1.0 - region[j]);
        }
    }
    return xi;
}

} // namespace cpass
