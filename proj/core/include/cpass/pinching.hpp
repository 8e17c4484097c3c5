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
#include <vector>

#include "cpass/types.hpp"

namespace cpass {

/// Power-splitting and radiation configuration of a single waveguide:
/// per-port split angles theta (beta_F = cos^2, beta_B = sin^2) and per-PA
/// radiation ratios delta. The optimizer keeps endpoint deltas fixed at 1;
/// the analysis configuration overrides them to 1/2.
struct PinchingState {
    std::vector<double> theta; ///< M split angles in [0, pi/2]
    std::vector<double> delta; ///< M+1 radiation ratios in [0, 1]

    /// theta per port, phi per interior PA (delta_n = cos^2 phi_n), endpoints
    /// fixed at delta = 1.
    static PinchingState from_angles(const std::vector<double>& theta,
                                     const std::vector<double>& phi_interior);

    /// The analysis configuration: beta_F = beta_B = 1/2 and delta = 1/2 for
    /// every PA including the endpoints.
    static PinchingState symmetric(int M);

    /// Even split, interior delta = 1/2, endpoints 1 (optimizer start).
    static PinchingState even_split(int M);

    int num_ports() const { return static_cast<int>(theta.size()); }
    double beta_f(int m) const { return std::cos(theta[m]) * std::cos(theta[m]); }
    double beta_b(int m) const { return std::sin(theta[m]) * std::sin(theta[m]); }
    /// Interior angles phi_n = acos(sqrt(delta_n)), n = 1..M-1 (0-based PA index).
    std::vector<double> phi_interior() const;

    void validate() const;
};

/// sqrt(xi) entries of the forward/backward radiation matrices, M x (M+1).
/// Sigma_F is supported on n > m, Sigma_B on n <= m.
struct RadiationMatrices {
    Eigen::MatrixXd Sigma_F;
    Eigen::MatrixXd Sigma_B;
};

/// Cumulative radiation coefficients for one PA per region:
/// xi_B(m,n) = delta_n * prod_{i=n+1..m} (1-delta_i),
/// xi_F(m,n) = delta_n * prod_{j=m+1..n-1} (1-delta_j); entries are sqrt(xi).
RadiationMatrices radiation_matrices(const PinchingState& state, int M);

enum class Direction { Forward, Backward };

/// General radiation coefficient with several PAs per region. deltas[r][j] is
/// the ratio of PA j in region r (regions 0..M, ports 0..M-1; port m lies
/// between regions m and m+1). Returns the xi power ratio from port m to PA
/// target_idx in region target_region. Reduces to the one-PA-per-region
/// matrices when every region holds a single PA.
double general_radiation_coeff(const std::vector<std::vector<double>>& deltas, int port_m,
                               int target_region, int target_idx, Direction dir);

} // namespace cpass
