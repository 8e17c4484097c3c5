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

#include <array>
#include <cstdint>
#include <vector>

#include "cpass/types.hpp"

namespace cpass {

using Point2 = std::array<double, 2>; // (x, y) in meters

/// Port, PA and user coordinates for one architecture instance. The waveguide
/// runs along y = 0; multi-waveguide baselines stack waveguides at y = -m.
struct Layout {
    Architecture kind = Architecture::CenterFed;
    std::vector<double> port_x;    ///< M port x-coordinates
    std::vector<double> pa_x;      ///< M+1 PAs (CenterFed/EndFed) or M (MultiWaveguide)
    std::vector<double> pa_y;      ///< same length as pa_x
    std::vector<double> pa_x_init; ///< reference positions for |pa_x - init| <= Delta
    std::vector<Point2> user_pos;  ///< K user coordinates

    int num_ports() const { return static_cast<int>(port_x.size()); }
    int num_pas() const { return static_cast<int>(pa_x.size()); }
    int num_users() const { return static_cast<int>(user_pos.size()); }
    Point2 pa_pos(int n) const { return {pa_x[n], pa_y[n]}; }
};

/// Uniform i.i.d. user positions on [0, area]^2, reproducible for a given
/// seed on any platform (pinned PRNG, see Rng::kAlgorithm).
std::vector<Point2> place_users(std::uint64_t seed, int K, double area);

/// Deterministic layout for the requested architecture:
///  - CenterFed: ports at m*L/(M+1), PAs centered between ports at (n - 1/2)*L/(M+1)
///  - EndFed: all ports at the waveguide start (x = 0), PAs as above
///  - MultiWaveguide: waveguide m at y = -m with one port (x = 0) and one PA
/// Users are drawn from user_seed.
Layout build_layout(const SystemConfig& cfg, Architecture kind, std::uint64_t user_seed);

double distance(const Point2& a, const Point2& b);

} // namespace cpass
