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

#include "cpass/geometry.hpp"

#include <cmath>
#include <stdexcept>

#include "cpass/rng.hpp"

namespace cpass {

std::string to_string(Architecture kind) {
    switch (kind) {
    case Architecture::CenterFed: return "CenterFed";
    case Architecture::EndFed: return "EndFed";
    case Architecture::MultiWaveguide: return "MultiWaveguide";
    }
    return "?";
}

Architecture architecture_from_string(const std::string& name) {
    if (name == "CenterFed") return Architecture::CenterFed;
    if (name == "EndFed") return Architecture::EndFed;
    if (name == "MultiWaveguide") return Architecture::MultiWaveguide;
    throw std::invalid_argument("unknown architecture: " + name);
}

void SystemConfig::validate() const {
    if (M < 1) throw std::invalid_argument("SystemConfig.M: must be >= 1");
    if (K < 1) throw std::invalid_argument("SystemConfig.K: must be >= 1");
    if (!(L > 0.0)) throw std::invalid_argument("SystemConfig.L: must be > 0");
    if (!(f_c > 0.0)) throw std::invalid_argument("SystemConfig.f_c: must be > 0");
    if (!(n_eff > 0.0)) throw std::invalid_argument("SystemConfig.n_eff: must be > 0");
    if (alpha_g < 0.0) throw std::invalid_argument("SystemConfig.alpha_g: must be >= 0");
    if (!(P_T > 0.0)) throw std::invalid_argument("SystemConfig.P_T: must be > 0");
    if (!(N0 > 0.0)) throw std::invalid_argument("SystemConfig.N0: must be > 0");
    if (Delta < 0.0) throw std::invalid_argument("SystemConfig.Delta: must be >= 0");
    if (!(area > 0.0)) throw std::invalid_argument("SystemConfig.area: must be > 0");
}

double distance(const Point2& a, const Point2& b) {
    return std::hypot(a[0] - b[0], a[1] - b[1]);
}

std::vector<Point2> place_users(std::uint64_t seed, int K, double area) {
    if (K < 1) throw std::invalid_argument("place_users: K must be >= 1");
    if (!(area > 0.0)) throw std::invalid_argument("place_users: area must be > 0");
    Rng rng(seed);
    std::vector<Point2> users(K);
    for (auto& u : users) {
        u[0] = area * rng.uniform();
        u[1] = area * rng.uniform();
    }
    return users;
}

Layout build_layout(const SystemConfig& cfg, Architecture kind, std::uint64_t user_seed) {
    cfg.validate();
    const double u = cfg.port_spacing();
    Layout layout;
    layout.kind = kind;
    layout.user_pos = place_users(user_seed, cfg.K, cfg.area);

    switch (kind) {
    case Architecture::CenterFed:
    case Architecture::EndFed:
        layout.port_x.resize(cfg.M);
        for (int m = 0; m < cfg.M; ++m) {
            layout.port_x[m] = (kind == Architecture::CenterFed) ? (m + 1) * u : 0.0;
        }
        layout.pa_x_init.resize(cfg.M + 1);
        for (int n = 0; n <= cfg.M; ++n) layout.pa_x_init[n] = (n + 0.5) * u;
        layout.pa_x = layout.pa_x_init;
        layout.pa_y.assign(cfg.M + 1, 0.0);
        break;
    case Architecture::MultiWaveguide:
        // one waveguide per port, stacked at 1 m spacing
        layout.port_x.assign(cfg.M, 0.0);
        layout.pa_x_init.resize(cfg.M);
        layout.pa_y.resize(cfg.M);
        for (int m = 0; m < cfg.M; ++m) {
            layout.pa_x_init[m] = (m + 0.5) * u;
            layout.pa_y[m] = -static_cast<double>(m);
        }
        layout.pa_x = layout.pa_x_init;
        break;
    default:
        throw std::invalid_argument("build_layout: unknown architecture kind");
    }
    return layout;
}

} // namespace cpass
