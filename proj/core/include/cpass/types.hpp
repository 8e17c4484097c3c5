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

#include <cmath>
#include <complex>
#include <string>

namespace cpass {

using cdouble = std::complex<double>;

inline constexpr double kSpeedOfLight = 299792458.0; // m/s
inline constexpr double kPi = 3.14159265358979323846;

inline double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double watt_to_dbm(double watt) { return 10.0 * std::log10(watt) + 30.0; }
inline double to_db(double ratio) { return 10.0 * std::log10(ratio); }
inline double from_db(double db) { return std::pow(10.0, db / 10.0); }

/// Waveguide feeding architectures: the center-fed system under study plus the
/// two conventional baselines.
enum class Architecture { CenterFed, EndFed, MultiWaveguide };

std::string to_string(Architecture kind);
Architecture architecture_from_string(const std::string& name);

/// Physical and budget parameters of the simulated system. Powers are stored
/// in linear watts; dB conversions happen only at I/O boundaries.
struct SystemConfig {
    int M = 4;               ///< number of input ports
    int K = 4;               ///< number of users
    double L = 100.0;        ///< waveguide length (m)
    double f_c = 77e9;       ///< carrier frequency (Hz)
    double n_eff = 1.44;     ///< effective refractive index of the waveguide
    double alpha_g = 0.0092; ///< in-waveguide amplitude attenuation (nepers/m)
    double P_T = 1.0;        ///< transmit power budget (W); 30 dBm default
    double N0 = 1e-12;       ///< noise power (W); -90 dBm default
    double Delta = 0.01;     ///< PA micro-adjustment half-range (m)
    double area = 100.0;     ///< user square side (m)

    double lambda0() const { return kSpeedOfLight / f_c; }
    double k0() const { return 2.0 * kPi / lambda0(); }
    double kg() const { return n_eff * k0(); }
    double eta() const { return lambda0() / (4.0 * kPi); }
    double port_spacing() const { return L / (M + 1); }

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;
};

} // namespace cpass
