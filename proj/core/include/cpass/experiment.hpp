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
#include <string>
#include <vector>

#include "cpass/geometry.hpp"
#include "cpass/types.hpp"

namespace cpass {

/// Thrown by the spec parser; message carries file:line:column.
class SpecParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A reproducible experiment description: one of the six built-in experiment
/// kinds plus the system configuration and sweep/seed knobs.
struct ExperimentSpec {
    std::string experiment = "convergence";
    SystemConfig cfg;
    double eps = 1e-3;
    int I_max = 100;
    int n_grid = 401;
    double brent_tol = 1e-4;
    int trials = 20;
    std::uint64_t seed_base = 1;
    std::vector<std::uint64_t> seeds; ///< explicit per-trial seeds (optional)
    std::string sweep_key;            ///< optional numeric sweep override
    std::vector<double> sweep;
    std::vector<std::string> archs; ///< optional architecture list override
    std::string out = "results.csv";

    std::uint64_t trial_seed(int trial) const;
    void validate() const;
};

/// Parses the flat key-value experiment grammar (`key = value`, `#` comments,
/// comma-separated lists). Unknown keys and invalid values raise
/// SpecParseError with file:line:column context. Unset fields keep the
/// defaults above.
ExperimentSpec parse_spec(const std::string& text, const std::string& source_name);
ExperimentSpec load_spec(const std::string& path);

/// One output record. Aggregate rows use trial = -1; per-iteration trace rows
/// set iteration >= 0.
struct ResultRow {
    std::string experiment;
    std::string arch;
    std::string variant; ///< ablation scheme tag, empty otherwise
    int M = 0;
    int K = 0;
    double alpha_g = 0.0;
    double P_T_dBm = 0.0;
    std::uint64_t seed = 0;
    int trial = -1;
    int iteration = -1;
    std::string metric;
    double value = 0.0;
    int iterations = 0;
    double wall_time_ms = 0.0;
    std::string error;
};

/// Runs the experiment; trials are independent and may execute on several
/// threads, with rows emitted in a deterministic order regardless of the
/// thread count. Failures are recorded in the error column and do not abort
/// the sweep.
std::vector<ResultRow> run(const ExperimentSpec& spec, int threads = 1);

/// CSV serialization: `#` metadata lines (PRNG name, units), a header row,
/// then one row per record; RFC-4180 quoting, LF endings.
std::string csv_string(const std::vector<ResultRow>& rows);
void write_csv(const std::string& path, const std::vector<ResultRow>& rows);

bool any_error(const std::vector<ResultRow>& rows);

/// Uniform i.i.d. users, re-exported here as the harness-facing operation.
std::vector<Point2> place_users_op(std::uint64_t seed, int K, double area);

} // namespace cpass
