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

namespace cpass::acceptance {

struct Metric {
    std::string criterion;
    std::string name;
    double value = 0.0;
};

struct CriterionResult {
    std::string id;
    std::string name;
    bool pass = false;
    double runtime_s = 0.0;
    double budget_s = 0.0;
    std::string detail;
    std::vector<Metric> metrics;
};

struct VerifyOptions {
    std::uint64_t seed_base = 20260808;
};

/// Runs verification criteria 1-6. Each result carries PASS/FAIL, the
/// measured metrics, and the runtime against its budget.
std::vector<CriterionResult> run_all(const VerifyOptions& opts = {});

CriterionResult c1_dof_slopes(const VerifyOptions& opts);
CriterionResult c2_power_scaling(const VerifyOptions& opts);
CriterionResult c3_solver_oracles(const VerifyOptions& opts);
CriterionResult c4_monotone_descent(const VerifyOptions& opts);
CriterionResult c5_energy_feasibility(const VerifyOptions& opts);
CriterionResult c6_architecture_compare(const VerifyOptions& opts);

bool all_pass(const std::vector<CriterionResult>& results);
std::string summary_line(const CriterionResult& r);

/// Deterministic (criterion, metric, value) CSV; contains no timing columns,
/// so identical seeds yield byte-identical text.
std::string metrics_csv(const std::vector<CriterionResult>& results);

/// Compares two metrics CSVs; true when every metric matches within tol.
bool metrics_equal(const std::string& csv_a, const std::string& csv_b, double tol = 1e-9);

} // namespace cpass::acceptance
