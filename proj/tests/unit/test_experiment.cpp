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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "cpass/csv.hpp"
#include "cpass/experiment.hpp"

using namespace cpass;

TEST_CASE("parse_spec: empty file keeps every default") {
    ExperimentSpec spec = parse_spec("", "empty");
    CHECK(spec.experiment == "convergence");
    CHECK(spec.cfg.M == 4);
    CHECK(spec.cfg.K == 4);
    CHECK(spec.cfg.L == doctest::Approx(100.0));
    CHECK(spec.cfg.f_c == doctest::Approx(77e9));
    CHECK(spec.cfg.n_eff == doctest::Approx(1.44));
    CHECK(spec.cfg.alpha_g == doctest::Approx(0.0092));
    CHECK(spec.cfg.P_T == doctest::Approx(1.0));      // 30 dBm
    CHECK(spec.cfg.N0 == doctest::Approx(1e-12));     // -90 dBm
    CHECK(spec.cfg.Delta == doctest::Approx(0.01));
    CHECK(spec.eps == doctest::Approx(1e-3));
    CHECK(spec.I_max == 100);
    CHECK(spec.trials == 20);
}

TEST_CASE("parse_spec: overrides, comments and lists") {
    const char* text =
        "# high attenuation case\n"
        "experiment = attenuation_sweep\n"
        "alpha_g = 0.2095\n"
        "K = 10\n"
        "P_T_dBm = 20   # comment after value\n"
        "sweep_key = M\n"
        "sweep = 5, 11, 17\n"
        "archs = CenterFed, MultiWaveguide\n"
        "seeds = 1, 2, 3\n";
    ExperimentSpec spec = parse_spec(text, "t");
    CHECK(spec.experiment == "attenuation_sweep");
    CHECK(spec.cfg.alpha_g == doctest::Approx(0.2095));
    CHECK(spec.cfg.K == 10);
    CHECK(spec.cfg.P_T == doctest::Approx(0.1));
    REQUIRE(spec.sweep.size() == 3);
    CHECK(spec.sweep[1] == doctest::Approx(11.0));
    REQUIRE(spec.archs.size() == 2);
    CHECK(spec.archs[1] == "MultiWaveguide");
    CHECK(spec.trial_seed(0) == 1);
    CHECK(spec.trial_seed(2) == 3);
}

TEST_CASE("parse_spec: errors carry location and field names") {
    try {
        parse_spec("trials = -3\n", "bad");
        FAIL("expected throw");
    } catch (const SpecParseError& e) {
        CHECK(std::string(e.what()).find("trials") != std::string::npos);
    }
    try {
        parse_spec("M = four\n", "bad");
        FAIL("expected throw");
    } catch (const SpecParseError& e) {
        std::string msg = e.what();
        CHECK(msg.find("bad:1:") != std::string::npos);
        CHECK(msg.find("M") != std::string::npos);
    }
    try {
        parse_spec("\n\nbogus_key = 3\n", "bad");
        FAIL("expected throw");
    } catch (const SpecParseError& e) {
        std::string msg = e.what();
        CHECK(msg.find("bad:3:") != std::string::npos);
        CHECK(msg.find("bogus_key") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_spec("experiment = nonsense\n", "bad"), SpecParseError);
    CHECK_THROWS_AS(parse_spec("just a line\n", "bad"), SpecParseError);
}

TEST_CASE("place_users_op: deterministic and seed-sensitive") {
    auto a = place_users_op(9, 5, 100.0);
    auto b = place_users_op(9, 5, 100.0);
    auto c = place_users_op(10, 5, 100.0);
    REQUIRE(a.size() == 5);
    for (int i = 0; i < 5; ++i) {
        CHECK(a[i][0] == b[i][0]);
        CHECK(a[i][1] == b[i][1]);
    }
    bool differs = false;
    for (int i = 0; i < 5; ++i) {
        if (a[i][0] != c[i][0]) differs = true;
    }
    CHECK(differs);
}

TEST_CASE("csv escaping follows RFC-4180") {
    CHECK(csv_escape("plain") == "plain");
    CHECK(csv_escape("with,comma") == "\"with,comma\"");
    CHECK(csv_escape("with\"quote") == "\"with\"\"quote\"");
    CHECK(csv_escape("line\nbreak") == "\"line\nbreak\"");
}

namespace {

ExperimentSpec small_convergence_spec() {
    ExperimentSpec spec;
    spec.experiment = "convergence";
    spec.trials = 2;
    spec.I_max = 12;
    spec.sweep_key = "M";
    spec.sweep = {2.0};
    spec.seed_base = 99;
    return spec;
}

// all columns except wall_time_ms
std::string strip_wall_time(const std::string& csv) {
    std::istringstream is(csv);
    std::string line, out;
    while (std::getline(is, line)) {
        if (!line.empty() && (line[0] == '#' || line.rfind("experiment,", 0) == 0)) {
            out += line + "\n";
            continue;
        }
        size_t last = line.rfind(',');
        size_t prev = line.rfind(',', last - 1);
        out += line.substr(0, prev) + line.substr(last) + "\n";
    }
    return out;
}

} // namespace

TEST_CASE("run: convergence traces are nondecreasing and the sweep is covered") {
    ExperimentSpec spec = small_convergence_spec();
    auto rows = run(spec);
    CHECK(!any_error(rows));
    // per (P_T, trial): sum_rate rows form a nondecreasing series
    for (double p : {0.0, 20.0}) {
        for (int trial = 0; trial < spec.trials; ++trial) {
            std::vector<double> series;
            for (const auto& r : rows) {
                if (r.metric == "sum_rate" && r.trial == trial && r.P_T_dBm == p) {
                    series.push_back(r.value);
                }
            }
            REQUIRE(!series.empty());
            for (size_t i = 1; i < series.size(); ++i) {
                CHECK(series[i] >= series[i - 1] * (1.0 - 1e-9));
            }
        }
    }
    // aggregates present for every sweep point
    int aggregates = 0;
    for (const auto& r : rows) {
        if (r.metric == "sum_rate_final_mean") ++aggregates;
    }
    CHECK(aggregates == 2); // two power points
}

TEST_CASE("run: identical spec gives identical rows, wall time aside") {
    ExperimentSpec spec = small_convergence_spec();
    auto a = run(spec, 1);
    auto b = run(spec, 2); // thread count must not matter
    std::string csv_a = strip_wall_time(csv_string(a));
    std::string csv_b = strip_wall_time(csv_string(b));
    CHECK(csv_a == csv_b);
}

TEST_CASE("run: dof sweep emits capacity, slope and rank rows") {
    ExperimentSpec spec;
    spec.experiment = "dof_sweep";
    spec.trials = 1;
    spec.sweep_key = "M";
    spec.sweep = {2.0};
    auto rows = run(spec);
    CHECK(!any_error(rows));
    bool has_capacity = false, has_slope = false, has_rank = false;
    for (const auto& r : rows) {
        if (r.metric == "capacity") has_capacity = true;
        if (r.metric == "slope") {
            has_slope = true;
            CHECK(std::fabs(r.value - 2.0) <= 0.15);
        }
        if (r.metric == "rank") {
            has_rank = true;
            CHECK(r.value == doctest::Approx(2.0));
        }
    }
    CHECK(has_capacity);
    CHECK(has_slope);
    CHECK(has_rank);
}

TEST_CASE("run: power scaling bound dominates the tuned power") {
    ExperimentSpec spec;
    spec.experiment = "power_scaling";
    spec.trials = 1;
    spec.n_grid = 401;
    spec.sweep_key = "M";
    spec.sweep = {2.0, 4.0};
    auto rows = run(spec);
    CHECK(!any_error(rows));
    double p_r = 0.0, p_bar = 0.0;
    for (const auto& r : rows) {
        if (r.M == 4 && r.trial == 0) {
            if (r.metric == "P_R_dBm") p_r = r.value;
            if (r.metric == "P_bar_dBm") p_bar = r.value;
        }
    }
    CHECK(p_r <= p_bar + 1e-3); // nominal-hop amplitude slack, in dB
    CHECK(p_r > p_bar - 3.0);   // tuned power lands near the bound
}

TEST_CASE("run: solver failures land in the error column and the run continues") {
    ExperimentSpec spec;
    spec.experiment = "architecture_compare";
    spec.trials = 2;
    spec.sweep_key = "K";
    spec.sweep = {1.0};
    spec.archs = {"CenterFed"};
    // a micro-adjustment range wider than half the PA spacing is rejected by
    // the optimizer; every trial must surface the failure and keep going
    spec.cfg.L = 0.05;
    spec.cfg.M = 4;
    auto rows = run(spec);
    CHECK(any_error(rows));
    int error_rows = 0;
    for (const auto& r : rows) {
        if (!r.error.empty()) {
            ++error_rows;
            CHECK(r.metric == "error");
            CHECK(r.error.find("Delta") != std::string::npos);
        }
    }
    CHECK(error_rows == 2); // one per trial, none aborted the sweep

    ExperimentSpec bad = spec;
    bad.archs = {"NoSuchThing"};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("run: high attenuation strongly favors the center-fed system") {
    ExperimentSpec spec;
    spec.experiment = "attenuation_sweep";
    spec.cfg.K = 10;
    spec.trials = 1;
    spec.seed_base = 5;
    spec.sweep_key = "M";
    spec.sweep = {17.0};
    auto rows = run(spec);
    CHECK(!any_error(rows));
    double cf = 0.0, mw = 0.0;
    for (const auto& r : rows) {
        if (r.metric != "sum_rate_final" || r.alpha_g != 0.2095) continue;
        if (r.arch == "CenterFed") cf = r.value;
        if (r.arch == "MultiWaveguide") mw = r.value;
    }
    CHECK(cf > 0.0);
    CHECK(mw > 0.0);
    CHECK(cf > mw);
}

TEST_CASE("write_csv emits LF endings and a header") {
    ExperimentSpec spec = small_convergence_spec();
    spec.trials = 1;
    auto rows = run(spec);
    std::string text = csv_string(rows);
    CHECK(text.find("\r\n") == std::string::npos);
    CHECK(text.find("experiment,arch,variant,M,K,") != std::string::npos);
    CHECK(text.find("mt19937_64") != std::string::npos);
}
