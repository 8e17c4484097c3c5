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

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "cpass/rng.hpp"
#include "cpass/rootfind.hpp"

using namespace cpass;

namespace {

// companion-matrix eigenvalue oracle, independent of the Ferrari expressions
std::vector<cdouble> companion_oracle(const QuarticCoeffs& c) {
    Eigen::Matrix4cd A = Eigen::Matrix4cd::Zero();
    A(0, 3) = -c.c0 / c.c4;
    A(1, 3) = -c.c1 / c.c4;
    A(2, 3) = -c.c2 / c.c4;
    A(3, 3) = -c.c3 / c.c4;
    for (int i = 1; i < 4; ++i) A(i, i - 1) = 1.0;
    Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(A);
    std::vector<cdouble> roots;
    for (int i = 0; i < 4; ++i) roots.push_back(es.eigenvalues()(i));
    return roots;
}

std::vector<double> sorted_real_roots(const std::vector<cdouble>& roots) {
    std::vector<double> out;
    for (cdouble z : roots) {
        if (std::fabs(z.imag()) <= 1e-8 * (1.0 + std::abs(z))) out.push_back(z.real());
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool contains_root(const RootSet& rs, cdouble target, double tol = 1e-7) {
    for (cdouble z : rs.roots) {
        if (std::abs(z - target) <= tol) return true;
    }
    return false;
}

} // namespace

TEST_CASE("quartic: z^4 = 1") {
    RootSet rs = solve_quartic({1, 0, 0, 0, -1});
    REQUIRE(rs.roots.size() == 4);
    CHECK(contains_root(rs, {1, 0}));
    CHECK(contains_root(rs, {-1, 0}));
    CHECK(contains_root(rs, {0, 1}));
    CHECK(contains_root(rs, {0, -1}));
    // the in-unit filter keeps only z = 1
    REQUIRE(rs.real_in_unit.size() == 1);
    CHECK(rs.real_in_unit[0] == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("quartic: (z-1)(z+2)(z-3)(z+4)") {
    // expansion: z^4 + 2 z^3 - 13 z^2 - 14 z + 24
    QuarticCoeffs c{1, 2, -13, -14, 24};
    RootSet rs = solve_quartic(c);
    for (double r : {1.0, -2.0, 3.0, -4.0}) CHECK(contains_root(rs, {r, 0}, 1e-6));
    std::vector<double> mine = sorted_real_roots(rs.roots);
    std::vector<double> oracle = sorted_real_roots(companion_oracle(c));
    REQUIRE(mine.size() == oracle.size());
    for (size_t i = 0; i < mine.size(); ++i) {
        CHECK(mine[i] == doctest::Approx(oracle[i]).epsilon(1e-6));
    }
}

TEST_CASE("quartic: cubic fallback z^3 = 8") {
    RootSet rs = solve_quartic({0, 1, 0, 0, -8});
    REQUIRE(rs.roots.size() == 3);
    CHECK(contains_root(rs, {2, 0}));
    CHECK(contains_root(rs, {-1.0, std::sqrt(3.0)}));
    CHECK(contains_root(rs, {-1.0, -std::sqrt(3.0)}));
}

TEST_CASE("quartic: quadratic and linear fallbacks") {
    RootSet quad = solve_quartic({0, 0, 1, -3, 2});
    REQUIRE(quad.roots.size() == 2);
    CHECK(contains_root(quad, {1, 0}));
    CHECK(contains_root(quad, {2, 0}));
    RootSet lin = solve_quartic({0, 0, 0, 2, -1});
    REQUIRE(lin.roots.size() == 1);
    CHECK(lin.real_in_unit.size() == 1);
    CHECK(lin.real_in_unit[0] == doctest::Approx(0.5));
}

TEST_CASE("quartic: degenerate and invalid inputs") {
    CHECK_THROWS_AS(solve_quartic({0, 0, 0, 0, 0}), std::domain_error);
    CHECK_THROWS_AS(solve_quartic({std::nan(""), 0, 0, 0, 1}), std::invalid_argument);
    // nonzero constant: no roots
    CHECK(solve_quartic({0, 0, 0, 0, 3}).roots.empty());
}

TEST_CASE("quartic: repeated and clustered roots") {
    // (z^2 - 1)^2
    RootSet rs = solve_quartic({1, 0, -2, 0, 1});
    QuarticCoeffs c{1, 0, -2, 0, 1};
    for (cdouble z : rs.roots) CHECK(quartic_residual(c, z) <= 1e-8 * c.scale());
    // z^4 (quadruple root at 0)
    RootSet rz = solve_quartic({1, 0, 0, 0, 0});
    for (cdouble z : rz.roots) CHECK(std::abs(z) <= 1e-4);
    CHECK(rz.real_in_unit.size() == 4);
}

TEST_CASE("quartic: residual and companion agreement over 1000 random draws") {
    // |c4| is kept away from zero: a quartic with |c4| << max|c_i| has a root
    // of magnitude ~ max|c_i|/|c4| whose residual in double precision bottoms
    // out at eps * max|c_i| * |z|^3, above the 1e-8 contract for any solver.
    Rng rng(123456);
    int checked = 0;
    for (int it = 0; it < 1000; ++it) {
        double lead = rng.uniform(0.5, 10.0) * (rng.uniform() < 0.5 ? -1.0 : 1.0);
        QuarticCoeffs c{lead, rng.uniform(-10, 10), rng.uniform(-10, 10),
                        rng.uniform(-10, 10), rng.uniform(-10, 10)};
        RootSet rs = solve_quartic(c);
        REQUIRE(rs.roots.size() == 4);
        for (cdouble z : rs.roots) {
            REQUIRE(quartic_residual(c, z) <= 1e-8 * c.scale());
        }
        std::vector<double> mine = sorted_real_roots(rs.roots);
        std::vector<double> oracle = sorted_real_roots(companion_oracle(c));
        REQUIRE(mine.size() == oracle.size());
        for (size_t i = 0; i < mine.size(); ++i) {
            REQUIRE(std::fabs(mine[i] - oracle[i]) <= 1e-6);
        }
        ++checked;
    }
    CHECK(checked > 990);
}

TEST_CASE("brent: quadratic bowl") {
    auto f = [](double x) { return (x - 0.3) * (x - 0.3); };
    BrentResult r = brent_minimize(f, {0.0, kPi / 2.0, 1e-6, 100});
    CHECK(std::fabs(r.x - 0.3) <= 1e-6);
}

TEST_CASE("brent: monotone objective ends at the boundary") {
    BrentResult r = brent_minimize([](double x) { return std::cos(x); }, {0.0, kPi / 2.0, 1e-6, 100});
    CHECK(std::fabs(r.x - kPi / 2.0) <= 1e-6);
    CHECK(r.f == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("brent: sin(3x) picks the global boundary minimum") {
    auto f = [](double x) { return std::sin(3.0 * x); };
    BrentResult r = brent_minimize(f, {0.0, kPi / 2.0, 1e-6, 100});
    // dense grid oracle
    double best_x = 0.0, best_f = f(0.0);
    const int n = 100000;
    for (int i = 1; i < n; ++i) {
        double x = kPi / 2.0 * i / (n - 1);
        if (f(x) < best_f) {
            best_f = f(x);
            best_x = x;
        }
    }
    CHECK(std::fabs(r.x - best_x) <= 1e-5);
    CHECK(std::fabs(r.x - kPi / 2.0) <= 1e-6);
}

TEST_CASE("brent: endpoint dominance on random wiggly objectives") {
    Rng rng(99);
    for (int it = 0; it < 200; ++it) {
        double a = rng.uniform(-2, 2), b = rng.uniform(-2, 2), w = rng.uniform(1, 9);
        auto f = [&](double x) { return a * std::sin(w * x) + b * x * x + std::cos(3.0 * w * x); };
        BrentResult r = brent_minimize(f, {0.0, 1.5, 1e-5, 200});
        CHECK(r.f <= std::min(f(0.0), f(1.5)) + 1e-12);
        CHECK(r.x >= 0.0);
        CHECK(r.x <= 1.5);
    }
}

TEST_CASE("brent: iteration cap raises with best iterate attached") {
    auto f = [](double x) { return (x - 0.421) * (x - 0.421); };
    try {
        brent_minimize(f, {0.0, 1.0, 1e-15, 3});
        FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
        CHECK(e.best_x() >= 0.0);
        CHECK(e.best_x() <= 1.0);
        CHECK(e.best_f() >= 0.0);
    }
}

TEST_CASE("brent: invalid bracket") {
    auto f = [](double x) { return x; };
    CHECK_THROWS_AS(brent_minimize(f, {1.0, 0.0, 1e-6, 50}), std::invalid_argument);
    CHECK_THROWS_AS(brent_minimize(f, {0.0, 1.0, 0.0, 50}), std::invalid_argument);
}

TEST_CASE("bisect: linear root") {
    double x = bisect_monotone([](double l) { return 1.0 - l; }, 0.0, 10.0, 1e-9);
    CHECK(std::fabs(x - 1.0) <= 1e-8);
}

TEST_CASE("bisect: slack constraint returns lo") {
    double x = bisect_monotone([](double l) { return -l; }, 0.0, 10.0, 1e-9);
    CHECK(x == 0.0);
}

TEST_CASE("bisect: bracket expansion and failure") {
    // root far beyond the initial hi
    double x = bisect_monotone([](double l) { return 1000.0 - l; }, 0.0, 1.0, 1e-9);
    CHECK(std::fabs(x - 1000.0) <= 1e-6);
    CHECK_THROWS_AS(bisect_monotone([](double) { return 1.0; }, 0.0, 1.0, 1e-9, 10),
                    BracketingError);
}

TEST_CASE("bisect: WMMSE-style power equation matches a dense scan") {
    // power(lambda) = sum_j c_j^2/(d_j+lambda)^2 monotone decreasing
    const double d[4] = {0.1, 0.5, 1.0, 2.5};
    const double c[4] = {1.2, 0.8, 2.0, 0.5};
    const double P_T = 1.0;
    auto power = [&](double l) {
        double p = 0.0;
        for (int j = 0; j < 4; ++j) p += c[j] * c[j] / ((d[j] + l) * (d[j] + l));
        return p;
    };
    double lam = bisect_monotone([&](double l) { return power(l) - P_T; }, 0.0, 1.0, 1e-9 * P_T);
    CHECK(std::fabs(power(lam) - P_T) <= 1e-9 * P_T);
    // dense scan oracle
    double best = 0.0, best_err = 1e300;
    for (int i = 0; i <= 2000000; ++i) {
        double l = i * 1e-5 * 3.0;
        double err = std::fabs(power(l) - P_T);
        if (err < best_err) {
            best_err = err;
            best = l;
        }
    }
    CHECK(std::fabs(lam - best) <= 2e-5 * (1.0 + best));
}
