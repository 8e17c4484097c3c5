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

#include "cpass/rootfind.hpp"

#include <algorithm>
#include <array>

namespace cpass {

namespace {

constexpr double kDegeneracyRel = 1e-12; // |c4| below this * scale -> lower degree
constexpr double kResidualRel = 1e-8;    // contract on |p(z)|
constexpr double kImagFilterRel = 1e-8;  // imaginary-part filter for real roots

using cd = cdouble;

cd eval_poly(const QuarticCoeffs& c, cd z) {
    return (((cd(c.c4) * z + c.c3) * z + c.c2) * z + c.c1) * z + c.c0;
}

cd eval_dpoly(const QuarticCoeffs& c, cd z) {
    return ((cd(4.0 * c.c4) * z + 3.0 * c.c3) * z + 2.0 * c.c2) * z + c.c1;
}

void polish(const QuarticCoeffs& c, cd& z) {
    cd best = z;
    double best_res = std::abs(eval_poly(c, z));
    cd cur = z;
    for (int i = 0; i < 8; ++i) {
        cd d = eval_dpoly(c, cur);
        if (std::abs(d) < 1e-300) break;
        cur -= eval_poly(c, cur) / d;
        double res = std::abs(eval_poly(c, cur));
        if (res < best_res) {
            best_res = res;
            best = cur;
        } else {
            break;
        }
    }
    z = best;
}

std::vector<cd> solve_quadratic_c(cd b, cd c) {
    // z^2 + b z + c = 0, Kahan-style to avoid cancellation
    cd s = std::sqrt(b * b - 4.0 * c);
    if (std::real(std::conj(b) * s) < 0.0) s = -s;
    cd t = -0.5 * (b + s);
    if (std::abs(t) < 1e-300) return {cd(0.0), -b};
    return {t, c / t};
}

std::vector<cd> solve_cubic_c(double a2, double a1, double a0) {
    // monic z^3 + a2 z^2 + a1 z + a0, Cardano with complex branches
    const cd omega(-0.5, 0.86602540378443864676);
    double p = a1 - a2 * a2 / 3.0;
    double q = 2.0 * a2 * a2 * a2 / 27.0 - a2 * a1 / 3.0 + a0;
    double shift = -a2 / 3.0;
    cd disc = cd(q * q / 4.0 + p * p * p / 27.0);
    cd s = std::sqrt(disc);
    cd base = cd(-q / 2.0) + s;
    if (std::abs(cd(-q / 2.0) - s) > std::abs(base)) base = cd(-q / 2.0) - s;
    if (std::abs(base) < 1e-300) {
        // p = q = 0 up to roundoff: triple root
        cd r = std::pow(cd(-q), 1.0 / 3.0);
        return {r + shift, r * omega + shift, r * omega * omega + shift};
    }
    cd u = std::pow(base, 1.0 / 3.0);
    cd v = cd(-p / 3.0) / u;
    return {u + v + shift, u * omega + v * omega * omega + shift,
            u * omega * omega + v * omega + shift};
}

// Classical route: resolvent cubic + two quadratics, complex-safe. Used when
// the direct Ferrari expressions degenerate (S ~ 0 with q != 0).
std::vector<cd> quartic_resolvent_route(double a, double b, double c, double d) {
    // monic z^4 + a z^3 + b z^2 + c z + d
    std::vector<cd> us = solve_cubic_c(-b, a * c - 4.0 * d, -(a * a * d - 4.0 * b * d + c * c));
    // pick the resolvent root giving the best-conditioned square completion
    cd u_best = us[0];
    double mag_best = -1.0;
    for (cd u : us) {
        double m = std::abs(cd(a * a / 4.0 - b) + u);
        if (m > mag_best) {
            mag_best = m;
            u_best = u;
        }
    }
    cd u = u_best;
    cd alpha = std::sqrt(cd(a * a / 4.0 - b) + u);
    cd beta;
    if (std::abs(alpha) > 1e-150) {
        beta = (cd(a) * u / 2.0 - c) / (2.0 * alpha);
    } else {
        beta = std::sqrt(u * u / 4.0 - d);
    }
    std::vector<cd> roots = solve_quadratic_c(cd(a / 2.0) - alpha, u / 2.0 - beta);
    std::vector<cd> second = solve_quadratic_c(cd(a / 2.0) + alpha, u / 2.0 + beta);
    roots.insert(roots.end(), second.begin(), second.end());
    return roots;
}

// Direct Ferrari expressions. The cube root has three complex branches; the
// one maximizing |S| avoids the spurious S = 0 branch (e.g. z^4 - 1).
std::vector<cd> quartic_ferrari(const QuarticCoeffs& cf) {
    const cd omega(-0.5, 0.86602540378443864676);
    double c4 = cf.c4, c3 = cf.c3, c2 = cf.c2, c1 = cf.c1, c0 = cf.c0;
    double a = c3 / c4;
    double p = (8.0 * c4 * c2 - 3.0 * c3 * c3) / (8.0 * c4 * c4);
    double q = (c3 * c3 * c3 - 4.0 * c4 * c3 * c2 + 8.0 * c4 * c4 * c1) / (8.0 * c4 * c4 * c4);
    double r = c0 / c4 - a * (c1 / c4) / 4.0 + a * a * (c2 / c4) / 16.0 - 3.0 * a * a * a * a / 256.0;
    cd shift(-a / 4.0);

    double depressed_scale = std::max({1.0, std::fabs(p), std::fabs(r)});
    if (std::fabs(q) <= 1e-14 * depressed_scale) {
        // biquadratic: y^4 + p y^2 + r = 0
        std::vector<cd> y2 = solve_quadratic_c(cd(p), cd(r));
        std::vector<cd> roots;
        for (cd v : y2) {
            cd y = std::sqrt(v);
            roots.push_back(shift + y);
            roots.push_back(shift - y);
        }
        return roots;
    }

    double d0 = c2 * c2 - 3.0 * c3 * c1 + 12.0 * c4 * c0;
    double d1 = 2.0 * c2 * c2 * c2 - 9.0 * c3 * c2 * c1 + 27.0 * c3 * c3 * c0 +
                27.0 * c4 * c1 * c1 - 72.0 * c4 * c2 * c0;
    cd g = std::sqrt(cd(d1 * d1 - 4.0 * d0 * d0 * d0));
    cd base = (cd(d1) + g) / 2.0;
    if (std::abs((cd(d1) - g) / 2.0) > std::abs(base)) base = (cd(d1) - g) / 2.0;

    cd S(0.0);
    if (std::abs(base) < 1e-300) {
        // d0 = d1 = 0: resolvent term vanishes
        S = 0.5 * std::sqrt(cd(-2.0 * p / 3.0));
    } else {
        cd Q = std::pow(base, 1.0 / 3.0);
        double best_mag = -1.0;
        for (int k = 0; k < 3; ++k) {
            cd Sk = 0.5 * std::sqrt(cd(-2.0 * p / 3.0) + (Q + cd(d0) / Q) / (3.0 * c4));
            if (std::abs(Sk) > best_mag) {
                best_mag = std::abs(Sk);
                S = Sk;
            }
            Q *= omega;
        }
    }
    if (std::abs(S) < 1e-150) {
        // division by S is hopeless; let the caller fall back
        return {};
    }
    cd t1 = std::sqrt(-4.0 * S * S - 2.0 * p - cd(q) / S);
    cd t2 = std::sqrt(-4.0 * S * S - 2.0 * p + cd(q) / S);
    return {shift + S + 0.5 * t1, shift + S - 0.5 * t1, shift - S + 0.5 * t2,
            shift - S - 0.5 * t2};
}

double max_residual(const QuarticCoeffs& c, const std::vector<cd>& roots) {
    double worst = 0.0;
    for (cd z : roots) {
        double res = std::abs(eval_poly(c, z));
        if (!std::isfinite(res)) return std::numeric_limits<double>::infinity();
        worst = std::max(worst, res);
    }
    return worst;
}

} // namespace

double QuarticCoeffs::scale() const {
    return std::max({1.0, std::fabs(c4), std::fabs(c3), std::fabs(c2), std::fabs(c1),
                     std::fabs(c0)});
}

double quartic_residual(const QuarticCoeffs& c, cdouble z) {
    return std::abs(eval_poly(c, z));
}

RootSet solve_quartic(const QuarticCoeffs& c) {
    for (double v : {c.c4, c.c3, c.c2, c.c1, c.c0}) {
        if (!std::isfinite(v)) throw std::invalid_argument("solve_quartic: non-finite coefficient");
    }
    const double scale = c.scale();
    const double coeff_max =
        std::max({std::fabs(c.c4), std::fabs(c.c3), std::fabs(c.c2), std::fabs(c.c1),
                  std::fabs(c.c0)});
    if (coeff_max == 0.0) throw std::domain_error("solve_quartic: degenerate polynomial");

    std::vector<cd> roots;
    if (std::fabs(c.c4) > kDegeneracyRel * scale) {
        roots = quartic_ferrari(c);
        for (cd& z : roots) polish(c, z);
        if (roots.size() != 4 || max_residual(c, roots) > kResidualRel * scale) {
            std::vector<cd> alt =
                quartic_resolvent_route(c.c3 / c.c4, c.c2 / c.c4, c.c1 / c.c4, c.c0 / c.c4);
            for (cd& z : alt) polish(c, z);
            if (roots.size() != 4 || max_residual(c, alt) < max_residual(c, roots)) roots = alt;
        }
    } else if (std::fabs(c.c3) > kDegeneracyRel * scale) {
        roots = solve_cubic_c(c.c2 / c.c3, c.c1 / c.c3, c.c0 / c.c3);
        for (cd& z : roots) polish(c, z);
    } else if (std::fabs(c.c2) > kDegeneracyRel * scale) {
        roots = solve_quadratic_c(cd(c.c1 / c.c2), cd(c.c0 / c.c2));
        for (cd& z : roots) polish(c, z);
    } else if (std::fabs(c.c1) > kDegeneracyRel * scale) {
        roots = {cd(-c.c0 / c.c1)};
        polish(c, roots[0]);
    } else {
        // nonzero constant: no roots
        return {};
    }

    RootSet out;
    out.roots = roots;
    for (cd z : roots) {
        if (std::fabs(z.imag()) <= kImagFilterRel * (1.0 + std::abs(z))) {
            double x = z.real();
            if (x >= -1e-10 && x <= 1.0 + 1e-10) {
                out.real_in_unit.push_back(std::clamp(x, 0.0, 1.0));
            }
        }
    }
    return out;
}

} // namespace cpass
