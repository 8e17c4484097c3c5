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
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "cpass/types.hpp"

namespace cpass {

/// Coefficients of c4 z^4 + c3 z^3 + c2 z^2 + c1 z + c0.
struct QuarticCoeffs {
    double c4 = 0.0;
    double c3 = 0.0;
    double c2 = 0.0;
    double c1 = 0.0;
    double c0 = 0.0;

    double scale() const; ///< max(1, max |c_i|), the residual normalizer
};

/// All complex roots of the (possibly degenerate) quartic, plus the real roots
/// falling in [0,1] after imaginary-part filtering.
struct RootSet {
    std::vector<cdouble> roots;
    std::vector<double> real_in_unit;
};

struct BracketSpec {
    double lo = 0.0;
    double hi = 1.0;
    double tol = 1e-4; ///< absolute x-tolerance
    int max_iter = 100;
};

/// Thrown when an iterative solver hits its iteration cap; carries the best
/// iterate found so far.
class ConvergenceError : public std::runtime_error {
  public:
    ConvergenceError(const std::string& msg, double best_x, double best_f)
        : std::runtime_error(msg), best_x_(best_x), best_f_(best_f) {}
    double best_x() const { return best_x_; }
    double best_f() const { return best_f_; }

  private:
    double best_x_;
    double best_f_;
};

class BracketingError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Closed-form quartic roots (Ferrari), with lower-degree fallbacks when the
/// leading coefficients vanish and a resolvent-cubic fallback when the Ferrari
/// branch degenerates. Every returned root satisfies
/// |p(z)| <= 1e-8 * max(1, max|c_i|).
/// Throws std::invalid_argument on non-finite input and std::domain_error on
/// the all-zero polynomial. A nonzero constant polynomial has no roots and
/// yields an empty set.
RootSet solve_quartic(const QuarticCoeffs& c);

/// Residual |c4 z^4 + ... + c0| at z.
double quartic_residual(const QuarticCoeffs& c, cdouble z);

namespace detail {
inline double brent_eps() { return std::sqrt(std::numeric_limits<double>::epsilon()); }
}

struct BrentResult {
    double x = 0.0;
    double f = 0.0;
    int iterations = 0;
};

/// Bounded scalar minimization: Brent's method (golden section + successive
/// parabolic interpolation). The interval endpoints are evaluated as well, so
/// f(result.x) <= min(f(lo), f(hi)) always holds on return.
template <typename F>
BrentResult brent_minimize(F&& f, const BracketSpec& b) {
    if (!(b.lo < b.hi)) throw std::invalid_argument("brent_minimize: requires lo < hi");
    if (!(b.tol > 0.0)) throw std::invalid_argument("brent_minimize: requires tol > 0");

    const double golden = 0.3819660112501051;
    double a = b.lo, c = b.hi;
    double x = a + golden * (c - a);
    double w = x, v = x;
    double fx = f(x), fw = fx, fv = fx;
    double d = 0.0, e = 0.0;

    int iter = 0;
    bool done = false;
    for (; iter < b.max_iter; ++iter) {
        double mid = 0.5 * (a + c);
        double tol1 = b.tol + detail::brent_eps() * std::fabs(x);
        double tol2 = 2.0 * tol1;
        if (std::fabs(x - mid) <= tol2 - 0.5 * (c - a)) {
            done = true;
            break;
        }
        bool parabolic_ok = false;
        if (std::fabs(e) > tol1) {
            // parabola through (x,fx), (w,fw), (v,fv)
            double r = (x - w) * (fx - fv);
            double q = (x - v) * (fx - fw);
            double p = (x - v) * q - (x - w) * r;
            q = 2.0 * (q - r);
            if (q > 0.0) p = -p;
            q = std::fabs(q);
            double e_old = e;
            e = d;
            if (std::fabs(p) < std::fabs(0.5 * q * e_old) && p > q * (a - x) && p < q * (c - x)) {
                d = p / q;
                double u = x + d;
                if (u - a < tol2 || c - u < tol2) d = (mid > x) ? tol1 : -tol1;
                parabolic_ok = true;
            }
        }
        if (!parabolic_ok) {
            e = (x >= mid) ? a - x : c - x;
            d = golden * e;
        }
        double u = (std::fabs(d) >= tol1) ? x + d : x + (d > 0.0 ? tol1 : -tol1);
        double fu = f(u);
        if (fu <= fx) {
            if (u >= x) a = x; else c = x;
            v = w; fv = fw;
            w = x; fw = fx;
            x = u; fx = fu;
        } else {
            if (u < x) a = u; else c = u;
            if (fu <= fw || w == x) {
                v = w; fv = fw;
                w = u; fw = fu;
            } else if (fu <= fv || v == x || v == w) {
                v = u; fv = fu;
            }
        }
    }
    if (!done) {
        throw ConvergenceError("brent_minimize: max_iter reached before bracketing tolerance", x, fx);
    }
    // Endpoints are never sampled by the loop above; a monotone objective
    // attains its minimum there.
    double flo = f(b.lo), fhi = f(b.hi);
    if (flo <= fx && flo <= fhi) return {b.lo, flo, iter};
    if (fhi <= fx) return {b.hi, fhi, iter};
    return {x, fx, iter};
}

/// Root of a nonincreasing scalar function g on [lo, hi]: returns lo when
/// g(lo) <= 0 (slack constraint), otherwise bisects until |g| <= tol. The
/// upper bracket is doubled in width up to max_expand times if g(hi) > 0.
template <typename G>
double bisect_monotone(G&& g, double lo, double hi, double tol, int max_expand = 60,
                       int max_iter = 500) {
    if (!(lo < hi)) throw std::invalid_argument("bisect_monotone: requires lo < hi");
    double glo = g(lo);
    if (glo <= 0.0) return lo;
    double ghi = g(hi);
    int expands = 0;
    while (ghi > 0.0) {
        if (++expands > max_expand) {
            throw BracketingError("bisect_monotone: no sign change after bracket expansion cap");
        }
        hi = lo + 2.0 * (hi - lo);
        ghi = g(hi);
    }
    if (std::fabs(ghi) <= tol) return hi;
    double best_x = hi, best_g = std::fabs(ghi);
    for (int i = 0; i < max_iter; ++i) {
        double mid = 0.5 * (lo + hi);
        double gm = g(mid);
        if (std::fabs(gm) <= tol) return mid;
        if (std::fabs(gm) < best_g) {
            best_g = std::fabs(gm);
            best_x = mid;
        }
        if (gm > 0.0) lo = mid; else hi = mid;
    }
    throw ConvergenceError("bisect_monotone: tolerance not reached", best_x, best_g);
}

} // namespace cpass
