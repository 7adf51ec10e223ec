#pragma once

// Bracketed scalar root finding (Brent's method).

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace orlicz {

struct RootResult {
    double x = 0.0;
    double fx = 0.0;
    int iterations = 0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
};

// Brent on [a,b]; f(a) and f(b) must have opposite signs.
template <class F>
RootResult brent(F&& f, double a, double b, double xtol = 1e-14, double ftol = 0.0,
                 int max_iter = 200) {
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return {a, 0.0, 0, a, b};
    if (fb == 0.0) return {b, 0.0, 0, a, b};
    if ((fa > 0.0) == (fb > 0.0)) throw std::invalid_argument("root not bracketed");
    double c = a, fc = fa, d = b - a, e = d;
    RootResult res;
    res.bracket_lo = a;
    res.bracket_hi = b;
    for (int it = 0; it < max_iter; ++it) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a; fc = fa; d = b - a; e = d;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        double tol = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) + 0.5 * xtol;
        double m = 0.5 * (c - b);
        res.iterations = it + 1;
        if (std::abs(m) <= tol || fb == 0.0 || std::abs(fb) <= ftol) {
            res.x = b;
            res.fx = fb;
            return res;
        }
        if (std::abs(e) >= tol && std::abs(fa) > std::abs(fb)) {
            double s = fb / fa, p, q;
            if (a == c) {
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {
                double r = fb / fc, t = fa / fc;
                p = s * (2.0 * m * t * (t - r) - (b - a) * (r - 1.0));
                q = (t - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q; else p = -p;
            if (2.0 * p < std::min(3.0 * m * q - std::abs(tol * q), std::abs(e * q))) {
                e = d; d = p / q;
            } else {
                d = m; e = m;
            }
        } else {
            d = m; e = m;
        }
        a = b; fa = fb;
        b += (std::abs(d) > tol) ? d : (m > 0.0 ? tol : -tol);
        fb = f(b);
    }
    res.x = b;
    res.fx = fb;
    return res;
}

// Expands [lo,hi] geometrically (factor 2, up to max_doublings per side)
// until f changes sign, then runs Brent.
template <class F>
RootResult bracketed_root(F&& f, double lo, double hi, double xtol = 1e-14, double ftol = 0.0,
                          int max_doublings = 60) {
    double flo = f(lo), fhi = f(hi);
    int n = 0;
    while ((flo > 0.0) == (fhi > 0.0)) {
        if (++n > max_doublings) throw std::runtime_error("bracket expansion failed");
        lo *= 0.5; flo = f(lo);
        if ((flo > 0.0) != (fhi > 0.0)) break;
        hi *= 2.0; fhi = f(hi);
    }
    return brent(f, lo, hi, xtol, ftol);
}

}  // namespace orlicz
