#pragma once

// 1-D quadrature helpers: fixed Gauss-Legendre panels, adaptive Simpson,
// and dyadic-shell integration toward an integrable endpoint singularity.

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace orlicz {

// 8-point Gauss-Legendre on [-1,1].
inline const double kGL8x[8] = {-0.9602898564975363, -0.7966664774136267,
                                -0.5255324099163290, -0.1834346424956498,
                                0.1834346424956498,  0.5255324099163290,
                                0.7966664774136267,  0.9602898564975363};
inline const double kGL8w[8] = {0.1012285362903763, 0.2223810344533745,
                                0.3137066458778873, 0.3626837833783620,
                                0.3626837833783620, 0.3137066458778873,
                                0.2223810344533745, 0.1012285362903763};

template <class F>
double gauss8(F&& f, double a, double b) {
    double c = 0.5 * (a + b), h = 0.5 * (b - a), s = 0.0;
    for (int i = 0; i < 8; ++i) s += kGL8w[i] * f(c + h * kGL8x[i]);
    return s * h;
}

struct DivergentIntegral : std::runtime_error {
    DivergentIntegral() : std::runtime_error("integral diverges") {}
};

// Integral of f over (a, b] where f may blow up at a (integrable
// singularity expected). Dyadic shells toward a, Gauss-8 per shell.
// Throws DivergentIntegral when shell contributions fail to decay.
template <class F>
double integrate_singular_at(F&& f, double a, double b, double rel_tol = 1e-14,
                             int max_shells = 400) {
    double total = 0.0;
    double len = b - a;
    double prev_shell = std::numeric_limits<double>::infinity();
    int growing = 0;
    for (int k = 0; k < max_shells; ++k) {
        double hi = a + len * std::ldexp(1.0, -k);
        double lo = a + len * std::ldexp(1.0, -k - 1);
        double shell = gauss8(f, lo, hi);
        total += shell;
        if (!std::isfinite(shell) || !std::isfinite(total)) throw DivergentIntegral{};
        if (std::abs(shell) >= std::abs(prev_shell)) {
            if (++growing > 40) throw DivergentIntegral{};
        } else {
            growing = 0;
        }
        if (std::abs(shell) <= rel_tol * std::abs(total) && k > 4) return total;
        prev_shell = shell;
    }
    // Shells still nonzero: extrapolate a geometric tail if decaying.
    double ratio = std::abs(prev_shell) > 0.0 ? std::abs(prev_shell / total) : 0.0;
    if (ratio > 0.5) throw DivergentIntegral{};
    return total;
}

// Adaptive Simpson, used as an independent reference integrator.
namespace detail {
template <class F>
double simpson_step(F& f, double a, double b, double fa, double fm, double fb, double whole,
                    double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}
}  // namespace detail

template <class F>
double adaptive_simpson(F&& f, double a, double b, double tol = 1e-12, int max_depth = 48) {
    double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::simpson_step(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

}  // namespace orlicz
