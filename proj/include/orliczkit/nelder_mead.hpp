#pragma once

// Nelder-Mead simplex minimization with restart polishing.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

namespace orlicz {

struct NelderMeadOptions {
    double step = 0.1;        // initial simplex edge (per coordinate)
    double ftol = 1e-12;      // spread of simplex values at convergence
    int max_iter = 0;         // 0 => 400 * dim
    int restarts = 4;         // re-seeded polishing passes
};

struct NelderMeadResult {
    std::vector<double> x;
    double fx = 0.0;
    int iterations = 0;
    int evaluations = 0;
    bool converged = false;
};

template <class F>
NelderMeadResult nelder_mead_once(F& f, std::vector<double> x0, double step, double ftol,
                                  int max_iter) {
    const std::size_t d = x0.size();
    NelderMeadResult res;
    std::vector<std::vector<double>> s(d + 1, x0);
    std::vector<double> fs(d + 1);
    for (std::size_t i = 0; i < d; ++i) s[i + 1][i] += step;
    for (std::size_t i = 0; i <= d; ++i) {
        fs[i] = f(s[i]);
        ++res.evaluations;
    }
    std::vector<std::size_t> order(d + 1);
    auto resort = [&] {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return fs[a] < fs[b]; });
    };
    std::vector<double> cen(d), xr(d), xe(d), xc(d);
    for (int it = 0; it < max_iter; ++it) {
        resort();
        ++res.iterations;
        double fbest = fs[order[0]], fworst = fs[order[d]];
        if (std::abs(fworst - fbest) <= ftol * (std::abs(fbest) + 1e-30)) {
            res.converged = true;
            break;
        }
        // centroid of all vertices except the worst
        std::fill(cen.begin(), cen.end(), 0.0);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) cen[j] += s[order[i]][j];
        for (double& c : cen) c /= static_cast<double>(d);
        const std::vector<double>& worst = s[order[d]];
        for (std::size_t j = 0; j < d; ++j) xr[j] = cen[j] + (cen[j] - worst[j]);
        double fr = f(xr);
        ++res.evaluations;
        if (fr < fs[order[0]]) {
            for (std::size_t j = 0; j < d; ++j) xe[j] = cen[j] + 2.0 * (cen[j] - worst[j]);
            double fe = f(xe);
            ++res.evaluations;
            if (fe < fr) { s[order[d]] = xe; fs[order[d]] = fe; }
            else { s[order[d]] = xr; fs[order[d]] = fr; }
        } else if (fr < fs[order[d - 1]]) {
            s[order[d]] = xr;
            fs[order[d]] = fr;
        } else {
            bool outside = fr < fs[order[d]];
            if (outside)
                for (std::size_t j = 0; j < d; ++j) xc[j] = cen[j] + 0.5 * (xr[j] - cen[j]);
            else
                for (std::size_t j = 0; j < d; ++j) xc[j] = cen[j] + 0.5 * (worst[j] - cen[j]);
            double fc = f(xc);
            ++res.evaluations;
            if (fc < std::min(fr, fs[order[d]])) {
                s[order[d]] = xc;
                fs[order[d]] = fc;
            } else {
                // shrink toward the best vertex
                std::vector<double> best = s[order[0]];
                for (std::size_t i = 1; i <= d; ++i) {
                    for (std::size_t j = 0; j < d; ++j)
                        s[order[i]][j] = best[j] + 0.5 * (s[order[i]][j] - best[j]);
                    fs[order[i]] = f(s[order[i]]);
                    ++res.evaluations;
                }
            }
        }
    }
    resort();
    res.x = s[order[0]];
    res.fx = fs[order[0]];
    return res;
}

template <class F>
NelderMeadResult nelder_mead(F&& f, std::vector<double> x0, NelderMeadOptions opt = {}) {
    int max_iter = opt.max_iter > 0 ? opt.max_iter : 400 * static_cast<int>(x0.size());
    NelderMeadResult best = nelder_mead_once(f, std::move(x0), opt.step, opt.ftol, max_iter);
    double step = opt.step;
    for (int r = 0; r < opt.restarts; ++r) {
        step *= 0.25;
        NelderMeadResult next = nelder_mead_once(f, best.x, step, opt.ftol, max_iter);
        next.evaluations += best.evaluations;
        next.iterations += best.iterations;
        bool improved = next.fx < best.fx - opt.ftol * (std::abs(best.fx) + 1e-30);
        if (next.fx <= best.fx) best = std::move(next);
        if (!improved) break;
    }
    return best;
}

}  // namespace orlicz
