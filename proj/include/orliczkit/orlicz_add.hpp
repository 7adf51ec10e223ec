#pragma once

// Linear Orlicz addition: for each direction u the combined support
// value f_eps(u) solves
//   phi1(h_K/f) + eps * phi2(h_L/f) = 1,
// with phi1, phi2 both increasing (root >= h_K) or both decreasing
// (root <= h_K). The variational limit recovers the nonhomogeneous
// mixed volume:
//   V_phi2(K,L) = (phi1'(1∓) / n) * lim_{eps->0+} (|K_eps| - |K|)/eps,
// where K_eps is the intersection body of the halfplanes {<x,u> <= f_eps(u)}
// (left derivative for increasing phi1, right for decreasing).

#include <cmath>
#include <stdexcept>
#include <vector>

#include "body.hpp"
#include "mixed_volume.hpp"
#include "orlicz_fn.hpp"
#include "rootfind.hpp"

namespace orlicz {

struct OrliczSum {
    std::vector<Dir> dirs;
    std::vector<double> f;
    std::vector<double> hK, hL;
    double eps = 0.0;
    double max_residual = 0.0;
};

inline double orlicz_add_direction(double hK, double hL, const OrliczFn& phi1,
                                   const OrliczFn& phi2, double eps, double* residual) {
    auto R = [&](double f) { return phi1(hK / f) + eps * phi2(hL / f) - 1.0; };
    double lo, hi;
    if (phi1.increasing()) {
        lo = hK;  // R(hK) = eps*phi2(hL/hK) >= 0
        hi = hK;
        int k = 0;
        do {
            hi *= 2.0;
            if (++k > 60) throw std::runtime_error("bracket expansion failed");
        } while (R(hi) > 0.0);
    } else {
        hi = hK;  // R(hK) = eps*phi2(hL/hK) >= 0, R increasing in f
        lo = hK;
        int k = 0;
        do {
            lo *= 0.5;
            if (++k > 60) throw std::runtime_error("bracket expansion failed");
        } while (R(lo) > 0.0);
    }
    RootResult rr = brent(R, lo, hi, 1e-15 * hK, 1e-13, 300);
    if (residual) *residual = std::abs(rr.fx);
    return rr.x;
}

inline OrliczSum orlicz_add(const Body& K, const Body& L, const OrliczFn& phi1,
                            const OrliczFn& phi2, double eps, const std::vector<Dir>& dirs) {
    if (phi1.increasing() != phi2.increasing())
        throw std::invalid_argument("phi1 and phi2 must share monotonicity");
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
    OrliczSum sum;
    sum.dirs = dirs;
    sum.eps = eps;
    sum.f.resize(dirs.size());
    sum.hK.resize(dirs.size());
    sum.hL.resize(dirs.size());
    for (std::size_t i = 0; i < dirs.size(); ++i) {
        double hK = support(K, dirs[i]);
        double hL = support(L, dirs[i]);
        if (!(hK > 0.0) || !(hL > 0.0)) throw std::invalid_argument("origin not interior");
        double res = 0.0;
        sum.f[i] = orlicz_add_direction(hK, hL, phi1, phi2, eps, &res);
        sum.hK[i] = hK;
        sum.hL[i] = hL;
        sum.max_residual = std::max(sum.max_residual, res);
    }
    return sum;
}

// Default direction set: the edge normals of K enriched with a uniform
// angular family (deduplicated).
inline std::vector<Dir> enriched_directions(const Body& K, std::size_t uniform_count = 512) {
    std::vector<Dir> dirs;
    for (const PolygonEdge& e : polygon_edges(K.as_polygon().v)) dirs.push_back(to_dir(e.normal));
    for (std::size_t j = 0; j < uniform_count; ++j) {
        double t = 2.0 * kPi * (static_cast<double>(j) + 0.5) / static_cast<double>(uniform_count);
        Dir u{std::cos(t), std::sin(t), 0.0};
        bool dup = false;
        for (const Dir& w : dirs)
            if (dot(w, u) > 1.0 - 1e-14) { dup = true; break; }
        if (!dup) dirs.push_back(u);
    }
    return dirs;
}

struct VariationalResult {
    std::vector<double> eps;
    std::vector<double> quotients;  // scaled difference quotients
    std::vector<std::vector<double>> richardson;
    double estimate = 0.0;      // extrapolated variational value
    double direct = 0.0;        // direct quadrature of V_phi2(K,L)
    double rel_gap = 0.0;
};

// Difference quotients of |K_eps| along a halving schedule, Richardson
// extrapolation assuming an expansion in integer powers of eps.
inline VariationalResult variational_mixed_volume(const Body& K, const Body& L,
                                                  const OrliczFn& phi1, const OrliczFn& phi2,
                                                  double eps0 = 0.1, int levels = 8,
                                                  std::size_t enrichment = 512) {
    if (K.dim() != 2 || !K.is_polygon())
        throw std::invalid_argument("variational limit implemented for planar polygons");
    std::vector<Dir> dirs = enriched_directions(K, enrichment);
    double volK = volume(K);
    double deriv = phi1.increasing() ? phi1.deriv_left1 : phi1.deriv_right1;
    VariationalResult out;
    for (int k = 0; k < levels; ++k) {
        double eps = eps0 * std::ldexp(1.0, -k);
        OrliczSum sum = orlicz_add(K, L, phi1, phi2, eps, dirs);
        Body Keps = aleksandrov_body(sum.dirs, sum.f);
        double q = deriv * (volume(Keps) - volK) / (K.dim() * eps);
        out.eps.push_back(eps);
        out.quotients.push_back(q);
    }
    out.richardson.push_back(out.quotients);
    for (int j = 1; j < levels; ++j) {
        const std::vector<double>& prev = out.richardson.back();
        std::vector<double> row;
        double w = std::ldexp(1.0, j);  // 2^j
        for (std::size_t k = 0; k + 1 < prev.size(); ++k)
            row.push_back((w * prev[k + 1] - prev[k]) / (w - 1.0));
        out.richardson.push_back(std::move(row));
    }
    out.estimate = out.richardson.back().front();
    out.direct = nonhom_mixed_volume(K, L, phi2);
    out.rel_gap = std::abs(out.estimate - out.direct) / std::abs(out.direct);
    return out;
}

}  // namespace orlicz
