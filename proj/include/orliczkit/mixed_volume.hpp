#pragma once

// Orlicz mixed volumes with respect to the cone-volume probability
// measure of K.
//
// Nonhomogeneous form:  V_phi(K,L) = (1/n) int phi(h_L/h_K) h_K dS_K.
// Homogeneous form:     the unique lam with
//                       int phi(n|K| h_L / (lam h_K)) dVtilde_K = 1,
// where dVtilde_K = h_K dS_K / (n|K|). For increasing phi the defining
// function is strictly decreasing in lam, for decreasing phi strictly
// increasing; either way the root is bracketed by
//   n*omega_n r_K^n r_L / R_K  <=  lam  <=  n*omega_n R_K^n R_L / r_K
// (expanded geometrically if the sampled radii are off).

#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "body.hpp"
#include "orlicz_fn.hpp"
#include "rootfind.hpp"

namespace orlicz {

struct MixedVolumeResult {
    double value = 0.0;
    double residual = 0.0;  // |G(lam) - 1| at the returned root
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    int iterations = 0;
};

namespace detail {

struct ConeMeasure {
    std::vector<Dir> dirs;
    std::vector<double> hK;
    std::vector<double> vtilde;  // cone-volume probability weights
    double n_vol;                // n|K| as seen by the atomization
    int dim;
};

inline ConeMeasure cone_measure(const Body& K, const std::optional<SphereGrid>& grid = {}) {
    SurfaceMeasure sm = surface_measure(K, grid);
    ConeMeasure cm;
    cm.dim = K.dim();
    cm.dirs = std::move(sm.dirs);
    cm.hK = std::move(sm.support);
    cm.vtilde.resize(cm.dirs.size());
    double nvol = 0.0;
    for (std::size_t i = 0; i < cm.dirs.size(); ++i) nvol += cm.hK[i] * sm.mass[i];
    if (!(nvol > 0.0)) throw std::invalid_argument("origin not interior");
    for (std::size_t i = 0; i < cm.dirs.size(); ++i)
        cm.vtilde[i] = cm.hK[i] * sm.mass[i] / nvol;
    cm.n_vol = nvol;
    return cm;
}

// Solves G(lam) = sum phi(n|K| q_i / lam) vtilde_i = 1 on a log scale,
// where q_i = hL_i / hK_i (or 1/(rho_i hK_i) for the polar-star form).
inline MixedVolumeResult solve_hom(const ConeMeasure& cm, const std::vector<double>& q,
                                   const OrliczFn& phi, double rL, double RL) {
    auto G = [&](double lam) {
        double s = 0.0;
        for (std::size_t i = 0; i < q.size(); ++i) {
            double arg = cm.n_vol * q[i] / lam;
            s += (arg == 0.0 ? 0.0 : phi(arg)) * cm.vtilde[i];
        }
        return s - 1.0;
    };
    double rK = *std::min_element(cm.hK.begin(), cm.hK.end());
    double RK = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) RK = std::max(RK, cm.hK[i]);
    int n = cm.dim;
    double nwn = n * unit_ball_volume(n);
    double lo = nwn * std::pow(rK, n) * rL / RK;
    double hi = nwn * std::pow(RK, n) * RL / rK;
    if (!(lo > 0.0) || !(hi > lo)) { lo = 0.5 * cm.n_vol; hi = 2.0 * cm.n_vol; }
    auto g = [&](double t) { return G(std::exp(t)); };
    double llo = std::log(lo), lhi = std::log(hi);
    double glo = g(llo), ghi = g(lhi);
    int doublings = 0;
    while ((glo > 0.0) == (ghi > 0.0)) {
        if (++doublings > 60) throw std::runtime_error("bracket expansion failed");
        llo -= std::numbers::ln2; glo = g(llo);
        if ((glo > 0.0) != (ghi > 0.0)) break;
        lhi += std::numbers::ln2; ghi = g(lhi);
    }
    RootResult rr = brent(g, llo, lhi, 1e-15, 1e-13, 300);
    MixedVolumeResult res;
    res.value = std::exp(rr.x);
    res.residual = std::abs(rr.fx);
    res.bracket_lo = std::exp(llo);
    res.bracket_hi = std::exp(lhi);
    res.iterations = rr.iterations;
    return res;
}

}  // namespace detail

// (1/n) int phi(h_L/h_K) h_K dS_K
inline double nonhom_mixed_volume(const Body& K, const Body& L, const OrliczFn& phi,
                                  const std::optional<SphereGrid>& grid = {}) {
    SurfaceMeasure sm = surface_measure(K, grid);
    double s = 0.0;
    for (std::size_t i = 0; i < sm.dirs.size(); ++i) {
        double hL = support(L, sm.dirs[i]);
        double ratio = hL / sm.support[i];
        s += (ratio == 0.0 && phi.increasing() ? 0.0 : phi(ratio)) * sm.support[i] * sm.mass[i];
    }
    return s / K.dim();
}

inline MixedVolumeResult hom_mixed_volume(const Body& K, const Body& L, const OrliczFn& phi,
                                          const std::optional<SphereGrid>& grid = {}) {
    detail::ConeMeasure cm = detail::cone_measure(K, grid);
    std::vector<double> q(cm.dirs.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
        double hL = support(L, cm.dirs[i]);
        if (!(hL > 0.0)) throw std::invalid_argument("origin not interior");
        q[i] = hL / cm.hK[i];
    }
    Radii rl = inner_outer_radii(L);
    return detail::solve_hom(cm, q, phi, rl.inner, rl.outer);
}

// Homogeneous mixed volume against the polar of a star body: h_{L*} is
// replaced by 1/rho_L at the atoms of S_K.
inline MixedVolumeResult hom_mixed_volume_polar(const Body& K, const Body& Lstar,
                                                const OrliczFn& phi,
                                                const std::optional<SphereGrid>& grid = {}) {
    detail::ConeMeasure cm = detail::cone_measure(K, grid);
    std::vector<double> q(cm.dirs.size());
    double rmin = std::numeric_limits<double>::infinity(), rmax = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        double rho = radial(Lstar, cm.dirs[i]);
        if (!(rho > 0.0)) throw std::invalid_argument("radial values must be positive");
        q[i] = 1.0 / (rho * cm.hK[i]);
        rmin = std::min(rmin, 1.0 / rho);
        rmax = std::max(rmax, 1.0 / rho);
    }
    return detail::solve_hom(cm, q, phi, rmin, rmax);
}

// V^hat_phi(K, [0, v]): root eta of
//   sum phi(n|K| <u_i, v>_+ / (eta h_K)) vtilde_i = 1.
// Defined only for increasing phi with convex F (class Phi1); for
// decreasing phi the functional degenerates and is rejected.
inline MixedVolumeResult segment_mixed_volume(const Body& K, const Dir& v, const OrliczFn& phi,
                                              const std::optional<SphereGrid>& grid = {}) {
    if (!phi.increasing())
        throw std::invalid_argument("segment mixed volume undefined for decreasing phi");
    detail::ConeMeasure cm = detail::cone_measure(K, grid);
    std::vector<double> q(cm.dirs.size());
    double qmax = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        double c = dot(cm.dirs[i], v);
        q[i] = c > 0.0 ? c / cm.hK[i] : 0.0;  // phi(0) = 0 off the hemisphere
        qmax = std::max(qmax, q[i]);
    }
    if (qmax == 0.0) throw std::invalid_argument("zero direction");
    double vlen = std::sqrt(dot(v, v));
    return detail::solve_hom(cm, q, phi, 1e-3 * vlen, vlen);
}

// L_p special case in closed form, used as an independent oracle:
//   V^hat_p(K,L) = (n|K|)^{1-1/p} (n V_p(K,L))^{1/p},
//   V_p(K,L) = (1/n) int (h_L/h_K)^p h_K dS_K.
inline double lp_hom_closed_form(const Body& K, const Body& L, double p,
                                 const std::optional<SphereGrid>& grid = {}) {
    if (p == 0.0) throw std::invalid_argument("p must be nonzero");
    SurfaceMeasure sm = surface_measure(K, grid);
    double nvol = 0.0, nvp = 0.0;
    for (std::size_t i = 0; i < sm.dirs.size(); ++i) {
        double hL = support(L, sm.dirs[i]);
        nvol += sm.support[i] * sm.mass[i];
        nvp += std::pow(hL / sm.support[i], p) * sm.support[i] * sm.mass[i];
    }
    return std::pow(nvol, 1.0 - 1.0 / p) * std::pow(nvp, 1.0 / p);
}

}  // namespace orlicz
