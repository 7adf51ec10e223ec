#pragma once

// Geominimal / affine surface areas, inequality certificates, and
// numerical probes.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "body.hpp"
#include "mixed_volume.hpp"
#include "orlicz_add.hpp"
#include "orlicz_fn.hpp"
#include "petty.hpp"
#include "quadrature.hpp"

namespace orlicz {

// Homogeneous geominimal surface area (value of the constrained
// optimization); the full result carries the optimizer.
inline PettyResult geominimal(const Body& K, const OrliczFn& phi, PettyOptions opt = {}) {
    return solve_petty(K, phi, opt);
}

inline AffineResult affine_surface_area(const Body& K, const OrliczFn& phi,
                                        const SphereGrid& grid, PettyOptions opt = {}) {
    return solve_affine_star(K, phi, grid, opt);
}

// ---- certificates -----------------------------------------------------------

struct Certificate {
    std::string which;
    double lhs = 0.0;   // the side that should be smaller
    double rhs = 0.0;
    double slack = 0.0; // rhs - lhs
    bool holds = false;
    bool hypotheses_ok = true;
    std::string notes;
};

namespace detail {

inline Body centered(const Body& K) {
    Dir c = body_centroid(K);
    return translate(K, neg(c));
}

inline double hom_value(const Body& K, const OrliczFn& phi, PettyOptions opt) {
    opt.mode = PettyMode::Homogeneous;
    return solve_petty(K, phi, opt).value;
}

}  // namespace detail

// Ghat_phi(K) / Ghat_phi(B) <= (|K|/omega_n)^{(n-1)/n} for centered K.
inline Certificate certify_isoperimetric(const Body& K, const OrliczFn& phi,
                                         PettyOptions opt = {}, double tol = 1e-6) {
    Body Kc = detail::centered(K);
    int n = K.dim();
    double nwn = n * unit_ball_volume(n);
    Certificate c;
    c.which = "isoperimetric";
    c.hypotheses_ok = classify(phi, n) == PhiClass::Phi1 || classify(phi, n) == PhiClass::Phi2;
    c.lhs = detail::hom_value(Kc, phi, opt) / nwn;
    c.rhs = std::pow(volume(Kc) / unit_ball_volume(n), (n - 1.0) / n);
    c.slack = c.rhs - c.lhs;
    c.holds = c.slack >= -tol;
    return c;
}

// Ghat_phi(K) * Ghat_phi(K*) <= (n omega_n)^2 for centered K.
inline Certificate certify_santalo(const Body& K, const OrliczFn& phi, PettyOptions opt = {},
                                   double tol = 1e-6) {
    Body Kc = detail::centered(K);
    int n = K.dim();
    double nwn = n * unit_ball_volume(n);
    Certificate c;
    c.which = "santalo";
    c.hypotheses_ok = classify(phi, n) == PhiClass::Phi1 || classify(phi, n) == PhiClass::Phi2;
    c.lhs = detail::hom_value(Kc, phi, opt) * detail::hom_value(polar(Kc), phi, opt) /
            (nwn * nwn);
    c.rhs = 1.0;
    c.slack = c.rhs - c.lhs;
    c.holds = c.slack >= -tol;
    return c;
}

namespace detail {

// Inverse of a strictly monotone phi by bisection on a log scale.
inline double phi_inverse(const OrliczFn& phi, double y) {
    auto g = [&](double t) { return phi(std::exp(t)) - y; };
    double lo = -1.0, hi = 1.0;
    int k = 0;
    double sgn = phi.increasing() ? 1.0 : -1.0;
    while (sgn * g(lo) > 0.0) { lo -= 1.0; if (++k > 700) throw std::runtime_error("inverse range"); }
    while (sgn * g(hi) < 0.0) { hi += 1.0; if (++k > 700) throw std::runtime_error("inverse range"); }
    return std::exp(brent(g, lo, hi, 1e-14, 1e-13).x);
}

// Convexity type of H = phi o psi^{-1} on a sample range, +1 convex,
// -1 concave, 0 indeterminate.
inline int composition_convexity(const OrliczFn& phi, const OrliczFn& psi) {
    std::vector<double> ts, Hs;
    for (int i = 0; i <= 64; ++i) {
        double u = std::exp(std::log(1e-2) + i * (std::log(1e2) - std::log(1e-2)) / 64.0);
        ts.push_back(psi(u));
        Hs.push_back(phi(u));
    }
    // sort by psi value (psi may be decreasing)
    std::vector<std::size_t> idx(ts.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return ts[a] < ts[b]; });
    bool conv = true, conc = true;
    for (std::size_t i = 0; i + 2 < idx.size(); ++i) {
        double t0 = ts[idx[i]], t1 = ts[idx[i + 1]], t2 = ts[idx[i + 2]];
        double d1 = (Hs[idx[i + 1]] - Hs[idx[i]]) / (t1 - t0);
        double d2 = (Hs[idx[i + 2]] - Hs[idx[i + 1]]) / (t2 - t1);
        double scale = (std::abs(Hs[idx[i]]) + std::abs(Hs[idx[i + 2]])) / (t2 - t0) + 1e-300;
        if (d2 - d1 > 1e-9 * scale) conc = false;
        if (d2 - d1 < -1e-9 * scale) conv = false;
    }
    if (conv && !conc) return 1;
    if (conc && !conv) return -1;
    if (conv && conc) return 1;  // affine counts as convex
    return 0;
}

}  // namespace detail

// Ghat_phi(K) <= Ghat_psi(K) under the cyclic-composition hypotheses:
//  a) phi in Phi1 or Phi2, psi in Psi;
//  b) H = phi o psi^{-1} convex, phi in Phi2, psi in Phi1;
//  c) H concave, phi and psi in Phi1;
//  d) H convex, phi and psi both in Phi2 or both in Psi.
inline Certificate certify_cyclic(const Body& K, const OrliczFn& phi, const OrliczFn& psi,
                                  PettyOptions opt = {}, double tol = 1e-5) {
    int n = K.dim();
    PhiClass cf = classify(phi, n), cg = classify(psi, n);
    int H = detail::composition_convexity(phi, psi);
    bool ok = false;
    if ((cf == PhiClass::Phi1 || cf == PhiClass::Phi2) && cg == PhiClass::Psi) ok = true;
    else if (H == 1 && cf == PhiClass::Phi2 && cg == PhiClass::Phi1) ok = true;
    else if (H == -1 && cf == PhiClass::Phi1 && cg == PhiClass::Phi1) ok = true;
    else if (H == 1 && ((cf == PhiClass::Phi2 && cg == PhiClass::Phi2) ||
                        (cf == PhiClass::Psi && cg == PhiClass::Psi)))
        ok = true;
    Certificate c;
    c.which = "cyclic";
    c.hypotheses_ok = ok;
    c.lhs = detail::hom_value(K, phi, opt);
    c.rhs = detail::hom_value(K, psi, opt);
    c.slack = c.rhs - c.lhs;
    c.holds = c.slack >= -tol;
    std::ostringstream os;
    os << "phi=" << to_string(cf) << " psi=" << to_string(cg) << " H="
       << (H == 1 ? "convex" : H == -1 ? "concave" : "indeterminate");
    c.notes = os.str();
    return c;
}

// |TK||TK*| <= |K||K*| for the polytope solution TK (convex increasing phi).
inline Certificate certify_mahler(const Body& K, const OrliczFn& phi, PettyOptions opt = {},
                                  double tol = 1e-8) {
    Certificate c;
    c.which = "mahler";
    c.hypotheses_ok = phi.increasing() && phi.convex &&
                      classify(phi, K.dim()) == PhiClass::Phi1;
    opt.mode = PettyMode::Homogeneous;
    PettyResult pr = solve_petty(K, phi, opt);
    if (pr.degenerate || !pr.M) {
        c.notes = "no optimizer";
        c.hypotheses_ok = false;
        return c;
    }
    c.lhs = volume(*pr.M) * polar_volume(*pr.M);
    c.rhs = volume(K) * polar_volume(K);
    c.slack = c.rhs - c.lhs;
    c.holds = c.slack >= -tol;
    return c;
}

// Vhat_phi(K,L) >= n |K|^{(n-1)/n} |L|^{1/n} for convex increasing phi.
inline Certificate certify_minkowski(const Body& K, const Body& L, const OrliczFn& phi,
                                     double tol = 1e-8) {
    int n = K.dim();
    Certificate c;
    c.which = "minkowski";
    c.hypotheses_ok = phi.increasing() && phi.convex;
    c.lhs = n * std::pow(volume(K), (n - 1.0) / n) * std::pow(volume(L), 1.0 / n);
    c.rhs = hom_mixed_volume(K, L, phi).value;
    c.slack = c.rhs - c.lhs;
    c.holds = c.slack >= -tol;
    return c;
}

// n omega_n r_K^n r_L / R_K <= Vhat_phi(K,L) <= n omega_n R_K^n R_L / r_K.
inline Certificate certify_bracket(const Body& K, const Body& L, const OrliczFn& phi,
                                   double tol = 1e-10) {
    int n = K.dim();
    Radii rk = inner_outer_radii(K), rl = inner_outer_radii(L);
    double nwn = n * unit_ball_volume(n);
    double lo = nwn * std::pow(rk.inner, n) * rl.inner / rk.outer;
    double hi = nwn * std::pow(rk.outer, n) * rl.outer / rk.inner;
    double v = hom_mixed_volume(K, L, phi).value;
    Certificate c;
    c.which = "bracket";
    c.lhs = lo;
    c.rhs = hi;
    c.slack = std::min(v - lo, hi - v);
    c.holds = c.slack >= -tol;
    std::ostringstream os;
    os << "value=" << v;
    c.notes = os.str();
    return c;
}

// ---- probes -----------------------------------------------------------------

struct ProbeRow {
    double x = 0.0;  // m or eps
    double hom = 0.0;
    double nonhom = 0.0;
};

struct ProbeReport {
    std::string which;
    std::vector<ProbeRow> rows;
    bool verdict = false;
    std::string notes;
};

// Regular m-gons circumscribed about the unit disk; the values should
// decrease toward Ghat_phi(B) = n omega_n.
inline Body regular_polygon(int m, double apothem = 1.0) {
    std::vector<Vec2> v;
    for (int i = 0; i < m; ++i) {
        double t = 2.0 * kPi * (i + 0.5) / m;
        v.push_back((apothem / std::cos(kPi / m)) * dir2(t));
    }
    return Body::polygon(std::move(v));
}

inline ProbeReport probe_continuity(const OrliczFn& phi,
                                    std::vector<int> ms = {8, 16, 32, 64, 128, 256},
                                    PettyOptions opt = {}) {
    ProbeReport rep;
    rep.which = "continuity";
    double nwn = 2.0 * kPi;  // Ghat_phi(B) in the plane
    opt.mode = PettyMode::Homogeneous;
    for (int m : ms) {
        Body P = regular_polygon(m);
        PettyResult pr = solve_petty(P, phi, opt);
        rep.rows.push_back({static_cast<double>(m), pr.value, std::abs(pr.value - nwn)});
    }
    bool decreasing = true;
    for (std::size_t i = 1; i < rep.rows.size(); ++i)
        if (rep.rows[i].nonhom > rep.rows[i - 1].nonhom + 1e-12) decreasing = false;
    rep.verdict = decreasing && rep.rows.back().nonhom <= 5e-3;
    rep.notes = "columns: m, value, |value - 2 pi|";
    return rep;
}

// Feasible values along the stretched family L_eps = diag(eps, 1/eps) K,
// normalized so |L*| = omega_n. For decreasing phi with concave F and a
// polytope K the homogeneous column collapses and the nonhomogeneous
// column blows up.
inline ProbeReport probe_degeneracy(const Body& K, const OrliczFn& phi,
                                    std::vector<double> eps_schedule = {},
                                    double hom_ratio = 1e-3, double nonhom_ratio = 1e3) {
    if (K.dim() != 2) throw std::invalid_argument("planar probe only");
    if (eps_schedule.empty())
        for (int k = 0; k <= 8; ++k) eps_schedule.push_back(std::ldexp(1.0, -k));
    ProbeReport rep;
    rep.which = "degeneracy";
    for (double eps : eps_schedule) {
        Body L = linear_image(K, Mat2::diag(eps, 1.0 / eps));
        double c = std::pow(polar_volume(L) / unit_ball_volume(2), -0.5);
        // scale L so that |(cL)*| = omega_n
        Body cL = scale_body(L, c);
        double hom = hom_mixed_volume(K, cL, phi).value;
        double nonhom = 2.0 * nonhom_mixed_volume(K, cL, phi);
        rep.rows.push_back({eps, hom, nonhom});
    }
    double hom0 = rep.rows.front().hom, nh0 = rep.rows.front().nonhom;
    rep.verdict = rep.rows.back().hom < hom_ratio * hom0 &&
                  rep.rows.back().nonhom > nonhom_ratio * nh0;
    rep.notes = "columns: eps, hom feasible value, nonhom feasible value";
    return rep;
}

// ---- C_{n,p} ----------------------------------------------------------------

struct CnpReport {
    std::vector<double> values;
    double mean = 0.0, min = 0.0, max = 0.0, spread = 0.0;
};

namespace detail {

// Integral of g over [a,b] with integrable singularities allowed at
// either endpoint.
template <class G>
double integrate_interval_singular(G&& g, double a, double b, bool sing_a, bool sing_b) {
    if (sing_a && sing_b) {
        double m = 0.5 * (a + b);
        return integrate_singular_at(g, a, m) +
               integrate_singular_at([&](double x) { return g(a + b - x); }, a, m);
    }
    if (sing_a) return integrate_singular_at(g, a, b);
    if (sing_b) return integrate_singular_at([&](double x) { return g(a + b - x); }, a, b);
    return gauss8(g, a, b);
}

}  // namespace detail

// int over S^1 of |<u,v>|^p for p in (-1, 0), per grid cell with
// dyadic subdivision toward the zeros of <u,v>.
inline double cnp_quadrature_2d(double p, const SphereGrid& grid, double alpha) {
    std::size_t N = grid.size();
    double step = 2.0 * kPi / static_cast<double>(N);
    // in the distance variable t from a zero of <u,v>, |cos(th-alpha)| = |sin t|
    auto gtau = [&](double t) { return std::pow(std::sin(t), p); };
    if (N < 16) {
        // cells coarser than the singular neighborhoods: four quarter arcs
        return 4.0 * integrate_singular_at(gtau, 0.0, 0.5 * kPi);
    }
    auto wrap = [](double t) {
        t = std::fmod(t, 2.0 * kPi);
        if (t < 0) t += 2.0 * kPi;
        return t;
    };
    double sing[2] = {wrap(alpha + 0.5 * kPi), wrap(alpha + 1.5 * kPi)};
    auto g = [&](double th) { return std::pow(std::abs(std::cos(th - alpha)), p); };
    double total = 0.0;
    // singular neighborhoods snapped to cell boundaries, >= 2 cells wide on
    // each side so that plain Gauss is accurate on the remaining cells
    double bl[2], br[2];
    for (int k = 0; k < 2; ++k) {
        bl[k] = step * std::ceil((sing[k] - 3.0 * step) / step);
        br[k] = step * std::floor((sing[k] + 3.0 * step) / step);
        total += integrate_singular_at(gtau, 0.0, sing[k] - bl[k]);
        total += integrate_singular_at(gtau, 0.0, br[k] - sing[k]);
    }
    for (std::size_t j = 0; j < N; ++j) {
        double a = step * static_cast<double>(j);
        double c = a + 0.5 * step;
        bool inside = false;
        for (int k = 0; k < 2; ++k)
            for (double off : {-2.0 * kPi, 0.0, 2.0 * kPi})
                if (c + off > bl[k] && c + off < br[k]) inside = true;
        if (!inside) total += gauss8(g, a, a + step);
    }
    return total;
}

inline CnpReport cnp_constant(double p, int dim, const SphereGrid& grid,
                              int trials = 64, unsigned long long seed = 7u) {
    if (!(p > -1.0) || !(p < 0.0)) throw std::invalid_argument("p must lie in (-1, 0)");
    CnpReport rep;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 2.0 * kPi);
    for (int t = 0; t < trials; ++t) {
        double val;
        if (dim == 2) {
            val = cnp_quadrature_2d(p, grid, uni(rng));
        } else if (dim == 3) {
            // rotation invariant closed reduction: 2 pi int_{-1}^{1} |z|^p dz
            auto g = [&](double z) { return std::pow(z, p); };
            val = 4.0 * kPi * integrate_singular_at(g, 0.0, 1.0);
        } else {
            throw std::invalid_argument("dimension not supported");
        }
        rep.values.push_back(val);
    }
    rep.min = *std::min_element(rep.values.begin(), rep.values.end());
    rep.max = *std::max_element(rep.values.begin(), rep.values.end());
    double s = 0.0;
    for (double v : rep.values) s += v;
    rep.mean = s / rep.values.size();
    rep.spread = rep.max - rep.min;
    return rep;
}

}  // namespace orlicz
