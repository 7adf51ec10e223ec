#pragma once

// Geominimal-type optimization.
//
// Full cone, homogeneous: minimize (or maximize, for decreasing phi with
// convex F) the scale-invariant objective
//     J(h) = Vhat_phi(K, M(h)) * (|M(h)*| / omega_n)^{1/n}
// over support values h > 0 at the directions carrying S_K. After the
// solve the best h is rescaled so |M*| = omega_n exactly.
//
// Nonhomogeneous: J(h) = n * V_phi(K, vrad(M(h)*) M(h)).
//
// The star-body (affine) variant optimizes radial values on a grid
// enriched with the atoms of S_K; the candidate body is the star polygon
// through the sampled radial points, which represents polars of
// polytopes with that normal fan exactly.

#include <cmath>
#include <future>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "body.hpp"
#include "mixed_volume.hpp"
#include "nelder_mead.hpp"
#include "orlicz_fn.hpp"

namespace orlicz {

enum class PettyMode { Homogeneous, Nonhomogeneous };
enum class PettyCone { Full, Symmetric };

struct PettyOptions {
    PettyMode mode = PettyMode::Homogeneous;
    PettyCone cone = PettyCone::Full;
    int starts = 8;
    unsigned long long seed = 20240901ull;
    double ftol = 1e-13;
    int max_iter = 0;  // per Nelder-Mead pass; 0 => min(400*dim, 6000)
    int restarts = 6;
    int threads = 1;
    double degeneracy_ratio = 1e-6;   // J below this multiple of J(start) => degenerate
    double blowup_ratio = 1e6;        // sup-mode runaway detection
    double box_half_width = std::log(1e4);  // log-space box for best-effort sup mode
};

struct PettyStartRecord {
    int index = 0;
    double value = 0.0;
    std::vector<double> h;  // optimizer variables mapped back to support/radial values
    bool failed = false;
};

struct PettyResult {
    std::vector<Dir> dirs;
    std::vector<double> h;          // optimal support values, |M*| = omega_n
    double value = 0.0;
    double polar_residual = 0.0;
    std::vector<double> tightness;  // h_i - h_{M}(u_i), full-cone planar case
    std::vector<PettyStartRecord> starts;
    bool maximize = false;
    bool degenerate = false;
    bool best_effort = false;
    std::string verdict = "ok";
    std::optional<Body> M;
};

namespace detail {

// Common machinery: K's cone data plus the evaluation rule for J.
struct PettyProblem {
    ConeMeasure cm;
    std::vector<double> mass;      // raw S_K masses (nonhomogeneous mode)
    std::vector<Vec2> dirs2;       // planar atom directions
    SphereGrid grid;               // grid when K is grid-based
    bool grid_based = false;
    int dim = 2;
    const OrliczFn* phi = nullptr;
    PettyMode mode = PettyMode::Homogeneous;

    double polar_vol(const std::vector<double>& h) const {
        if (!grid_based) return polar_hull_area(dirs2, h);
        double acc = 0.0;
        for (std::size_t j = 0; j < grid.size(); ++j)
            acc += grid.weights[j] * std::pow(h[j], -dim);
        return acc / static_cast<double>(dim);
    }

    double objective(const std::vector<double>& h) const {
        double pv = polar_vol(h);
        double c = std::pow(pv / unit_ball_volume(dim), 1.0 / dim);
        if (mode == PettyMode::Homogeneous) {
            std::vector<double> q(h.size());
            double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
            for (std::size_t i = 0; i < h.size(); ++i) {
                q[i] = h[i] / cm.hK[i];
                lo = std::min(lo, h[i]);
                hi = std::max(hi, h[i]);
            }
            MixedVolumeResult mv = solve_hom(cm, q, *phi, lo, hi);
            return mv.value * c;
        }
        double s = 0.0;
        for (std::size_t i = 0; i < h.size(); ++i)
            s += (*phi)(c * h[i] / cm.hK[i]) * cm.hK[i] * mass[i];
        return s;  // = n V_phi(K, c M)
    }
};

inline PettyProblem make_problem(const Body& K, const OrliczFn& phi, PettyMode mode) {
    PettyProblem p;
    p.dim = K.dim();
    p.phi = &phi;
    p.mode = mode;
    SurfaceMeasure sm = surface_measure(K);
    p.mass = sm.mass;
    p.cm = cone_measure(K);
    if (K.is_grid() && !K.as_grid().curvature.empty()) {
        p.grid_based = true;
        p.grid = K.as_grid().grid;
    } else if (K.is_ball()) {
        p.grid_based = true;
        p.grid = default_grid(K.dim());
    } else if (K.dim() == 2) {
        for (const Dir& u : p.cm.dirs) p.dirs2.push_back(to_vec2(u));
    } else {
        throw std::invalid_argument("unsupported body representation");
    }
    return p;
}

inline bool minimizes(const OrliczFn& phi, int dim, PettyMode mode, bool* known) {
    PhiClass cls = classify(phi, dim);
    *known = cls != PhiClass::Boundary;
    if (mode == PettyMode::Homogeneous)
        return cls != PhiClass::Psi;  // Phi1 and Phi2 minimize, Psi maximizes
    return cls != PhiClass::Phi2;     // Phi1 and Psi minimize, Phi2 maximizes
}

}  // namespace detail

inline PettyResult solve_petty(const Body& K, const OrliczFn& phi, PettyOptions opt = {}) {
    detail::PettyProblem prob = detail::make_problem(K, phi, opt.mode);
    const std::size_t m = prob.cm.dirs.size();
    const int n = prob.dim;

    // Symmetric cone: one variable per antipodal pair of grid nodes.
    std::vector<std::size_t> var_of_node;
    std::size_t nvars = m;
    if (opt.cone == PettyCone::Symmetric) {
        if (!prob.grid_based)
            throw std::invalid_argument("symmetric cone requires a grid representation");
        nvars = m / 2;
        var_of_node.resize(m);
        for (std::size_t j = 0; j < m; ++j) var_of_node[j] = j % nvars;
    }

    bool known = true;
    bool minimize = detail::minimizes(phi, n, opt.mode, &known);
    double sign = minimize ? 1.0 : -1.0;

    auto expand = [&](const std::vector<double>& x) {
        std::vector<double> h(m);
        for (std::size_t j = 0; j < m; ++j) {
            double v = x[opt.cone == PettyCone::Symmetric ? var_of_node[j] : j];
            h[j] = std::exp(std::clamp(v, -300.0, 300.0));
        }
        return h;
    };

    double logvr = std::log(vrad(K));
    auto objective = [&](const std::vector<double>& x) {
        // Box bounds only constrain best-effort maximization; minimizing
        // runs are left free so genuine degeneracy can be detected.
        if (!minimize)
            for (double v : x)
                if (std::abs(v - logvr) > opt.box_half_width)
                    return std::numeric_limits<double>::infinity();
        try {
            return sign * prob.objective(expand(x));
        } catch (const std::exception&) {
            return std::numeric_limits<double>::infinity();
        }
    };

    // Starts: normalized h_K, the unit function, then log-normal
    // perturbations of h_K.
    std::vector<std::vector<double>> x0s;
    std::vector<double> xK(nvars);
    for (std::size_t j = 0; j < nvars; ++j) xK[j] = std::log(prob.cm.hK[j]);
    x0s.push_back(xK);
    x0s.push_back(std::vector<double>(nvars, 0.0));
    for (int s = 2; s < opt.starts; ++s) {
        std::mt19937_64 rng(opt.seed + static_cast<unsigned long long>(s));
        std::normal_distribution<double> gauss(0.0, 0.3);
        std::vector<double> x = xK;
        for (double& v : x) v += gauss(rng);
        x0s.push_back(std::move(x));
    }
    // keep every start inside the box
    for (std::vector<double>& x : x0s)
        for (double& v : x)
            v = std::clamp(v, logvr - 0.9 * opt.box_half_width,
                           logvr + 0.9 * opt.box_half_width);

    NelderMeadOptions nm;
    nm.ftol = opt.ftol;
    nm.step = 0.05;
    nm.restarts = opt.restarts;
    nm.max_iter = opt.max_iter > 0 ? opt.max_iter
                                   : std::min<int>(400 * static_cast<int>(nvars), 6000);

    auto run_start = [&](int idx) {
        PettyStartRecord rec;
        rec.index = idx;
        try {
            NelderMeadResult r = nelder_mead(objective, x0s[idx], nm);
            rec.value = sign * r.fx;
            rec.h = expand(r.x);
        } catch (const std::exception&) {
            rec.failed = true;
        }
        return rec;
    };

    PettyResult out;
    out.maximize = !minimize;
    if (opt.threads > 1) {
        std::vector<std::future<PettyStartRecord>> futs;
        for (int i = 0; i < static_cast<int>(x0s.size()); ++i)
            futs.push_back(std::async(std::launch::async, run_start, i));
        for (auto& f : futs) out.starts.push_back(f.get());
    } else {
        for (int i = 0; i < static_cast<int>(x0s.size()); ++i)
            out.starts.push_back(run_start(i));
    }

    int best = -1;
    for (int i = 0; i < static_cast<int>(out.starts.size()); ++i) {
        if (out.starts[i].failed) continue;
        if (best < 0 || sign * out.starts[i].value < sign * out.starts[best].value) best = i;
    }
    if (best < 0) throw std::runtime_error("all starts failed");

    double j_init = prob.objective(expand(x0s[0]));
    double j_best = out.starts[best].value;
    if (minimize && j_best < opt.degeneracy_ratio * j_init) {
        out.degenerate = true;
        out.verdict = "degenerate";
    }
    if (!minimize) {
        out.best_effort = true;
        if (out.verdict == "ok") out.verdict = "best-effort";
        if (j_best > opt.blowup_ratio * j_init) {
            out.degenerate = true;
            out.verdict = "degenerate";
        }
    }
    if (!known && out.verdict == "ok") out.verdict = "unclassified-phi";

    // Rescale so |M*| = omega_n.
    std::vector<double> h = out.starts[best].h;
    double t = std::pow(prob.polar_vol(h) / unit_ball_volume(n), 1.0 / n);
    for (double& v : h) v *= t;
    out.dirs = prob.cm.dirs;
    out.h = h;
    out.value = j_best;
    out.polar_residual =
        std::abs(prob.polar_vol(h) - unit_ball_volume(n)) / unit_ball_volume(n);

    if (!out.degenerate) {
        if (prob.grid_based) {
            out.M = Body::grid_body(prob.grid, h);
        } else {
            out.M = aleksandrov_body(prob.cm.dirs, h);
        }
        out.tightness.resize(m);
        for (std::size_t i = 0; i < m; ++i)
            out.tightness[i] = h[i] - support(*out.M, prob.cm.dirs[i]);
    }
    return out;
}

// ---- star-body (affine) variant ---------------------------------------------

struct AffineResult {
    std::vector<Dir> dirs;
    std::vector<double> rho;  // optimal radial values
    double value = 0.0;
    std::vector<PettyStartRecord> starts;
    bool maximize = false;
    bool best_effort = false;
    std::string verdict = "ok";
};

namespace detail {

// |star polygon| through points rho_j * u_j (dirs sorted by angle).
inline double star_polygon_area(const std::vector<Vec2>& dirs, const std::vector<double>& rho) {
    double a = 0.0;
    std::size_t m = dirs.size();
    for (std::size_t j = 0; j < m; ++j) {
        std::size_t k = (j + 1) % m;
        a += cross(rho[j] * dirs[j], rho[k] * dirs[k]);
    }
    return 0.5 * std::abs(a);
}

}  // namespace detail

inline AffineResult solve_affine_star(const Body& K, const OrliczFn& phi,
                                      const SphereGrid& grid, PettyOptions opt = {}) {
    if (K.dim() != grid.dim) throw std::invalid_argument("grid dimension mismatch");
    detail::ConeMeasure cm = detail::cone_measure(K);
    const int n = K.dim();

    // Direction set: grid nodes merged with the atoms of S_K (planar),
    // sorted by angle. Atom indices are tracked so the defining equation
    // reads radial values off exactly.
    std::vector<double> angles;
    std::vector<Dir> dirs;
    std::vector<std::size_t> atom_index(cm.dirs.size());
    if (n == 2) {
        struct Entry { double ang; Dir u; long atom; };
        std::vector<Entry> entries;
        for (const Dir& u : grid.nodes) {
            double a = std::atan2(u[1], u[0]);
            if (a < 0) a += 2.0 * kPi;
            entries.push_back({a, u, -1});
        }
        for (std::size_t i = 0; i < cm.dirs.size(); ++i) {
            double a = std::atan2(cm.dirs[i][1], cm.dirs[i][0]);
            if (a < 0) a += 2.0 * kPi;
            entries.push_back({a, cm.dirs[i], static_cast<long>(i)});
        }
        std::sort(entries.begin(), entries.end(),
                  [](const Entry& a, const Entry& b) { return a.ang < b.ang; });
        for (std::size_t e = 0; e < entries.size(); ++e) {
            if (!dirs.empty() && entries[e].ang - angles.back() < 1e-12) {
                if (entries[e].atom >= 0) atom_index[entries[e].atom] = dirs.size() - 1;
                continue;
            }
            if (entries[e].atom >= 0) atom_index[entries[e].atom] = dirs.size();
            angles.push_back(entries[e].ang);
            dirs.push_back(entries[e].u);
        }
    } else {
        dirs = grid.nodes;
        // 3-D: atoms must coincide with grid nodes
        for (std::size_t i = 0; i < cm.dirs.size(); ++i) {
            bool found = false;
            for (std::size_t j = 0; j < dirs.size(); ++j)
                if (dot(dirs[j], cm.dirs[i]) > 1.0 - 1e-12) {
                    atom_index[i] = j;
                    found = true;
                    break;
                }
            if (!found)
                throw std::invalid_argument("surface atoms must lie on the grid in dimension 3");
        }
    }
    std::vector<Vec2> dirs2;
    if (n == 2)
        for (const Dir& u : dirs) dirs2.push_back(to_vec2(u));

    bool known = true;
    bool minimize = detail::minimizes(phi, n, PettyMode::Homogeneous, &known);
    double sign = minimize ? 1.0 : -1.0;

    auto vol_star = [&](const std::vector<double>& rho) {
        if (n == 2) return detail::star_polygon_area(dirs2, rho);
        double acc = 0.0;
        for (std::size_t j = 0; j < dirs.size(); ++j)
            acc += grid.weights[j] * std::pow(rho[j], n);
        return acc / static_cast<double>(n);
    };

    auto objective_rho = [&](const std::vector<double>& rho) {
        std::vector<double> q(cm.dirs.size());
        double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
        for (std::size_t i = 0; i < cm.dirs.size(); ++i) {
            double inv = 1.0 / rho[atom_index[i]];
            q[i] = inv / cm.hK[i];
            lo = std::min(lo, inv);
            hi = std::max(hi, inv);
        }
        MixedVolumeResult mv = detail::solve_hom(cm, q, phi, lo, hi);
        double vr = std::pow(vol_star(rho) / unit_ball_volume(n), 1.0 / n);
        return vr * mv.value;
    };

    auto objective = [&](const std::vector<double>& x) {
        if (!minimize)
            for (double v : x)
                if (std::abs(v) > opt.box_half_width)
                    return std::numeric_limits<double>::infinity();
        std::vector<double> rho(x.size());
        for (std::size_t j = 0; j < x.size(); ++j)
            rho[j] = std::exp(std::clamp(x[j], -300.0, 300.0));
        try {
            return sign * objective_rho(rho);
        } catch (const std::exception&) {
            return std::numeric_limits<double>::infinity();
        }
    };

    // Starts: rho = 1/h_K (the polar of K, exactly), rho = 1, the polar
    // of the polytope solution when available, perturbations.
    std::vector<std::vector<double>> x0s;
    std::vector<double> xpolar(dirs.size());
    for (std::size_t j = 0; j < dirs.size(); ++j)
        xpolar[j] = -std::log(support(K, dirs[j]));
    x0s.push_back(xpolar);
    x0s.push_back(std::vector<double>(dirs.size(), 0.0));
    if (minimize && n == 2) {
        try {
            PettyOptions popt = opt;
            popt.cone = PettyCone::Full;
            popt.mode = PettyMode::Homogeneous;
            popt.starts = std::min(opt.starts, 4);
            PettyResult pr = solve_petty(K, phi, popt);
            if (!pr.degenerate && pr.M) {
                std::vector<double> x(dirs.size());
                for (std::size_t j = 0; j < dirs.size(); ++j)
                    x[j] = -std::log(support(*pr.M, dirs[j]));
                x0s.push_back(std::move(x));
            }
        } catch (const std::exception&) {
        }
    }
    for (int s = static_cast<int>(x0s.size()); s < opt.starts; ++s) {
        std::mt19937_64 rng(opt.seed + 1000 + static_cast<unsigned long long>(s));
        std::normal_distribution<double> gauss(0.0, 0.2);
        std::vector<double> x = xpolar;
        for (double& v : x) v += gauss(rng);
        x0s.push_back(std::move(x));
    }

    NelderMeadOptions nm;
    nm.ftol = opt.ftol;
    nm.step = 0.05;
    nm.restarts = opt.restarts;
    nm.max_iter = opt.max_iter > 0 ? opt.max_iter
                                   : std::min<int>(400 * static_cast<int>(dirs.size()), 6000);

    AffineResult out;
    out.maximize = !minimize;
    out.best_effort = !minimize;
    for (int i = 0; i < static_cast<int>(x0s.size()); ++i) {
        PettyStartRecord rec;
        rec.index = i;
        try {
            NelderMeadResult r = nelder_mead(objective, x0s[i], nm);
            rec.value = sign * r.fx;
            rec.h.resize(r.x.size());
            for (std::size_t j = 0; j < r.x.size(); ++j) rec.h[j] = std::exp(r.x[j]);
        } catch (const std::exception&) {
            rec.failed = true;
        }
        out.starts.push_back(std::move(rec));
    }
    int best = -1;
    for (int i = 0; i < static_cast<int>(out.starts.size()); ++i) {
        if (out.starts[i].failed) continue;
        if (best < 0 || sign * out.starts[i].value < sign * out.starts[best].value) best = i;
    }
    if (best < 0) throw std::runtime_error("all starts failed");
    out.dirs = dirs;
    out.rho = out.starts[best].h;
    out.value = out.starts[best].value;
    if (!known) out.verdict = "unclassified-phi";
    else if (!minimize) out.verdict = "best-effort";
    return out;
}

}  // namespace orlicz
