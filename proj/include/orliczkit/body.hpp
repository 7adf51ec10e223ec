#pragma once

// Convex bodies (and star bodies) with the origin in the interior.
//
// Representations:
//   Polygon  - exact planar convex polygon, CCW vertices
//   GridBody - support samples h_j > 0 on a sphere grid, optionally with
//              the curvature density f_j of the surface area measure
//   BallRep  - centered ball
//   StarGrid - radial samples rho_j > 0 on a sphere grid (star body)
//
// H-polytope input is normalized to a Polygon on construction (redundant
// halfspaces dropped by the clipping itself). Dimensions 2 and 3 only;
// exact computations are planar, grids carry dimension 3.

#include <memory>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "geometry.hpp"
#include "sphere_grid.hpp"

namespace orlicz {

struct Polygon {
    std::vector<Vec2> v;
};

struct GridBody {
    SphereGrid grid;
    std::vector<double> h;
    std::vector<double> curvature;  // empty when unknown
    mutable std::shared_ptr<const std::vector<Vec2>> poly_cache;
};

struct BallRep {
    double radius = 1.0;
};

struct StarGrid {
    SphereGrid grid;
    std::vector<double> rho;
};

class Body {
  public:
    using Rep = std::variant<Polygon, GridBody, BallRep, StarGrid>;

    static Body polygon(std::vector<Vec2> vertices) {
        if (vertices.size() < 3) throw std::invalid_argument("polygon needs >= 3 vertices");
        if (signed_area(vertices) < 0.0)
            std::reverse(vertices.begin(), vertices.end());
        std::size_t m = vertices.size();
        for (std::size_t i = 0; i < m; ++i) {
            Vec2 a = vertices[i], b = vertices[(i + 1) % m], c = vertices[(i + 2) % m];
            // relative test: sine of the turning angle must be positive
            if (cross(b - a, c - b) <= 1e-12 * norm(b - a) * norm(c - b))
                throw std::invalid_argument("polygon not strictly convex");
        }
        return Body(2, Polygon{std::move(vertices)});
    }

    static Body hpolytope(const std::vector<Vec2>& normals, const std::vector<double>& offsets) {
        std::vector<Vec2> v = halfplane_intersection(normals, offsets);
        return polygon(std::move(v));
    }

    static Body grid_body(SphereGrid grid, std::vector<double> h,
                          std::vector<double> curvature = {}) {
        if (h.size() != grid.size())
            throw std::invalid_argument("support sample count mismatch");
        for (double x : h)
            if (!(x > 0.0)) throw std::invalid_argument("origin not interior");
        if (!curvature.empty()) {
            if (curvature.size() != grid.size())
                throw std::invalid_argument("curvature sample count mismatch");
            for (double x : curvature)
                if (!(x > 0.0)) throw std::invalid_argument("curvature must be positive");
        }
        int d = grid.dim;
        return Body(d, GridBody{std::move(grid), std::move(h), std::move(curvature), nullptr});
    }

    static Body ball(int dim, double radius) {
        if (dim != 2 && dim != 3) throw std::invalid_argument("dimension not supported");
        if (!(radius > 0.0)) throw std::invalid_argument("radius must be positive");
        return Body(dim, BallRep{radius});
    }

    static Body star(SphereGrid grid, std::vector<double> rho) {
        if (rho.size() != grid.size())
            throw std::invalid_argument("radial sample count mismatch");
        for (double x : rho)
            if (!(x > 0.0)) throw std::invalid_argument("radial values must be positive");
        int d = grid.dim;
        return Body(d, StarGrid{std::move(grid), std::move(rho)});
    }

    int dim() const { return dim_; }
    const Rep& rep() const { return rep_; }

    bool is_polygon() const { return std::holds_alternative<Polygon>(rep_); }
    bool is_grid() const { return std::holds_alternative<GridBody>(rep_); }
    bool is_ball() const { return std::holds_alternative<BallRep>(rep_); }
    bool is_star() const { return std::holds_alternative<StarGrid>(rep_); }

    const Polygon& as_polygon() const { return std::get<Polygon>(rep_); }
    const GridBody& as_grid() const { return std::get<GridBody>(rep_); }
    const BallRep& as_ball() const { return std::get<BallRep>(rep_); }
    const StarGrid& as_star() const { return std::get<StarGrid>(rep_); }

  private:
    Body(int dim, Rep rep) : dim_(dim), rep_(std::move(rep)) {}
    int dim_;
    Rep rep_;
};

// ---- grid-body helpers -------------------------------------------------

// Exact polygon realized by the support samples of a planar grid body,
// i.e. the intersection of the sampled halfplanes.
inline const std::vector<Vec2>& gridbody_polygon(const GridBody& g) {
    if (g.grid.dim != 2) throw std::invalid_argument("planar representation only");
    if (!g.poly_cache) {
        std::vector<Vec2> normals;
        normals.reserve(g.grid.size());
        for (const Dir& u : g.grid.nodes) normals.push_back(to_vec2(u));
        g.poly_cache = std::make_shared<const std::vector<Vec2>>(
            halfplane_intersection(normals, g.h));
    }
    return *g.poly_cache;
}

// Radial function of an intersection of halfspaces, any dimension.
inline double halfspace_radial(const std::vector<Dir>& dirs, const std::vector<double>& h,
                               const Dir& u) {
    double rho = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < dirs.size(); ++j) {
        double c = dot(dirs[j], u);
        if (c > 0.0) rho = std::min(rho, h[j] / c);
    }
    if (!std::isfinite(rho) || rho <= 0.0) throw std::invalid_argument("origin not interior");
    return rho;
}

// Radial function of the planar star polygon with vertices rho_j * u_j
// (nodes assumed sorted by angle, as uniform grids are).
inline double star_radial_2d(const StarGrid& s, Vec2 u) {
    const std::size_t m = s.grid.size();
    double theta = std::atan2(u.y, u.x);
    if (theta < 0.0) theta += 2.0 * kPi;
    double step = 2.0 * kPi / static_cast<double>(m);
    std::size_t j = static_cast<std::size_t>(theta / step) % m;
    std::size_t k = (j + 1) % m;
    Vec2 a = s.rho[j] * to_vec2(s.grid.nodes[j]);
    Vec2 b = s.rho[k] * to_vec2(s.grid.nodes[k]);
    // Ray t*u meets the chord [a,b]: t*cross(u, b-a) = cross(a, b).
    double denom = cross(u, b - a);
    if (std::abs(denom) < 1e-300) return 0.5 * (s.rho[j] + s.rho[k]);
    return cross(a, b) / denom;
}

// ---- support / radial ----------------------------------------------------

inline double support(const Body& K, const Dir& u);

inline double support2(const Body& K, Vec2 u) { return support(K, to_dir(u)); }

inline double support(const Body& K, const Dir& u) {
    if (K.is_polygon()) return polygon_support(K.as_polygon().v, to_vec2(u));
    if (K.is_ball()) return K.as_ball().radius;
    if (K.is_grid()) {
        const GridBody& g = K.as_grid();
        if (g.grid.dim == 2) return polygon_support(gridbody_polygon(g), to_vec2(u));
        // 3-D grid bodies: exact at their own nodes, nearest sample elsewhere.
        double best = -2.0;
        std::size_t jb = 0;
        for (std::size_t j = 0; j < g.grid.size(); ++j) {
            double c = dot(g.grid.nodes[j], u);
            if (c > best) { best = c; jb = j; }
        }
        if (best > 1.0 - 1e-12) return g.h[jb];
        // support of the sampled halfspace body along u, via its radial rep
        double hmax = 0.0;
        for (std::size_t j = 0; j < g.grid.size(); ++j) {
            double r = halfspace_radial(g.grid.nodes, g.h, g.grid.nodes[j]);
            hmax = std::max(hmax, r * dot(g.grid.nodes[j], u));
        }
        return hmax;
    }
    const StarGrid& s = K.as_star();
    double hmax = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < s.grid.size(); ++j)
        hmax = std::max(hmax, s.rho[j] * dot(s.grid.nodes[j], u));
    return hmax;
}

inline double radial(const Body& K, const Dir& u) {
    if (K.is_polygon()) return polygon_radial(K.as_polygon().v, to_vec2(u));
    if (K.is_ball()) return K.as_ball().radius;
    if (K.is_grid()) {
        const GridBody& g = K.as_grid();
        return halfspace_radial(g.grid.nodes, g.h, u);
    }
    const StarGrid& s = K.as_star();
    if (s.grid.dim == 2) return star_radial_2d(s, to_vec2(u));
    double best = -2.0;
    std::size_t jb = 0;
    for (std::size_t j = 0; j < s.grid.size(); ++j) {
        double c = dot(s.grid.nodes[j], u);
        if (c > best) { best = c; jb = j; }
    }
    return s.rho[jb];
}

// ---- volumes -------------------------------------------------------------

inline double volume(const Body& K) {
    if (K.is_polygon()) return polygon_area(K.as_polygon().v);
    if (K.is_ball()) return unit_ball_volume(K.dim()) * std::pow(K.as_ball().radius, K.dim());
    if (K.is_grid()) {
        const GridBody& g = K.as_grid();
        int n = g.grid.dim;
        if (!g.curvature.empty()) {
            double s = 0.0;
            for (std::size_t j = 0; j < g.grid.size(); ++j)
                s += g.grid.weights[j] * g.h[j] * g.curvature[j];
            return s / static_cast<double>(n);
        }
        if (n == 2) return polygon_area(gridbody_polygon(g));
        throw std::invalid_argument("curvature required");
    }
    const StarGrid& s = K.as_star();
    int n = s.grid.dim;
    double acc = 0.0;
    for (std::size_t j = 0; j < s.grid.size(); ++j)
        acc += s.grid.weights[j] * std::pow(s.rho[j], n);
    return acc / static_cast<double>(n);
}

inline double polar_volume(const Body& K) {
    if (K.is_polygon()) return polygon_area(polygon_polar(K.as_polygon().v));
    if (K.is_ball())
        return unit_ball_volume(K.dim()) * std::pow(K.as_ball().radius, -K.dim());
    if (K.is_grid()) {
        const GridBody& g = K.as_grid();
        int n = g.grid.dim;
        double acc = 0.0;
        for (std::size_t j = 0; j < g.grid.size(); ++j)
            acc += g.grid.weights[j] * std::pow(g.h[j], -n);
        return acc / static_cast<double>(n);
    }
    throw std::invalid_argument("polar volume requires a convex representation");
}

inline Body polar(const Body& K) {
    if (K.is_polygon()) return Body::polygon(polygon_polar(K.as_polygon().v));
    if (K.is_ball()) return Body::ball(K.dim(), 1.0 / K.as_ball().radius);
    if (K.is_grid()) {
        const GridBody& g = K.as_grid();
        std::vector<double> h(g.grid.size());
        for (std::size_t j = 0; j < g.grid.size(); ++j)
            h[j] = 1.0 / halfspace_radial(g.grid.nodes, g.h, g.grid.nodes[j]);
        return Body::grid_body(g.grid, std::move(h));
    }
    throw std::invalid_argument("polar requires a convex representation");
}

inline double vrad(const Body& K) {
    return std::pow(volume(K) / unit_ball_volume(K.dim()), 1.0 / K.dim());
}

// ---- rigid motions / linear images ----------------------------------------

inline Dir body_centroid(const Body& K) {
    if (K.is_polygon()) {
        Vec2 c = polygon_centroid(K.as_polygon().v);
        return {c.x, c.y, 0.0};
    }
    if (K.is_ball()) return {0.0, 0.0, 0.0};
    // Star decomposition: centroid = sum w rho^{n+1} u / ((n+1) |K|).
    const SphereGrid& grid = K.is_grid() ? K.as_grid().grid : K.as_star().grid;
    int n = grid.dim;
    double cx = 0, cy = 0, cz = 0, vol = 0;
    for (std::size_t j = 0; j < grid.size(); ++j) {
        double r = radial(K, grid.nodes[j]);
        double rn = std::pow(r, n);
        vol += grid.weights[j] * rn;
        double w = grid.weights[j] * rn * r / static_cast<double>(n + 1);
        cx += w * grid.nodes[j][0];
        cy += w * grid.nodes[j][1];
        cz += w * grid.nodes[j][2];
    }
    vol /= static_cast<double>(n);
    return {cx / vol, cy / vol, cz / vol};
}

inline Body translate(const Body& K, const Dir& z) {
    if (K.is_polygon()) {
        std::vector<Vec2> v = K.as_polygon().v;
        for (Vec2& p : v) p = p + Vec2{z[0], z[1]};
        return Body::polygon(std::move(v));
    }
    if (K.is_grid()) {
        GridBody g = K.as_grid();
        g.poly_cache.reset();
        for (std::size_t j = 0; j < g.grid.size(); ++j) g.h[j] += dot(g.grid.nodes[j], z);
        return Body::grid_body(std::move(g.grid), std::move(g.h), std::move(g.curvature));
    }
    if (K.is_ball()) {
        // leaves the ball family: re-express as a grid body
        SphereGrid grid = default_grid(K.dim());
        double r = K.as_ball().radius;
        std::vector<double> h(grid.size()), f(grid.size(), std::pow(r, K.dim() - 1));
        for (std::size_t j = 0; j < grid.size(); ++j) h[j] = r + dot(grid.nodes[j], z);
        return Body::grid_body(std::move(grid), std::move(h), std::move(f));
    }
    throw std::invalid_argument("translation not supported for star bodies");
}

inline Body scale_body(const Body& K, double s) {
    if (!(s > 0.0)) throw std::invalid_argument("scale must be positive");
    if (K.is_polygon()) {
        std::vector<Vec2> v = K.as_polygon().v;
        for (Vec2& p : v) p = s * p;
        return Body::polygon(std::move(v));
    }
    if (K.is_ball()) return Body::ball(K.dim(), s * K.as_ball().radius);
    if (K.is_grid()) {
        GridBody g = K.as_grid();
        for (double& x : g.h) x *= s;
        for (double& x : g.curvature) x *= std::pow(s, g.grid.dim - 1);
        return Body::grid_body(std::move(g.grid), std::move(g.h), std::move(g.curvature));
    }
    StarGrid st = K.as_star();
    for (double& x : st.rho) x *= s;
    return Body::star(std::move(st.grid), std::move(st.rho));
}

// Planar linear image. Support transforms as h_{AK}(v) = |A^t v| h_K(u),
// the curvature density as f_{AK}(v) = (det A)^2 f_K(u) / |A^t v|^{n+1},
// with u = A^t v / |A^t v|.
inline Body linear_image(const Body& K, const Mat2& A) {
    if (std::abs(A.det()) < 1e-300) throw std::invalid_argument("singular matrix");
    if (K.is_polygon()) {
        std::vector<Vec2> v = K.as_polygon().v;
        for (Vec2& p : v) p = A.apply(p);
        return Body::polygon(std::move(v));
    }
    if (K.is_ball()) {
        if (K.dim() != 2) throw std::invalid_argument("planar linear images only");
        double r = K.as_ball().radius;
        SphereGrid grid = default_grid(2);
        std::vector<double> h(grid.size()), f(grid.size());
        double det2 = A.det() * A.det();
        for (std::size_t j = 0; j < grid.size(); ++j) {
            Vec2 at = A.apply_t(to_vec2(grid.nodes[j]));
            double s = norm(at);
            h[j] = r * s;
            f[j] = r * det2 / (s * s * s);
        }
        return Body::grid_body(std::move(grid), std::move(h), std::move(f));
    }
    if (K.is_grid()) {
        const GridBody& g = K.as_grid();
        if (g.grid.dim != 2) throw std::invalid_argument("planar linear images only");
        std::vector<double> h(g.grid.size());
        std::vector<double> f;
        double det2 = A.det() * A.det();
        bool has_f = !g.curvature.empty();
        if (has_f) f.resize(g.grid.size());
        const std::vector<Vec2>& poly = gridbody_polygon(g);
        double step = 2.0 * kPi / static_cast<double>(g.grid.size());
        for (std::size_t j = 0; j < g.grid.size(); ++j) {
            Vec2 at = A.apply_t(to_vec2(g.grid.nodes[j]));
            double s = norm(at);
            Vec2 u = (1.0 / s) * at;
            h[j] = s * polygon_support(poly, u);
            if (has_f) {
                // curvature sampled off-node: linear interpolation in angle
                double th = angle_of(u);
                if (th < 0.0) th += 2.0 * kPi;
                double pos = th / step;
                std::size_t j0 = static_cast<std::size_t>(pos) % g.grid.size();
                std::size_t j1 = (j0 + 1) % g.grid.size();
                double t = pos - std::floor(pos);
                double fk = (1.0 - t) * g.curvature[j0] + t * g.curvature[j1];
                f[j] = det2 * fk / (s * s * s);
            }
        }
        return Body::grid_body(g.grid, std::move(h), std::move(f));
    }
    const StarGrid& st = K.as_star();
    if (st.grid.dim != 2) throw std::invalid_argument("planar linear images only");
    Mat2 Ainv = A.inverse();
    std::vector<double> rho(st.grid.size());
    for (std::size_t j = 0; j < st.grid.size(); ++j) {
        Vec2 w = Ainv.apply(to_vec2(st.grid.nodes[j]));
        double s = norm(w);
        rho[j] = star_radial_2d(st, (1.0 / s) * w) / s;
    }
    return Body::star(st.grid, std::move(rho));
}

// ---- radii / distances -----------------------------------------------------

struct Radii {
    double inner = 0.0;  // min of the support function
    double outer = 0.0;  // max of the support function
};

inline Radii inner_outer_radii(const Body& K) {
    if (K.is_ball()) return {K.as_ball().radius, K.as_ball().radius};
    if (K.is_polygon() || (K.is_grid() && K.dim() == 2)) {
        const std::vector<Vec2>& v =
            K.is_polygon() ? K.as_polygon().v : gridbody_polygon(K.as_grid());
        Radii r{std::numeric_limits<double>::infinity(), 0.0};
        for (const PolygonEdge& e : polygon_edges(v)) r.inner = std::min(r.inner, e.support);
        for (const Vec2& p : v) r.outer = std::max(r.outer, norm(p));
        if (!(r.inner > 0.0)) throw std::invalid_argument("origin not interior");
        return r;
    }
    if (K.is_grid()) {
        const GridBody& g = K.as_grid();
        Radii r{std::numeric_limits<double>::infinity(), 0.0};
        for (std::size_t j = 0; j < g.grid.size(); ++j) {
            r.inner = std::min(r.inner, g.h[j]);
            r.outer = std::max(r.outer, radial(K, g.grid.nodes[j]));
        }
        return r;
    }
    const StarGrid& s = K.as_star();
    Radii r{std::numeric_limits<double>::infinity(), 0.0};
    for (double x : s.rho) {
        r.inner = std::min(r.inner, x);
        r.outer = std::max(r.outer, x);
    }
    return r;
}

// Sup-norm distance of support functions over a dense direction set:
// 4096 uniform angles plus both bodies' edge normals and vertex
// directions (planar exact reps); grid nodes in dimension 3.
inline double hausdorff_distance(const Body& K, const Body& L) {
    if (K.dim() != L.dim()) throw std::invalid_argument("dimension mismatch");
    std::vector<Dir> dirs;
    if (K.dim() == 2) {
        for (std::size_t j = 0; j < 4096; ++j) {
            double t = 2.0 * kPi * static_cast<double>(j) / 4096.0;
            dirs.push_back({std::cos(t), std::sin(t), 0.0});
        }
        for (const Body* B : {&K, &L}) {
            if (B->is_ball() || B->is_star()) continue;
            const std::vector<Vec2>& v =
                B->is_polygon() ? B->as_polygon().v : gridbody_polygon(B->as_grid());
            for (const PolygonEdge& e : polygon_edges(v)) dirs.push_back(to_dir(e.normal));
            for (const Vec2& p : v) dirs.push_back(to_dir(normalized(p)));
        }
    } else {
        SphereGrid g = default_grid(3);
        dirs = g.nodes;
        for (const Body* B : {&K, &L})
            if (B->is_grid())
                dirs.insert(dirs.end(), B->as_grid().grid.nodes.begin(),
                            B->as_grid().grid.nodes.end());
    }
    double d = 0.0;
    for (const Dir& u : dirs) d = std::max(d, std::abs(support(K, u) - support(L, u)));
    return d;
}

// ---- surface area measure ---------------------------------------------------

// Unified atomized view of S_K: directions with masses and the support
// values there. Exact atoms for polygons, w_j * f_j node masses for grid
// bodies with curvature, constant density for balls (on the given or
// default grid).
struct SurfaceMeasure {
    std::vector<Dir> dirs;
    std::vector<double> mass;
    std::vector<double> support;
    double total() const {
        double s = 0.0;
        for (double m : mass) s += m;
        return s;
    }
};

inline SurfaceMeasure surface_measure(const Body& K,
                                      const std::optional<SphereGrid>& grid = std::nullopt) {
    SurfaceMeasure sm;
    if (K.is_polygon() || (K.is_grid() && K.as_grid().curvature.empty() && K.dim() == 2)) {
        const std::vector<Vec2>& v =
            K.is_polygon() ? K.as_polygon().v : gridbody_polygon(K.as_grid());
        for (const PolygonEdge& e : polygon_edges(v)) {
            sm.dirs.push_back(to_dir(e.normal));
            sm.mass.push_back(e.length);
            sm.support.push_back(e.support);
        }
        return sm;
    }
    if (K.is_grid()) {
        const GridBody& g = K.as_grid();
        if (g.curvature.empty()) throw std::invalid_argument("curvature required");
        sm.dirs = g.grid.nodes;
        sm.support = g.h;
        sm.mass.resize(g.grid.size());
        for (std::size_t j = 0; j < g.grid.size(); ++j)
            sm.mass[j] = g.grid.weights[j] * g.curvature[j];
        return sm;
    }
    if (K.is_ball()) {
        double r = K.as_ball().radius;
        SphereGrid g = grid ? *grid : default_grid(K.dim());
        if (g.dim != K.dim()) throw std::invalid_argument("grid dimension mismatch");
        double f = std::pow(r, K.dim() - 1);
        sm.dirs = g.nodes;
        sm.support.assign(g.size(), r);
        sm.mass.resize(g.size());
        for (std::size_t j = 0; j < g.size(); ++j) sm.mass[j] = g.weights[j] * f;
        return sm;
    }
    throw std::invalid_argument("surface measure requires a convex representation");
}

// ---- Wulff shape / gauge intersections ---------------------------------------

// Planar intersection body of the halfplanes {<x,u_i> <= f_i}.
inline Body aleksandrov_body(const std::vector<Dir>& dirs, const std::vector<double>& f) {
    if (dirs.size() != f.size()) throw std::invalid_argument("size mismatch");
    std::vector<Vec2> normals;
    normals.reserve(dirs.size());
    for (const Dir& u : dirs) {
        if (std::abs(u[2]) > 1e-14)
            throw std::invalid_argument("planar construction only");
        normals.push_back(to_vec2(u));
    }
    return Body::polygon(halfplane_intersection(normals, f));
}

}  // namespace orlicz
