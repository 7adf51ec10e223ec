#pragma once

// Planar exact geometry: convex polygons, halfplane intersection,
// polar hulls. All polygons are stored counterclockwise.

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace orlicz {

inline constexpr double kPi = std::numbers::pi;

struct Vec2 {
    double x = 0.0, y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline Vec2 normalized(Vec2 a) {
    double n = norm(a);
    if (n == 0.0) throw std::invalid_argument("zero vector");
    return {a.x / n, a.y / n};
}
inline Vec2 dir2(double theta) { return {std::cos(theta), std::sin(theta)}; }
inline double angle_of(Vec2 a) { return std::atan2(a.y, a.x); }

// Signed area, positive for counterclockwise orientation.
inline double signed_area(const std::vector<Vec2>& v) {
    double a = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Vec2& p = v[i];
        const Vec2& q = v[(i + 1) % v.size()];
        a += cross(p, q);
    }
    return 0.5 * a;
}

inline double polygon_area(const std::vector<Vec2>& v) { return std::abs(signed_area(v)); }

inline Vec2 polygon_centroid(const std::vector<Vec2>& v) {
    double a6 = 0.0;
    Vec2 c{0.0, 0.0};
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Vec2& p = v[i];
        const Vec2& q = v[(i + 1) % v.size()];
        double w = cross(p, q);
        a6 += w;
        c.x += (p.x + q.x) * w;
        c.y += (p.y + q.y) * w;
    }
    return {c.x / (3.0 * a6), c.y / (3.0 * a6)};
}

inline double polygon_support(const std::vector<Vec2>& v, Vec2 u) {
    double h = -std::numeric_limits<double>::infinity();
    for (const Vec2& p : v) h = std::max(h, dot(p, u));
    return h;
}

// Largest t with t*u inside the polygon (origin assumed interior).
inline double polygon_radial(const std::vector<Vec2>& v, Vec2 u) {
    double rho = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < v.size(); ++i) {
        Vec2 p = v[i], q = v[(i + 1) % v.size()];
        Vec2 e = q - p;
        Vec2 n{e.y, -e.x};  // outward for CCW
        double hn = dot(p, n);
        double un = dot(u, n);
        if (un > 0.0) rho = std::min(rho, hn / un);
    }
    if (!std::isfinite(rho) || rho <= 0.0)
        throw std::invalid_argument("origin not interior");
    return rho;
}

inline bool point_strictly_inside(const std::vector<Vec2>& v, Vec2 p, double tol = 0.0) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        Vec2 a = v[i], b = v[(i + 1) % v.size()];
        if (cross(b - a, p - a) <= tol) return false;
    }
    return true;
}

// Andrew monotone chain. Returns CCW hull without repeated endpoint.
inline std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
    if (pts.size() < 3) throw std::invalid_argument("hull needs >= 3 points");
    std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }),
              pts.end());
    std::size_t n = pts.size();
    if (n < 3) throw std::invalid_argument("degenerate point set");
    std::vector<Vec2> h(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0.0) --k;
        h[k++] = pts[i];
    }
    std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {
        while (k >= lower && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0.0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    if (h.size() < 3) throw std::invalid_argument("degenerate hull");
    return h;
}

// Sutherland-Hodgman clip of a convex polygon by the halfplane <p,n> <= c.
inline std::vector<Vec2> clip_halfplane(const std::vector<Vec2>& poly, Vec2 n, double c) {
    std::vector<Vec2> out;
    std::size_t m = poly.size();
    if (m == 0) return out;
    out.reserve(m + 1);
    for (std::size_t i = 0; i < m; ++i) {
        Vec2 a = poly[i], b = poly[(i + 1) % m];
        double da = dot(a, n) - c;
        double db = dot(b, n) - c;
        if (da <= 0.0) out.push_back(a);
        if ((da < 0.0 && db > 0.0) || (da > 0.0 && db < 0.0)) {
            double t = da / (da - db);
            out.push_back(a + t * (b - a));
        }
    }
    return out;
}

// Drops near-duplicate and near-collinear vertices.
inline std::vector<Vec2> simplify_polygon(const std::vector<Vec2>& poly, double tol) {
    std::vector<Vec2> v;
    double scale = 0.0;
    for (const Vec2& p : poly) scale = std::max(scale, std::max(std::abs(p.x), std::abs(p.y)));
    double eps = tol * std::max(scale, 1.0);
    for (const Vec2& p : poly) {
        if (v.empty() || norm(p - v.back()) > eps) v.push_back(p);
    }
    while (v.size() > 1 && norm(v.front() - v.back()) <= eps) v.pop_back();
    if (v.size() < 3) return v;
    std::vector<Vec2> out;
    std::size_t m = v.size();
    for (std::size_t i = 0; i < m; ++i) {
        Vec2 a = v[(i + m - 1) % m], b = v[i], c = v[(i + 1) % m];
        if (cross(b - a, c - b) > eps * norm(c - a)) out.push_back(b);
    }
    return out.size() >= 3 ? out : v;
}

// Bounded intersection of halfplanes {<x,u_i> <= c_i}. Classic deque
// sweep over angle-sorted lines; every vertex is the exact intersection
// of its two active lines, so no precision is lost to clipping.
inline std::vector<Vec2> halfplane_intersection(const std::vector<Vec2>& normals,
                                                const std::vector<double>& offsets) {
    if (normals.size() != offsets.size() || normals.size() < 3)
        throw std::invalid_argument("need >= 3 halfplanes");
    struct Line {
        Vec2 n;    // unit normal
        double c;  // offset
        double ang;
    };
    std::vector<Line> lines;
    lines.reserve(normals.size());
    for (std::size_t i = 0; i < normals.size(); ++i) {
        double nn = norm(normals[i]);
        if (nn == 0.0) throw std::invalid_argument("zero normal");
        Vec2 u{normals[i].x / nn, normals[i].y / nn};
        lines.push_back({u, offsets[i] / nn, angle_of(u)});
    }
    std::sort(lines.begin(), lines.end(),
              [](const Line& a, const Line& b) { return a.ang < b.ang; });
    // same direction (within 1e-9 rad): keep the tighter halfplane
    std::vector<Line> L;
    for (const Line& l : lines) {
        if (!L.empty() && l.ang - L.back().ang < 1e-9) {
            if (l.c < L.back().c) L.back() = l;
        } else {
            L.push_back(l);
        }
    }
    if (L.size() > 1 && L.front().ang + 2.0 * kPi - L.back().ang < 1e-9) {
        if (L.back().c < L.front().c) L.front() = L.back();
        L.pop_back();
    }
    if (L.size() < 3) throw std::invalid_argument("directions do not bound");
    // bounded iff no angular gap of pi or more between consecutive normals
    for (std::size_t i = 0; i < L.size(); ++i) {
        double next = (i + 1 < L.size()) ? L[i + 1].ang : L[0].ang + 2.0 * kPi;
        if (next - L[i].ang >= kPi - 1e-12)
            throw std::invalid_argument("directions do not bound");
    }
    auto inter = [](const Line& A, const Line& B) -> Vec2 {
        double det = cross(A.n, B.n);
        return {(A.c * B.n.y - B.c * A.n.y) / det, (B.c * A.n.x - A.c * B.n.x) / det};
    };
    // true when the corner formed by A,B lies strictly outside C
    auto bad = [&](const Line& A, const Line& B, const Line& C) {
        Vec2 p = inter(A, B);
        return dot(p, C.n) > C.c + 1e-12 * (1.0 + norm(p));
    };
    std::vector<std::size_t> dq;
    std::size_t head = 0;  // dq[head..] is the live deque
    for (std::size_t i = 0; i < L.size(); ++i) {
        while (dq.size() - head >= 2 && bad(L[dq[dq.size() - 2]], L[dq.back()], L[i]))
            dq.pop_back();
        while (dq.size() - head >= 2 && bad(L[dq[head]], L[dq[head + 1]], L[i])) ++head;
        dq.push_back(i);
    }
    while (dq.size() - head >= 3 && bad(L[dq[dq.size() - 2]], L[dq.back()], L[dq[head]]))
        dq.pop_back();
    while (dq.size() - head >= 3 && bad(L[dq[head]], L[dq[head + 1]], L[dq.back()])) ++head;
    std::vector<std::size_t> act(dq.begin() + static_cast<std::ptrdiff_t>(head), dq.end());
    std::vector<Vec2> exact;
    for (;;) {
        std::size_t mv = act.size();
        if (mv < 3) throw std::invalid_argument("directions do not bound");
        exact.assign(mv, Vec2{});
        for (std::size_t i = 0; i < mv; ++i)
            exact[(i + 1) % mv] = inter(L[act[i]], L[act[(i + 1) % mv]]);
        // drop barely-active lines: their edges have near-zero (or reversed)
        // length and an ill-defined direction
        double sc = 0.0;
        for (const Vec2& q : exact) sc = std::max(sc, std::max(std::abs(q.x), std::abs(q.y)));
        std::size_t tiny = mv;
        double tiny_len = 1e-9 * sc;
        for (std::size_t i = 0; i < mv; ++i) {
            Vec2 e = exact[(i + 1) % mv] - exact[i];  // edge i on line act[i]
            Vec2 t{-L[act[i]].n.y, L[act[i]].n.x};    // CCW tangent
            double elen = dot(e, t);
            if (elen < tiny_len) { tiny = i; tiny_len = elen; }
        }
        if (tiny == mv) break;
        act.erase(act.begin() + static_cast<std::ptrdiff_t>(tiny));
    }
    // consistency: every vertex satisfies every halfplane
    double sc = 1.0;
    for (const Vec2& q : exact) sc = std::max(sc, std::max(std::abs(q.x), std::abs(q.y)));
    for (const Vec2& q : exact)
        for (const Line& l : L)
            if (dot(q, l.n) - l.c > 1e-7 * sc)
                throw std::invalid_argument("directions do not bound");
    return exact;
}

struct PolygonEdge {
    Vec2 normal;    // unit outward
    double length;  // edge length = surface-measure atom mass
    double support; // h_K at the normal
};

inline std::vector<PolygonEdge> polygon_edges(const std::vector<Vec2>& v) {
    std::vector<PolygonEdge> edges;
    edges.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Vec2 a = v[i], b = v[(i + 1) % v.size()];
        Vec2 e = b - a;
        double len = norm(e);
        Vec2 n{e.y / len, -e.x / len};
        edges.push_back({n, len, dot(a, n)});
    }
    return edges;
}

// Polar body of a polygon with the origin interior: conv{u_i/h_i}.
inline std::vector<Vec2> polygon_polar(const std::vector<Vec2>& v) {
    std::vector<Vec2> pts;
    for (const PolygonEdge& e : polygon_edges(v)) {
        if (e.support <= 0.0) throw std::invalid_argument("origin not interior");
        pts.push_back((1.0 / e.support) * e.normal);
    }
    return convex_hull(pts);
}

// Exact |conv{u_i/h_i}| for a raw (normal, support) family; supports may
// be slack, the hull takes care of redundancy.
inline double polar_hull_area(const std::vector<Vec2>& normals, const std::vector<double>& h) {
    std::vector<Vec2> pts;
    pts.reserve(normals.size());
    for (std::size_t i = 0; i < normals.size(); ++i) {
        if (h[i] <= 0.0) throw std::invalid_argument("origin not interior");
        pts.push_back((1.0 / h[i]) * normals[i]);
    }
    return polygon_area(convex_hull(pts));
}

struct Mat2 {
    double a = 1, b = 0, c = 0, d = 1;  // row-major [[a,b],[c,d]]
    double det() const { return a * d - b * c; }
    Vec2 apply(Vec2 v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    Vec2 apply_t(Vec2 v) const { return {a * v.x + c * v.y, b * v.x + d * v.y}; }
    Mat2 inverse() const {
        double dt = det();
        if (std::abs(dt) < 1e-300) throw std::invalid_argument("singular matrix");
        return {d / dt, -b / dt, -c / dt, a / dt};
    }
    Mat2 transpose() const { return {a, c, b, d}; }
    static Mat2 rotation(double t) { return {std::cos(t), -std::sin(t), std::sin(t), std::cos(t)}; }
    static Mat2 diag(double s1, double s2) { return {s1, 0, 0, s2}; }
};

}  // namespace orlicz
