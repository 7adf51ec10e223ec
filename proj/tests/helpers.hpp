#pragma once

// Shared test utilities: deterministic random bodies and independent
// oracles kept deliberately separate from the library implementations.

#include <random>
#include <vector>

#include <orliczkit/orliczkit.hpp>

namespace testutil {

using namespace orlicz;

// Random convex polygon with the origin well inside: sorted angles with
// a minimum gap, radii in [0.6, 1.8].
inline Body random_polygon(std::mt19937_64& rng, int min_verts = 5, int max_verts = 10) {
    std::uniform_int_distribution<int> nv(min_verts, max_verts);
    std::uniform_real_distribution<double> uangle(0.0, 2.0 * kPi);
    std::uniform_real_distribution<double> urad(0.6, 1.8);
    for (int attempt = 0; attempt < 100; ++attempt) {
        int m = nv(rng);
        std::vector<double> ang(m);
        for (double& a : ang) a = uangle(rng);
        std::sort(ang.begin(), ang.end());
        bool spaced = true;
        for (int i = 0; i < m; ++i) {
            double gap = (i + 1 < m ? ang[i + 1] : ang[0] + 2.0 * kPi) - ang[i];
            if (gap < 0.15 || gap > 0.6 * 2.0 * kPi) spaced = false;
        }
        if (!spaced) continue;
        std::vector<Vec2> pts;
        for (int i = 0; i < m; ++i) pts.push_back(urad(rng) * dir2(ang[i]));
        try {
            std::vector<Vec2> hull = convex_hull(pts);
            if (!point_strictly_inside(hull, {0.0, 0.0}, 1e-3)) continue;
            return Body::polygon(hull);
        } catch (const std::exception&) {
            continue;
        }
    }
    throw std::runtime_error("random polygon generation failed");
}

inline Body random_centered_polygon(std::mt19937_64& rng) {
    Body K = random_polygon(rng);
    return translate(K, neg(body_centroid(K)));
}

// Random well-conditioned matrix with |det| in a sane range.
inline Mat2 random_matrix(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.2, 1.2);
    for (;;) {
        Mat2 A{1.0 + u(rng), u(rng), u(rng), 1.0 + u(rng)};
        double d = std::abs(A.det());
        if (d > 0.3 && d < 5.0) return A;
    }
}

// Shoelace area oracle written against raw vertex lists.
inline double shoelace(const std::vector<Vec2>& v) {
    double a = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Vec2& p = v[i];
        const Vec2& q = v[(i + 1) % v.size()];
        a += p.x * q.y - q.x * p.y;
    }
    return 0.5 * std::abs(a);
}

// Regular m-gon circumscribed about the unit disk (support 1 at every
// edge normal).
inline Body circumscribed_mgon(int m) { return regular_polygon(m); }

}  // namespace testutil
