#pragma once

// Quadrature grids on S^1 and S^2. Both families are antipodally
// symmetric: node j + N/2 is the antipode of node j, with equal weight.
//
// n=2: uniform angles, exact for trigonometric polynomials.
// n=3: symmetrized Fibonacci layout (equal weights, 295 antipodal pairs
//      for the default 590-node grid). Weights sum to 4*pi exactly.

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "geometry.hpp"

namespace orlicz {

using Dir = std::array<double, 3>;

inline double dot(const Dir& a, const Dir& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
inline Dir neg(const Dir& a) { return {-a[0], -a[1], -a[2]}; }
inline Vec2 to_vec2(const Dir& a) { return {a[0], a[1]}; }
inline Dir to_dir(Vec2 v) { return {v.x, v.y, 0.0}; }

inline double sphere_area(int dim) {
    if (dim == 2) return 2.0 * kPi;
    if (dim == 3) return 4.0 * kPi;
    throw std::invalid_argument("dimension not supported");
}

inline double unit_ball_volume(int dim) {
    if (dim == 2) return kPi;
    if (dim == 3) return 4.0 * kPi / 3.0;
    throw std::invalid_argument("dimension not supported");
}

struct SphereGrid {
    int dim = 2;
    std::string name;
    std::vector<Dir> nodes;
    std::vector<double> weights;

    std::size_t size() const { return nodes.size(); }

    // Index of -nodes[j]; grids are built so this is j +- N/2.
    std::size_t antipode(std::size_t j) const {
        std::size_t half = nodes.size() / 2;
        return j < half ? j + half : j - half;
    }
};

// m equally spaced angles, trapezoid weights 2*pi/m. m must be even so
// the grid is antipodally closed.
inline SphereGrid uniform_circle_grid(std::size_t m) {
    if (m < 4 || m % 2 != 0) throw std::invalid_argument("grid size must be even and >= 4");
    SphereGrid g;
    g.dim = 2;
    g.name = "uniform-" + std::to_string(m);
    g.nodes.reserve(m);
    g.weights.assign(m, 2.0 * kPi / static_cast<double>(m));
    for (std::size_t j = 0; j < m; ++j) {
        double t = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(m);
        g.nodes.push_back({std::cos(t), std::sin(t), 0.0});
    }
    return g;
}

// Fibonacci layout on the open upper hemisphere, completed by antipodes.
// Equal weights; adequate for the smooth integrands used here.
inline SphereGrid symmetric_sphere_grid(std::size_t m) {
    if (m < 6 || m % 2 != 0) throw std::invalid_argument("grid size must be even and >= 6");
    SphereGrid g;
    g.dim = 3;
    g.name = "sym3d-" + std::to_string(m);
    std::size_t half = m / 2;
    const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
    g.nodes.resize(m);
    g.weights.assign(m, 4.0 * kPi / static_cast<double>(m));
    for (std::size_t j = 0; j < half; ++j) {
        // z in (0,1): strictly upper hemisphere, so pairs never collide.
        double z = (static_cast<double>(j) + 0.5) / static_cast<double>(half);
        double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        double phi = 2.0 * kPi * std::fmod(static_cast<double>(j) / golden, 1.0);
        Dir u{r * std::cos(phi), r * std::sin(phi), z};
        g.nodes[j] = u;
        g.nodes[j + half] = neg(u);
    }
    return g;
}

inline SphereGrid make_grid(const std::string& name) {
    auto parse_count = [&](const std::string& prefix) {
        return static_cast<std::size_t>(std::stoul(name.substr(prefix.size())));
    };
    if (name.rfind("uniform-", 0) == 0) return uniform_circle_grid(parse_count("uniform-"));
    if (name.rfind("sym3d-", 0) == 0) return symmetric_sphere_grid(parse_count("sym3d-"));
    throw std::invalid_argument("unknown grid spec: " + name);
}

inline SphereGrid default_grid(int dim) {
    if (dim == 2) return uniform_circle_grid(1024);
    if (dim == 3) return symmetric_sphere_grid(590);
    throw std::invalid_argument("dimension not supported");
}

}  // namespace orlicz
