#pragma once

// JSON (de)serialization of bodies.
//
//  {"kind":"polygon","vertices":[[x,y],...]}
//  {"kind":"hpolytope","normals":[[x,y],...],"supports":[...]}
//  {"kind":"grid","dim":n,"grid":"uniform-1024"|"sym3d-590",
//   "support":[...], "curvature":[...]?}            (curvature optional)
//  {"kind":"grid", ..., "radial":[...]}              (star body)
//  {"kind":"ball","dim":n,"radius":r}

#include <fstream>
#include <string>

#include <json.hpp>

#include "body.hpp"

namespace orlicz {

using json = nlohmann::json;

inline Body body_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "polygon") {
        std::vector<Vec2> v;
        for (const auto& p : j.at("vertices"))
            v.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
        return Body::polygon(std::move(v));
    }
    if (kind == "hpolytope") {
        std::vector<Vec2> normals;
        for (const auto& p : j.at("normals"))
            normals.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
        std::vector<double> offsets = j.at("supports").get<std::vector<double>>();
        return Body::hpolytope(normals, offsets);
    }
    if (kind == "grid") {
        SphereGrid g = make_grid(j.at("grid").get<std::string>());
        if (j.contains("dim") && j.at("dim").get<int>() != g.dim)
            throw std::invalid_argument("grid/dim mismatch");
        if (j.contains("radial"))
            return Body::star(std::move(g), j.at("radial").get<std::vector<double>>());
        std::vector<double> h = j.at("support").get<std::vector<double>>();
        std::vector<double> f;
        if (j.contains("curvature")) f = j.at("curvature").get<std::vector<double>>();
        return Body::grid_body(std::move(g), std::move(h), std::move(f));
    }
    if (kind == "ball")
        return Body::ball(j.at("dim").get<int>(), j.at("radius").get<double>());
    throw std::invalid_argument("unknown body kind: " + kind);
}

inline json body_to_json(const Body& K) {
    json j;
    if (K.is_polygon()) {
        j["kind"] = "polygon";
        json verts = json::array();
        for (const Vec2& p : K.as_polygon().v) verts.push_back({p.x, p.y});
        j["vertices"] = std::move(verts);
    } else if (K.is_ball()) {
        j["kind"] = "ball";
        j["dim"] = K.dim();
        j["radius"] = K.as_ball().radius;
    } else if (K.is_grid()) {
        const GridBody& g = K.as_grid();
        j["kind"] = "grid";
        j["dim"] = g.grid.dim;
        j["grid"] = g.grid.name;
        j["support"] = g.h;
        if (!g.curvature.empty()) j["curvature"] = g.curvature;
    } else {
        const StarGrid& s = K.as_star();
        j["kind"] = "grid";
        j["dim"] = s.grid.dim;
        j["grid"] = s.grid.name;
        j["radial"] = s.rho;
    }
    return j;
}

inline Body load_body(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open body file: " + path);
    json j;
    in >> j;
    return body_from_json(j);
}

inline void save_json(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << j.dump(2) << "\n";
}

}  // namespace orlicz
