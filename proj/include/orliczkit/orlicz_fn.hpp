#pragma once

// Orlicz weight functions phi: (0,inf) -> (0,inf) with phi(1) = 1,
// either strictly increasing (class I, with phi(0+) = 0) or strictly
// decreasing (class D, with phi(0+) = inf).
//
// Classification relative to the dimension n looks at
// F(t) = phi(t^(-1/n)): class Phi1 = increasing phi with F strictly
// convex, Phi2 = decreasing phi with F strictly concave, Psi =
// decreasing phi with F strictly convex.

#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "quadrature.hpp"
#include "sphere_grid.hpp"

namespace orlicz {

enum class PhiMono { Increasing, Decreasing };
enum class PhiClass { Phi1, Phi2, Psi, Boundary };

inline const char* to_string(PhiClass c) {
    switch (c) {
        case PhiClass::Phi1: return "Phi1";
        case PhiClass::Phi2: return "Phi2";
        case PhiClass::Psi: return "Psi";
        default: return "boundary";
    }
}

struct OrliczFn {
    std::string spec;
    std::function<double(double)> eval;
    PhiMono mono = PhiMono::Increasing;
    double deriv_left1 = 1.0;   // left derivative at t = 1
    double deriv_right1 = 1.0;  // right derivative at t = 1
    bool convex = false;        // phi convex on (0, inf)

    bool increasing() const { return mono == PhiMono::Increasing; }

    double operator()(double t) const {
        if (t < 0.0) throw std::domain_error("phi argument must be >= 0");
        if (t == 0.0) {
            if (mono == PhiMono::Decreasing)
                throw std::domain_error("phi undefined at 0");
            return 0.0;
        }
        return eval(t);
    }
};

inline OrliczFn power_law(double p) {
    if (p == 0.0) throw std::invalid_argument("power-law exponent must be nonzero");
    OrliczFn f;
    std::ostringstream os;
    os << "pow:" << p;
    f.spec = os.str();
    f.eval = [p](double t) { return std::pow(t, p); };
    f.mono = p > 0.0 ? PhiMono::Increasing : PhiMono::Decreasing;
    f.deriv_left1 = f.deriv_right1 = p;
    f.convex = (p >= 1.0 || p < 0.0);
    return f;
}

inline OrliczFn expm1_fn() {
    OrliczFn f;
    f.spec = "expm1";
    const double c = std::exp(1.0) - 1.0;
    f.eval = [c](double t) { return std::expm1(t) / c; };
    f.mono = PhiMono::Increasing;
    f.deriv_left1 = f.deriv_right1 = std::exp(1.0) / c;
    f.convex = true;
    return f;
}

// Piecewise log-log linear interpolation through (t_i, y_i); end
// segments extend as power laws. Requires phi(1) = 1 on the table.
inline OrliczFn table_fn(std::vector<double> t, std::vector<double> y,
                         const std::string& spec = "table") {
    if (t.size() != y.size() || t.size() < 2)
        throw std::invalid_argument("table needs >= 2 rows");
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] <= 0.0 || y[i] <= 0.0)
            throw std::invalid_argument("table entries must be positive");
        if (i > 0 && t[i] <= t[i - 1])
            throw std::invalid_argument("table abscissae must be strictly increasing");
    }
    int dir = y[1] > y[0] ? 1 : -1;
    for (std::size_t i = 1; i < y.size(); ++i)
        if ((y[i] > y[i - 1] ? 1 : -1) != dir)
            throw std::invalid_argument("table must be strictly monotone");

    std::vector<double> lt(t.size()), ly(y.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        lt[i] = std::log(t[i]);
        ly[i] = std::log(y[i]);
    }
    auto value = [lt, ly](double x) {
        double l = std::log(x);
        std::size_t m = lt.size();
        std::size_t i = 0;
        if (l <= lt.front()) i = 0;
        else if (l >= lt[m - 2]) i = m - 2;
        else i = static_cast<std::size_t>(std::upper_bound(lt.begin(), lt.end(), l) -
                                          lt.begin()) - 1;
        double s = (ly[i + 1] - ly[i]) / (lt[i + 1] - lt[i]);
        return std::exp(ly[i] + s * (l - lt[i]));
    };
    if (std::abs(value(1.0) - 1.0) > 1e-9)
        throw std::invalid_argument("table must satisfy phi(1) = 1");

    OrliczFn f;
    f.spec = spec;
    f.eval = value;
    f.mono = dir > 0 ? PhiMono::Increasing : PhiMono::Decreasing;
    // One-sided slopes at t = 1 from the adjoining log-log segments.
    double h = 1e-6;
    f.deriv_left1 = (value(1.0) - value(1.0 - h)) / h;
    f.deriv_right1 = (value(1.0 + h) - value(1.0)) / h;
    f.convex = false;  // not certified for tables
    return f;
}

inline OrliczFn load_table_fn(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open table: " + path);
    std::vector<double> t, y;
    double a, b;
    while (in >> a >> b) {
        t.push_back(a);
        y.push_back(b);
    }
    return table_fn(std::move(t), std::move(y), "table:" + path);
}

// "pow:<p>" | "expm1" | "table:<path>"
inline OrliczFn parse_phi(const std::string& spec) {
    if (spec.rfind("pow:", 0) == 0) return power_law(std::stod(spec.substr(4)));
    if (spec == "expm1") return expm1_fn();
    if (spec.rfind("table:", 0) == 0) return load_table_fn(spec.substr(6));
    throw std::invalid_argument("unknown phi spec: " + spec);
}

// Numeric classification on a log grid. Monotonicity of phi and the
// convexity type of F(t) = phi(t^(-1/n)) are checked by divided
// differences with a relative margin; mixed or marginal signs land in
// Boundary.
inline PhiClass classify(const OrliczFn& phi, int dim, std::size_t samples = 512,
                         double margin = 1e-9) {
    if (dim < 2) throw std::invalid_argument("dimension not supported");
    double lo = std::log(1e-6), hi = std::log(1e6);
    std::vector<double> t(samples), F(samples);
    std::size_t nfinite = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        t[i] = std::exp(lo + (hi - lo) * static_cast<double>(i) /
                                 static_cast<double>(samples - 1));
        double v = phi(std::pow(t[i], -1.0 / static_cast<double>(dim)));
        F[i] = v;
        if (std::isfinite(v)) ++nfinite;
    }
    if (nfinite < samples / 4) throw std::invalid_argument("phi not evaluable on test grid");
    int pos = 0, nonpos = 0, neg = 0, nonneg = 0;
    for (std::size_t i = 0; i + 2 < samples; ++i) {
        // skip blow-up regions where the divided differences overflow
        if (!(std::abs(F[i]) < 1e150) || !(std::abs(F[i + 1]) < 1e150) ||
            !(std::abs(F[i + 2]) < 1e150))
            continue;
        // Second divided difference: sign of F'' on [t_i, t_{i+2}].
        double d1 = (F[i + 1] - F[i]) / (t[i + 1] - t[i]);
        double d2 = (F[i + 2] - F[i + 1]) / (t[i + 2] - t[i + 1]);
        double dd = (d2 - d1) / (t[i + 2] - t[i]);
        double scale = (std::abs(F[i]) + std::abs(F[i + 2])) /
                           ((t[i + 2] - t[i]) * (t[i + 2] - t[i])) +
                       1e-300;
        if (dd > margin * scale) ++pos;
        else ++nonpos;
        if (dd < -margin * scale) ++neg;
        else ++nonneg;
    }
    bool fconvex = (nonpos == 0);
    bool fconcave = (nonneg == 0);
    if (phi.increasing()) {
        return fconvex ? PhiClass::Phi1 : PhiClass::Boundary;
    }
    if (fconcave) return PhiClass::Phi2;
    if (fconvex) return PhiClass::Psi;
    return PhiClass::Boundary;
}

struct IntegrabilityReport {
    std::vector<double> scales;
    std::vector<double> values;  // I(s), +inf when divergent
    bool satisfied = false;
};

// I(s) = integral over the sphere of phi(s |<u,e1>|). The factor |<u,e1>|
// vanishes on a great circle, so for decreasing phi the integrand is
// singular there; dyadic shells handle the band.
inline IntegrabilityReport check_symmetric_integrability(
    const OrliczFn& phi, int dim, std::vector<double> scales = {1.0, 10.0, 100.0, 1000.0}) {
    IntegrabilityReport rep;
    rep.scales = scales;
    bool all_finite = true;
    for (double s : scales) {
        double val;
        try {
            if (dim == 2) {
                // 4 * int_0^{pi/2} phi(s sin psi) dpsi, singular at psi = 0.
                auto f = [&](double psi) { return phi.eval(s * std::sin(psi)); };
                val = 4.0 * integrate_singular_at(f, 0.0, 0.5 * kPi);
            } else if (dim == 3) {
                // 4*pi * int_0^1 phi(s z) dz, singular at z = 0.
                auto f = [&](double z) { return phi.eval(s * z); };
                val = 4.0 * kPi * integrate_singular_at(f, 0.0, 1.0);
            } else {
                throw std::invalid_argument("dimension not supported");
            }
        } catch (const DivergentIntegral&) {
            val = std::numeric_limits<double>::infinity();
            all_finite = false;
        }
        rep.values.push_back(val);
    }
    bool decaying = true;
    for (std::size_t i = 1; i < rep.values.size(); ++i)
        if (!(rep.values[i] < rep.values[i - 1])) decaying = false;
    rep.satisfied = all_finite && decaying &&
                    rep.values.back() < 0.5 * rep.values.front();
    return rep;
}

}  // namespace orlicz
