// orliczkit command line tool.
//
// Exit codes: 0 success, 1 bad input / precondition failure,
// 2 a requested certificate does not hold.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include <orliczkit/orliczkit.hpp>

namespace ok = orlicz;
using json = nlohmann::json;

namespace {

int thread_count(int cli_threads) {
    if (cli_threads > 0) return cli_threads;
    if (const char* env = std::getenv("ORLICZKIT_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty())
        std::cout << j.dump(2) << std::endl;
    else
        ok::save_json(j, out_path);
}

json certificate_json(const ok::Certificate& c) {
    return json{{"which", c.which},      {"lhs", c.lhs},
                {"rhs", c.rhs},          {"slack", c.slack},
                {"holds", c.holds},      {"hypotheses_ok", c.hypotheses_ok},
                {"notes", c.notes}};
}

json mv_json(const ok::MixedVolumeResult& r) {
    return json{{"value", r.value},
                {"residual", r.residual},
                {"bracket", {r.bracket_lo, r.bracket_hi}},
                {"iterations", r.iterations}};
}

void render_svg(const ok::Body& K, const std::string& path) {
    std::vector<ok::Vec2> pts;
    if (K.is_polygon()) {
        pts = K.as_polygon().v;
    } else if (K.dim() == 2) {
        for (int i = 0; i < 512; ++i) {
            double t = 2.0 * ok::kPi * i / 512.0;
            double r = ok::radial(K, {std::cos(t), std::sin(t), 0.0});
            pts.push_back(r * ok::dir2(t));
        }
    } else {
        throw std::invalid_argument("svg rendering is planar only");
    }
    double ext = 0.0;
    for (const ok::Vec2& p : pts) ext = std::max({ext, std::abs(p.x), std::abs(p.y)});
    double s = 220.0 / ext;
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"480\" "
           "viewBox=\"-240 -240 480 480\">\n";
    out << "<line x1=\"-240\" y1=\"0\" x2=\"240\" y2=\"0\" stroke=\"#ccc\"/>\n";
    out << "<line x1=\"0\" y1=\"-240\" x2=\"0\" y2=\"240\" stroke=\"#ccc\"/>\n";
    out << "<polygon fill=\"none\" stroke=\"#1f3b99\" stroke-width=\"1.5\" points=\"";
    for (const ok::Vec2& p : pts) out << p.x * s << "," << -p.y * s << " ";
    out << "\"/>\n</svg>\n";
}

json petty_json(const ok::PettyResult& pr) {
    json j;
    j["value"] = pr.value;
    j["verdict"] = pr.verdict;
    j["maximize"] = pr.maximize;
    j["degenerate"] = pr.degenerate;
    j["polar_residual"] = pr.polar_residual;
    json starts = json::array();
    for (const auto& s : pr.starts)
        starts.push_back({{"index", s.index}, {"value", s.value}, {"failed", s.failed}});
    j["starts"] = std::move(starts);
    if (pr.M) j["M"] = ok::body_to_json(*pr.M);
    if (!pr.tightness.empty()) {
        double worst = 0.0;
        for (double t : pr.tightness) worst = std::max(worst, std::abs(t));
        j["max_tightness_gap"] = worst;
    }
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Orlicz-Brunn-Minkowski toolkit"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "worker threads (default ORLICZKIT_THREADS or 1)");

    std::string k_path, l_path, out_path, phi_spec = "pow:1", psi_spec, which;
    std::string mode = "hom", cone = "full", grid_spec;
    int starts = 8;
    unsigned long long seed = 20240901ull;
    double p_exponent = -0.5;
    std::vector<double> segment_v;

    auto* body_cmd = app.add_subcommand("body", "inspect or render a body");
    std::string body_action = "info";
    body_cmd->add_option("action", body_action, "info|render")->required();
    body_cmd->add_option("file", k_path, "body JSON file")->required();
    body_cmd->add_option("--out", out_path, "output file");

    auto* mv_cmd = app.add_subcommand("mv", "mixed volumes");
    mv_cmd->add_option("--k", k_path)->required();
    mv_cmd->add_option("--l", l_path);
    mv_cmd->add_option("--phi", phi_spec);
    mv_cmd->add_option("--mode", mode, "hom|nonhom|polar|segment|lp");
    mv_cmd->add_option("--v", segment_v, "segment direction");
    mv_cmd->add_option("--out", out_path);

    auto* petty_cmd = app.add_subcommand("petty", "geominimal optimization");
    petty_cmd->add_option("--k", k_path)->required();
    petty_cmd->add_option("--phi", phi_spec);
    petty_cmd->add_option("--mode", mode, "hom|nonhom");
    petty_cmd->add_option("--cone", cone, "full|symmetric");
    petty_cmd->add_option("--starts", starts);
    petty_cmd->add_option("--seed", seed);
    petty_cmd->add_option("--out", out_path, "write the optimizer body JSON");

    auto* fun_cmd = app.add_subcommand("functional", "geominimal / affine surface area");
    fun_cmd->add_option("--which", which, "geominimal|affine")->required();
    fun_cmd->add_option("--k", k_path)->required();
    fun_cmd->add_option("--phi", phi_spec);
    fun_cmd->add_option("--mode", mode, "hom|nonhom");
    fun_cmd->add_option("--grid", grid_spec, "grid for the star-body variant");
    fun_cmd->add_option("--starts", starts);
    fun_cmd->add_option("--out", out_path);

    auto* cert_cmd = app.add_subcommand("certify", "inequality certificates");
    cert_cmd->add_option("--which", which,
                         "isoperimetric|santalo|cyclic|mahler|minkowski|bracket")->required();
    cert_cmd->add_option("--k", k_path)->required();
    cert_cmd->add_option("--l", l_path);
    cert_cmd->add_option("--phi", phi_spec);
    cert_cmd->add_option("--psi", psi_spec);
    cert_cmd->add_option("--out", out_path);

    auto* interp_cmd = app.add_subcommand("interpret", "variational limit of |K_eps|");
    interp_cmd->add_option("--k", k_path)->required();
    interp_cmd->add_option("--l", l_path)->required();
    std::string phi1_spec = "pow:1", phi2_spec = "pow:1";
    interp_cmd->add_option("--phi1", phi1_spec);
    interp_cmd->add_option("--phi2", phi2_spec);
    std::string csv_path;
    interp_cmd->add_option("--csv", csv_path, "write the eps table as CSV");
    interp_cmd->add_option("--out", out_path);

    auto* probe_cmd = app.add_subcommand("probe", "continuity / degeneracy / cnp probes");
    probe_cmd->add_option("--which", which, "continuity|degeneracy|cnp")->required();
    probe_cmd->add_option("--k", k_path);
    probe_cmd->add_option("--phi", phi_spec);
    probe_cmd->add_option("--p", p_exponent, "exponent for the cnp probe");
    probe_cmd->add_option("--grid", grid_spec);
    probe_cmd->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (body_cmd->parsed()) {
            ok::Body K = ok::load_body(k_path);
            if (body_action == "render") {
                if (out_path.empty()) throw std::invalid_argument("--out required for render");
                render_svg(K, out_path);
                std::cout << "wrote " << out_path << std::endl;
                return 0;
            }
            json j;
            j["dim"] = K.dim();
            j["volume"] = ok::volume(K);
            j["vrad"] = ok::vrad(K);
            if (!K.is_star()) {
                j["polar_volume"] = ok::polar_volume(K);
                ok::Radii r = ok::inner_outer_radii(K);
                j["inner_radius"] = r.inner;
                j["outer_radius"] = r.outer;
            }
            ok::Dir c = ok::body_centroid(K);
            j["centroid"] = {c[0], c[1], c[2]};
            emit(j, out_path);
            return 0;
        }
        if (mv_cmd->parsed()) {
            ok::Body K = ok::load_body(k_path);
            ok::OrliczFn phi = ok::parse_phi(phi_spec);
            json j;
            j["phi"] = phi.spec;
            j["mode"] = mode;
            if (mode == "segment") {
                if (segment_v.size() < 2) throw std::invalid_argument("--v required");
                ok::Dir v{segment_v[0], segment_v[1],
                          segment_v.size() > 2 ? segment_v[2] : 0.0};
                j["result"] = mv_json(ok::segment_mixed_volume(K, v, phi));
            } else {
                if (l_path.empty()) throw std::invalid_argument("--l required");
                ok::Body L = ok::load_body(l_path);
                if (mode == "hom") j["result"] = mv_json(ok::hom_mixed_volume(K, L, phi));
                else if (mode == "polar")
                    j["result"] = mv_json(ok::hom_mixed_volume_polar(K, L, phi));
                else if (mode == "nonhom")
                    j["result"] = {{"value", ok::nonhom_mixed_volume(K, L, phi)}};
                else if (mode == "lp") {
                    if (phi.spec.rfind("pow:", 0) != 0)
                        throw std::invalid_argument("lp mode needs pow:<p>");
                    double p = std::stod(phi.spec.substr(4));
                    j["result"] = {{"value", ok::lp_hom_closed_form(K, L, p)}};
                } else
                    throw std::invalid_argument("unknown mode: " + mode);
            }
            emit(j, out_path);
            return 0;
        }
        if (petty_cmd->parsed() || (fun_cmd->parsed() && which == "geominimal")) {
            ok::Body K = ok::load_body(k_path);
            ok::OrliczFn phi = ok::parse_phi(phi_spec);
            ok::PettyOptions opt;
            opt.mode = mode == "nonhom" ? ok::PettyMode::Nonhomogeneous
                                        : ok::PettyMode::Homogeneous;
            opt.cone = cone == "symmetric" ? ok::PettyCone::Symmetric : ok::PettyCone::Full;
            opt.starts = starts;
            opt.seed = seed;
            opt.threads = thread_count(threads);
            ok::PettyResult pr = ok::solve_petty(K, phi, opt);
            json j = petty_json(pr);
            j["phi"] = phi.spec;
            j["config"] = {{"mode", mode}, {"cone", cone}, {"starts", starts}, {"seed", seed}};
            if (petty_cmd->parsed() && !out_path.empty() && pr.M) {
                ok::save_json(ok::body_to_json(*pr.M), out_path);
                j.erase("M");
                std::cout << j.dump(2) << std::endl;
            } else {
                emit(j, out_path);
            }
            return 0;
        }
        if (fun_cmd->parsed()) {
            if (which != "affine") throw std::invalid_argument("unknown functional: " + which);
            ok::Body K = ok::load_body(k_path);
            ok::OrliczFn phi = ok::parse_phi(phi_spec);
            ok::SphereGrid grid =
                grid_spec.empty() ? ok::default_grid(K.dim()) : ok::make_grid(grid_spec);
            ok::PettyOptions opt;
            opt.starts = starts;
            opt.threads = thread_count(threads);
            ok::AffineResult ar = ok::solve_affine_star(K, phi, grid, opt);
            json j;
            j["which"] = "affine";
            j["phi"] = phi.spec;
            j["value"] = ar.value;
            j["verdict"] = ar.verdict;
            j["maximize"] = ar.maximize;
            emit(j, out_path);
            return 0;
        }
        if (cert_cmd->parsed()) {
            ok::Body K = ok::load_body(k_path);
            ok::OrliczFn phi = ok::parse_phi(phi_spec);
            ok::Certificate c;
            if (which == "isoperimetric") c = ok::certify_isoperimetric(K, phi);
            else if (which == "santalo") c = ok::certify_santalo(K, phi);
            else if (which == "mahler") c = ok::certify_mahler(K, phi);
            else if (which == "cyclic") {
                if (psi_spec.empty()) throw std::invalid_argument("--psi required");
                c = ok::certify_cyclic(K, phi, ok::parse_phi(psi_spec));
            } else if (which == "minkowski" || which == "bracket") {
                if (l_path.empty()) throw std::invalid_argument("--l required");
                ok::Body L = ok::load_body(l_path);
                c = which == "minkowski" ? ok::certify_minkowski(K, L, phi)
                                         : ok::certify_bracket(K, L, phi);
            } else
                throw std::invalid_argument("unknown certificate: " + which);
            emit(certificate_json(c), out_path);
            return c.holds ? 0 : 2;
        }
        if (interp_cmd->parsed()) {
            ok::Body K = ok::load_body(k_path);
            ok::Body L = ok::load_body(l_path);
            ok::VariationalResult vr = ok::variational_mixed_volume(
                K, L, ok::parse_phi(phi1_spec), ok::parse_phi(phi2_spec));
            if (!csv_path.empty()) {
                std::ofstream csv(csv_path);
                csv << "eps,quotient\n";
                csv.precision(17);
                for (std::size_t i = 0; i < vr.eps.size(); ++i)
                    csv << vr.eps[i] << "," << vr.quotients[i] << "\n";
            }
            json j;
            j["estimate"] = vr.estimate;
            j["direct"] = vr.direct;
            j["rel_gap"] = vr.rel_gap;
            j["eps"] = vr.eps;
            j["quotients"] = vr.quotients;
            emit(j, out_path);
            return 0;
        }
        if (probe_cmd->parsed()) {
            json j;
            if (which == "continuity") {
                ok::PettyOptions opt;
                opt.starts = 2;
                opt.max_iter = 2000;
                ok::ProbeReport rep = ok::probe_continuity(ok::parse_phi(phi_spec), {8, 16, 32, 64, 128, 256}, opt);
                j["which"] = rep.which;
                j["verdict"] = rep.verdict;
                json rows = json::array();
                for (const auto& r : rep.rows) rows.push_back({r.x, r.hom, r.nonhom});
                j["rows"] = std::move(rows);
                j["notes"] = rep.notes;
            } else if (which == "degeneracy") {
                if (k_path.empty()) throw std::invalid_argument("--k required");
                ok::ProbeReport rep =
                    ok::probe_degeneracy(ok::load_body(k_path), ok::parse_phi(phi_spec));
                j["which"] = rep.which;
                j["verdict"] = rep.verdict;
                json rows = json::array();
                for (const auto& r : rep.rows) rows.push_back({r.x, r.hom, r.nonhom});
                j["rows"] = std::move(rows);
                j["notes"] = rep.notes;
            } else if (which == "cnp") {
                ok::SphereGrid grid =
                    grid_spec.empty() ? ok::default_grid(2) : ok::make_grid(grid_spec);
                ok::CnpReport rep = ok::cnp_constant(p_exponent, grid.dim, grid);
                j["which"] = "cnp";
                j["p"] = p_exponent;
                j["mean"] = rep.mean;
                j["min"] = rep.min;
                j["max"] = rep.max;
                j["spread"] = rep.spread;
            } else {
                throw std::invalid_argument("unknown probe: " + which);
            }
            emit(j, out_path);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }
    return 1;
}
