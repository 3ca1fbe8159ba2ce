#include "crossgeo/catalog.hpp"
#include "crossgeo/diagram.hpp"
#include "crossgeo/edgepath.hpp"
#include "crossgeo/geography.hpp"
#include "crossgeo/signature.hpp"
#include "crossgeo/states.hpp"
#include "crossgeo/svg.hpp"
#include "crossgeo/torus.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using json = nlohmann::ordered_json;
using namespace crossgeo;

namespace {

int exit_code_for(ErrorCode c) {
    switch (c) {
        case ErrorCode::NotAlternating:
        case ErrorCode::NotReduced:
        case ErrorCode::NotCoprime:
        case ErrorCode::OddProduct:
        case ErrorCode::Undefined:
        case ErrorCode::MissingInvariant:
            return 3;
        case ErrorCode::TooManyCrossings:
            return 4;
        case ErrorCode::Internal:
            return 1;
        default:
            return 2;
    }
}

int state_cap() {
    if (const char* env = std::getenv("CROSSGEO_STATE_CAP")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 24;
}

// Resolve --name: catalog entry first, then generator syntax T(p,q) / P(...).
KnotDiagram named_diagram(const std::string& name, const std::string& catalog_path) {
    {
        std::ifstream probe(catalog_path);
        if (probe) {
            Catalog cat = load_catalog(catalog_path);
            if (const KnotRecord* r = cat.find(name)) return r->diagram();
        }
    }
    auto parse_params = [](const std::string& body) {
        std::vector<int> out;
        std::istringstream ss(body);
        std::string tok;
        while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
        return out;
    };
    if (name.size() > 3 && (name[0] == 'T' || name[0] == 'P') && name[1] == '(' && name.back() == ')') {
        auto params = parse_params(name.substr(2, name.size() - 3));
        if (name[0] == 'T') {
            if (params.size() != 2) fail(ErrorCode::BadParameter, "T(p,q) takes two parameters");
            return torus_diagram(params[0], params[1]);
        }
        return pretzel_diagram(params);
    }
    fail(ErrorCode::BadParameter, "unknown name '" + name + "' (not in catalog, not T(..)/P(..))");
}

struct DiagramArgs {
    std::string pd;
    std::string name;
    std::string catalog = "data/paper.jsonl";

    void attach(CLI::App* cmd) {
        cmd->add_option("--pd", pd, "PD code, e.g. \"X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)\"");
        cmd->add_option("--name", name, "catalog entry or T(p,q)/P(q1,...,qN)");
        cmd->add_option("--catalog", catalog, "catalog path for --name lookups");
    }
    KnotDiagram get() const {
        if (!pd.empty()) return parse_pd(pd);
        if (!name.empty()) return named_diagram(name, catalog);
        fail(ErrorCode::BadParameter, "need --pd or --name");
    }
};

json state_report(const State& s) {
    StateSurface f = state_surface(s);
    return json{{"choices", s.choice_word()}, {"circles", s.n_circles},   {"b1", f.b1},
                {"e", f.e},                   {"orientable", f.orientable}, {"basic", s.basic}};
}

json region_report(const GeographyRegion& region, long long sigma,
                   const std::vector<SurfacePoint>& surfaces) {
    json apexes = json::array();
    for (const auto& w : region.apexes) apexes.push_back(json::array({w.apex_e, w.apex_b}));
    json gens = json::array();
    for (const auto& p : region.generators) gens.push_back(json::array({p.e, p.b1}));
    GammaPair gh = gamma_hat_from_surfaces(surfaces, sigma);
    return json{{"apexes", apexes},
                {"generators", gens},
                {"gamma3", gamma3_from_region(region)},
                {"gamma_hat_plus", gh.plus.str()},
                {"gamma_hat_minus", gh.minus.str()},
                {"bound_kind", "exact"}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"crossgeo: spanning-surface invariants of knot diagrams"};
    app.require_subcommand(1);

    DiagramArgs info_args, states_args, geo_args, gamma_args, turaev_args;
    bool basic_only = false;
    std::string svg_path;
    int pinch_p = 0, pinch_q = 0;
    std::string edge_params;
    bool edge_csv = false;
    long long edge_sigma = 0;
    std::string batch_path;

    auto* cmd_info = app.add_subcommand("info", "diagram summary and signature");
    info_args.attach(cmd_info);

    auto* cmd_states = app.add_subcommand("states", "Kauffman state surfaces");
    states_args.attach(cmd_states);
    cmd_states->add_flag("--basic", basic_only, "only basic states");

    auto* cmd_geo = app.add_subcommand("geography", "wedge-union geography of an alternating diagram");
    geo_args.attach(cmd_geo);
    cmd_geo->add_option("--svg", svg_path, "write an SVG rendering here");

    auto* cmd_gamma = app.add_subcommand("gamma", "Euler-normalized genus bounds from basic states");
    gamma_args.attach(cmd_gamma);

    auto* cmd_turaev = app.add_subcommand("turaev", "Turaev genus of the diagram");
    turaev_args.attach(cmd_turaev);

    auto* cmd_pinch = app.add_subcommand("pinch", "pinch surfaces of a torus knot");
    cmd_pinch->add_option("p", pinch_p)->required();
    cmd_pinch->add_option("q", pinch_q)->required();

    auto* cmd_edge = app.add_subcommand("edgepaths", "candidate surfaces of P(-3,3,n)");
    cmd_edge->add_option("params", edge_params, "-3,3,n")->required();
    cmd_edge->add_flag("--table,--csv", edge_csv, "emit the candidate table as CSV");
    auto* sig_opt = cmd_edge->add_option("--sigma", edge_sigma, "override the computed signature");

    auto* cmd_batch = app.add_subcommand("batch", "reports for a JSON-lines catalog");
    cmd_batch->add_option("catalog", batch_path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_info) {
            KnotDiagram d = info_args.get();
            json pd = json::array();
            for (const auto& cr : d.crossings())
                pd.push_back(json::array({cr.edges[0], cr.edges[1], cr.edges[2], cr.edges[3]}));
            GoeritzData g = gl_checkerboard_form(d, RegionColor::Black);
            json j{{"name", d.label()},
                   {"pd", pd},
                   {"crossings", d.crossing_count()},
                   {"writhe", d.writhe()},
                   {"positive", d.positive_crossings()},
                   {"negative", d.negative_crossings()},
                   {"alternating", is_alternating(d)},
                   {"reduced", is_reduced(d)},
                   {"sigma", g.sigma_k},
                   {"method", "goeritz"},
                   {"goeritz_dim", g.matrix.size()},
                   {"correction", g.correction}};
            std::cout << j.dump(2) << "\n";
        } else if (*cmd_states) {
            KnotDiagram d = states_args.get();
            json arr = json::array();
            for (const auto& s : enumerate_states(d, basic_only, state_cap()))
                arr.push_back(state_report(s));
            std::cout << arr.dump(2) << "\n";
        } else if (*cmd_geo) {
            KnotDiagram d = geo_args.get();
            GeographyRegion region = alternating_region(d, state_cap());
            long long sigma = goeritz_signature(d);
            std::vector<SurfacePoint> pts;
            std::vector<SurfacePoint> open_dots;
            for (const auto& s : enumerate_states(d, true, state_cap())) {
                SurfacePoint p = surface_point(s);
                pts.push_back(p);
                if (p.orientable) open_dots.push_back(p);
            }
            std::cout << region_report(region, sigma, pts).dump(2) << "\n";
            if (!svg_path.empty()) {
                std::ofstream out(svg_path);
                if (!out) fail(ErrorCode::FileUnreadable, "cannot write " + svg_path);
                out << region_svg(region, open_dots, sigma, d.label());
            }
        } else if (*cmd_gamma) {
            KnotDiagram d = gamma_args.get();
            long long sigma = goeritz_signature(d);
            std::vector<SurfacePoint> pts;
            json arr = json::array();
            for (const auto& s : enumerate_states(d, true, state_cap())) {
                SurfacePoint p = surface_point(s);
                pts.push_back(p);
                GammaPair g = gamma(p, sigma);
                arr.push_back(json{{"choices", s.choice_word()},
                                   {"e", p.e},
                                   {"b1", p.b1},
                                   {"gamma_plus", g.plus.str()},
                                   {"gamma_minus", g.minus.str()}});
            }
            GammaPair gh = gamma_hat_from_surfaces(pts, sigma);
            bool exact = is_alternating(d) && is_reduced(d);
            json j{{"sigma", sigma},
                   {"gamma_hat_plus", gh.plus.str()},
                   {"gamma_hat_minus", gh.minus.str()},
                   {"bound_kind", exact ? "exact" : "upper"},
                   {"basic_surfaces", arr}};
            std::cout << j.dump(2) << "\n";
        } else if (*cmd_turaev) {
            KnotDiagram d = turaev_args.get();
            json j{{"turaev_genus_diagram", turaev_genus_diagram(d)}};
            std::cout << j.dump(2) << "\n";
        } else if (*cmd_pinch) {
            PinchSequence seq = pinch_sequence(pinch_p, pinch_q);
            SurfacePoint f3 = pinch_surface_3(pinch_p, pinch_q);
            SurfacePoint f4 = pinch_surface_4(pinch_p, pinch_q);
            json steps = json::array();
            for (auto [a, b] : seq.steps) steps.push_back(json::array({a, b}));
            json j{{"sequence", steps},
                   {"f3", json{{"e", f3.e}, {"b1", f3.b1}}},
                   {"f4", json{{"e", f4.e}, {"b1", f4.b1}}}};
            std::cout << j.dump(2) << "\n";
        } else if (*cmd_edge) {
            std::vector<long long> params;
            {
                std::istringstream ss(edge_params);
                std::string tok;
                while (std::getline(ss, tok, ',')) params.push_back(std::stoll(tok));
            }
            if (params.size() != 3 || params[0] != -3 || params[1] != 3)
                fail(ErrorCode::BadParameter, "supported family: -3,3,n with odd n >= 3");
            long long n = params[2];
            long long sigma = sig_opt->count()
                                  ? edge_sigma
                                  : goeritz_signature(pretzel_diagram({-3, 3, (int)n}));
            auto rows = candidate_table(n, sigma);
            if (edge_csv) {
                std::cout << "system,e,b1,gamma_plus,gamma_minus\n";
                for (const auto& r : rows)
                    std::cout << r.system.name() << ',' << r.e.str() << ',' << r.b1.str() << ','
                              << r.gamma_plus.str() << ',' << r.gamma_minus.str() << "\n";
            } else {
                json arr = json::array();
                for (const auto& r : rows) {
                    json row{{"system", r.system.name()},
                             {"e", r.e.str()},
                             {"b1", r.b1.str()},
                             {"gamma_plus", r.gamma_plus.str()},
                             {"gamma_minus", r.gamma_minus.str()}};
                    if (r.system.type == SystemType::I) {
                        row["u0"] = r.system.u0.str();
                        row["sheets"] = r.system.sheets;
                        if (r.gamma_minus_alt && *r.gamma_minus_alt != r.gamma_minus) {
                            row["gamma_minus_alt"] = r.gamma_minus_alt->str();
                            row["gamma_minus_flag"] = "two evaluations differ; bounds use the smaller";
                        }
                    }
                    arr.push_back(row);
                }
                // Region generated by the candidates: integer-slope surfaces
                // plus twists of the even-framed ones.
                std::vector<SurfacePoint> pts;
                for (const auto& r : rows) {
                    if (!r.e.is_integer() || !r.b1.is_integer()) continue;
                    pts.push_back(SurfacePoint{r.e.as_integer(), (int)r.b1.as_integer(),
                                               r.e.is_zero(), Provenance::Edgepath});
                }
                GeographyRegion region = region_from_surfaces(pts);
                json apexes = json::array();
                for (const auto& w : region.apexes)
                    apexes.push_back(json::array({w.apex_e, w.apex_b}));
                // Candidate minima bound the normalized genera from below;
                // the type I row uses its conservative evaluation.
                Rational low_plus = rows[0].gamma_plus, low_minus = rows[0].gamma_minus;
                for (const auto& r : rows) {
                    Rational gm = r.gamma_minus_alt ? std::min(*r.gamma_minus_alt, r.gamma_minus)
                                                    : r.gamma_minus;
                    if (r.gamma_plus < low_plus) low_plus = r.gamma_plus;
                    if (gm < low_minus) low_minus = gm;
                }
                json gh{{"plus", low_plus.str()},
                        {"minus", low_minus.str()},
                        {"bound_kind", "lower"}};
                json j{{"n", n},
                       {"sigma", sigma},
                       {"candidates", arr},
                       {"geography_apexes", apexes},
                       {"gamma_hat", gh}};
                std::cout << j.dump(2) << "\n";
            }
        } else if (*cmd_batch) {
            Catalog cat = load_catalog(batch_path);
            for (const auto& issue : cat.issues)
                std::cerr << "line " << issue.line << ": " << issue.message << "\n";
            for (const auto& r : cat.records) std::cout << batch_report(r, state_cap()) << "\n";
        }
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 0;
}
