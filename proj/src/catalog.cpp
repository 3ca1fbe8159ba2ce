#include "crossgeo/catalog.hpp"

#include "crossgeo/geography.hpp"
#include "crossgeo/signature.hpp"
#include "crossgeo/states.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace crossgeo {

using json = nlohmann::ordered_json;

bool KnotRecord::has_tag(const std::string& t) const {
    return std::find(tags.begin(), tags.end(), t) != tags.end();
}

KnotDiagram KnotRecord::diagram() const {
    KnotDiagram d = parse_pd(pd);
    d.set_label(name);
    return d;
}

const KnotRecord* Catalog::find(const std::string& name) const {
    for (const auto& r : records)
        if (r.name == name) return &r;
    return nullptr;
}

namespace {

KnotRecord record_from_json(const json& j) {
    KnotRecord r;
    if (!j.contains("name") || !j["name"].is_string())
        fail(ErrorCode::MalformedRecord, "record needs a string 'name'");
    if (!j.contains("pd") || !j["pd"].is_string())
        fail(ErrorCode::MalformedRecord, "record needs a string 'pd'");
    r.name = j["name"].get<std::string>();
    r.pd = j["pd"].get<std::string>();
    if (j.contains("sigma")) r.sigma = j["sigma"].get<long long>();
    if (j.contains("upsilon")) r.upsilon = j["upsilon"].get<long long>();
    if (j.contains("upsilon_note")) r.upsilon_note = j["upsilon_note"].get<std::string>();
    if (j.contains("tags"))
        for (const auto& t : j["tags"]) r.tags.push_back(t.get<std::string>());

    KnotDiagram d = r.diagram(); // parse failures propagate
    if (r.sigma && !r.has_tag("external-sigma-override")) {
        long long computed = goeritz_signature(d);
        if (computed != *r.sigma)
            fail(ErrorCode::MalformedRecord,
                 "stored sigma " + std::to_string(*r.sigma) + " disagrees with computed " +
                     std::to_string(computed));
    }
    return r;
}

} // namespace

Catalog parse_catalog(const std::string& jsonl_text) {
    Catalog cat;
    std::istringstream in(jsonl_text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            json j = json::parse(line);
            cat.records.push_back(record_from_json(j));
        } catch (const std::exception& e) {
            cat.issues.push_back({lineno, e.what()});
        }
    }
    return cat;
}

Catalog load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::FileUnreadable, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_catalog(ss.str());
}

std::string record_to_json(const KnotRecord& r) {
    json j;
    j["name"] = r.name;
    j["pd"] = r.pd;
    if (r.sigma) j["sigma"] = *r.sigma;
    if (r.upsilon) j["upsilon"] = *r.upsilon;
    if (!r.upsilon_note.empty()) j["upsilon_note"] = r.upsilon_note;
    if (!r.tags.empty()) j["tags"] = r.tags;
    return j.dump();
}

void save_catalog(const std::vector<KnotRecord>& records, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail(ErrorCode::FileUnreadable, "cannot open " + path + " for writing");
    for (const auto& r : records) out << record_to_json(r) << "\n";
}

std::pair<long long, long long> record_oss_bounds(const KnotRecord& r) {
    if (!r.upsilon)
        fail(ErrorCode::MissingInvariant, "record '" + r.name + "' carries no upsilon value");
    long long sigma = r.sigma ? *r.sigma : goeritz_signature(r.diagram());
    return oss_sg_bounds(sigma, *r.upsilon);
}

std::string diagram_to_json(const KnotDiagram& d) {
    json j;
    j["name"] = d.label();
    json pd = json::array();
    for (const auto& cr : d.crossings())
        pd.push_back(json::array({cr.edges[0], cr.edges[1], cr.edges[2], cr.edges[3]}));
    j["pd"] = pd;
    return j.dump();
}

KnotDiagram diagram_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        fail(ErrorCode::MalformedRecord, e.what());
    }
    if (!j.contains("pd") || !j["pd"].is_array())
        fail(ErrorCode::MalformedRecord, "diagram JSON needs a 'pd' array");
    std::vector<std::array<int, 4>> tuples;
    for (const auto& t : j["pd"]) {
        if (!t.is_array() || t.size() != 4)
            fail(ErrorCode::MalformedRecord, "each pd entry must be a 4-tuple");
        tuples.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>(), t[3].get<int>()});
    }
    std::string name = j.contains("name") ? j["name"].get<std::string>() : "";
    return KnotDiagram(std::move(tuples), name);
}

std::string batch_report(const KnotRecord& r, int state_cap) {
    json j;
    j["name"] = r.name;
    try {
        KnotDiagram d = r.diagram();
        const int c = d.crossing_count();
        j["crossings"] = c;
        j["writhe"] = d.writhe();
        j["positive"] = d.positive_crossings();
        j["negative"] = d.negative_crossings();
        bool alt = is_alternating(d);
        bool red = is_reduced(d);
        j["alternating"] = alt;
        j["reduced"] = red;

        long long sigma = goeritz_signature(d);
        j["sigma"] = json{{"computed", sigma}};
        if (r.sigma) j["sigma"]["stored"] = *r.sigma;

        j["turaev_genus_diagram"] = turaev_genus_diagram(d);

        if (c <= state_cap) {
            auto basics = enumerate_states(d, /*basic_only=*/true, state_cap);
            json arr = json::array();
            std::vector<SurfacePoint> pts;
            for (const auto& s : basics) {
                StateSurface f = state_surface(s);
                arr.push_back(json{{"choices", s.choice_word()},
                                   {"circles", s.n_circles},
                                   {"b1", f.b1},
                                   {"e", f.e},
                                   {"orientable", f.orientable},
                                   {"basic", true}});
                pts.push_back(surface_point(s));
            }
            j["basic_states"] = arr;

            GeographyRegion region = region_from_surfaces(pts);
            json apexes = json::array();
            for (const auto& w : region.apexes) apexes.push_back(json::array({w.apex_e, w.apex_b}));
            json generators = json::array();
            for (const auto& p : region.generators)
                generators.push_back(json::array({p.e, p.b1}));
            std::string bound_kind = (alt && red) ? "exact" : "upper";
            j["geography"] = json{{"apexes", apexes},
                                  {"generators", generators},
                                  {"gamma3", gamma3_from_region(region)},
                                  {"bound_kind", bound_kind}};

            GammaPair gh = gamma_hat_from_surfaces(pts, sigma);
            j["gamma_hat"] = json{{"plus", gh.plus.str()},
                                  {"minus", gh.minus.str()},
                                  {"bound_kind", bound_kind}};
        }

        if (r.upsilon) {
            auto [lp, lm] = oss_sg_bounds(sigma, *r.upsilon);
            j["oss"] = json{{"upsilon", *r.upsilon},
                            {"lower_plus", lp},
                            {"lower_minus", lm},
                            {"gamma4_lower", oss_gamma4_bound(sigma, *r.upsilon).str()}};
            if (!r.upsilon_note.empty()) j["oss"]["note"] = r.upsilon_note;
        }
    } catch (const std::exception& e) {
        j["error"] = e.what();
    }
    return j.dump();
}

} // namespace crossgeo
