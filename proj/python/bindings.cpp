#include "crossgeo/catalog.hpp"
#include "crossgeo/diagram.hpp"
#include "crossgeo/edgepath.hpp"
#include "crossgeo/geography.hpp"
#include "crossgeo/signature.hpp"
#include "crossgeo/states.hpp"
#include "crossgeo/svg.hpp"
#include "crossgeo/torus.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace crossgeo;

namespace {

py::object rat(const Rational& r) {
    py::object fractions = py::module_::import("fractions");
    return fractions.attr("Fraction")(r.num(), r.den());
}

py::dict surface_dict(const SurfacePoint& p) {
    py::dict d;
    d["e"] = p.e;
    d["b1"] = p.b1;
    d["orientable"] = p.orientable;
    return d;
}

py::dict state_dict(const State& s) {
    StateSurface f = state_surface(s);
    py::dict d;
    d["choices"] = s.choice_word();
    d["circles"] = s.n_circles;
    d["b1"] = f.b1;
    d["e"] = f.e;
    d["orientable"] = f.orientable;
    d["basic"] = s.basic;
    return d;
}

} // namespace

PYBIND11_MODULE(_crossgeo, m) {
    m.doc() = "spanning-surface invariants of knot diagrams";

    py::register_exception<Error>(m, "CrossgeoError");

    py::class_<KnotDiagram>(m, "KnotDiagram")
        .def_property_readonly("crossings", &KnotDiagram::crossing_count)
        .def_property_readonly("label", &KnotDiagram::label)
        .def_property_readonly("writhe", &KnotDiagram::writhe)
        .def_property_readonly("positive", &KnotDiagram::positive_crossings)
        .def_property_readonly("negative", &KnotDiagram::negative_crossings)
        .def("mirror", &KnotDiagram::mirror)
        .def("pd_code", &KnotDiagram::pd_code)
        .def("__repr__", [](const KnotDiagram& d) {
            return "<KnotDiagram " + (d.label().empty() ? d.pd_code() : d.label()) + ">";
        });

    m.def("parse_pd", &parse_pd, py::arg("text"));
    m.def("pretzel_diagram", &pretzel_diagram, py::arg("params"));
    m.def("torus_diagram", &torus_diagram, py::arg("p"), py::arg("q"));
    m.def("connected_sum", &connected_sum, py::arg("d1"), py::arg("d2"));
    m.def("is_alternating", &is_alternating);
    m.def("is_reduced", &is_reduced);

    m.def(
        "states",
        [](const KnotDiagram& d, bool basic_only, int cap) {
            py::list out;
            for (const auto& s : enumerate_states(d, basic_only, cap)) out.append(state_dict(s));
            return out;
        },
        py::arg("diagram"), py::arg("basic_only") = false, py::arg("cap") = 24);
    m.def(
        "state_surface",
        [](const KnotDiagram& d, const std::string& word) {
            return state_dict(resolve(d, word));
        },
        py::arg("diagram"), py::arg("choices"));

    m.def("goeritz_signature", &goeritz_signature, py::arg("diagram"));
    m.def("traczyk_signature", &traczyk_signature, py::arg("diagram"));
    m.def("pretzel_gap_signature", &pretzel_gap_signature, py::arg("k"), py::arg("r"));

    m.def(
        "gamma",
        [](long long e, long long b1, long long sigma) {
            GammaPair g = gamma(Rational(e), Rational(b1), Rational(sigma));
            return py::make_tuple(rat(g.plus), rat(g.minus));
        },
        py::arg("e"), py::arg("b1"), py::arg("sigma"));

    m.def(
        "turaev_genus_diagram",
        [](const KnotDiagram& d) { return turaev_genus_diagram(d); },
        py::arg("diagram"));

    m.def(
        "alternating_geography",
        [](const KnotDiagram& d, int cap) {
            GeographyRegion r = alternating_region(d, cap);
            py::list apexes, generators;
            for (const auto& w : r.apexes) apexes.append(py::make_tuple(w.apex_e, w.apex_b));
            for (const auto& p : r.generators) generators.append(py::make_tuple(p.e, p.b1));
            py::dict out;
            out["apexes"] = apexes;
            out["generators"] = generators;
            out["gamma3"] = gamma3_from_region(r);
            return out;
        },
        py::arg("diagram"), py::arg("cap") = 24);

    m.def(
        "oss_sg_bounds",
        [](long long sigma, long long upsilon) {
            auto [lp, lm] = oss_sg_bounds(sigma, upsilon);
            return py::make_tuple(lp, lm);
        },
        py::arg("sigma"), py::arg("upsilon"));

    m.def(
        "pinch_surfaces",
        [](long long p, long long q) {
            PinchSequence seq = pinch_sequence(p, q);
            py::list steps;
            for (auto [a, b] : seq.steps) steps.append(py::make_tuple(a, b));
            py::dict out;
            out["sequence"] = steps;
            out["f3"] = surface_dict(pinch_surface_3(p, q));
            out["f4"] = surface_dict(pinch_surface_4(p, q));
            return out;
        },
        py::arg("p"), py::arg("q"));

    m.def(
        "candidate_table",
        [](long long n, long long sigma) {
            py::list rows;
            for (const auto& r : candidate_table(n, sigma)) {
                py::dict row;
                row["system"] = r.system.name();
                row["e"] = rat(r.e);
                row["b1"] = rat(r.b1);
                row["gamma_plus"] = rat(r.gamma_plus);
                row["gamma_minus"] = rat(r.gamma_minus);
                if (r.gamma_minus_alt) row["gamma_minus_alt"] = rat(*r.gamma_minus_alt);
                if (r.system.type == SystemType::I) {
                    row["u0"] = rat(r.system.u0);
                    row["sheets"] = r.system.sheets;
                }
                rows.append(row);
            }
            return rows;
        },
        py::arg("n"), py::arg("sigma") = 0);

    m.def(
        "batch_report",
        [](const std::string& name, const std::string& pd) {
            return batch_report(KnotRecord{name, pd, {}, {}, "", {}}, 24);
        },
        py::arg("name"), py::arg("pd"));
}
