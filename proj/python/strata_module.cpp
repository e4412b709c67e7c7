#include "strata/atlas.hpp"
#include "strata/cache.hpp"
#include "strata/classify.hpp"
#include "strata/corpus.hpp"
#include "strata/errors.hpp"
#include "strata/json_io.hpp"
#include "strata/render.hpp"
#include "strata/version.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace strata;

namespace {

py::int_ to_py_int(const exact::Int& v) {
    // Route through the decimal string so arbitrary precision survives.
    const std::string s = v.str();
    PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

py::dict class_dict(const SubsystemClass& c, const std::string& display) {
    py::dict d;
    d["id"] = c.class_id;
    d["label"] = c.label.str();
    d["node_label"] = node_label(c);
    d["display_label"] = display;
    d["orbit_size"] = c.orbit_size;
    d["weyl_index"] = to_py_int(c.weyl_index);
    d["embedding_number"] = to_py_int(c.embedding_number);
    d["dim_top"] = c.dim_top;
    d["rank"] = c.subsystem_rank;
    d["representative"] = c.representative.indices();
    d["members"] = c.members;
    return d;
}

}  // namespace

PYBIND11_MODULE(strata, m) {
    m.doc() = "Root subsystem atlases and stratification posets for semisimple Lie algebra types";
    m.attr("__version__") = kToolVersion;

    py::register_exception<ParseError>(m, "TypeParseError", PyExc_ValueError);
    py::register_exception<CapabilityError>(m, "RankLimitError", PyExc_RuntimeError);
    py::register_exception<NotPolystableError>(m, "NotPolystableError", PyExc_ValueError);

    py::class_<Atlas>(m, "Atlas")
        .def_property_readonly("type", [](const Atlas& a) { return a.spec.str(); })
        .def_property_readonly("rank", [](const Atlas& a) { return a.rs->rank(); })
        .def_property_readonly("num_roots", [](const Atlas& a) { return a.rs->num_roots(); })
        .def_property_readonly("roots", [](const Atlas& a) { return a.rs->roots(); })
        .def_property_readonly("weyl_order",
                               [](const Atlas& a) { return to_py_int(a.weyl_order_value()); })
        .def_property_readonly("checksum", [](const Atlas& a) { return a.checksum; })
        .def_property_readonly("subsystems",
                               [](const Atlas& a) {
                                   std::vector<std::vector<int>> out;
                                   out.reserve(a.subsystems.size());
                                   for (const auto& s : a.subsystems) out.push_back(s.indices());
                                   return out;
                               })
        .def_property_readonly("subsystem_classes",
                               [](const Atlas& a) { return a.partition.class_of; })
        .def_property_readonly("classes",
                               [](const Atlas& a) {
                                   py::list out;
                                   const auto names = display_labels(a.classes());
                                   for (const auto& c : a.classes())
                                       out.append(class_dict(c, names[std::size_t(c.class_id)]));
                                   return out;
                               })
        .def_property_readonly("fine_covers", [](const Atlas& a) { return a.fine.covers; })
        .def_property_readonly("coarse_covers", [](const Atlas& a) { return a.coarse.covers; })
        .def("to_json", [](const Atlas& a) { return atlas_to_json_string(a); })
        .def("to_dot", [](const Atlas& a, bool fine) { return render_dot(a, fine); },
             py::arg("fine") = false)
        .def("to_ascii", [](const Atlas& a, bool fine) { return render_ascii(a, fine); },
             py::arg("fine") = false)
        .def("consistency",
             [](const Atlas& a) {
                 py::list out;
                 for (const auto& c : consistency_check(a).checks)
                     out.append(py::make_tuple(c.name, c.passed, c.detail));
                 return out;
             })
        .def("classify",
             [](const Atlas& a, const std::vector<int>& support, bool zero) {
                 const PointSupport p{support, zero};
                 py::dict d;
                 const auto stab = support_subsystem(*a.rs, p);
                 d["stabilizer"] = stab.indices();
                 d["stabilizer_label"] = identify_type(*a.rs, stab).str();
                 const bool ps = is_polystable(*a.rs, p);
                 d["polystable"] = ps;
                 if (ps) {
                     const auto res = stratum_of(a, p);
                     d["fine_stratum"] = res.subsystem_id;
                     d["class_id"] = res.class_id;
                     const auto names = display_labels(a.classes());
                     d["class_label"] = names[std::size_t(res.class_id)];
                 }
                 return d;
             },
             py::arg("support"), py::arg("zero") = false)
        .def("__repr__", [](const Atlas& a) {
            std::ostringstream os;
            os << "<strata.Atlas " << a.spec.str() << ": " << a.subsystems.size()
               << " subsystems, " << a.classes().size() << " classes>";
            return os.str();
        });

    m.def(
        "build_atlas",
        [](const std::string& type, int rank_limit) {
            return build_atlas(TypeSpec::parse(type), {rank_limit});
        },
        py::arg("type"), py::arg("rank_limit") = kDefaultRankLimit,
        "Compute the full subsystem atlas for a Lie type such as 'G2' or 'A1A1'.");

    m.def(
        "load_atlas_json",
        [](const std::string& text) { return atlas_from_json_string(text); },
        py::arg("text"), "Parse an atlas from its JSON serialization, validating the checksum.");

    m.def(
        "weyl_order",
        [](const std::string& type) { return to_py_int(weyl_order(TypeSpec::parse(type))); },
        py::arg("type"));

    m.def(
        "canonical_type",
        [](const std::string& type) { return TypeSpec::parse(type).str(); },
        py::arg("type"), "Canonical rendering with coincidences folded, e.g. C2 -> B2.");

    m.def(
        "verify_corpus",
        [](const std::string& corpus_dir, const std::vector<std::string>& types, int rank_limit) {
            auto corpus = load_corpus(corpus_dir);
            py::list out;
            for (const auto& expected : corpus) {
                if (!types.empty()) {
                    const auto canon = TypeSpec::parse(expected.type).str();
                    bool keep = false;
                    for (const auto& t : types)
                        if (TypeSpec::parse(t).str() == canon) keep = true;
                    if (!keep) continue;
                }
                const Atlas atlas = build_atlas(TypeSpec::parse(expected.type), {rank_limit});
                const auto match = match_diagram(atlas, expected);
                py::dict d;
                d["type"] = expected.type;
                d["ok"] = match.ok && consistency_check(atlas).all_passed();
                d["diffs"] = match.diffs;
                out.append(d);
            }
            return out;
        },
        py::arg("corpus_dir"), py::arg("types") = std::vector<std::string>{},
        py::arg("rank_limit") = kDefaultRankLimit,
        "Recompute every diagram in the corpus directory and compare.");
}
