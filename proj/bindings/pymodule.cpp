#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "isoform/catalog.hpp"
#include "isoform/dynkin.hpp"
#include "isoform/errors.hpp"
#include "isoform/formality.hpp"
#include "isoform/render.hpp"
#include "isoform/restricted.hpp"
#include "isoform/root_system.hpp"
#include "isoform/weyl.hpp"

namespace py = pybind11;
using namespace isoform;

namespace {

py::object rat_to_py(const Rat& r) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(py::int_(r.num()), py::int_(r.den()));
}

py::list vec_to_py(const Vec& v) {
    py::list out;
    for (const Rat& c : v.coords()) out.append(rat_to_py(c));
    return out;
}

py::list vecs_to_py(const std::vector<Vec>& vs) {
    py::list out;
    for (const Vec& v : vs) out.append(vec_to_py(v));
    return out;
}

Rat py_to_rat(py::handle h) {
    if (py::isinstance<py::int_>(h)) return Rat(h.cast<long long>());
    if (py::isinstance<py::tuple>(h)) {
        auto t = h.cast<py::tuple>();
        if (t.size() != 2) throw py::type_error("rational tuple must be (numerator, denominator)");
        return Rat(t[0].cast<long long>(), t[1].cast<long long>());
    }
    if (py::hasattr(h, "numerator") && py::hasattr(h, "denominator"))
        return Rat(h.attr("numerator").cast<long long>(), h.attr("denominator").cast<long long>());
    throw py::type_error("expected an int, a Fraction, or a (numerator, denominator) tuple");
}

Vec py_to_vec(py::handle seq) {
    std::vector<Rat> coords;
    for (py::handle item : py::iter(seq)) coords.push_back(py_to_rat(item));
    return Vec(std::move(coords));
}

std::vector<Vec> py_to_vecs(py::handle seq) {
    std::vector<Vec> out;
    for (py::handle item : py::iter(seq)) out.push_back(py_to_vec(item));
    return out;
}

TypeList py_to_type(py::handle seq) {
    TypeList t;
    for (py::handle item : py::iter(seq)) {
        auto pair = item.cast<py::sequence>();
        if (py::len(pair) != 2) throw py::type_error("components are (series, rank) pairs");
        t.push_back({parse_series(pair[0].cast<std::string>()), pair[1].cast<int>()});
    }
    return t;
}

py::list type_to_py(const TypeList& t) {
    py::list out;
    for (const Component& c : t)
        out.append(py::make_tuple(std::string(1, static_cast<char>(c.series)), c.rank));
    return out;
}

py::dict params_to_py(const std::map<std::string, long long>& params) {
    py::dict d;
    for (const auto& [name, value] : params) d[py::str(name)] = value;
    return d;
}

std::map<std::string, long long> py_to_params(const py::dict& d) {
    std::map<std::string, long long> params;
    for (auto item : d) params[item.first.cast<std::string>()] = item.second.cast<long long>();
    return params;
}

std::vector<SymmetricPairEntry> entries_for(const std::string& catalog_path) {
    return catalog_path.empty() ? enumerate_suite() : load_catalog(catalog_path);
}

} // namespace

PYBIND11_MODULE(_isoform, m) {
    m.doc() = "Exact equivariant-formality certificates for isotropy actions on compact "
              "symmetric spaces: root systems, Dynkin folds, Weyl orders, and the "
              "fixed-set dimension count, all in rational arithmetic.";
    m.attr("__version__") = "0.1.0";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const input_error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const invariant_error& e) {
            PyErr_SetString(PyExc_RuntimeError, e.what());
        }
    });

    py::class_<RootSystem>(m, "RootSystem")
        .def_property_readonly("ambient_dim", [](const RootSystem& rs) { return rs.ambient_dim; })
        .def_property_readonly("rank", &RootSystem::rank)
        .def_property_readonly("components",
                               [](const RootSystem& rs) { return type_to_py(rs.components); })
        .def_property_readonly("simple_roots",
                               [](const RootSystem& rs) { return vecs_to_py(rs.simple_roots); })
        .def_property_readonly("roots", [](const RootSystem& rs) { return vecs_to_py(rs.roots); })
        .def_property_readonly("root_count",
                               [](const RootSystem& rs) { return rs.roots.size(); })
        .def("contains", [](const RootSystem& rs, py::handle v) { return rs.contains(py_to_vec(v)); })
        .def("__repr__", [](const RootSystem& rs) {
            return "RootSystem(" + to_string(rs.components) + ", " +
                   std::to_string(rs.roots.size()) + " roots)";
        });

    py::class_<FoldResult>(m, "FoldResult")
        .def_property_readonly("base_type",
                               [](const FoldResult& f) { return type_to_py(f.base_type); })
        .def_property_readonly("involution",
                               [](const FoldResult& f) { return f.involution_name; })
        .def_property_readonly("folded_type",
                               [](const FoldResult& f) { return type_to_py(f.rrs.kprime_type); })
        .def_property_readonly("folded_display",
                               [](const FoldResult& f) { return f.rrs.display_type(); })
        .def_property_readonly("nonreduced", [](const FoldResult& f) { return f.rrs.nonreduced(); })
        .def_property_readonly("nonreduced_components",
                               [](const FoldResult& f) {
                                   py::list out;
                                   for (int c : f.rrs.nonreduced_components) out.append(c);
                                   return out;
                               })
        .def_property_readonly("restricted_simple",
                               [](const FoldResult& f) { return vecs_to_py(f.rrs.restricted_simple); })
        .def_property_readonly("restricted_roots",
                               [](const FoldResult& f) { return vecs_to_py(f.rrs.restricted_roots); })
        .def_property_readonly("restricted_root_count",
                               [](const FoldResult& f) { return f.rrs.restricted_roots.size(); })
        .def_property_readonly("reduced_root_count",
                               [](const FoldResult& f) { return f.rrs.reduced.roots.size(); })
        .def_property_readonly("rank_t_k",
                               [](const FoldResult& f) { return f.rrs.carrier.t_k_basis.size(); })
        .def_property_readonly("rank_t_p",
                               [](const FoldResult& f) { return f.rrs.carrier.t_p_basis.size(); })
        .def_property_readonly("compartments", [](const FoldResult& f) { return f.compartments; })
        .def("to_json", [](const FoldResult& f) { return dump_json(to_json(f)); })
        .def("to_dot", [](const FoldResult& f) { return to_dot(f); })
        .def("__repr__", [](const FoldResult& f) {
            return "FoldResult(" + to_string(f.base_type) + ", " + f.involution_name + " -> " +
                   f.rrs.display_type() + ")";
        });

    py::class_<FormalityReport>(m, "FormalityReport")
        .def_property_readonly("label", [](const FormalityReport& r) { return r.entry.label; })
        .def_property_readonly("params",
                               [](const FormalityReport& r) { return params_to_py(r.entry.params); })
        .def_property_readonly("g_type",
                               [](const FormalityReport& r) { return type_to_py(r.entry.g_type); })
        .def_property_readonly("k_type",
                               [](const FormalityReport& r) { return type_to_py(r.entry.k_type); })
        .def_property_readonly("kprime_type",
                               [](const FormalityReport& r) { return type_to_py(r.kprime_type); })
        .def_property_readonly("kprime_display",
                               [](const FormalityReport& r) { return r.kprime_display; })
        .def_property_readonly("involution",
                               [](const FormalityReport& r) { return r.entry.involution_spec; })
        .def_property_readonly("regime",
                               [](const FormalityReport& r) { return to_string(r.entry.regime); })
        .def_property_readonly("rank_g", [](const FormalityReport& r) { return r.entry.rank_g; })
        .def_property_readonly("rank_k", [](const FormalityReport& r) { return r.entry.rank_k; })
        .def_property_readonly("rank_space",
                               [](const FormalityReport& r) { return r.entry.rank_space; })
        .def_property_readonly("k_weyl_order",
                               [](const FormalityReport& r) { return r.entry.k_weyl_order; })
        .def_property_readonly("r", [](const FormalityReport& r) { return r.r; })
        .def_property_readonly("fixed_component_dim",
                               [](const FormalityReport& r) { return r.fixed_component_dim; })
        .def_property_readonly("dim_fixed_set",
                               [](const FormalityReport& r) { return r.dim_fixed_set; })
        .def_property_readonly("dim_M", [](const FormalityReport& r) { return r.dim_M; })
        .def_property_readonly("nonreduced", [](const FormalityReport& r) { return r.nonreduced; })
        .def_property_readonly("formal", [](const FormalityReport& r) { return r.formal; })
        .def_property_readonly("provenance",
                               [](const FormalityReport& r) { return r.entry.provenance; })
        .def("to_json", [](const FormalityReport& r) { return dump_json(to_json(r)); })
        .def("to_markdown", [](const FormalityReport& r) { return to_markdown(r); })
        .def("__repr__", [](const FormalityReport& r) {
            return "FormalityReport(" + r.entry.label + " " + r.entry.params_string() + ", r=" +
                   std::to_string(r.r) + ", formal=" + (r.formal ? "True" : "False") + ")";
        });

    m.def(
        "build_root_system",
        [](py::handle components) { return build_root_system(py_to_type(components)); },
        py::arg("components"),
        "Standard realization of a (possibly reducible) reduced root system, e.g. "
        "build_root_system([(\"F\", 4)]).");

    m.def(
        "classify_simple_roots",
        [](py::handle simple_roots) {
            return type_to_py(classify_simple_roots(py_to_vecs(simple_roots)));
        },
        py::arg("simple_roots"),
        "Matches a linearly independent simple system against the finite-type classification.");

    m.def(
        "cartan_integer",
        [](py::handle alpha, py::handle beta) {
            return cartan_integer(py_to_vec(alpha), py_to_vec(beta));
        },
        py::arg("alpha"), py::arg("beta"), "2 <beta, alpha> / <alpha, alpha>, exactly.");

    m.def(
        "reflect",
        [](py::handle x, py::handle alpha) {
            return vec_to_py(reflect(py_to_vec(x), py_to_vec(alpha)));
        },
        py::arg("x"), py::arg("alpha"), "Reflection of x in the hyperplane orthogonal to alpha.");

    m.def(
        "weyl_order_closed_form",
        [](py::handle components) { return weyl_order_closed_form(py_to_type(components)).value; },
        py::arg("components"), "Classical Weyl group order of a type list.");

    m.def(
        "weyl_order_bfs",
        [](py::handle components) {
            return weyl_order_bfs(build_root_system(py_to_type(components))).value;
        },
        py::arg("components"),
        "Weyl group order by breadth-first closure over exact reflection matrices "
        "(guarded to rank <= 6 and order <= 10^6).");

    m.def(
        "fold",
        [](const std::string& series, int rank, const std::string& involution) {
            return fold_diagram({{parse_series(series), rank}}, involution);
        },
        py::arg("series"), py::arg("rank"), py::arg("involution"),
        "Folds one Dynkin diagram along a named involution: identity, flip, or fork-swap.");

    m.def(
        "analyze",
        [](const std::string& label, const py::dict& params) {
            return check_formality(instantiate(label, py_to_params(params)));
        },
        py::arg("label"), py::arg("params") = py::dict(),
        "Equivariant-formality certificate for one symmetric pair, e.g. "
        "analyze(\"AI\", {\"n\": 4}).");

    m.def(
        "verify_all",
        [](const std::string& catalog_path) {
            std::vector<FormalityReport> reports;
            for (const SymmetricPairEntry& e : entries_for(catalog_path))
                reports.push_back(check_formality(e));
            return reports;
        },
        py::arg("catalog_path") = std::string(),
        "Certificates for every catalog entry, in catalog order.");

    m.def(
        "suite_entries",
        [](const std::string& catalog_path) {
            py::list out;
            for (const SymmetricPairEntry& e : entries_for(catalog_path))
                out.append(py::make_tuple(e.label, params_to_py(e.params)));
            return out;
        },
        py::arg("catalog_path") = std::string(), "The (label, params) pairs of the catalog.");

    m.def("embedded_catalog", [] { return std::string(embedded_catalog_json()); },
          "The embedded catalog document as JSON text.");
}
