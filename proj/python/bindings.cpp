#include "dihom/complexes.hpp"
#include "dihom/constructions.hpp"
#include "dihom/error.hpp"
#include "dihom/graph_io.hpp"
#include "dihom/homcomplex.hpp"
#include "dihom/homology.hpp"
#include "dihom/homotopy.hpp"
#include "dihom/morse.hpp"
#include "dihom/reconfig.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace dihom;

namespace {

std::vector<int> members(VertexSet S) { return {S.begin(), S.end()}; }

std::vector<std::vector<int>> cell_lists(CellView c)
{
    std::vector<std::vector<int>> out;
    for (auto S : c) out.push_back(members(S));
    return out;
}

// Nontrivial degrees only: {degree: (rank, torsion)}.
py::dict homology_dict(const HomologyGroups& h)
{
    py::dict d;
    for (int i = -1; i <= h.top_degree(); ++i)
        if (!h[i].trivial()) d[py::int_(i)] = py::make_tuple(h.rank(i), h.torsion(i));
    return d;
}

std::vector<std::vector<int>> images(const std::vector<VertexMap>& maps)
{
    std::vector<std::vector<int>> out;
    for (const auto& f : maps) out.push_back(f.image());
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Hom complexes of directed graphs";

    static PyObject* error_type = py::exception<Error>(m, "DihomError", PyExc_ValueError).release().ptr();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
            exc.attr("code") = std::string(to_string(e.code()));
            PyErr_SetObject(error_type, exc.ptr());
        }
    });

    py::class_<Digraph>(m, "Digraph")
        .def(py::init<int>(), py::arg("n"))
        .def(py::init([](int n, const std::vector<Edge>& edges) { return Digraph(n, edges); }), py::arg("n"),
             py::arg("edges"))
        .def_property_readonly("vertex_count", &Digraph::vertex_count)
        .def_property_readonly("edges", &Digraph::edges)
        .def("add_edge", &Digraph::add_edge)
        .def("has_edge", &Digraph::has_edge)
        .def("out_neighbors", [](const Digraph& G, int v) { return members(G.out_neighbors(v)); })
        .def("in_neighbors", [](const Digraph& G, int v) { return members(G.in_neighbors(v)); })
        .def("to_json", [](const Digraph& G) { return emit_digraph(G); })
        .def_static("from_json", [](const std::string& text) { return parse_digraph(text); })
        .def("__eq__", &Digraph::operator==)
        .def("__repr__", [](const Digraph& G) {
            std::ostringstream os;
            os << G;
            return os.str();
        });

    m.def("directed_cycle", &directed_cycle);
    m.def("directed_path", &directed_path);
    m.def("transitive_tournament", &transitive_tournament);
    m.def("rotational_tournament", &rotational_tournament);
    m.def("sphere_tournament", &sphere_tournament);
    m.def("interval_bidirected", &interval_bidirected);
    m.def("looped_vertex", &looped_vertex);
    m.def("resolve_graph", &resolve_graph, "Named family such as C3, K4, R5 or a graph file path.");
    m.def("mycielskian", &mycielskian, py::arg("G"), py::arg("variant"));
    m.def("product", py::overload_cast<const Digraph&, const Digraph&>(&product));
    m.def("coproduct", &coproduct);
    m.def("exponential", [](const Digraph& H, const Digraph& G) { return exponential(H, G); });
    m.def("enumerate_tournaments", &enumerate_tournaments);
    m.def("is_isomorphic", &is_isomorphic);

    m.def("homomorphisms", [](const Digraph& G, const Digraph& H) { return images(enumerate_homomorphisms(G, H)); });

    py::class_<HomPoset>(m, "HomPoset")
        .def("__len__", &HomPoset::size)
        .def("cell", [](const HomPoset& P, std::size_t i) {
            if (i >= P.size()) throw py::index_error();
            return cell_lists(P.cell(i));
        })
        .def_property_readonly("dimension", py::overload_cast<>(&HomPoset::dimension, py::const_))
        .def_property_readonly("census", &HomPoset::census)
        .def_property_readonly("euler_characteristic", &HomPoset::euler_characteristic)
        .def("homology", [](const HomPoset& P) { return homology_dict(cellular_homology(P)); });
    m.def("hom_poset", &hom_poset, py::arg("G"), py::arg("H"), py::arg("cap") = default_cell_cap);
    m.def("hom_homology", [](const Digraph& G, const Digraph& H) { return homology_dict(hom_homology(G, H)); });

    m.def("out_neighborhood_facets", [](const Digraph& G) { return out_neighborhood_complex(G).facets(); });
    m.def("in_neighborhood_facets", [](const Digraph& G) { return in_neighborhood_complex(G).facets(); });
    m.def("neighborhood_homology", [](const Digraph& G, bool in) {
        return homology_dict(reduced_homology(in ? in_neighborhood_complex(G) : out_neighborhood_complex(G)));
    }, py::arg("G"), py::arg("inward") = false);
    m.def("complex_homology", [](const std::vector<Simplex>& facets) {
        return homology_dict(reduced_homology(SimplicialComplex(facets)));
    }, "Reduced homology of the complex generated by the given faces.");

    m.def("tournament_matching", [](const Digraph& G, int n) {
        const auto r = check_tournament_matching(G, n);
        py::dict d;
        d["cells"] = r.cells;
        d["pairs"] = r.pairs;
        d["critical"] = r.critical;
        d["acyclic"] = r.acyclic && r.consistent;
        return d;
    });

    m.def("find_fold", [](const Digraph& G) -> py::object {
        const auto f = find_fold(G);
        if (!f) return py::none();
        return py::make_tuple(f->v, f->w);
    });
    m.def("stiff_reduction", [](const Digraph& G) {
        const auto r = stiff_reduction(G);
        return py::make_tuple(r.result, r.survivors);
    });
    m.def("is_dismantlable", &is_dismantlable);

    py::enum_<HomotopyRelation>(m, "HomotopyRelation")
        .value("Bi", HomotopyRelation::Bi)
        .value("Di", HomotopyRelation::Di)
        .value("Line", HomotopyRelation::Line);
    m.def("homotopic", [](HomotopyRelation r, const std::vector<int>& f, const std::vector<int>& g,
                          const Digraph& G, const Digraph& H) { return homotopic(r, VertexMap(f), VertexMap(g), G, H); });
    m.def("homotopy_classes", [](const Digraph& G, const Digraph& H, HomotopyRelation r) {
        const auto c = homotopy_classes(G, H, r);
        return py::make_tuple(images(c.maps), c.classes);
    });

    m.def("is_connected_hom", &is_connected_hom);
    m.def("diameter", &diameter);
    m.def("meet_path", [](const std::vector<int>& f, const std::vector<int>& g, const Digraph& G, int n) {
        return images(meet_path(VertexMap(f), VertexMap(g), G, n));
    });
    m.def("oriented_chromatic_number", [](const Digraph& G) { return oriented_chromatic_number(G).chromatic_number; });
}
