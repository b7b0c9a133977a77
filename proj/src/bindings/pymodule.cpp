#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "circsep/construct.hpp"
#include "circsep/errors.hpp"
#include "circsep/exact.hpp"
#include "circsep/generate.hpp"
#include "circsep/series_parallel.hpp"

namespace py = pybind11;
using namespace circsep;

namespace {

SeparationFamily to_family(const std::vector<std::vector<Vertex>>& lists) {
    SeparationFamily fam;
    for (const auto& s : lists) fam.push_back(CircularOrder(s));
    return fam;
}

std::vector<std::vector<Vertex>> from_family(const SeparationFamily& fam) {
    std::vector<std::vector<Vertex>> out;
    for (const auto& o : fam) out.push_back(o.seq());
    return out;
}

} // namespace

PYBIND11_MODULE(circsep, m) {
    m.doc() = "circular separation families for planar graph layers";

    py::register_exception<error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<input_error>(m, "InputError", PyExc_ValueError);
    py::register_exception<contract_error>(m, "ContractError", PyExc_RuntimeError);
    py::register_exception<capability_error>(m, "CapabilityError", PyExc_RuntimeError);
    py::register_exception<structural_error>(m, "StructuralError", PyExc_RuntimeError);
    py::register_exception<not_series_parallel>(m, "NotSeriesParallel", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
                 std::vector<Edge> es;
                 es.reserve(edges.size());
                 for (auto [a, b] : edges) es.push_back(Edge(a, b));
                 return Graph(n, std::move(es));
             }),
             py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("m", &Graph::edge_count)
        .def("edges",
             [](const Graph& g) {
                 std::vector<std::pair<int, int>> out;
                 for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
                 return out;
             })
        .def("neighbors", [](const Graph& g, Vertex v) { return g.neighbors(v); });

    py::class_<TwoOuterEmbedding>(m, "TwoOuterEmbedding")
        .def_property_readonly("graph", [](const TwoOuterEmbedding& e) { return e.g; })
        .def_readonly("outer_cycle", &TwoOuterEmbedding::outer_cycle)
        .def_readonly("inner_walks", &TwoOuterEmbedding::inner_walks)
        .def_readonly("rotation", &TwoOuterEmbedding::rotation)
        .def_readonly("layer", &TwoOuterEmbedding::layer);

    m.def("make_embedding", &make_embedding, py::arg("g"), py::arg("outer_cycle"),
          py::arg("inner_walks"), py::arg("rotation"));
    m.def("validate_embedding", &validate_embedding);

    m.def(
        "alternates",
        [](const std::vector<Vertex>& order, std::pair<Vertex, Vertex> e,
           std::pair<Vertex, Vertex> f) {
            return alternates(CircularOrder(order), Edge(e.first, e.second),
                              Edge(f.first, f.second));
        },
        py::arg("order"), py::arg("e"), py::arg("f"));

    m.def(
        "verify_family",
        [](const Graph& g, const std::vector<std::vector<Vertex>>& fam) {
            Verdict v = verify_family(g, to_family(fam));
            py::list vio;
            for (const auto& x : v.violations)
                vio.append(py::make_tuple(py::make_tuple(x.e.u, x.e.v),
                                          py::make_tuple(x.f.u, x.f.v)));
            py::dict d;
            d["ok"] = v.ok;
            d["violations"] = vio;
            return d;
        },
        py::arg("g"), py::arg("family"));

    m.def(
        "exact_pi_circ",
        [](const Graph& g, int kmax, int bound) {
            ExactOptions opt;
            opt.kmax = kmax;
            opt.bound = bound;
            ExactResult r = exact_pi_circ(g, opt);
            py::dict d;
            d["determined"] = r.determined;
            d["k"] = r.k;
            d["vacuous"] = r.vacuous;
            d["family"] = from_family(r.family);
            return d;
        },
        py::arg("g"), py::arg("kmax") = 3, py::arg("bound") = 9);

    m.def("enumerate_canonical_orderings", [](int n) {
        std::vector<std::vector<Vertex>> out;
        for (const auto& o : enumerate_canonical_orderings(n)) out.push_back(o.seq());
        return out;
    });

    m.def("sp_construct", [](const Graph& g) { return from_family(sp_construct(g)); });

    m.def("construct_two_outerplanar", [](const TwoOuterEmbedding& emb) {
        return from_family(construct_two_outerplanar(emb));
    });

    m.def("gen_outerplanar", &gen_outerplanar, py::arg("n"), py::arg("seed"));
    m.def("gen_two_outerplanar", &gen_two_outerplanar, py::arg("n"), py::arg("seed"));
    m.def("gen_series_parallel", &gen_series_parallel, py::arg("n"), py::arg("seed"));
}
