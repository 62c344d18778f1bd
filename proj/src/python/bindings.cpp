#include "symchar/characters.hpp"
#include "symchar/io.hpp"
#include "symchar/pipeline.hpp"
#include "symchar/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace symchar;

namespace {

// cpp_int <-> python int through decimal strings; python ints are exact.
Int to_int(py::handle h) { return parse_decimal(py::str(h)); }
py::int_ from_int(const Int& v) { return py::cast<py::int_>(py::str(to_decimal(v))); }

Composition to_comp(const py::sequence& seq) {
    Composition c;
    for (auto h : seq) c.push_back(to_int(h));
    return c;
}

py::list from_comp(const Composition& c) {
    py::list out;
    for (const Int& v : c) out.append(from_int(v));
    return out;
}

Partition to_part(const py::sequence& seq) { return Partition(to_comp(seq)); }

py::dict char_instance_dict(const CharInstance& ci, const Int* delta = nullptr) {
    py::dict d;
    d["lambda"] = from_comp(ci.lambda.parts());
    d["alpha"] = from_comp(ci.alpha);
    d["p"] = from_int(ci.derivation.p);
    d["a"] = from_comp(ci.derivation.a);
    d["b"] = from_comp(ci.derivation.b);
    if (delta) d["delta"] = from_int(*delta);
    return d;
}

Hypergraph3 to_h3(int k, const std::vector<std::array<int, 3>>& edges) {
    return make_hypergraph3(k, edges);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact symmetric-group character evaluation and counting reductions";

    m.def("sort_desc", [](const py::sequence& a) { return from_comp(sort_desc(to_comp(a))); },
          py::arg("a"));
    m.def("cycle_type", [](const std::vector<int>& images) {
        return from_comp(cycle_type(Permutation(images)).parts());
    }, py::arg("images"));
    m.def("z_factor", [](const py::sequence& mu) {
        return from_int(z_factor(Partition::from_composition(to_comp(mu))));
    }, py::arg("mu"));
    m.def("partitions_of", [](unsigned n) {
        py::list out;
        for (const Partition& p : partitions_of(n)) out.append(from_comp(p.parts()));
        return out;
    }, py::arg("n"));

    m.def("count_ordered_partitions", [](const py::sequence& items, const py::sequence& bins) {
        return from_int(count_ordered_partitions({to_comp(items), to_comp(bins)}));
    }, py::arg("items"), py::arg("bins"));
    m.def("count_with_fixed_pair",
          [](const py::sequence& items, const py::sequence& bins, std::size_t i, std::size_t j,
             bool same_bin) {
              return from_int(
                  count_with_fixed_pair({to_comp(items), to_comp(bins)}, i, j, same_bin));
          },
          py::arg("items"), py::arg("bins"), py::arg("i"), py::arg("j"), py::arg("same_bin"));

    m.def("char_mn", [](const py::sequence& lam, const py::sequence& alpha) {
        return from_int(char_mn(to_part(lam), to_comp(alpha)));
    }, py::arg("lam"), py::arg("alpha"));
    m.def("char_jt", [](const py::sequence& lam, const py::sequence& alpha, std::size_t bound) {
        CharJtOptions opts;
        opts.max_length = bound;
        return from_int(char_jt(to_part(lam), to_comp(alpha), opts));
    }, py::arg("lam"), py::arg("alpha"), py::arg("bound") = 8);
    m.def("phi_induced", [](const py::sequence& nu, const py::sequence& alpha) {
        return from_int(phi_induced(to_comp(nu), to_comp(alpha)));
    }, py::arg("nu"), py::arg("alpha"));
    m.def("dimension", [](const py::sequence& lam) { return from_int(dimension(to_part(lam))); },
          py::arg("lam"));
    m.def("row_sum", [](const py::sequence& lam) { return from_int(row_sum(to_part(lam))); });
    m.def("column_sum", [](const py::sequence& lam) { return from_int(column_sum(to_part(lam))); });

    m.def("count_3dm", [](int k, const std::vector<std::array<int, 3>>& edges) {
        return from_int(count_3dm(to_h3(k, edges)));
    }, py::arg("k"), py::arg("edges"));
    m.def("count_4dm", [](int u, const std::vector<std::array<int, 4>>& edges) {
        return from_int(count_4dm(make_hypergraph4(u, edges)));
    }, py::arg("u"), py::arg("edges"));

    m.def("count_circuit_text", [](const std::string& text) {
        std::istringstream in(text);
        return from_int(count_circuit_sat(parse_circuit(in)));
    }, py::arg("text"), "model count of a circuit in the line format");
    m.def("tseytin_dimacs", [](const std::string& text) {
        std::istringstream in(text);
        return format_dimacs(tseytin(parse_circuit(in)));
    }, py::arg("text"));
    m.def("count_dimacs", [](const std::string& text) {
        std::istringstream in(text);
        return from_int(count_cnf(parse_dimacs(in)));
    }, py::arg("text"));

    m.def("parsimonious_encode", [](const py::sequence& a, const py::sequence& b) {
        return char_instance_dict(parsimonious_encode(to_comp(a), to_comp(b)));
    }, py::arg("a"), py::arg("b"));
    m.def("char_instance_diff", [](const py::sequence& c, const py::sequence& d) {
        return char_instance_dict(char_instance_diff(to_comp(c), to_comp(d)));
    }, py::arg("c"), py::arg("d"));
    m.def("reduce_matching_pair",
          [](int k, const std::vector<std::array<int, 3>>& e, int kp,
             const std::vector<std::array<int, 3>>& ep) {
              PipelineResult res = reduce_matching_pair(to_h3(k, e), to_h3(kp, ep));
              return char_instance_dict(res.char_instance, &res.delta);
          },
          py::arg("k"), py::arg("e"), py::arg("k_prime"), py::arg("e_prime"));
}
