#include "uvtsw/pairing.hpp"
#include "uvtsw/suites.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace uvtsw;

namespace {

const VarSet& vt() {
    static VarSet vars = VarSet::vt();
    return vars;
}

py::list triplets(const SparseMat& m) {
    py::list out;
    for (const auto& [rc, val] : m.entries())
        out.append(py::make_tuple(rc.first, rc.second, val.str()));
    return out;
}

std::string run_json(const std::string& command, int n, int k,
                     const std::string& mode, int height, long cap, long seed) {
    RunConfig cfg;
    cfg.command = command;
    cfg.n = n;
    cfg.k = k;
    cfg.mode = mode;
    cfg.height = height;
    cfg.cap = cap;
    cfg.seed = seed;
    return run_command(cfg).to_json();
}

}  // namespace

PYBIND11_MODULE(_uvtsw, m) {
    m.doc() = "Exact symbolic Hecke algebra, quantum-group representations, "
              "R-matrices, Hopf pairing and Schur-Weyl decomposition";

    m.def("run_json", &run_json, py::arg("command"), py::arg("n") = 3,
          py::arg("k") = 3, py::arg("mode") = "compare", py::arg("height") = 2,
          py::arg("cap") = 256, py::arg("seed") = 0,
          "Run a verification suite; returns the JSON report");

    m.def(
        "idempotent",
        [](const std::vector<std::vector<int>>& rows, const std::string& mode) {
            StandardTableau T(rows);
            HeckeElement e = mode == "fusion" ? idempotent_fusion(vt(), T)
                                              : idempotent_inductive(vt(), T);
            return e.str();
        },
        py::arg("tableau"), py::arg("mode") = "inductive",
        "Primitive idempotent for a standard tableau, serialized canonically");

    m.def(
        "jm",
        [](int k, int i) { return jm_element(vt(), k, i).str(); }, py::arg("k"),
        py::arg("i"), "Jucys-Murphy element y_i in H_k, serialized canonically");

    m.def(
        "relations",
        [](int n, int k, long cap) {
            py::list out;
            GeneratorImages g = k <= 1 ? natural_rep(vt(), n)
                                       : tensor_rep(vt(), n, k, cap);
            for (const RelationCheck& c : check_relations(g))
                out.append(py::make_tuple(c.name, c.pass, c.detail));
            return out;
        },
        py::arg("n"), py::arg("k") = 1, py::arg("cap") = 256,
        "Exact defining-relation checks; (name, pass, detail) triples");

    m.def(
        "decompose",
        [](int n, int k, long cap) {
            DecompositionReport d = decompose(vt(), n, k, cap);
            py::list comps;
            for (const auto& c : d.components)
                comps.append(py::make_tuple(c.shape.parts(), c.syt_count, c.dim));
            py::dict out;
            out["components"] = comps;
            out["total"] = d.total;
            out["expected"] = d.expected;
            out["pass"] = d.pass();
            return out;
        },
        py::arg("n"), py::arg("k"), py::arg("cap") = 256,
        "Tensor-power decomposition: per-shape multiplicities and ranks");

    m.def(
        "rtilde", [](int n) { return triplets(rtilde(vt(), n)); }, py::arg("n"),
        "Closed-form braiding candidate on V x V as (row, col, value) triples");
    m.def(
        "r_matrix", [](int n) { return triplets(r_matrix(vt(), n)); },
        py::arg("n"), "Hecke-normalized R-matrix as (row, col, value) triples");
    m.def(
        "rtilde_braided",
        [](int n) { return triplets(rtilde_braided(vt(), n)); }, py::arg("n"),
        "Unit-diagonal rescaling vt^{-1}R; satisfies the braid relations");
    m.def(
        "r_matrix_commutant",
        [](int n) { return triplets(r_matrix_commutant(vt(), n)); }, py::arg("n"),
        "Gauged R-matrix commuting with the tensor quantum-group action");
    m.def(
        "rtilde_from_theta",
        [](int n, int height) { return triplets(rtilde_from_theta(vt(), n, height)); },
        py::arg("n"), py::arg("height") = 2,
        "Reconstruction of the braiding from the truncated quasi-R-matrix");

    m.def(
        "pair",
        [](int n, const std::vector<int>& f_letters,
           const std::vector<int>& e_letters) {
            return pair_words(
                       HalfElement::word(vt(), n, Side::minus_side, f_letters),
                       HalfElement::word(vt(), n, Side::plus_side, e_letters))
                .str();
        },
        py::arg("n"), py::arg("f_letters"), py::arg("e_letters"),
        "Hopf pairing of an F-word against an E-word");

    m.def(
        "dual_basis",
        [](int n, const std::vector<int>& content) {
            DualBasis d = dual_basis(vt(), n, content);
            py::list basis, dual;
            for (const auto& e : d.basis) basis.append(e.str());
            for (const auto& e : d.dual) dual.append(e.str());
            py::dict out;
            out["basis"] = basis;
            out["dual"] = dual;
            out["degenerate"] = d.degenerate;
            return out;
        },
        py::arg("n"), py::arg("content"),
        "Dual bases of a graded pairing component, serialized canonically");
}
