// Copyright 2026 The twograph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "twograph/dense.hpp"
#include "twograph/errors.hpp"
#include "twograph/io.hpp"
#include "twograph/orbit.hpp"
#include "twograph/spectral.hpp"
#include "twograph/two_graph_state.hpp"
#include "twograph/version.hpp"

namespace py = pybind11;
using namespace twograph;

// VertexSet <-> frozenset[int].
namespace pybind11::detail {
template <>
struct type_caster<VertexSet> {
    PYBIND11_TYPE_CASTER(VertexSet, const_name("frozenset[int]"));

    bool load(handle src, bool) {
        if (!py::isinstance<py::iterable>(src) || py::isinstance<py::str>(src)) {
            return false;
        }
        VertexSet out;
        for (auto item : py::reinterpret_borrow<py::iterable>(src)) {
            const int v = item.cast<int>();
            if (v < 0 || v >= kMaxVertices) {
                throw PreconditionError("vertex " + std::to_string(v) + " outside [0, 64)");
            }
            out.insert(v);
        }
        value = out;
        return true;
    }

    static handle cast(VertexSet s, return_value_policy, handle) {
        py::list items;
        for (int v : s) {
            items.append(v);
        }
        return PyFrozenSet_New(items.ptr());
    }
};
}  // namespace pybind11::detail

namespace {

py::dict report_dict(const SpectralReport &r) {
    py::dict d;
    d["n"] = r.n;
    d["l_census"] = r.l_census;
    d["lj_norms"] = r.lj_norms;
    d["cmf"] = r.cmf;
    d["par_ihn"] = r.par_ihn;
    d["sup_l"] = r.sup_l;
    d["transforms"] = r.transforms();
    return d;
}

py::dict table_dict(const Table1 &t) {
    py::list rows;
    for (const auto &r : t.rows) {
        py::dict row;
        row["norm"] = r.norm;
        row["cmf"] = r.cmf ? py::cast(*r.cmf) : py::none();
        row["frequency"] = r.frequency;
        rows.append(row);
    }
    py::dict d;
    d["n"] = t.n;
    d["j"] = t.j;
    d["rows"] = rows;
    d["average"] = t.average;
    d["classes"] = t.classes;
    return d;
}

ExponentRule rule_of(const std::string &name) {
    if (name == "exact") {
        return ExponentRule::kExact;
    }
    if (name == "truncated") {
        return ExponentRule::kTruncated;
    }
    throw PreconditionError("rule must be 'exact' or 'truncated'");
}

}  // namespace

PYBIND11_MODULE(_twograph, m) {
    m.doc() = "Generalised two-graph stabilizer states";
    m.attr("__version__") = std::string(kVersion);

    auto precondition = py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);
    (void)precondition;

    py::class_<Gf2Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def_static("from_edges", &Gf2Graph::from_edges, py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Gf2Graph::size)
        .def("has_edge", &Gf2Graph::has_edge)
        .def("toggle_edge", &Gf2Graph::toggle_edge)
        .def("edges", &Gf2Graph::edges)
        .def("is_connected", &Gf2Graph::is_connected)
        .def("__eq__", [](const Gf2Graph &a, const Gf2Graph &b) { return a == b; })
        .def("__repr__", [](const Gf2Graph &g) { return "Graph(" + g.to_string() + ")"; });

    py::class_<GeneralisedTwoGraphState>(m, "State")
        .def(py::init<Gf2Graph, VertexSet, VertexSet, int>(), py::arg("graph"), py::arg("r"),
             py::arg("q") = VertexSet{}, py::arg("phase") = 0)
        .def_property_readonly("n", &GeneralisedTwoGraphState::size)
        .def_property_readonly("graph", &GeneralisedTwoGraphState::graph)
        .def_property_readonly("r", &GeneralisedTwoGraphState::r)
        .def_property_readonly("q", &GeneralisedTwoGraphState::q)
        .def_property_readonly("l", &GeneralisedTwoGraphState::l)
        .def_property_readonly("phase", &GeneralisedTwoGraphState::phase)
        .def_property_readonly("is_flat", &GeneralisedTwoGraphState::is_flat)
        .def("same_representation", &GeneralisedTwoGraphState::same_representation)
        .def("magnitude", [](const GeneralisedTwoGraphState &s) { return to_apf(s).magnitude_string(); })
        .def("phase_polynomial", [](const GeneralisedTwoGraphState &s) { return to_apf(s).phase_string(); })
        .def("boolean_phase", [](const GeneralisedTwoGraphState &s) { return to_apf(s).boolean_phase_string(); })
        .def("__eq__", [](const GeneralisedTwoGraphState &a, const GeneralisedTwoGraphState &b) { return a == b; })
        .def("__repr__", [](const GeneralisedTwoGraphState &s) { return "State(" + s.to_string() + ")"; });

    m.def("from_graph_state", &from_graph_state, py::arg("graph"));
    m.def("apply_h", &apply_h, py::arg("state"), py::arg("v"), py::arg("w") = std::nullopt);
    m.def("apply_n", &apply_n, py::arg("state"), py::arg("v"), py::arg("w") = std::nullopt);
    m.def("apply_n_inv", &apply_n_inv, py::arg("state"), py::arg("v"), py::arg("w") = std::nullopt);
    m.def("apply_lambda", &apply_lambda, py::arg("state"), py::arg("v"));
    m.def("apply_lambda_sq", &apply_lambda_sq, py::arg("state"), py::arg("v"));
    m.def("swp", &swp, py::arg("state"), py::arg("v"), py::arg("w"));
    m.def("canon", &canon, py::arg("state"));
    m.def("is_canonised", &is_canonised, py::arg("state"));
    m.def(
        "apply",
        [](const GeneralisedTwoGraphState &s, const std::string &ops) {
            return apply_all(s, Operation::parse_list(ops));
        },
        py::arg("state"), py::arg("ops"), "Apply a script such as 'H3 N0 swap(1,3) canon'.");

    m.def(
        "evaluate",
        [](const GeneralisedTwoGraphState &s) {
            const DenseState d = evaluate(s);
            const auto amps = d.amplitudes();
            return py::array_t<std::complex<double>>(static_cast<py::ssize_t>(amps.size()), amps.data());
        },
        py::arg("state"), "Normalised amplitudes; x0 is the most significant index bit.");
    m.def(
        "oracle_check",
        [](const GeneralisedTwoGraphState &s, double tol) {
            std::vector<std::pair<std::string, std::string>> out;
            for (const auto &mm : oracle_check(s, tol)) {
                out.emplace_back(mm.operation, mm.state);
            }
            return out;
        },
        py::arg("state"), py::arg("tol") = 1e-9);

    m.def(
        "sweep",
        [](const GeneralisedTwoGraphState &s, const std::vector<double> &js, unsigned workers) {
            SpectralReport r;
            {
                py::gil_scoped_release release;
                r = sweep(s, {.js = js, .workers = workers});
            }
            return report_dict(r);
        },
        py::arg("state"), py::arg("js") = default_js(), py::arg("workers") = 1);
    m.def(
        "classify",
        [](int n, unsigned workers) {
            std::vector<OrbitClass> classes;
            {
                py::gil_scoped_release release;
                classes = enumerate_classes(n, default_js(), workers);
            }
            py::list out;
            for (const auto &c : classes) {
                py::dict d;
                d["representative"] = c.representative;
                d["members"] = c.members;
                d["spectra"] = report_dict(c.spectra);
                out.append(d);
            }
            return out;
        },
        py::arg("n"), py::arg("workers") = 1);
    m.def(
        "table1",
        [](int n, double j, const std::string &rule) { return table_dict(table1(n, j, rule_of(rule))); },
        py::arg("n"), py::arg("j"), py::arg("rule") = "exact");
    m.def("max_independent_set_over_orbit", &max_independent_set_over_orbit, py::arg("graph"));
    m.def(
        "density_sweep",
        [](int n, const std::vector<double> &densities, int samples, std::uint64_t seed, unsigned workers) {
            DensityTable t;
            {
                py::gil_scoped_release release;
                t = density_sweep({.n = n, .densities = densities, .samples = samples, .seed = seed,
                                   .workers = workers});
            }
            py::list rows;
            for (const auto &r : t.rows) {
                py::dict d;
                d["density"] = r.density;
                d["samples"] = r.samples;
                d["mean_par_ihn"] = r.mean_par_ihn;
                d["var_par_ihn"] = r.var_par_ihn;
                d["mean_lj_norms"] = r.mean_lj_norms;
                rows.append(d);
            }
            return rows;
        },
        py::arg("n"), py::arg("densities"), py::arg("samples") = 100, py::arg("seed") = 1, py::arg("workers") = 1);

    m.def(
        "parse_state", [](const std::string &text) { return parse_state_document(text).to_state(); },
        py::arg("text"), "Text or JSON state document.");
    m.def(
        "load_state", [](const std::string &path) { return load_state_file(path).to_state(); }, py::arg("path"));
    m.def(
        "to_text", [](const GeneralisedTwoGraphState &s) { return to_text(StateDocument::from_state(s)); },
        py::arg("state"));
    m.def(
        "to_json", [](const GeneralisedTwoGraphState &s) { return to_json(StateDocument::from_state(s)); },
        py::arg("state"));
}
