// Copyright 2026 The falqon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <span>
#include <sstream>
#include <string>

#include "falqon/analysis.hpp"
#include "falqon/error.hpp"
#include "falqon/graph.hpp"
#include "falqon/hamiltonian.hpp"

namespace py = pybind11;
using namespace falqon;

namespace {

template <typename T>
py::array_t<T> to_array(std::span<const T> v) {
    py::array_t<T> out(static_cast<py::ssize_t>(v.size()));
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

template <typename T>
py::array_t<T> to_array(const std::vector<T> &v) {
    return to_array(std::span<const T>(v));
}

py::array_t<Complex> state_array(const StateVector &s) {
    return to_array(s.amplitudes());
}

StateVector state_from(py::array_t<Complex, py::array::c_style | py::array::forcecast> a) {
    std::vector<Complex> amps(a.data(), a.data() + a.size());
    std::size_t n = 0;
    while (dimension_of(n) < amps.size() && n < 63) {
        ++n;
    }
    return {n, std::move(amps)};
}

std::vector<double> column(const py::array_t<double, py::array::c_style | py::array::forcecast> &a) {
    return {a.data(), a.data() + a.size()};
}

NoiseModel noise_from(const std::string &kind, double epsilon_bar, std::uint64_t seed) {
    return {parse_noise_kind(kind), epsilon_bar, seed};
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Statevector simulation of feedback-based quantum optimization for MaxCut";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<NumericalFailure>(m, "NumericalFailure", PyExc_RuntimeError);
    py::register_exception<GenerationFailure>(m, "GenerationFailure", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](std::size_t n, const std::vector<std::tuple<std::size_t, std::size_t, double>> &edges) {
                 std::vector<Edge> es;
                 for (const auto &[u, v, w] : edges) {
                     es.push_back({u, v, w});
                 }
                 return Graph(n, std::move(es));
             }),
             py::arg("n_nodes"), py::arg("edges"))
        .def_property_readonly("n_nodes", &Graph::n_nodes)
        .def_property_readonly("edges",
                               [](const Graph &g) {
                                   std::vector<std::tuple<std::size_t, std::size_t, double>> out;
                                   for (const auto &e : g.edges()) {
                                       out.emplace_back(e.u, e.v, e.weight);
                                   }
                                   return out;
                               })
        .def("degrees", &Graph::degrees)
        .def("to_edge_list", [](const Graph &g) { return format_edge_list(g); })
        .def_static("from_edge_list",
                    [](const std::string &text) { return parse_edge_list(std::string_view(text)); })
        .def(py::self == py::self)
        .def("__repr__", [](const Graph &g) {
            std::ostringstream s;
            s << "Graph(n_nodes=" << g.n_nodes() << ", edges=" << g.edges().size() << ")";
            return s.str();
        });

    m.def("random_regular", &random_regular, py::arg("n"), py::arg("d"), py::arg("seed"));
    m.def("erdos_renyi", &erdos_renyi, py::arg("n"), py::arg("p"), py::arg("seed"));
    m.def("read_edge_list", &read_edge_list_file, py::arg("path"));
    m.def("cut_value", &cut_value, py::arg("graph"), py::arg("assignment"));
    m.def("max_cut_brute_force", [](const Graph &g) {
        const auto mc = max_cut_brute_force(g);
        return py::make_tuple(mc.value, mc.assignment);
    }, py::arg("graph"), "Returns (value, assignment) of an optimal cut.");

    m.def("maxcut_diagonal",
          [](const Graph &g) {
              const auto h = maxcut_hamiltonian(g);
              return to_array(std::vector<double>(h.diag().begin(), h.diag().end()));
          },
          py::arg("graph"), "Diagonal of the MaxCut cost Hamiltonian (qubit 0 is the low bit).");
    m.def("ground_energy", [](const Graph &g) {
        const auto ge = ground_energy(maxcut_hamiltonian(g));
        return py::make_tuple(ge.energy, ge.states);
    }, py::arg("graph"), "Returns (energy, ground-state indices).");

    py::class_<RunTrace>(m, "RunTrace")
        .def_property_readonly("betas", [](const RunTrace &t) { return to_array(t.betas()); })
        .def_property_readonly("costs", [](const RunTrace &t) { return to_array(t.costs()); })
        .def_property_readonly("a", [](const RunTrace &t) {
            std::vector<double> a;
            for (const auto &rec : t.layers) {
                a.push_back(rec.a);
            }
            return to_array(a);
        })
        .def_property_readonly("final_state", [](const RunTrace &t) { return state_array(t.final_state); })
        .def_readonly("ground_energy", &RunTrace::ground_energy)
        .def_readonly("ground_states", &RunTrace::ground_states)
        .def_readonly("layer_applications", &RunTrace::layer_applications)
        .def_property_readonly("final_epsilons", [](const RunTrace &t) { return to_array(t.final_epsilons); })
        .def_property_readonly("cost_error", [](const RunTrace &t) {
            return t.layers.back().cost - t.ground_energy;
        })
        .def_property_readonly("success_probability", [](const RunTrace &t) {
            return success_probability(t.final_state, t.ground_states);
        });

    m.def(
        "run",
        [](const Graph &g, std::size_t depth, double delta_t, double lambda, double w,
           const std::string &noise, double epsilon_bar, std::uint64_t seed) {
            const RunConfig cfg{g, delta_t, depth, {lambda, w}, noise_from(noise, epsilon_bar, seed)};
            py::gil_scoped_release release;
            return run(cfg);
        },
        py::arg("graph"), py::arg("depth"), py::arg("delta_t") = 0.05, py::arg("lam") = 0.5,
        py::arg("w") = 1.0, py::arg("noise") = "none", py::arg("epsilon_bar") = 0.0,
        py::arg("seed") = 0,
        "Run the feedback loop. noise is 'none', 'systematic' or 'independent'.");

    m.def(
        "trajectory",
        [](const std::string &kind, double epsilon_bar, std::uint64_t seed, std::size_t depth,
           std::uint64_t rebuild) {
            return to_array(trajectory(noise_from(kind, epsilon_bar, seed), depth, rebuild));
        },
        py::arg("kind"), py::arg("epsilon_bar"), py::arg("seed"), py::arg("depth"),
        py::arg("rebuild_index"));

    m.def(
        "lipschitz_bound",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast> &betas,
           const Graph &g, double delta_t, double epsilon_bar) {
            const auto r = lipschitz_bound(column(betas), delta_t, maxcut_hamiltonian(g),
                                           driver_x(g.n_nodes()), epsilon_bar);
            py::dict d;
            d["per_layer_norms"] = to_array(r.per_layer_norms);
            d["l_falqon"] = r.l_falqon;
            d["epsilon_bar"] = r.epsilon_bar;
            d["fidelity_lower_bound"] = r.fidelity_lower_bound;
            d["vacuous"] = r.vacuous;
            return d;
        },
        py::arg("betas"), py::arg("graph"), py::arg("delta_t") = 0.05, py::arg("epsilon_bar"));

    m.def(
        "replay_fidelity",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast> &betas,
           const py::array_t<double, py::array::c_style | py::array::forcecast> &epsilons,
           const Graph &g, double delta_t) {
            return replay_fidelity(column(betas), column(epsilons), delta_t,
                                   maxcut_hamiltonian(g), driver_x(g.n_nodes()));
        },
        py::arg("betas"), py::arg("epsilons"), py::arg("graph"), py::arg("delta_t") = 0.05);

    m.def(
        "aggregate",
        [](const std::vector<RunTrace> &runs, double ground) {
            const auto s = aggregate(runs, ground);
            py::dict d;
            d["epsilon_bar"] = s.epsilon_bar;
            d["lambda"] = s.lambda;
            d["n_seeds"] = s.n_seeds;
            d["mean_final_cost_error"] = s.mean_final_cost_error;
            d["std_final_cost_error"] = s.std_final_cost_error;
            d["mean_fidelity"] = s.mean_fidelity;
            return d;
        },
        py::arg("runs"), py::arg("ground_energy"));

    m.def(
        "success_probability",
        [](py::array_t<Complex, py::array::c_style | py::array::forcecast> state,
           const std::vector<std::size_t> &ground_states) {
            return success_probability(state_from(std::move(state)), ground_states);
        },
        py::arg("state"), py::arg("ground_states"));
}
