// Copyright 2026 The SEQC Authors
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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "seqc/backend.hpp"
#include "seqc/baseline.hpp"
#include "seqc/benchmarks.hpp"
#include "seqc/elaborate.hpp"
#include "seqc/metrics.hpp"
#include "seqc/stratify.hpp"
#include "seqc/verify.hpp"

namespace py = pybind11;
using namespace seqc;

namespace {

py::dict metrics_to_dict(const MetricsReport& m) {
    py::dict d;
    d["esp"] = m.esp;
    d["exec_time_ns"] = m.exec_time_ns;
    d["inter_chiplet_gates"] = m.inter_chiplet_gates;
    d["depth"] = m.depth;
    d["gate_count"] = m.gate_count;
    if (m.stratify_time_s) d["stratify_time_s"] = *m.stratify_time_s;
    if (m.elaborate_time_s) d["elaborate_time_s"] = *m.elaborate_time_s;
    if (m.solve_time_s) d["solve_time_s"] = *m.solve_time_s;
    return d;
}

}  // namespace

PYBIND11_MODULE(_seqc, m) {
    m.doc() = "Chiplet-aware quantum circuit compiler";

    py::class_<Circuit>(m, "Circuit")
        .def(py::init<std::string, std::uint32_t>(), py::arg("name"), py::arg("num_qubits"))
        .def_property_readonly("name", &Circuit::name)
        .def_property_readonly("num_qubits", &Circuit::num_qubits)
        .def("__len__", &Circuit::size)
        .def("depth", [](const Circuit& c) { return depth(c); })
        .def("gate_count", [](const Circuit& c) { return gate_count(c); })
        .def("to_json", [](const Circuit& c) { return c.to_json_string(); })
        .def_static("from_json", &Circuit::from_json_string, py::arg("text"))
        .def("__repr__", [](const Circuit& c) {
            return "Circuit(" + c.name() + ", " + std::to_string(c.num_qubits()) + " qubits, " +
                   std::to_string(c.size()) + " gates)";
        });

    py::class_<Backend>(m, "Backend")
        .def_property_readonly("name", [](const Backend& b) { return b.name; })
        .def_property_readonly("num_qubits", &Backend::num_qubits)
        .def_property_readonly("num_chiplets",
                               [](const Backend& b) { return b.chiplets.size(); })
        .def("to_json", [](const Backend& b) { return b.to_json_string(); })
        .def_static("from_json", &Backend::from_json_string, py::arg("text"))
        .def("__repr__", [](const Backend& b) {
            return "Backend(" + b.name + ", " + std::to_string(b.num_qubits()) + " qubits)";
        });

    py::class_<CompiledCircuit>(m, "CompiledCircuit")
        .def_property_readonly("circuit",
                               [](const CompiledCircuit& cc) { return cc.circuit; })
        .def_property_readonly("pipeline",
                               [](const CompiledCircuit& cc) {
                                   return std::string(to_string(cc.pipeline));
                               })
        .def_property_readonly("seed", [](const CompiledCircuit& cc) { return cc.seed; })
        .def("to_json", [](const CompiledCircuit& cc) { return cc.to_json_string(); })
        .def_static("from_json", &CompiledCircuit::from_json_string, py::arg("text"));

    py::class_<StratifiedCircuit>(m, "StratifiedCircuit")
        .def_property_readonly("num_boundary_events",
                               [](const StratifiedCircuit& s) {
                                   return s.allocation.events.size();
                               })
        .def_property_readonly("num_subcircuits",
                               [](const StratifiedCircuit& s) {
                                   return s.partition.num_subcircuits;
                               })
        .def("to_json", [](const StratifiedCircuit& s) { return s.to_json_string(); })
        .def_static("from_json", &StratifiedCircuit::from_json_string, py::arg("text"));

    m.def("generate_backend", &generate_backend, py::arg("num_chiplets"),
          py::arg("qubits_per_chiplet") = 10, py::arg("inter_penalty") = 4.0);

    m.def("ghz", &ghz, py::arg("n"));
    m.def("bit_code", &bit_code, py::arg("n"), py::arg("rounds") = 2);
    m.def("phase_code", &phase_code, py::arg("n"), py::arg("rounds") = 2);
    m.def("vqe", &vqe, py::arg("n"), py::arg("seed"), py::arg("layers") = 2);
    m.def("tfim_sim", &tfim_sim, py::arg("n"), py::arg("steps") = 1);

    m.def(
        "baseline_compile",
        [](const Circuit& c, const Backend& b, std::uint64_t seed) {
            return baseline_compile(c, b, seed);
        },
        py::arg("circuit"), py::arg("backend"), py::arg("seed") = 0,
        py::call_guard<py::gil_scoped_release>());

    m.def(
        "stratify",
        [](const Circuit& c, const Backend& b, std::uint64_t seed, unsigned workers) {
            StratifyConfig cfg;
            return stratify(c, b, cfg, seed, workers);
        },
        py::arg("circuit"), py::arg("backend"), py::arg("seed") = 0, py::arg("workers") = 0,
        py::call_guard<py::gil_scoped_release>());

    m.def(
        "elaborate",
        [](const StratifiedCircuit& s, const Backend& b, unsigned workers, std::uint64_t seed) {
            return elaborate(s, b, workers, seed);
        },
        py::arg("strat"), py::arg("backend"), py::arg("workers") = 0, py::arg("seed") = 0,
        py::call_guard<py::gil_scoped_release>());

    m.def(
        "seqc_compile",
        [](const Circuit& c, const Backend& b, std::uint64_t seed, unsigned workers) {
            SeqcResult result = seqc_compile(c, b, seed, workers);
            return py::make_tuple(result.strat, result.compiled, result.stratify_seconds,
                                  result.elaborate_seconds);
        },
        py::arg("circuit"), py::arg("backend"), py::arg("seed") = 0, py::arg("workers") = 0,
        "Returns (stratified, compiled, stratify_seconds, elaborate_seconds)");

    m.def("compute_metrics",
          [](const CompiledCircuit& cc, const Backend& b) {
              return metrics_to_dict(compute_metrics(cc, b));
          },
          py::arg("compiled"), py::arg("backend"));
    m.def("esp", &esp, py::arg("compiled"), py::arg("backend"),
          py::arg("with_decoherence") = false);
    m.def("exec_time_ns", &exec_time_ns, py::arg("compiled"), py::arg("backend"));
    m.def("inter_chiplet_gates", &inter_chiplet_gates, py::arg("compiled"), py::arg("backend"));
    m.def("geomean_ratio", &geomean_ratio, py::arg("pairs"));

    m.def("validate_compiled", &validate_compiled, py::arg("compiled"), py::arg("backend"));
    m.def(
        "permutation_equiv",
        [](const Circuit& original, const CompiledCircuit& cc) {
            std::string why;
            bool ok = permutation_equiv(original, cc, &why);
            return py::make_tuple(ok, why);
        },
        py::arg("original"), py::arg("compiled"),
        "Returns (equivalent, diagnostic)");
    m.def("statevector_equiv", &statevector_equiv, py::arg("original"), py::arg("compiled"));
}
