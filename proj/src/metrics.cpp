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

#include "seqc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace seqc {

double esp(const CompiledCircuit& cc, const Backend& b, bool with_decoherence) {
    const Circuit& c = cc.circuit;
    std::vector<double> success(c.num_qubits(), 1.0);
    std::vector<bool> touched(c.num_qubits(), false);
    for (const Gate& g : c.gates()) {
        if (g.kind == GateKind::Barrier) continue;
        double ok = 1.0 - b.gate_error(g);
        for (int k = 0; k < g.arity(); ++k) {
            success[g.qubits[k]] *= ok;
            touched[g.qubits[k]] = true;
        }
    }
    if (with_decoherence) {
        // Busy span under the same ASAP schedule used for execution time.
        std::vector<double> finish(c.num_qubits(), 0.0);
        std::vector<double> first_start(c.num_qubits(), -1.0);
        for (const Gate& g : c.gates()) {
            double start = 0.0;
            for (int k = 0; k < g.arity(); ++k) start = std::max(start, finish[g.qubits[k]]);
            double end = start + (g.kind == GateKind::Barrier ? 0.0 : b.gate_duration_ns(g));
            for (int k = 0; k < g.arity(); ++k) {
                finish[g.qubits[k]] = end;
                if (first_start[g.qubits[k]] < 0.0) first_start[g.qubits[k]] = start;
            }
        }
        for (std::uint32_t q = 0; q < c.num_qubits(); ++q) {
            if (!touched[q]) continue;
            double span_s = (finish[q] - first_start[q]) * 1e-9;
            success[q] *= std::exp(-span_s / b.qubit_spec.t1_s) *
                          std::exp(-span_s / b.qubit_spec.t2_s);
        }
    }
    double log_sum = 0.0;
    int n = 0;
    for (std::uint32_t q = 0; q < c.num_qubits(); ++q) {
        if (!touched[q]) continue;
        log_sum += std::log(success[q]);
        ++n;
    }
    return n == 0 ? 1.0 : std::exp(log_sum / n);
}

double exec_time_ns(const CompiledCircuit& cc, const Backend& b) {
    std::vector<double> finish(cc.circuit.num_qubits(), 0.0);
    double makespan = 0.0;
    for (const Gate& g : cc.circuit.gates()) {
        double start = 0.0;
        for (int k = 0; k < g.arity(); ++k) start = std::max(start, finish[g.qubits[k]]);
        double end = start + (g.kind == GateKind::Barrier ? 0.0 : b.gate_duration_ns(g));
        for (int k = 0; k < g.arity(); ++k) finish[g.qubits[k]] = end;
        makespan = std::max(makespan, end);
    }
    return makespan;
}

int inter_chiplet_gates(const CompiledCircuit& cc, const Backend& b) {
    int count = 0;
    for (const Gate& g : cc.circuit.gates()) {
        if (!g.is_two_qubit()) continue;
        int li = b.link_between(g.qubits[0], g.qubits[1]);
        if (li >= 0 && b.links[li].scope == LinkScope::Inter) ++count;
    }
    return count;
}

double geomean_ratio(const std::vector<std::pair<double, double>>& suite) {
    if (suite.empty()) return 1.0;
    double log_sum = 0.0;
    bool has_zero = false;
    for (const auto& [metric, base] : suite) {
        if (base <= 0.0) throw std::invalid_argument("geomean baseline must be positive");
        if (metric < 0.0) throw std::invalid_argument("geomean metric must be non-negative");
        if (metric == 0.0) {
            has_zero = true;
            continue;
        }
        log_sum += std::log(metric / base);
    }
    if (has_zero) return 0.0;
    return std::exp(log_sum / static_cast<double>(suite.size()));
}

MetricsReport compute_metrics(const CompiledCircuit& cc, const Backend& b) {
    MetricsReport report;
    report.esp = esp(cc, b);
    report.exec_time_ns = exec_time_ns(cc, b);
    report.inter_chiplet_gates = inter_chiplet_gates(cc, b);
    report.depth = depth(cc.circuit);
    report.gate_count = gate_count(cc.circuit);
    return report;
}

std::string MetricsReport::to_json_string(int indent) const {
    nlohmann::json j;
    j["esp"] = esp;
    j["exec_time_ns"] = exec_time_ns;
    j["inter_chiplet_gates"] = inter_chiplet_gates;
    j["depth"] = depth;
    j["gate_count"] = gate_count;
    if (stratify_time_s) j["stratify_time_s"] = *stratify_time_s;
    if (elaborate_time_s) j["elaborate_time_s"] = *elaborate_time_s;
    if (solve_time_s) j["solve_time_s"] = *solve_time_s;
    return indent >= 0 ? j.dump(indent) : j.dump();
}

}  // namespace seqc
