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

#include "seqc/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace seqc {

namespace {

struct KindName {
    GateKind kind;
    std::string_view name;
};

constexpr KindName kKindNames[] = {
    {GateKind::X, "x"},       {GateKind::SX, "sx"},
    {GateKind::Rz, "rz"},     {GateKind::H, "h"},
    {GateKind::CX, "cx"},     {GateKind::CZ, "cz"},
    {GateKind::Swap, "swap"}, {GateKind::Ry, "ry"},
    {GateKind::Rzz, "rzz"},   {GateKind::Measure, "measure"},
    {GateKind::Reset, "reset"}, {GateKind::Barrier, "barrier"},
};

}  // namespace

std::string_view to_string(GateKind kind) {
    for (const auto& entry : kKindNames) {
        if (entry.kind == kind) return entry.name;
    }
    throw std::logic_error("unknown gate kind");
}

GateKind gate_kind_from_string(std::string_view name) {
    for (const auto& entry : kKindNames) {
        if (entry.name == name) return entry.kind;
    }
    throw std::invalid_argument("unknown gate kind: " + std::string(name));
}

Gate Gate::one(GateKind kind, std::uint32_t q, double param) {
    if (gate_arity(kind) != 1) throw std::invalid_argument("gate is not single-qubit");
    Gate g;
    g.kind = kind;
    g.qubits = {q, 0};
    g.param = param;
    return g;
}

Gate Gate::two(GateKind kind, std::uint32_t a, std::uint32_t b, double param) {
    if (gate_arity(kind) != 2) throw std::invalid_argument("gate is not two-qubit");
    if (a == b) throw std::invalid_argument("two-qubit gate with duplicate operand");
    Gate g;
    g.kind = kind;
    g.qubits = {a, b};
    g.param = param;
    return g;
}

bool Gate::operator==(const Gate& other) const {
    if (kind != other.kind) return false;
    for (int i = 0; i < arity(); ++i) {
        if (qubits[i] != other.qubits[i]) return false;
    }
    if (has_param() && std::abs(param - other.param) > kAngleTolerance) return false;
    return true;
}

void Circuit::add(const Gate& g) {
    for (int i = 0; i < g.arity(); ++i) {
        if (g.qubits[i] >= num_qubits_) {
            throw std::out_of_range("gate operand exceeds circuit qubit count");
        }
    }
    if (g.arity() == 2 && g.qubits[0] == g.qubits[1]) {
        throw std::invalid_argument("two-qubit gate with duplicate operand");
    }
    gates_.push_back(g);
}

std::string Circuit::to_json_string(int indent) const {
    nlohmann::json j;
    j["name"] = name_;
    j["num_qubits"] = num_qubits_;
    auto& gates = j["gates"] = nlohmann::json::array();
    for (const auto& g : gates_) {
        nlohmann::json jg;
        jg["kind"] = std::string(to_string(g.kind));
        auto& qs = jg["qubits"] = nlohmann::json::array();
        for (int i = 0; i < g.arity(); ++i) qs.push_back(g.qubits[i]);
        if (g.has_param()) jg["param"] = g.param;
        gates.push_back(std::move(jg));
    }
    return indent >= 0 ? j.dump(indent) : j.dump();
}

Circuit Circuit::from_json_string(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Circuit c(j.at("name").get<std::string>(), j.at("num_qubits").get<std::uint32_t>());
    for (const auto& jg : j.at("gates")) {
        GateKind kind = gate_kind_from_string(jg.at("kind").get<std::string>());
        const auto& qs = jg.at("qubits");
        if (qs.size() != static_cast<std::size_t>(gate_arity(kind))) {
            throw std::invalid_argument("gate operand count does not match kind");
        }
        double param = 0.0;
        if (gate_has_param(kind)) param = jg.at("param").get<double>();
        if (gate_arity(kind) == 1) {
            c.add(Gate::one(kind, qs[0].get<std::uint32_t>(), param));
        } else {
            c.add(Gate::two(kind, qs[0].get<std::uint32_t>(), qs[1].get<std::uint32_t>(), param));
        }
    }
    return c;
}

std::size_t DependencyGraph::edge_count() const {
    std::size_t n = 0;
    for (const auto& s : successors) n += s.size();
    return n;
}

DependencyGraph build_dependency_graph(const Circuit& c) {
    DependencyGraph g;
    g.node_count = c.size();
    g.successors.resize(c.size());
    g.predecessors.resize(c.size());
    std::vector<int> last_on_qubit(c.num_qubits(), -1);
    for (std::uint32_t i = 0; i < c.size(); ++i) {
        const Gate& gate = c.gates()[i];
        for (int k = 0; k < gate.arity(); ++k) {
            int prev = last_on_qubit[gate.qubits[k]];
            if (prev >= 0) {
                auto& succ = g.successors[prev];
                if (std::find(succ.begin(), succ.end(), i) == succ.end()) {
                    succ.push_back(i);
                    g.predecessors[i].push_back(static_cast<std::uint32_t>(prev));
                }
            }
            last_on_qubit[gate.qubits[k]] = static_cast<int>(i);
        }
    }
    return g;
}

InteractionGraph interaction_graph(const Circuit& c) {
    InteractionGraph g;
    g.num_qubits = c.num_qubits();
    for (const auto& gate : c.gates()) {
        if (!gate.is_two_qubit()) continue;
        auto a = std::min(gate.qubits[0], gate.qubits[1]);
        auto b = std::max(gate.qubits[0], gate.qubits[1]);
        ++g.edges[{a, b}];
    }
    return g;
}

std::uint64_t InteractionGraph::total_weight() const {
    std::uint64_t total = 0;
    for (const auto& [pair, w] : edges) total += w;
    return total;
}

std::uint32_t InteractionGraph::weight(std::uint32_t a, std::uint32_t b) const {
    if (a > b) std::swap(a, b);
    auto it = edges.find({a, b});
    return it == edges.end() ? 0u : it->second;
}

int depth(const Circuit& c) {
    std::vector<int> level(c.num_qubits(), 0);
    int result = 0;
    for (const auto& gate : c.gates()) {
        int start = 0;
        for (int k = 0; k < gate.arity(); ++k) {
            start = std::max(start, level[gate.qubits[k]]);
        }
        int finish = start + (gate.kind == GateKind::Barrier ? 0 : 1);
        for (int k = 0; k < gate.arity(); ++k) level[gate.qubits[k]] = finish;
        result = std::max(result, finish);
    }
    return result;
}

int gate_count(const Circuit& c) {
    int n = 0;
    for (const auto& gate : c.gates()) {
        if (gate.kind != GateKind::Barrier) ++n;
    }
    return n;
}

}  // namespace seqc
