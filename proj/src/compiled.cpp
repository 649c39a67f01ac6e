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

#include "seqc/compiled.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

namespace seqc {

std::string_view to_string(Pipeline p) {
    return p == Pipeline::Baseline ? "baseline" : "seqc";
}

Pipeline pipeline_from_string(std::string_view name) {
    if (name == "baseline") return Pipeline::Baseline;
    if (name == "seqc") return Pipeline::Seqc;
    throw std::invalid_argument("unknown pipeline: " + std::string(name));
}

namespace {

nlohmann::json layout_to_json(const Layout& layout) {
    nlohmann::json j = nlohmann::json::array();
    for (std::size_t l = 0; l < layout.num_logical(); ++l) {
        j.push_back(layout.physical_of(static_cast<std::uint32_t>(l)));
    }
    return j;
}

Layout layout_from_json(const nlohmann::json& j, std::size_t num_physical) {
    Layout layout(j.size(), num_physical);
    for (std::uint32_t l = 0; l < j.size(); ++l) {
        int p = j[l].get<int>();
        if (p >= 0) layout.assign(l, static_cast<std::uint32_t>(p));
    }
    return layout;
}

}  // namespace

std::string CompiledCircuit::to_json_string(int indent) const {
    nlohmann::json j;
    j["circuit"] = nlohmann::json::parse(circuit.to_json_string());
    j["routed_circuit"] = nlohmann::json::parse(routed.to_json_string());
    j["initial_layout"] = layout_to_json(initial_layout);
    j["final_layout"] = layout_to_json(final_layout);
    j["backend_id"] = backend_id;
    j["pipeline"] = std::string(to_string(pipeline));
    j["seed"] = seed;
    return indent >= 0 ? j.dump(indent) : j.dump();
}

CompiledCircuit CompiledCircuit::from_json_string(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    CompiledCircuit cc;
    cc.circuit = Circuit::from_json_string(j.at("circuit").dump());
    cc.routed = Circuit::from_json_string(j.at("routed_circuit").dump());
    cc.initial_layout = layout_from_json(j.at("initial_layout"), cc.circuit.num_qubits());
    cc.final_layout = layout_from_json(j.at("final_layout"), cc.circuit.num_qubits());
    cc.backend_id = j.at("backend_id").get<std::string>();
    cc.pipeline = pipeline_from_string(j.at("pipeline").get<std::string>());
    cc.seed = j.at("seed").get<std::uint64_t>();
    return cc;
}

}  // namespace seqc
