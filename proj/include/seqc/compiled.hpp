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

#pragma once

#include <cstdint>
#include <string>

#include "seqc/circuit.hpp"
#include "seqc/layout.hpp"

namespace seqc {

enum class Pipeline : std::uint8_t { Baseline, Seqc };

std::string_view to_string(Pipeline p);
Pipeline pipeline_from_string(std::string_view name);

/// The durable compilation artifact. `circuit` is the final basis-translated
/// and optimized physical circuit; `routed` is the same schedule before basis
/// translation, with every routing SWAP still explicit so equivalence can be
/// checked by permutation folding at any size.
struct CompiledCircuit {
    Circuit circuit;
    Circuit routed;
    Layout initial_layout;  // logical circuit qubit -> physical qubit
    Layout final_layout;
    std::string backend_id;
    Pipeline pipeline = Pipeline::Baseline;
    std::uint64_t seed = 0;

    std::string to_json_string(int indent = -1) const;
    static CompiledCircuit from_json_string(const std::string& text);
};

}  // namespace seqc
