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

#include "seqc/backend.hpp"
#include "seqc/compiled.hpp"
#include "seqc/sabre.hpp"

namespace seqc {

struct BaselineConfig {
    int layout_trials = 4;
    SabreConfig sabre;
};

/// Legalizes non-SWAP two-qubit gates that routing placed on inter-chiplet
/// links: each such gate is rewritten into the 4-SWAP pattern (displace one
/// halo occupant onto an intra neighbor, SWAP across the link, run the gate
/// inside the chiplet, undo both SWAPs). The net layout is unchanged.
CompiledCircuit peephole_correct(const CompiledCircuit& cc, const Backend& b);

/// The chiplet-oblivious reference pipeline: whole-device SABRE layout and
/// routing on hop distances, peephole correction, then global basis
/// translation and optimization.
CompiledCircuit baseline_compile(const Circuit& c, const Backend& b, std::uint64_t seed,
                                 const BaselineConfig& config = {});

}  // namespace seqc
